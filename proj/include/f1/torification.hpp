#pragma once

#include <numeric>
#include <set>

#include "f1/counting.hpp"
#include "f1/fan.hpp"

namespace f1 {

/// A decomposition into tori G_m^{ranks[i]}. When chart data is present, chart_tori[c] lists
/// the tori inside chart c and chart_counts[c] is that chart's own counting polynomial.
struct Torification {
    std::vector<std::size_t> ranks;
    std::vector<std::string> labels;
    std::optional<std::vector<std::vector<std::size_t>>> chart_tori;
    std::vector<CountingPolynomial> chart_counts;

    static Torification of(std::vector<std::size_t> ranks) {
        Torification T;
        T.ranks = std::move(ranks);
        return T;
    }

    /// sum over tori of (q-1)^rank
    CountingPolynomial count() const {
        std::vector<Int> b;
        for (auto r : ranks) {
            if (b.size() <= r) b.resize(r + 1, Int(0));
            b[r] += 1;
        }
        return CountingPolynomial::from_q_minus_one_basis(b);
    }

    std::size_t minimal_rank() const {
        if (ranks.empty()) throw ValidationError("torification: no tori");
        return *std::min_element(ranks.begin(), ranks.end());
    }

    /// Number of tori of minimal rank: the count divided by (q-1)^r and evaluated at q = 1.
    std::size_t minimal_rank_count() const {
        auto r = minimal_rank();
        return static_cast<std::size_t>(std::count(ranks.begin(), ranks.end(), r));
    }
};

/// A^d = union over subsets S of [d] of G_m^{|S|}, each shifted by a base torus.
inline std::vector<std::size_t> torify_cell(std::size_t d, std::size_t base) {
    if (d > 20) throw ResourceError("torify_cell: dimension above 20");
    std::vector<std::size_t> out;
    for (std::size_t S = 0; S < (std::size_t(1) << d); ++S) out.push_back(base + std::popcount(S));
    return out;
}

inline bool verify_torification(const Torification& T, const CountingPolynomial& N) { return T.count() == N; }

/// [n choose k]_q by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline CountingPolynomial gaussian_binomial(std::size_t n, std::size_t k) {
    if (k > n || n > 12) throw ValidationError("gaussian_binomial: need 0 <= k <= n <= 12");
    std::vector<std::vector<CountingPolynomial>> g(n + 1, std::vector<CountingPolynomial>(n + 1));
    for (std::size_t m = 0; m <= n; ++m) {
        g[m][0] = CountingPolynomial::constant(1);
        for (std::size_t j = 1; j <= m; ++j) {
            std::vector<Int> qj(j + 1, Int(0));
            qj[j] = 1;
            g[m][j] = g[m - 1][j - 1] + CountingPolynomial(qj) * g[m - 1][j];
        }
    }
    return g[n][k];
}

/// The torus fixed by each cone: rank n - dim(tau), lying in the charts of the maximal cones over tau.
inline Torification orbit_torification(const ToricMScheme& X) {
    Torification T;
    const Fan& fan = X.fan;
    std::vector<std::vector<std::size_t>> chart_tori(X.chart_cone.size());
    for (std::size_t x = 0; x < X.scheme.size(); ++x) {
        std::size_t c = X.point_cone[x];
        T.ranks.push_back(fan.rank() - fan.dimension(c));
        T.labels.push_back("O(cone " + std::to_string(c) + ")");
        for (std::size_t k = 0; k < X.chart_cone.size(); ++k)
            if (fan.is_face(c, X.chart_cone[k])) chart_tori[k].push_back(x);
    }
    for (const auto& chart : X.scheme.charts()) {
        auto f = counting_polynomial(MScheme::affine(chart)).polynomial();
        if (!f) throw ValidationError("orbit torification: toric chart with torsion units");
        T.chart_counts.push_back(*f);
    }
    T.chart_tori = std::move(chart_tori);
    return T;
}

struct AffinenessReport {
    std::optional<bool> affine;  // nullopt when no chart data is attached
    std::string diagnostic;
};

/// Affine when each chart is exactly the union of its assigned tori, checked as a counting identity.
inline AffinenessReport is_affinely_torified(const Torification& T) {
    if (!T.chart_tori) return {std::nullopt, "no chart assignment attached"};
    const auto& ct = *T.chart_tori;
    if (ct.size() != T.chart_counts.size()) throw ValidationError("torification: chart data sizes differ");
    std::vector<bool> covered(T.ranks.size(), false);
    for (std::size_t c = 0; c < ct.size(); ++c) {
        Torification part;
        for (auto i : ct[c]) {
            if (i >= T.ranks.size()) throw ValidationError("torification: chart lists an unknown torus");
            part.ranks.push_back(T.ranks[i]);
            covered[i] = true;
        }
        if (!verify_torification(part, T.chart_counts[c]))
            return {false, "chart " + std::to_string(c) + ": tori give " + part.count().to_string() + " but the chart has " +
                               T.chart_counts[c].to_string()};
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) return {false, "torus " + std::to_string(i) + " lies in no chart"};
    return {true, "every chart is a union of tori"};
}

/// A Schubert cell of Gr(k, n) as row-reduced echelon matrices with pivot columns `pivots`;
/// `free` lists the (row, column) entries that vary.
struct SchubertCell {
    std::vector<std::size_t> partition;
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free;
};

inline std::vector<SchubertCell> schubert_cells(std::size_t k, std::size_t n) {
    if (k > n || n > 8) throw ValidationError("schubert cells: need 0 <= k <= n <= 8");
    std::vector<SchubertCell> cells;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        SchubertCell c;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) c.pivots.push_back(j);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t row_free = 0;
            for (std::size_t j = c.pivots[i] + 1; j < n; ++j)
                if (!(mask >> j & 1)) {
                    c.free.emplace_back(i, j);
                    ++row_free;
                }
            c.partition.push_back(row_free);
        }
        cells.push_back(std::move(c));
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const SchubertCell& a, const SchubertCell& b) { return a.free.size() < b.free.size(); });
    return cells;
}

/// Each Schubert cell A^d split into coordinate tori. Torus labels are "cell:mask" with mask the
/// set of nonzero free entries.
inline std::pair<Torification, CountingPolynomial> schubert_torification(std::size_t k, std::size_t n) {
    Torification T;
    std::size_t index = 0;
    for (const auto& c : schubert_cells(k, n)) {
        auto ranks = torify_cell(c.free.size(), 0);
        for (std::size_t S = 0; S < ranks.size(); ++S) {
            T.ranks.push_back(ranks[S]);
            T.labels.push_back(std::to_string(index) + ":" + std::to_string(S));
        }
        ++index;
    }
    return {T, gaussian_binomial(n, k)};
}

struct PluckerChartReport {
    Torification torification;                 // with chart data attached
    std::vector<std::vector<std::size_t>> charts;  // the k-subset of each chart
    std::vector<std::string> split_tori;       // tori meeting a chart without lying inside it
};

/// Attaches the Plucker charts p_I != 0 to the Schubert torification. A torus is assigned to a
/// chart when p_I vanishes nowhere on it; points are enumerated over F_3 and F_5, so a torus that
/// meets both p_I = 0 and p_I != 0 over one of them is recorded as split.
inline PluckerChartReport plucker_charts(std::size_t k, std::size_t n) {
    if (k * (n - k) > 6) throw ResourceError("plucker charts: Grassmannian dimension above 6");
    PluckerChartReport out;
    out.torification = schubert_torification(k, n).first;
    auto cells = schubert_cells(k, n);

    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        std::vector<std::size_t> I;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) I.push_back(j);
        out.charts.push_back(I);
    }

    auto det_mod = [](std::vector<std::vector<long>> m, long p) {
        long d = 1;
        std::size_t s = m.size();
        for (std::size_t c = 0; c < s; ++c) {
            std::size_t r = c;
            while (r < s && m[r][c] % p == 0) ++r;
            if (r == s) return 0L;
            if (r != c) {
                std::swap(m[r], m[c]);
                d = -d;
            }
            d = d * m[c][c] % p;
            long inv = 1;
            for (long e = p - 2, b = ((m[c][c] % p) + p) % p; e > 0; e >>= 1, b = b * b % p)
                if (e & 1) inv = inv * b % p;
            for (std::size_t i = c + 1; i < s; ++i) {
                long f = m[i][c] * inv % p;
                for (std::size_t j = c; j < s; ++j) m[i][j] = ((m[i][j] - f * m[c][j]) % p + p) % p;
            }
        }
        return ((d % p) + p) % p;
    };

    std::vector<std::vector<std::size_t>> chart_tori(out.charts.size());
    std::size_t torus = 0;
    for (const auto& cell : cells) {
        std::size_t d = cell.free.size();
        for (std::size_t S = 0; S < (std::size_t(1) << d); ++S, ++torus) {
            std::vector<std::size_t> active;
            for (std::size_t e = 0; e < d; ++e)
                if (S >> e & 1) active.push_back(e);
            for (std::size_t ci = 0; ci < out.charts.size(); ++ci) {
                bool seen_zero = false, seen_nonzero = false;
                for (long p : {3L, 5L}) {
                    std::vector<long> vals(active.size(), 1);
                    while (true) {
                        std::vector<std::vector<long>> M(k, std::vector<long>(n, 0));
                        for (std::size_t i = 0; i < k; ++i) M[i][cell.pivots[i]] = 1;
                        for (std::size_t a = 0; a < active.size(); ++a) {
                            auto [r, c] = cell.free[active[a]];
                            M[r][c] = vals[a];
                        }
                        std::vector<std::vector<long>> minor(k, std::vector<long>(k));
                        for (std::size_t i = 0; i < k; ++i)
                            for (std::size_t j = 0; j < k; ++j) minor[i][j] = M[i][out.charts[ci][j]];
                        (det_mod(minor, p) == 0 ? seen_zero : seen_nonzero) = true;
                        std::size_t a = 0;
                        while (a < vals.size() && vals[a] == p - 1) vals[a++] = 1;
                        if (a == vals.size()) break;
                        ++vals[a];
                    }
                }
                if (seen_nonzero && !seen_zero) chart_tori[ci].push_back(torus);
                if (seen_nonzero && seen_zero)
                    out.split_tori.push_back("torus " + out.torification.labels[torus] + " in chart p_" +
                                             [&] {
                                                 std::string s;
                                                 for (auto j : out.charts[ci]) s += std::to_string(j + 1);
                                                 return s;
                                             }());
            }
        }
    }
    out.torification.chart_tori = std::move(chart_tori);
    std::vector<Int> big(k * (n - k) + 1, Int(0));
    big.back() = 1;
    out.torification.chart_counts.assign(out.charts.size(), CountingPolynomial(big));
    return out;
}

/// Affine cells A^dims[i], each times a torus of rank `base`.
struct CellComplex {
    std::vector<std::size_t> dims;
    std::size_t base = 0;
    bool operator==(const CellComplex&) const = default;
};

inline Torification torify(const CellComplex& C) {
    Torification T;
    for (std::size_t i = 0; i < C.dims.size(); ++i)
        for (auto r : torify_cell(C.dims[i], C.base)) {
            T.ranks.push_back(r);
            T.labels.push_back("cell " + std::to_string(i));
        }
    return T;
}

/// Schubert cells of Gr(k, n) from partitions in the k x (n-k) box.
inline CellComplex schubert_complex(std::size_t k, std::size_t n, const std::vector<std::vector<std::size_t>>& partitions) {
    if (k > n || n > 8) throw ValidationError("schubert complex: need 0 <= k <= n <= 8");
    CellComplex C;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        auto lam = partitions[i];
        std::string where = "partition " + std::to_string(i);
        if (lam.size() > k) throw ValidationError(where + ": more than " + std::to_string(k) + " parts");
        lam.resize(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (lam[j] > n - k) throw ValidationError(where + ": part exceeds " + std::to_string(n - k));
            if (j && lam[j] > lam[j - 1]) throw ValidationError(where + ": parts are not nonincreasing");
        }
        if (!seen.insert(lam).second) throw ValidationError(where + ": repeated");
        C.dims.push_back(std::accumulate(lam.begin(), lam.end(), std::size_t(0)));
    }
    return C;
}

/// Bruhat cells BwB of SL2 and GL2, each a maximal torus times an affine space.
inline std::pair<Torification, CountingPolynomial> bruhat_torification(const std::string& group) {
    std::size_t base;
    CountingPolynomial N;
    if (group == "SL2") {
        base = 1;
        N = CountingPolynomial({0, -1, 0, 1});
    } else if (group == "GL2") {
        base = 2;
        N = CountingPolynomial({0, 1, -1, -1, 1});
    } else {
        throw UnsupportedError("bruhat torification: group '" + group + "' is not supported (SL2, GL2)");
    }
    Torification T;
    const std::pair<const char*, std::size_t> cells[] = {{"B", 1}, {"BwB", 2}};
    for (const auto& [name, dim] : cells)
        for (auto r : torify_cell(dim, base)) {
            T.ranks.push_back(r);
            T.labels.push_back(name);
        }
    return {T, N};
}

}  // namespace f1
