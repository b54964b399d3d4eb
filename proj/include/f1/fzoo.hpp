#pragma once

#include <functional>
#include <map>
#include <memory>

#include "f1/table_monoid.hpp"

namespace f1 {

/// Finite pointed monoids only: the law checks below are exhaustive.
inline std::shared_ptr<const TableMonoid> finite_pointed(TableMonoid M) {
    if (!M.zero()) throw ValidationError("F<M>: the monoid needs a zero");
    if (M.size() > 8) throw ResourceError("F<M>: monoids are limited to 8 elements");
    return std::make_shared<const TableMonoid>(std::move(M));
}

/// An element of F<M>_{Y,X}: a |Y| x |X| matrix over M with at most one nonzero entry in each
/// row and each column.
class FMatrix {
public:
    FMatrix(std::shared_ptr<const TableMonoid> M, std::size_t rows, std::size_t cols, std::vector<std::size_t> entries)
        : M_(std::move(M)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (!M_->zero()) throw ValidationError("F<M>: the monoid needs a zero");
        if (entries_.size() != rows_ * cols_) throw ValidationError("F<M>: entry count does not match the shape");
        std::vector<int> per_col(cols_, 0);
        for (std::size_t y = 0; y < rows_; ++y) {
            int per_row = 0;
            for (std::size_t x = 0; x < cols_; ++x) {
                std::size_t e = at(y, x);
                if (e >= M_->size()) throw ValidationError("F<M>: entry is not a monoid element");
                if (e == zero()) continue;
                if (++per_row > 1) throw ValidationError("F<M>: row " + std::to_string(y) + " has two nonzero entries");
                if (++per_col[x] > 1) throw ValidationError("F<M>: column " + std::to_string(x) + " has two nonzero entries");
            }
        }
    }

    static FMatrix zero_matrix(std::shared_ptr<const TableMonoid> M, std::size_t rows, std::size_t cols) {
        std::size_t z = *M->zero();
        return FMatrix(std::move(M), rows, cols, std::vector<std::size_t>(rows * cols, z));
    }

    static FMatrix identity(std::shared_ptr<const TableMonoid> M, std::size_t n) {
        FMatrix I = zero_matrix(M, n, n);
        for (std::size_t i = 0; i < n; ++i) I.entries_[i * n + i] = M->identity();
        return I;
    }

    const TableMonoid& monoid() const { return *M_; }
    const std::shared_ptr<const TableMonoid>& monoid_ptr() const { return M_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& entries() const { return entries_; }
    std::size_t at(std::size_t y, std::size_t x) const { return entries_[y * cols_ + x]; }
    std::size_t zero() const { return *M_->zero(); }

    bool operator==(const FMatrix& o) const {
        return *M_ == *o.M_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::shared_ptr<const TableMonoid> M_;
    std::size_t rows_, cols_;
    std::vector<std::size_t> entries_;
};

inline void same_monoid(const FMatrix& a, const FMatrix& b) {
    if (a.monoid_ptr() != b.monoid_ptr() && !(a.monoid() == b.monoid()))
        throw ValidationError("F<M>: matrices over different monoids");
}

/// g o f for f: Y <- X and g: Z <- Y. Each sum has at most one nonzero term.
inline FMatrix compose(const FMatrix& f, const FMatrix& g) {
    same_monoid(f, g);
    if (g.cols() != f.rows())
        throw ValidationError("F<M>: cannot compose " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                              " after " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
    const TableMonoid& M = f.monoid();
    std::size_t z = f.zero();
    std::vector<std::size_t> out(g.rows() * f.cols(), z);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) {
            int terms = 0;
            for (std::size_t y = 0; y < f.rows(); ++y) {
                std::size_t a = g.at(r, y), b = f.at(y, c);
                if (a == z || b == z) continue;
                ++terms;
                out[r * f.cols() + c] = M.multiply(a, b);
            }
            if (terms > 1) throw ValidationError("F<M>: composition sum with two nonzero terms");
        }
    return FMatrix(f.monoid_ptr(), g.rows(), f.cols(), std::move(out));
}

/// Block diagonal sum (disjoint union of index sets).
inline FMatrix oplus(const FMatrix& f, const FMatrix& g) {
    same_monoid(f, g);
    FMatrix out = FMatrix::zero_matrix(f.monoid_ptr(), f.rows() + g.rows(), f.cols() + g.cols());
    std::vector<std::size_t> e = out.entries();
    for (std::size_t y = 0; y < f.rows(); ++y)
        for (std::size_t x = 0; x < f.cols(); ++x) e[y * out.cols() + x] = f.at(y, x);
    for (std::size_t y = 0; y < g.rows(); ++y)
        for (std::size_t x = 0; x < g.cols(); ++x) e[(f.rows() + y) * out.cols() + f.cols() + x] = g.at(y, x);
    return FMatrix(f.monoid_ptr(), out.rows(), out.cols(), std::move(e));
}

/// Kronecker product on cartesian products of index sets, (i, j) flattened to i * |second| + j.
inline FMatrix otimes(const FMatrix& f, const FMatrix& g) {
    same_monoid(f, g);
    std::size_t R = f.rows() * g.rows(), C = f.cols() * g.cols();
    std::vector<std::size_t> e(R * C);
    for (std::size_t y1 = 0; y1 < f.rows(); ++y1)
        for (std::size_t y2 = 0; y2 < g.rows(); ++y2)
            for (std::size_t x1 = 0; x1 < f.cols(); ++x1)
                for (std::size_t x2 = 0; x2 < g.cols(); ++x2)
                    e[(y1 * g.rows() + y2) * C + x1 * g.cols() + x2] = f.monoid().multiply(f.at(y1, x1), g.at(y2, x2));
    return FMatrix(f.monoid_ptr(), R, C, std::move(e));
}

/// Entrywise image under a pointed monoid hom.
inline FMatrix map_entries(const FMatrix& f, const TableHom& h, std::shared_ptr<const TableMonoid> target) {
    if (!h.is_homomorphism() || !target->zero()) throw ValidationError("F<M>: not a pointed monoid homomorphism");
    if (!(h.source == f.monoid()) || !(h.target == *target)) throw ValidationError("F<M>: homomorphism does not match");
    std::vector<std::size_t> e;
    for (auto a : f.entries()) e.push_back(h.map[a]);
    return FMatrix(std::move(target), f.rows(), f.cols(), std::move(e));
}

/// Every matrix in F<M>_{[rows],[cols]}, ordered by the base-|M| code of the entries.
inline std::vector<FMatrix> all_fmatrices(const std::shared_ptr<const TableMonoid>& M, std::size_t rows, std::size_t cols) {
    if (rows > 3 || cols > 3) throw ResourceError("all_fmatrices: index sets are limited to 3 elements");
    std::vector<FMatrix> out;
    std::size_t n = M->size(), cells = rows * cols, z = *M->zero();
    std::vector<std::size_t> e(cells, 0);
    while (true) {
        bool ok = true;
        for (std::size_t y = 0; y < rows && ok; ++y) {
            int c = 0;
            for (std::size_t x = 0; x < cols; ++x) c += e[y * cols + x] != z;
            ok = c <= 1;
        }
        for (std::size_t x = 0; x < cols && ok; ++x) {
            int c = 0;
            for (std::size_t y = 0; y < rows; ++y) c += e[y * cols + x] != z;
            ok = c <= 1;
        }
        if (ok) out.emplace_back(M, rows, cols, e);
        std::size_t i = 0;
        while (i < cells && e[i] == n - 1) e[i++] = 0;
        if (i == cells) break;
        ++e[i];
    }
    return out;
}

/// F<M>_{[1],[1]} with composition, as a table monoid on the same element order as M.
inline TableMonoid underlying_monoid_of_matrices(const std::shared_ptr<const TableMonoid>& M) {
    std::vector<std::vector<std::size_t>> table(M->size(), std::vector<std::size_t>(M->size()));
    for (std::size_t a = 0; a < M->size(); ++a)
        for (std::size_t b = 0; b < M->size(); ++b)
            table[a][b] = compose(FMatrix(M, 1, 1, {b}), FMatrix(M, 1, 1, {a})).at(0, 0);
    return TableMonoid(M->names(), table, M->zero());
}

// ---------------------------------------------------------------------------
// The monad T_M(X) = (M x X) / (0, x) ~ (0, x'). Elements of T_M([n]) are numbered with 0 for
// the zero class and 1 + i * n + x for (m_i, x), m_i the i-th nonzero element of M.

class MonadTM {
public:
    explicit MonadTM(std::shared_ptr<const TableMonoid> M) : M_(std::move(M)) {
        if (!M_->zero()) throw ValidationError("T_M: the monoid needs a zero");
        for (std::size_t a = 0; a < M_->size(); ++a)
            if (a != *M_->zero()) nonzero_.push_back(a);
        position_.assign(M_->size(), SIZE_MAX);
        for (std::size_t i = 0; i < nonzero_.size(); ++i) position_[nonzero_[i]] = i;
    }

    const TableMonoid& monoid() const { return *M_; }

    /// |T_M([n])| = (|M| - 1) n + 1
    std::size_t apply(std::size_t n) const { return nonzero_.size() * n + 1; }

    std::size_t element(std::size_t m, std::size_t x, std::size_t n) const {
        if (m == *M_->zero()) return 0;
        return 1 + position_[m] * n + x;
    }

    /// (m, x) for a nonzero class, nullopt for the zero class.
    std::optional<std::pair<std::size_t, std::size_t>> decode(std::size_t t, std::size_t n) const {
        if (t == 0) return std::nullopt;
        return std::pair{nonzero_[(t - 1) / n], (t - 1) % n};
    }

    /// T_M on a map f: [n] -> [k].
    std::vector<std::size_t> fmap(const std::vector<std::size_t>& f, std::size_t k) const {
        std::size_t n = f.size();
        std::vector<std::size_t> out(apply(n), 0);
        for (std::size_t t = 1; t < out.size(); ++t) {
            auto [m, x] = *decode(t, n);
            out[t] = element(m, f[x], k);
        }
        return out;
    }

    /// x -> (1, x)
    std::vector<std::size_t> unit(std::size_t n) const {
        std::vector<std::size_t> out(n);
        for (std::size_t x = 0; x < n; ++x) out[x] = element(M_->identity(), x, n);
        return out;
    }

    /// T_M T_M [n] -> T_M [n]: (m, (m', x)) -> (m m', x)
    std::vector<std::size_t> mult(std::size_t n) const {
        std::size_t tn = apply(n);
        std::vector<std::size_t> out(apply(tn), 0);
        for (std::size_t s = 1; s < out.size(); ++s) {
            auto [m, t] = *decode(s, tn);
            if (auto inner = decode(t, n)) out[s] = element(M_->multiply(m, inner->first), inner->second, n);
        }
        return out;
    }

    /// T_M([1]) with a * b = mult(T(b^)(a)) where b^ : [1] -> T_M[1] picks b, relabeled by M.
    TableMonoid underlying_monoid() const {
        std::size_t n = M_->size();
        auto to_element = [&](std::size_t t) { return t == 0 ? *M_->zero() : nonzero_[t - 1]; };
        auto mu = mult(1);
        std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // T(b^) sends (a, 0) to (a, b) in T_M T_M [1]
                std::size_t lifted = a == *M_->zero() ? 0 : element(a, element(b, 0, 1), apply(1));
                table[a][b] = to_element(mu[lifted]);
            }
        return TableMonoid(M_->names(), table, M_->zero());
    }

private:
    std::shared_ptr<const TableMonoid> M_;
    std::vector<std::size_t> nonzero_;
    std::vector<std::size_t> position_;
};

// ---------------------------------------------------------------------------
// Law reports

struct LawResult {
    std::string law;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample;
};

struct LawReport {
    std::string monoid;
    std::vector<LawResult> laws;
    bool passed() const {
        for (const auto& l : laws)
            if (!l.passed) return false;
        return true;
    }
};

namespace detail {

inline std::string describe(const FMatrix& f) {
    std::string s = "[";
    for (std::size_t y = 0; y < f.rows(); ++y) {
        if (y) s += ";";
        for (std::size_t x = 0; x < f.cols(); ++x) s += (x ? "," : "") + f.monoid().names()[f.at(y, x)];
    }
    return s + "]";
}

inline void record(LawResult& r, bool ok, const std::function<std::string()>& why) {
    ++r.checked;
    if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = why();
    }
}

}  // namespace detail

/// Closure, associativity, identity and interchange laws of F<M>, exhaustive over index sets of
/// size <= max_size, plus F<M>_{[1],[1]} = M.
inline LawReport fmatrix_laws(const std::shared_ptr<const TableMonoid>& M, std::size_t max_size = 3) {
    if (max_size > 3) throw ResourceError("F<M> laws: index sets are limited to 3 elements");
    std::size_t S = max_size + 1;
    std::vector<std::vector<std::vector<FMatrix>>> all(S, std::vector<std::vector<FMatrix>>(S));
    std::vector<std::vector<std::map<std::vector<std::size_t>, std::size_t>>> index(
        S, std::vector<std::map<std::vector<std::size_t>, std::size_t>>(S));
    for (std::size_t r = 0; r < S; ++r)
        for (std::size_t c = 0; c < S; ++c) {
            all[r][c] = all_fmatrices(M, r, c);
            for (std::size_t i = 0; i < all[r][c].size(); ++i) index[r][c][all[r][c][i].entries()] = i;
        }

    LawResult closure{"closure", true, 0, ""}, assoc{"associativity", true, 0, ""}, ident{"identity", true, 0, ""},
        interchange{"oplus interchange", true, 0, ""}, under{"underlying monoid", true, 0, ""};

    auto closed = [&](const std::function<FMatrix()>& op, const std::string& what) {
        try {
            op();
            detail::record(closure, true, nullptr);
        } catch (const ValidationError& e) {
            detail::record(closure, false, [&] { return what + ": " + e.what(); });
        }
    };

    // comp[{a, b, c}][i * |G| + j] = index of G[j] o F[i] among the c x a matrices
    auto compose_index = [&](std::size_t a, std::size_t b, std::size_t c) {
        // f: b <- a (b x a), g: c <- b (c x b)
        const auto& F = all[b][a];
        const auto& G = all[c][b];
        std::vector<std::size_t> table(F.size() * G.size());
        for (std::size_t i = 0; i < F.size(); ++i)
            for (std::size_t j = 0; j < G.size(); ++j) {
                std::size_t out = SIZE_MAX;
                try {
                    out = index[c][a].at(compose(F[i], G[j]).entries());
                    detail::record(closure, true, nullptr);
                } catch (const ValidationError& e) {
                    detail::record(closure, false,
                                   [&] { return "compose " + detail::describe(F[i]) + ", " + detail::describe(G[j]) + ": " + e.what(); });
                }
                table[i * G.size() + j] = out;
            }
        return table;
    };

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> comp;
    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t b = 0; b < S; ++b)
            for (std::size_t c = 0; c < S; ++c) comp[{a, b, c}] = compose_index(a, b, c);

    for (std::size_t a = 0; a < S; ++a)
        for (std::size_t b = 0; b < S; ++b)
            for (std::size_t c = 0; c < S; ++c)
                for (std::size_t d = 0; d < S; ++d) {
                    const auto& fg = comp[{a, b, c}];
                    const auto& gh = comp[{b, c, d}];
                    const auto& fg_h = comp[{a, c, d}];
                    const auto& f_gh = comp[{a, b, d}];
                    std::size_t nf = all[b][a].size(), ng = all[c][b].size(), nh = all[d][c].size();
                    std::size_t n_bd = all[d][b].size();
                    for (std::size_t i = 0; i < nf; ++i)
                        for (std::size_t j = 0; j < ng; ++j) {
                            std::size_t ij = fg[i * ng + j];
                            for (std::size_t k = 0; k < nh; ++k) {
                                std::size_t jk = gh[j * nh + k];
                                bool ok = ij != SIZE_MAX && jk != SIZE_MAX && fg_h[ij * nh + k] == f_gh[i * n_bd + jk];
                                detail::record(assoc, ok, [&] {
                                    return "f=" + detail::describe(all[b][a][i]) + " g=" + detail::describe(all[c][b][j]) +
                                           " h=" + detail::describe(all[d][c][k]);
                                });
                            }
                        }
                }

    for (std::size_t r = 0; r < S; ++r)
        for (std::size_t c = 0; c < S; ++c)
            for (const auto& f : all[r][c]) {
                bool ok = compose(f, FMatrix::identity(M, r)) == f && compose(FMatrix::identity(M, c), f) == f;
                detail::record(ident, ok, [&] { return detail::describe(f); });
            }

    // oplus and otimes closure over all shape pairs; interchange on index sets of size <= 2
    std::vector<const FMatrix*> flat;
    for (std::size_t r = 0; r < S; ++r)
        for (std::size_t c = 0; c < S; ++c)
            for (const auto& f : all[r][c]) flat.push_back(&f);
    for (const FMatrix* f : flat)
        for (const FMatrix* g : flat) {
            closed([&] { return oplus(*f, *g); }, "oplus " + detail::describe(*f) + ", " + detail::describe(*g));
            closed([&] { return otimes(*f, *g); }, "otimes " + detail::describe(*f) + ", " + detail::describe(*g));
        }
    std::size_t small = std::min<std::size_t>(S, 3);
    for (std::size_t a = 0; a < small; ++a)
        for (std::size_t b = 0; b < small; ++b)
            for (std::size_t c = 0; c < small; ++c)
                for (std::size_t a2 = 0; a2 < small; ++a2)
                    for (std::size_t b2 = 0; b2 < small; ++b2)
                        for (std::size_t c2 = 0; c2 < small; ++c2)
                            for (const auto& f : all[b][a])
                                for (const auto& g : all[c][b])
                                    for (const auto& f2 : all[b2][a2])
                                        for (const auto& g2 : all[c2][b2]) {
                                            bool ok = compose(oplus(f, f2), oplus(g, g2)) == oplus(compose(f, g), compose(f2, g2));
                                            detail::record(interchange, ok, [&] {
                                                return detail::describe(f) + " " + detail::describe(g) + " " +
                                                       detail::describe(f2) + " " + detail::describe(g2);
                                            });
                                        }

    detail::record(under, underlying_monoid_of_matrices(M) == *M, [] { return std::string("F<M>_{[1],[1]} differs from M"); });

    return {"", {closure, assoc, ident, interchange, under}};
}

/// Associativity and both unit laws of T_M, naturality of unit and multiplication along every map
/// between sets of size <= max_size, the size formula, and T_M([1]) = M.
inline LawReport monad_laws(const std::shared_ptr<const TableMonoid>& M, std::size_t max_size = 3) {
    if (max_size > 4) throw ResourceError("T_M laws: sets are limited to 4 elements");
    MonadTM T(M);
    LawResult size{"size formula", true, 0, ""}, assoc{"associativity", true, 0, ""},
        left{"left unit", true, 0, ""}, right{"right unit", true, 0, ""}, natural{"naturality", true, 0, ""},
        under{"underlying monoid", true, 0, ""};
    auto compose_maps = [](const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
        std::vector<std::size_t> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
        return out;
    };
    for (std::size_t n = 0; n <= max_size; ++n) {
        std::size_t tn = T.apply(n), ttn = T.apply(tn);
        detail::record(size, tn == (M->size() - 1) * n + 1, [&] { return "|X| = " + std::to_string(n); });
        auto mu = T.mult(n);
        auto mu_t = T.mult(tn);
        // mu o T(mu) = mu o mu_T on T^3
        auto lhs = compose_maps(T.fmap(mu, tn), mu);
        auto rhs = compose_maps(mu_t, mu);
        for (std::size_t s = 0; s < T.apply(ttn); ++s)
            detail::record(assoc, lhs[s] == rhs[s], [&] { return "|X| = " + std::to_string(n) + ", element " + std::to_string(s); });
        auto eta_t = T.unit(tn);
        auto t_eta = T.fmap(T.unit(n), tn);
        for (std::size_t t = 0; t < tn; ++t) {
            detail::record(left, mu[eta_t[t]] == t, [&] { return "|X| = " + std::to_string(n) + ", element " + std::to_string(t); });
            detail::record(right, mu[t_eta[t]] == t, [&] { return "|X| = " + std::to_string(n) + ", element " + std::to_string(t); });
        }
    }
    for (std::size_t n = 0; n <= max_size; ++n)
        for (std::size_t k = 0; k <= max_size; ++k) {
            if (n > 0 && k == 0) continue;
            std::size_t maps = 1;
            for (std::size_t i = 0; i < n; ++i) maps *= k;
            for (std::size_t code = 0; code < maps; ++code) {
                std::vector<std::size_t> f(n);
                for (std::size_t i = 0, c = code; i < n; ++i, c /= k) f[i] = c % k;
                auto Tf = T.fmap(f, k);
                auto eta_n = T.unit(n), eta_k = T.unit(k);
                bool ok = compose_maps(eta_n, Tf) == compose_maps(f, eta_k);
                ok = ok && compose_maps(T.mult(n), Tf) == compose_maps(T.fmap(Tf, T.apply(k)), T.mult(k));
                detail::record(natural, ok, [&] { return "map of size " + std::to_string(n) + " -> " + std::to_string(k); });
            }
        }
    detail::record(under, T.underlying_monoid() == *M, [] { return std::string("T_M([1]) differs from M"); });
    return {"", {size, assoc, left, right, natural, under}};
}

}  // namespace f1
