#pragma once

#include <map>

#include "f1/lattice.hpp"

namespace f1 {

/// Isomorphism invariants of a finitely generated abelian group Z^free_rank + (+) Z/d_i, d_1 | d_2 | ...
struct AbelianGroupInv {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_torsion_free() const { return invariant_factors.empty(); }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    Int torsion_order() const {
        Int o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }
    auto operator<=>(const AbelianGroupInv&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const AbelianGroupInv& g) {
    os << "Z^" << g.free_rank;
    for (const auto& d : g.invariant_factors) os << " + Z/" << d;
    return os;
}

/// Builds invariants from arbitrary cyclic orders (0 meaning infinite), normalizing to
/// invariant-factor form via the Smith form of the diagonal relation matrix.
inline AbelianGroupInv abelian_group_from_orders(const std::vector<Int>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
    SmithForm s = smith_normal_form(rel);
    AbelianGroupInv g;
    g.free_rank = orders.size() - s.rank;
    for (const auto& d : s.invariants())
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

/// #Hom(G, Z/m) = m^free_rank * prod gcd(d_i, m).
inline Int hom_count_to_cyclic(const AbelianGroupInv& g, const Int& m) {
    if (m < 1) throw ValidationError("hom_count_to_cyclic: m must be positive");
    Int r = pow(m, static_cast<unsigned>(g.free_rank));
    for (const auto& d : g.invariant_factors) r *= gcd(d, m);
    return r;
}

/// The ambient group Z^rank + (+) Z/torsion_i in which affine monoids live.
/// Elements are integer vectors of length rank + torsion.size() whose torsion
/// coordinates are reduced into [0, d_i).
struct AmbientGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    std::size_t width() const { return rank + torsion.size(); }

    void validate() const {
        for (const auto& d : torsion)
            if (d < 2) throw ValidationError("ambient torsion factors must be >= 2");
    }

    IntVector normalize(IntVector v) const {
        if (v.size() != width()) throw ValidationError("element has wrong length for the ambient group");
        for (std::size_t i = 0; i < torsion.size(); ++i) v[rank + i] = mod(v[rank + i], torsion[i]);
        return v;
    }

    IntVector identity() const { return zero_vector(width()); }

    IntVector add(const IntVector& a, const IntVector& b) const { return normalize(a + b); }
    IntVector negate(const IntVector& a) const { return normalize(-a); }
    IntVector scale(const Int& k, const IntVector& a) const { return normalize(k * a); }

    /// Free part (first `rank` coordinates).
    IntVector free_part(const IntVector& a) const {
        return IntVector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rank));
    }

    bool is_torsion_free() const { return torsion.empty(); }

    /// Relation columns d_i e_{rank+i} of the lifted presentation Z^width / R.
    std::vector<IntVector> relation_columns() const {
        std::vector<IntVector> cols;
        for (std::size_t i = 0; i < torsion.size(); ++i) cols.push_back(torsion[i] * unit_vector(width(), rank + i));
        return cols;
    }

    bool operator==(const AmbientGroup&) const = default;
};

/// Whether x lies in the subgroup generated by `generators`.
inline bool subgroup_contains(const AmbientGroup& G, const std::vector<IntVector>& generators, const IntVector& x) {
    auto cols = generators;
    for (auto& c : G.relation_columns()) cols.push_back(c);
    if (cols.empty()) return is_zero(G.normalize(x));
    return solve_integer(IntMatrix::from_columns(cols, G.width()), x).has_value();
}

/// Integer coefficients c with sum c_i g_i = x in G, if x is in the subgroup.
inline std::optional<IntVector> subgroup_coefficients(const AmbientGroup& G, const std::vector<IntVector>& generators,
                                                      const IntVector& x) {
    auto cols = generators;
    for (auto& c : G.relation_columns()) cols.push_back(c);
    if (cols.empty()) {
        if (is_zero(G.normalize(x))) return IntVector{};
        return std::nullopt;
    }
    auto sol = solve_integer(IntMatrix::from_columns(cols, G.width()), x);
    if (!sol) return std::nullopt;
    return IntVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(generators.size()));
}

/// Relation lattice {c in Z^m : sum c_i g_i = 0 in G}, as a list of basis vectors.
inline std::vector<IntVector> relation_lattice(const AmbientGroup& G, const std::vector<IntVector>& generators) {
    const std::size_t m = generators.size();
    if (m == 0) return {};
    auto cols = generators;
    for (auto& c : G.relation_columns()) cols.push_back(c);
    auto kernel = integer_kernel(IntMatrix::from_columns(cols, G.width()));
    std::vector<IntVector> rel;
    for (const auto& k : kernel) {
        IntVector c(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
        if (!is_zero(c)) rel.push_back(c);
    }
    return rel;
}

/// Invariants of the subgroup of G generated by `generators`: Z^m / relations.
inline AbelianGroupInv subgroup_invariants(const AmbientGroup& G, const std::vector<IntVector>& generators) {
    const std::size_t m = generators.size();
    if (m == 0) return {};
    auto rel = relation_lattice(G, generators);
    AbelianGroupInv out;
    if (rel.empty()) {
        out.free_rank = m;
        return out;
    }
    SmithForm s = smith_normal_form(IntMatrix::from_columns(rel, m));
    out.free_rank = m - s.rank;
    for (const auto& d : s.invariants())
        if (d > 1) out.invariant_factors.push_back(d);
    return out;
}

/// Invariants of a finite abelian group given by the orders of all its elements.
/// For each prime p the counts #{x : p^k x = 0} determine the p-primary partition.
inline AbelianGroupInv finite_group_invariants(const std::vector<Int>& element_orders) {
    const Int n = static_cast<unsigned long>(element_orders.size());
    std::vector<Int> cyclic_orders;
    Int rest = n;
    for (Int p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        // exponents e_i of the p-primary part: #{x : p^k | ord-annihilated} = p^{sum min(k, e_i)}
        std::vector<std::size_t> log_counts;
        for (unsigned k = 0;; ++k) {
            Int pk = pow(p, k);
            std::size_t cnt = 0;
            for (const auto& o : element_orders) {
                Int g = gcd(o, pk);
                if (g == o) ++cnt;  // o | p^k
            }
            std::size_t lg = 0;
            for (Int c = static_cast<unsigned long>(cnt); c > 1; c /= p) ++lg;
            log_counts.push_back(lg);
            if (k > 0 && log_counts[k] == log_counts[k - 1]) break;
        }
        // number of cyclic factors of exponent >= k is log_counts[k] - log_counts[k-1]
        for (std::size_t k = 1; k < log_counts.size(); ++k) {
            std::size_t at_least_k = log_counts[k] - log_counts[k - 1];
            std::size_t at_least_k1 = k + 1 < log_counts.size() ? log_counts[k + 1] - log_counts[k] : 0;
            for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c)
                cyclic_orders.push_back(pow(p, static_cast<unsigned>(k)));
        }
    }
    return abelian_group_from_orders(cyclic_orders);
}

}  // namespace f1
