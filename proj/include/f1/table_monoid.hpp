#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "f1/abelian_group.hpp"

namespace f1 {

/// A finite commutative monoid given by its full multiplication table, optionally with a zero.
class TableMonoid {
public:
    static constexpr std::size_t max_prime_search = 20;

    TableMonoid(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                std::optional<std::size_t> zero = std::nullopt)
        : names_(std::move(names)), table_(std::move(table)), zero_(zero) {
        validate();
    }

    /// {1, 0}: the monoid underlying F1.
    static TableMonoid boolean() { return TableMonoid({"1", "0"}, {{0, 1}, {1, 1}}, 1); }

    /// Z/n ∪ {0}, with elements named g^0 .. g^{n-1}, 0.
    static TableMonoid cyclic_with_zero(std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? std::string("1") : "g^" + std::to_string(i));
        names.push_back("0");
        std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return TableMonoid(names, t, n);
    }

    /// {1, x, x^2, ..., x^{k-1}, 0} with x^k = 0.
    static TableMonoid truncated_with_zero(std::size_t k) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? std::string("1") : (i == 1 ? std::string("x") : "x^" + std::to_string(i)));
        names.push_back("0");
        std::vector<std::vector<std::size_t>> t(k + 1, std::vector<std::size_t>(k + 1, k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) t[i][j] = i + j < k ? i + j : k;
        return TableMonoid(names, t, k);
    }

    std::size_t size() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::optional<std::size_t> zero() const { return zero_; }
    bool pointed() const { return zero_.has_value(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    std::size_t multiply(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }

    std::size_t power(std::size_t a, unsigned k) const {
        std::size_t r = identity_;
        for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
        return r;
    }

    bool is_unit(std::size_t a) const {
        for (std::size_t b = 0; b < size(); ++b)
            if (multiply(a, b) == identity_) return true;
        return false;
    }

    std::vector<std::size_t> unit_elements() const {
        std::vector<std::size_t> u;
        for (std::size_t a = 0; a < size(); ++a)
            if (is_unit(a)) u.push_back(a);
        return u;
    }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    /// a*b = a*c implies b = c on the nonzero part (zero, if present, is excluded).
    bool is_cancellative() const {
        for (std::size_t a = 0; a < size(); ++a) {
            if (zero_ && a == *zero_) continue;
            for (std::size_t b = 0; b < size(); ++b)
                for (std::size_t c = b + 1; c < size(); ++c)
                    if (multiply(a, b) == multiply(a, c)) return false;
        }
        return true;
    }

    bool operator==(const TableMonoid& o) const {
        return names_ == o.names_ && table_ == o.table_ && zero_ == o.zero_;
    }

private:
    void validate() {
        const std::size_t n = names_.size();
        if (n == 0) throw ValidationError("table monoid: no elements");
        if (table_.size() != n) throw ValidationError("table monoid: table must have one row per element");
        for (std::size_t i = 0; i < n; ++i) {
            if (table_[i].size() != n) throw ValidationError("table monoid: row " + std::to_string(i) + " has wrong length");
            for (auto e : table_[i])
                if (e >= n) throw ValidationError("table monoid: entry in row " + std::to_string(i) + " is not an element");
        }
        std::optional<std::size_t> id;
        for (std::size_t e = 0; e < n && !id; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a;
            if (ok) id = e;
        }
        if (!id) throw ValidationError("table monoid: no identity element");
        identity_ = *id;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (table_[a][b] != table_[b][a])
                    throw ValidationError("table monoid: not commutative at (" + names_[a] + "," + names_[b] + ")");
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw ValidationError("table monoid: not associative at (" + names_[a] + "," + names_[b] + "," +
                                              names_[c] + ")");
            }
        if (zero_) {
            if (*zero_ >= n) throw ValidationError("table monoid: zero is not an element");
            for (std::size_t a = 0; a < n; ++a)
                if (table_[*zero_][a] != *zero_) throw ValidationError("table monoid: zero is not absorbing");
        }
    }

    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::optional<std::size_t> zero_;
    std::size_t identity_ = 0;
};

/// A prime of a table monoid: the explicit (sorted) element set.
struct TablePrime {
    std::vector<std::size_t> elements;
    auto operator<=>(const TablePrime&) const = default;
};

/// Element map between table monoids.
struct TableHom {
    TableMonoid source;
    TableMonoid target;
    std::vector<std::size_t> map;

    bool is_homomorphism() const {
        if (map.size() != source.size()) return false;
        if (map[source.identity()] != target.identity()) return false;
        if (source.zero() && (!target.zero() || map[*source.zero()] != *target.zero())) return false;
        for (std::size_t a = 0; a < source.size(); ++a)
            for (std::size_t b = 0; b < source.size(); ++b)
                if (map[source.multiply(a, b)] != target.multiply(map[a], map[b])) return false;
        return true;
    }
};

/// Exhaustive prime search: proper ideals whose complement is a submonoid (and that contain 0).
/// Sorted by size, so the generic prime comes first and the maximal prime last.
inline std::vector<TablePrime> primes(const TableMonoid& M) {
    const std::size_t n = M.size();
    if (n > TableMonoid::max_prime_search)
        throw ResourceError("primes: table monoids are limited to " + std::to_string(TableMonoid::max_prime_search) +
                            " elements");
    std::vector<TablePrime> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto in = [&](std::size_t a) { return (mask >> a) & 1u; };
        if (in(M.identity())) continue;
        if (M.zero() && !in(*M.zero())) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) {
                std::size_t ab = M.multiply(a, b);
                if (in(a) && !in(ab)) ok = false;             // ideal
                if (!in(a) && !in(b) && in(ab)) ok = false;   // complement closed
            }
        if (!ok) continue;
        TablePrime p;
        for (std::size_t a = 0; a < n; ++a)
            if (in(a)) p.elements.push_back(a);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const TablePrime& a, const TablePrime& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

/// A localization M_p with its fraction bookkeeping: fraction_class[a][s] is the element a/s,
/// or SIZE_MAX when s lies in p.
struct TableLocalization {
    TableMonoid monoid;
    TableHom map;
    std::vector<std::vector<std::size_t>> fraction_class;
};

/// Fractions a/s with s outside p, where a/s ~ b/t iff u t a = u s b for some u outside p.
inline TableLocalization localize_fractions(const TableMonoid& M, const TablePrime& p) {
    const std::size_t n = M.size();
    std::vector<bool> in_p(n, false);
    for (auto a : p.elements) in_p.at(a) = true;
    std::vector<std::size_t> S;
    for (std::size_t a = 0; a < n; ++a)
        if (!in_p[a]) S.push_back(a);
    if (in_p[M.identity()]) throw ValidationError("localize: the prime contains the identity");
    const std::size_t m = S.size();
    auto id = [&](std::size_t a, std::size_t si) { return a * m + si; };
    std::vector<std::size_t> parent(n * m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t si = 0; si < m; ++si)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t ti = 0; ti < m; ++ti)
                    for (auto u : S)
                        if (M.multiply(u, M.multiply(S[ti], a)) == M.multiply(u, M.multiply(S[si], b))) {
                            parent[find(id(a, si))] = find(id(b, ti));
                            break;
                        }
    std::vector<std::size_t> class_of(n * m), reps;
    std::vector<std::size_t> root_to_class(n * m, SIZE_MAX);
    for (std::size_t x = 0; x < n * m; ++x) {
        std::size_t r = find(x);
        if (root_to_class[r] == SIZE_MAX) {
            root_to_class[r] = reps.size();
            reps.push_back(x);
        }
        class_of[x] = root_to_class[r];
    }
    auto index_in_S = [&](std::size_t s) { return static_cast<std::size_t>(std::find(S.begin(), S.end(), s) - S.begin()); };
    std::size_t s_one = index_in_S(M.identity());
    std::vector<std::string> names;
    for (auto x : reps) {
        std::size_t a = x / m, si = x % m;
        names.push_back(S[si] == M.identity() ? M.names()[a] : M.names()[a] + "/" + M.names()[S[si]]);
    }
    std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            std::size_t a = reps[i] / m, si = reps[i] % m, b = reps[j] / m, ti = reps[j] % m;
            table[i][j] = class_of[id(M.multiply(a, b), index_in_S(M.multiply(S[si], S[ti])))];
        }
    std::optional<std::size_t> zero;
    if (M.zero()) zero = class_of[id(*M.zero(), s_one)];
    TableMonoid L(names, table, zero);
    std::vector<std::size_t> map(n);
    for (std::size_t a = 0; a < n; ++a) map[a] = class_of[id(a, s_one)];
    std::vector<std::vector<std::size_t>> fractions(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t si = 0; si < m; ++si) fractions[a][S[si]] = class_of[id(a, si)];
    return {L, TableHom{M, L, map}, std::move(fractions)};
}

inline std::pair<TableMonoid, TableHom> localize(const TableMonoid& M, const TablePrime& p) {
    auto loc = localize_fractions(M, p);
    return {std::move(loc.monoid), std::move(loc.map)};
}

inline AbelianGroupInv units(const TableMonoid& M) {
    std::vector<Int> orders;
    for (auto u : M.unit_elements()) {
        unsigned k = 1;
        std::size_t x = u;
        while (x != M.identity()) {
            x = M.multiply(x, u);
            ++k;
        }
        orders.push_back(k);
    }
    return finite_group_invariants(orders);
}

/// M_{+0}: adjoins a new absorbing element named "0". No-op when M already has a zero.
inline TableMonoid adjoin_zero(const TableMonoid& M, std::string* warning = nullptr) {
    if (M.pointed()) {
        if (warning) *warning = "adjoin_zero: monoid already has a zero; returned unchanged";
        return M;
    }
    const std::size_t n = M.size();
    auto names = M.names();
    names.push_back("0");
    std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = M.multiply(a, b);
    return TableMonoid(names, t, n);
}

}  // namespace f1
