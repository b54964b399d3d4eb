#pragma once

#include "f1/monoid.hpp"
#include "f1/table_monoid.hpp"

namespace f1 {

template <class M>
struct monoid_traits;

template <>
struct monoid_traits<AffineMonoid> {
    using Prime = AffinePrime;
    using Hom = MonoidHom;

    /// p ⊆ q, read off the complement faces.
    static bool prime_leq(const Prime& p, const Prime& q) {
        return std::includes(p.complement_face.begin(), p.complement_face.end(), q.complement_face.begin(),
                             q.complement_face.end());
    }
};

template <>
struct monoid_traits<TableMonoid> {
    using Prime = TablePrime;
    using Hom = TableHom;

    static bool prime_leq(const Prime& p, const Prime& q) {
        return std::includes(q.elements.begin(), q.elements.end(), p.elements.begin(), p.elements.end());
    }
};

/// Spec A as a finite poset of primes with the structure sheaf stored as a functor on it:
/// a stalk per point and a restriction map for every specialization x <= y (p_x ⊆ p_y).
/// Opens are the generization-closed subsets. Point 0 is generic, the last point is closed.
template <class M>
class Spectrum {
public:
    using Traits = monoid_traits<M>;
    using Prime = typename Traits::Prime;
    using Hom = typename Traits::Hom;

    explicit Spectrum(M A) : monoid_(std::move(A)), points_(primes(monoid_)) {
        for (const auto& p : points_) {
            if constexpr (std::is_same_v<M, AffineMonoid>) {
                stalks_.push_back(localize(monoid_, p).first);
            } else {
                auto loc = localize_fractions(monoid_, p);
                stalks_.push_back(loc.monoid);
                fractions_.push_back(std::move(loc.fraction_class));
            }
        }
    }

    const M& monoid() const { return monoid_; }
    const std::vector<Prime>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t generic_point() const { return 0; }
    std::size_t closed_point() const { return points_.size() - 1; }

    /// x <= y iff p_x ⊆ p_y, i.e. y lies in the closure of x.
    bool leq(std::size_t x, std::size_t y) const { return Traits::prime_leq(points_.at(x), points_.at(y)); }

    bool is_open(const std::vector<std::size_t>& U) const {
        std::vector<bool> in(size(), false);
        for (auto u : U) in.at(u) = true;
        for (auto y : U)
            for (std::size_t x = 0; x < size(); ++x)
                if (leq(x, y) && !in[x]) return false;
        return true;
    }

    std::vector<std::size_t> closure(std::size_t x) const {
        std::vector<std::size_t> c;
        for (std::size_t y = 0; y < size(); ++y)
            if (leq(x, y)) c.push_back(y);
        return c;
    }

    /// Smallest open neighbourhood: all generizations of x.
    std::vector<std::size_t> smallest_open(std::size_t x) const {
        std::vector<std::size_t> c;
        for (std::size_t y = 0; y < size(); ++y)
            if (leq(y, x)) c.push_back(y);
        return c;
    }

    const M& stalk(std::size_t x) const { return stalks_.at(x); }

    /// Restriction O_y -> O_x along x <= y.
    Hom restriction(std::size_t x, std::size_t y) const {
        if (!leq(x, y)) throw ValidationError("restriction: points are not comparable");
        if constexpr (std::is_same_v<M, AffineMonoid>) {
            return MonoidHom::inclusion(stalks_[y], stalks_[x]);
        } else {
            const std::size_t n = monoid_.size();
            std::vector<std::size_t> map(stalks_[y].size(), SIZE_MAX);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t s = 0; s < n; ++s) {
                    std::size_t c = fractions_[y][a][s];
                    if (c != SIZE_MAX && map[c] == SIZE_MAX) map[c] = fractions_[x][a][s];
                }
            return TableHom{stalks_[y], stalks_[x], map};
        }
    }

    /// O(U) as the limit of the stalks over U.
    M sections(const std::vector<std::size_t>& U) const {
        if (U.empty()) throw ValidationError("sections: empty open set");
        if (!is_open(U)) throw ValidationError("sections: set is not open");
        std::vector<std::size_t> maximal;
        for (auto x : U) {
            bool top = true;
            for (auto y : U)
                if (y != x && leq(x, y)) top = false;
            if (top) maximal.push_back(x);
        }
        if (maximal.size() == 1) return stalks_[maximal.front()];
        if constexpr (std::is_same_v<M, AffineMonoid>) {
            std::vector<AffineMonoid> parts;
            for (auto x : maximal) parts.push_back(stalks_[x]);
            return intersect_saturated(parts);
        } else {
            return table_limit(U, maximal);
        }
    }

    M global_sections() const {
        std::vector<std::size_t> all(size());
        std::iota(all.begin(), all.end(), 0);
        return sections(all);
    }

private:
    // Compatible families over the maximal points of U, multiplied componentwise.
    TableMonoid table_limit(const std::vector<std::size_t>& U, const std::vector<std::size_t>& maximal) const {
        std::size_t total = 1;
        for (auto x : maximal) {
            total *= stalks_[x].size();
            if (total > 100000) throw ResourceError("sections: too many candidate families");
        }
        std::vector<std::vector<std::size_t>> families;
        std::vector<std::size_t> pick(maximal.size(), 0);
        std::vector<std::vector<Hom>> res(maximal.size());
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < maximal.size() && ok; ++i)
                for (std::size_t j = i + 1; j < maximal.size() && ok; ++j)
                    for (auto z : U)
                        if (leq(z, maximal[i]) && leq(z, maximal[j]) &&
                            restriction(z, maximal[i]).map[pick[i]] != restriction(z, maximal[j]).map[pick[j]])
                            ok = false;
            if (ok) families.push_back(pick);
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < stalks_[maximal[i]].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
        auto index = [&](const std::vector<std::size_t>& f) {
            return static_cast<std::size_t>(std::find(families.begin(), families.end(), f) - families.begin());
        };
        std::vector<std::string> names;
        for (const auto& f : families) {
            std::string s = "(";
            for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + stalks_[maximal[i]].names()[f[i]];
            names.push_back(s + ")");
        }
        std::vector<std::vector<std::size_t>> table(families.size(), std::vector<std::size_t>(families.size()));
        for (std::size_t a = 0; a < families.size(); ++a)
            for (std::size_t b = 0; b < families.size(); ++b) {
                std::vector<std::size_t> prod(maximal.size());
                for (std::size_t i = 0; i < maximal.size(); ++i)
                    prod[i] = stalks_[maximal[i]].multiply(families[a][i], families[b][i]);
                table[a][b] = index(prod);
            }
        std::optional<std::size_t> zero;
        if (monoid_.zero()) {
            std::vector<std::size_t> z;
            for (auto x : maximal) z.push_back(*stalks_[x].zero());
            zero = index(z);
        }
        return TableMonoid(names, table, zero);
    }

    M monoid_;
    std::vector<Prime> points_;
    std::vector<M> stalks_;
    std::vector<std::vector<std::vector<std::size_t>>> fractions_;
};

/// Stalk at p computed independently of `localize`: the colimit over principal opens D(f),
/// f outside p, is A_f for the single element f = sum of the complement-face generators.
inline AffineMonoid stalk_via_principal_open(const AffineMonoid& A, const AffinePrime& p) {
    IntVector f = A.ambient().identity();
    for (auto i : p.complement_face) f = A.ambient().add(f, A.generators().at(i));
    auto gens = A.generators();
    gens.push_back(A.ambient().negate(f));
    return A.with_generators(std::move(gens));
}

}  // namespace f1
