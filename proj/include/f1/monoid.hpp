#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "f1/abelian_group.hpp"
#include "f1/hilbert.hpp"

namespace f1 {

/// A finitely generated commutative monoid realized inside an abelian group
/// Z^r + (+) Z/d_i, written additively: the element sum n_i g_i stands for prod g_i^{n_i}.
/// Integral by construction. When `pointed` is set, an absorbing zero is formally adjoined;
/// it is never stored as a generator.
///
/// The generator list is canonical: torsion coordinates reduced, the identity dropped,
/// duplicates removed, sorted lexicographically. Cone data and the face lattice are computed
/// on construction, so values are immutable and freely shareable.
class AffineMonoid {
public:
    AffineMonoid() : AffineMonoid(AmbientGroup{}, {}) {}

    AffineMonoid(AmbientGroup ambient, std::vector<IntVector> generators, bool pointed = false)
        : ambient_(std::move(ambient)), pointed_(pointed) {
        ambient_.validate();
        std::set<IntVector> unique;
        for (auto& g : generators) {
            IntVector n = ambient_.normalize(std::move(g));
            if (!is_zero(n)) unique.insert(std::move(n));
        }
        generators_.assign(unique.begin(), unique.end());
        build_faces();
    }

    /// N^n with the standard basis as generators.
    static AffineMonoid free_commutative(std::size_t n) {
        std::vector<IntVector> g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(unit_vector(n, i));
        return AffineMonoid(AmbientGroup{n, {}}, g);
    }

    /// Z^n as a monoid (all of its elements are units).
    static AffineMonoid free_group(std::size_t n) {
        std::vector<IntVector> g;
        for (std::size_t i = 0; i < n; ++i) {
            g.push_back(unit_vector(n, i));
            g.push_back(-unit_vector(n, i));
        }
        return AffineMonoid(AmbientGroup{n, {}}, g);
    }

    const AmbientGroup& ambient() const { return ambient_; }
    const std::vector<IntVector>& generators() const { return generators_; }
    bool pointed() const { return pointed_; }

    /// Cone spanned by the free parts of the generators, in Q^rank.
    const ConeHRep& cone() const { return cone_; }

    /// Faces of the monoid as generator-index sets, largest first; the last entry is the unit face.
    const std::vector<GeneratorFace>& faces() const { return faces_; }
    const GeneratorFace& unit_face() const { return faces_.back(); }

    std::vector<IntVector> face_generators(const GeneratorFace& f) const {
        std::vector<IntVector> v;
        for (auto i : f.members) v.push_back(generators_[i]);
        return v;
    }
    std::vector<IntVector> unit_generators() const { return face_generators(unit_face()); }

    /// Index of a face given by its member list, if it is one.
    std::optional<std::size_t> face_index(const std::vector<std::size_t>& members) const {
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (faces_[i].members == members) return i;
        return std::nullopt;
    }

    /// Membership of a (nonzero) ambient element.
    bool contains(const IntVector& x) const {
        IntVector v = ambient_.normalize(x);
        if (!cone_.contains(ambient_.free_part(v))) return false;
        if (!subgroup_contains(ambient_, generators_, v)) return false;
        // Non-unit generators are bounded by the interior functional; search their multiplicities.
        std::vector<IntVector> units = unit_generators();
        std::vector<IntVector> rest;
        std::vector<Int> weight;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (std::binary_search(unit_face().members.begin(), unit_face().members.end(), i)) continue;
            rest.push_back(generators_[i]);
            weight.push_back(dot(functional_, ambient_.free_part(generators_[i])));
        }
        std::set<std::pair<std::size_t, IntVector>> visited;
        std::function<bool(std::size_t, const IntVector&)> search = [&](std::size_t idx, const IntVector& residual) {
            Int budget = dot(functional_, ambient_.free_part(residual));
            if (budget < 0 || !cone_.contains(ambient_.free_part(residual))) return false;
            if (budget == 0) return subgroup_contains(ambient_, units, residual);
            if (idx == rest.size()) return false;
            if (!visited.insert({idx, residual}).second) return false;
            IntVector r = residual;
            for (Int used = 0; used * weight[idx] <= budget; ++used) {
                if (search(idx + 1, r)) return true;
                r = ambient_.add(r, ambient_.negate(rest[idx]));
            }
            return false;
        };
        return search(0, v);
    }

    bool is_unit(const IntVector& x) const { return subgroup_contains(ambient_, unit_generators(), x); }

    /// Same submonoid of the same ambient group (generating sets may differ).
    bool same_submonoid(const AffineMonoid& o) const {
        if (!(ambient_ == o.ambient_) || pointed_ != o.pointed_) return false;
        for (const auto& g : o.generators_)
            if (!contains(g)) return false;
        for (const auto& g : generators_)
            if (!o.contains(g)) return false;
        return true;
    }

    AffineMonoid with_generators(std::vector<IntVector> gens) const { return AffineMonoid(ambient_, std::move(gens), pointed_); }

    bool operator==(const AffineMonoid& o) const {
        return ambient_ == o.ambient_ && pointed_ == o.pointed_ && generators_ == o.generators_;
    }

private:
    void build_faces() {
        // Generators with zero free part are torsion units and lie on every face.
        std::vector<IntVector> free_parts;
        std::vector<std::size_t> free_index, torsion_index;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            IntVector f = ambient_.free_part(generators_[i]);
            if (is_zero(f)) {
                torsion_index.push_back(i);
            } else {
                free_parts.push_back(std::move(f));
                free_index.push_back(i);
            }
        }
        cone_ = hrep_from_generators(free_parts, ambient_.rank);
        functional_ = cone_.interior_functional();
        faces_.clear();
        for (const auto& f : enumerate_faces(free_parts, cone_)) {
            GeneratorFace face;
            face.dimension = f.dimension;
            for (auto j : f.members) face.members.push_back(free_index[j]);
            face.members.insert(face.members.end(), torsion_index.begin(), torsion_index.end());
            std::sort(face.members.begin(), face.members.end());
            faces_.push_back(std::move(face));
        }
    }

    AmbientGroup ambient_;
    std::vector<IntVector> generators_;
    bool pointed_ = false;
    ConeHRep cone_;
    IntVector functional_;
    std::vector<GeneratorFace> faces_;
};

/// A prime ideal of an affine monoid, recorded by its complement: the face F with A \ p = <F>.
/// For pointed monoids the prime additionally contains the zero element.
struct AffinePrime {
    std::vector<std::size_t> complement_face;
    bool contains_zero = false;
    auto operator<=>(const AffinePrime&) const = default;
};

/// An ideal a of A (a + A ⊆ a), generated by finitely many elements.
struct AffineIdeal {
    std::shared_ptr<const AffineMonoid> owner;
    std::vector<IntVector> generators;

    bool contains(const IntVector& x) const {
        for (const auto& g : generators) {
            IntVector d = owner->ambient().add(x, owner->ambient().negate(g));
            if (is_zero(d) || owner->contains(d)) return true;
        }
        return false;
    }
};

/// The ideal of A generated by the generators outside the complement face.
inline AffineIdeal prime_as_ideal(const std::shared_ptr<const AffineMonoid>& A, const AffinePrime& p) {
    AffineIdeal a{A, {}};
    for (std::size_t i = 0; i < A->generators().size(); ++i)
        if (!std::binary_search(p.complement_face.begin(), p.complement_face.end(), i))
            a.generators.push_back(A->generators()[i]);
    return a;
}

/// A monoid homomorphism given by the images of the source generators.
struct MonoidHom {
    AffineMonoid source;
    AffineMonoid target;
    std::vector<IntVector> images;

    /// Relations of the source map to relations of the target and images land in the target.
    void validate() const {
        if (images.size() != source.generators().size())
            throw ValidationError("monoid hom: one image per source generator required");
        for (const auto& img : images) {
            IntVector n = target.ambient().normalize(img);
            if (!is_zero(n) && !target.contains(n)) throw ValidationError("monoid hom: image outside the target monoid");
        }
        for (const auto& rel : relation_lattice(source.ambient(), source.generators())) {
            IntVector s = target.ambient().identity();
            for (std::size_t i = 0; i < rel.size(); ++i) s = target.ambient().add(s, target.ambient().scale(rel[i], images[i]));
            if (!is_zero(s)) throw ValidationError("monoid hom: a relation of the source is not respected");
        }
        if (source.pointed() != target.pointed())
            throw ValidationError("monoid hom: source and target must agree on the zero element");
    }

    /// Image of an element of the group completion of the source.
    IntVector apply(const IntVector& x) const {
        auto c = subgroup_coefficients(source.ambient(), source.generators(), x);
        if (!c) throw ValidationError("monoid hom: element outside the group completion of the source");
        IntVector s = target.ambient().identity();
        for (std::size_t i = 0; i < c->size(); ++i) s = target.ambient().add(s, target.ambient().scale((*c)[i], images[i]));
        return s;
    }

    static MonoidHom identity(const AffineMonoid& A) { return MonoidHom{A, A, A.generators()}; }

    /// Inclusion of A into a larger monoid B of the same ambient group.
    static MonoidHom inclusion(const AffineMonoid& A, const AffineMonoid& B) { return MonoidHom{A, B, A.generators()}; }

    MonoidHom then(const MonoidHom& next) const {
        std::vector<IntVector> imgs;
        for (const auto& img : images) imgs.push_back(next.apply(img));
        return MonoidHom{source, next.target, imgs};
    }
};

// ---------------------------------------------------------------------------
// Operations

/// All prime ideals, generic (empty prime) first and the maximal prime A \ A^x last.
inline std::vector<AffinePrime> primes(const AffineMonoid& A) {
    std::vector<AffinePrime> out;
    for (const auto& f : A.faces()) out.push_back(AffinePrime{f.members, A.pointed()});
    return out;
}

/// The prime whose complement is the given face.
inline AffinePrime prime_of_face(const AffineMonoid& A, std::size_t face_index) {
    return AffinePrime{A.faces().at(face_index).members, A.pointed()};
}

/// A localized at the face F (elements of F inverted).
inline AffineMonoid invert_face(const AffineMonoid& A, const std::vector<std::size_t>& face) {
    std::vector<IntVector> gens = A.generators();
    for (auto i : face) gens.push_back(A.ambient().negate(A.generators().at(i)));
    return A.with_generators(std::move(gens));
}

/// A_p = (A \ p)^{-1} A together with the canonical map A -> A_p.
inline std::pair<AffineMonoid, MonoidHom> localize(const AffineMonoid& A, const AffinePrime& p) {
    if (!A.face_index(p.complement_face)) throw ValidationError("localize: not a prime of this monoid");
    AffineMonoid Ap = invert_face(A, p.complement_face);
    return {Ap, MonoidHom::inclusion(A, Ap)};
}

inline AbelianGroupInv group_completion(const AffineMonoid& A) {
    return subgroup_invariants(A.ambient(), A.generators());
}

inline AbelianGroupInv units(const AffineMonoid& A) { return subgroup_invariants(A.ambient(), A.unit_generators()); }

/// Saturation {x in Quot A : n x in A for some n >= 1} = {x in Quot A : free part in cone(A)}.
inline AffineMonoid saturate(const AffineMonoid& A) {
    const AmbientGroup& G = A.ambient();
    std::vector<IntVector> free_parts;
    for (const auto& g : A.generators()) free_parts.push_back(G.free_part(g));
    std::vector<IntVector> gens;
    if (free_parts.empty()) return A;
    IntMatrix F = IntMatrix::from_columns(free_parts, G.rank);
    // Torsion of Quot A: images of integer relations among the free parts.
    for (const auto& c : integer_kernel(F)) {
        IntVector t = G.identity();
        for (std::size_t i = 0; i < c.size(); ++i) t = G.add(t, G.scale(c[i], A.generators()[i]));
        gens.push_back(t);
    }
    // Lattice points of the cone in the free projection of Quot A, lifted back into Quot A.
    IntMatrix L = image_basis(F);
    for (const auto& f : cone_lattice_generators(free_parts, L)) {
        auto c = solve_integer(F, f);
        IntVector lift = G.identity();
        for (std::size_t i = 0; i < c->size(); ++i) lift = G.add(lift, G.scale((*c)[i], A.generators()[i]));
        gens.push_back(lift);
    }
    return A.with_generators(std::move(gens));
}

inline bool is_saturated(const AffineMonoid& A) {
    AffineMonoid S = saturate(A);
    for (const auto& g : S.generators())
        if (!A.contains(g)) return false;
    return true;
}

/// Intersection of saturated monoids sharing one ambient group and one group completion:
/// lattice points of the intersected cones. Anything else is unsupported.
inline AffineMonoid intersect_saturated(const std::vector<AffineMonoid>& monoids) {
    if (monoids.empty()) throw ValidationError("intersect: no monoids given");
    const AffineMonoid& first = monoids.front();
    if (monoids.size() == 1) return first;
    const AmbientGroup& G = first.ambient();
    if (!G.is_torsion_free()) throw UnsupportedError("intersect: ambient group has torsion");
    ConeHRep cut{G.rank, {}, {}};
    for (const auto& A : monoids) {
        if (!(A.ambient() == G) || A.pointed() != first.pointed())
            throw ValidationError("intersect: monoids live in different ambient groups");
        for (const auto& g : A.generators())
            if (!subgroup_contains(G, first.generators(), g)) throw UnsupportedError("intersect: group completions differ");
        for (const auto& g : first.generators())
            if (!subgroup_contains(G, A.generators(), g)) throw UnsupportedError("intersect: group completions differ");
        if (!is_saturated(A)) throw UnsupportedError("intersect: monoid is not saturated");
        cut.facets.insert(cut.facets.end(), A.cone().facets.begin(), A.cone().facets.end());
        cut.equations.insert(cut.equations.end(), A.cone().equations.begin(), A.cone().equations.end());
    }
    ConeVRep v = vrep_from_hrep(cut);
    std::vector<IntVector> gens = v.rays;
    for (const auto& l : v.lineality) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    if (gens.empty()) return first.with_generators({});
    IntMatrix L = image_basis(IntMatrix::from_columns(first.generators(), G.rank));
    return first.with_generators(cone_lattice_generators(gens, L));
}

/// A_{+0} = A ∪ {0}. Adjoining to an already pointed monoid is a no-op; `warning` is set when given.
inline AffineMonoid adjoin_zero(const AffineMonoid& A, std::string* warning = nullptr) {
    if (A.pointed()) {
        if (warning) *warning = "adjoin_zero: monoid already has a zero; returned unchanged";
        return A;
    }
    return AffineMonoid(A.ambient(), A.generators(), true);
}

inline MonoidHom adjoin_zero(const MonoidHom& h) {
    return MonoidHom{adjoin_zero(h.source), adjoin_zero(h.target), h.images};
}

/// Forgets the zero element.
inline AffineMonoid drop_zero(const AffineMonoid& A) { return AffineMonoid(A.ambient(), A.generators(), false); }

/// Direct product A x B inside the direct sum of the ambient groups.
inline AffineMonoid product(const AffineMonoid& A, const AffineMonoid& B) {
    const auto& GA = A.ambient();
    const auto& GB = B.ambient();
    AmbientGroup G{GA.rank + GB.rank, GA.torsion};
    G.torsion.insert(G.torsion.end(), GB.torsion.begin(), GB.torsion.end());
    auto embed = [&](const IntVector& a, const IntVector& b) {
        IntVector v;
        v.insert(v.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(GA.rank));
        v.insert(v.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(GB.rank));
        v.insert(v.end(), a.begin() + static_cast<std::ptrdiff_t>(GA.rank), a.end());
        v.insert(v.end(), b.begin() + static_cast<std::ptrdiff_t>(GB.rank), b.end());
        return v;
    };
    std::vector<IntVector> gens;
    for (const auto& a : A.generators()) gens.push_back(embed(a, GB.identity()));
    for (const auto& b : B.generators()) gens.push_back(embed(GA.identity(), b));
    return AffineMonoid(G, gens, A.pointed() && B.pointed());
}

inline std::ostream& operator<<(std::ostream& os, const AffineMonoid& A) {
    os << "<";
    for (std::size_t i = 0; i < A.generators().size(); ++i) os << (i ? " " : "") << to_string(A.generators()[i]);
    os << "> in Z^" << A.ambient().rank;
    for (const auto& d : A.ambient().torsion) os << "+Z/" << d;
    if (A.pointed()) os << " with 0";
    return os;
}

}  // namespace f1
