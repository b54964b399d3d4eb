#pragma once

#include <map>
#include <set>

#include "f1/lattice.hpp"

namespace f1 {

/// V-representation of a polyhedral cone: cone(rays) + span(lineality).
/// Canonical form: rays are primitive, orthogonal to the lineality space and sorted;
/// the lineality basis is kept as returned by the elimination.
struct ConeVRep {
    std::size_t dim = 0;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

namespace detail {

inline std::vector<std::size_t> tight_set(const std::vector<IntVector>& constraints, std::size_t upto,
                                          const IntVector& x) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < upto; ++i)
        if (dot(constraints[i], x) == 0) z.push_back(i);
    return z;
}

// Projects v onto the orthogonal complement of span(basis), scaled to a primitive integer vector.
inline IntVector project_off(const IntVector& v, const std::vector<IntVector>& basis) {
    if (basis.empty()) return primitive(v);
    const std::size_t n = v.size();
    // Solve for the component of v in span(basis) via the normal equations B^T B c = B^T v.
    const std::size_t k = basis.size();
    IntMatrix gram(k, k);
    IntVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    auto c = solve_rational(gram, to_rational(rhs));
    RationalVector out = to_rational(v);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j] -= (*c)[i] * basis[i][j];
    return primitive(out);
}

}  // namespace detail

/// Double description: V-representation of {x in Q^dim : <a, x> >= 0 for every a in constraints}.
/// Constraints are processed one at a time; rays are combined only for adjacent pairs, tested
/// algebraically by the rank of the common tight constraints.
inline ConeVRep double_description(const std::vector<IntVector>& constraints, std::size_t dim) {
    for (const auto& a : constraints)
        if (a.size() != dim) throw ValidationError("double_description: constraint has wrong dimension");
    std::vector<IntVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vector(dim, i));
    std::vector<IntVector> rays;

    for (std::size_t c = 0; c < constraints.size(); ++c) {
        const IntVector& a = constraints[c];
        if (is_zero(a)) continue;
        // Case 1: the constraint cuts the lineality space.
        std::optional<std::size_t> cut;
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                cut = i;
                break;
            }
        if (cut) {
            IntVector l = lineality[*cut];
            Int al = dot(a, l);
            if (al < 0) {
                l = -l;
                al = -al;
            }
            std::vector<IntVector> next_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == *cut) continue;
                IntVector v = al * lineality[i] - dot(a, lineality[i]) * l;
                next_lin.push_back(primitive(v));
            }
            for (auto& r : rays) r = primitive(al * r - dot(a, r) * l);
            rays.push_back(primitive(l));
            lineality = std::move(next_lin);
            continue;
        }
        // Case 2: ordinary double description step on the pointed part.
        std::vector<IntVector> pos, zero, neg;
        for (const auto& r : rays) {
            Int s = dot(a, r);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        if (neg.empty()) continue;
        const std::size_t pointed_dim = dim - lineality.size();
        std::vector<IntVector> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        for (const auto& rp : pos) {
            auto zp = detail::tight_set(constraints, c, rp);
            for (const auto& rn : neg) {
                auto zn = detail::tight_set(constraints, c, rn);
                std::vector<std::size_t> common;
                std::set_intersection(zp.begin(), zp.end(), zn.begin(), zn.end(), std::back_inserter(common));
                std::vector<IntVector> rows;
                for (auto i : common) rows.push_back(constraints[i]);
                // Adjacent iff the common tight constraints have rank pointed_dim - 2.
                if (pointed_dim < 2 || rank_of(rows, dim) != pointed_dim - 2) continue;
                IntVector combo = dot(a, rp) * rn - dot(a, rn) * rp;
                next.push_back(primitive(combo));
            }
        }
        rays = std::move(next);
    }

    ConeVRep out;
    out.dim = dim;
    out.lineality = lineality;
    std::set<IntVector> unique;
    for (const auto& r : rays) {
        IntVector p = detail::project_off(r, lineality);
        if (!is_zero(p)) unique.insert(p);
    }
    out.rays.assign(unique.begin(), unique.end());
    return out;
}

/// H-representation of cone(generators): x is in the cone iff <f, x> >= 0 for every facet
/// normal f and <e, x> = 0 for every equation e.
struct ConeHRep {
    std::size_t dim = 0;
    std::vector<IntVector> facets;
    std::vector<IntVector> equations;

    bool contains(const IntVector& x) const {
        for (const auto& e : equations)
            if (dot(e, x) != 0) return false;
        for (const auto& f : facets)
            if (dot(f, x) < 0) return false;
        return true;
    }

    bool contains(const RationalVector& x) const {
        auto ev = [&](const IntVector& a) {
            Rational s = 0;
            for (std::size_t i = 0; i < dim; ++i) s += Rational(a[i]) * x[i];
            return s;
        };
        for (const auto& e : equations)
            if (ev(e) != 0) return false;
        for (const auto& f : facets)
            if (ev(f) < 0) return false;
        return true;
    }

    /// Integer functional vanishing exactly on the lineality space of the cone and positive elsewhere
    /// on the cone (sum of facet normals).
    IntVector interior_functional() const {
        IntVector s = zero_vector(dim);
        for (const auto& f : facets) s = s + f;
        return s;
    }
};

/// Facets and equations of cone(generators) (the generators may span any subspace).
inline ConeHRep hrep_from_generators(const std::vector<IntVector>& generators, std::size_t dim) {
    // The dual cone {u : <u, g> >= 0} has rays = facet normals and lineality = orthogonal complement.
    ConeVRep dual = double_description(generators, dim);
    return ConeHRep{dim, dual.rays, dual.lineality};
}

/// V-representation of the cone cut out by an H-representation.
inline ConeVRep vrep_from_hrep(const ConeHRep& h) {
    std::vector<IntVector> constraints = h.facets;
    for (const auto& e : h.equations) {
        constraints.push_back(e);
        constraints.push_back(-e);
    }
    return double_description(constraints, h.dim);
}

/// A face of cone(generators), recorded as the indices of the generators lying on it.
struct GeneratorFace {
    std::vector<std::size_t> members;
    std::size_t dimension = 0;
    auto operator<=>(const GeneratorFace&) const = default;
};

/// All faces of cone(generators) as generator-index sets, including the minimal face
/// (generators in the lineality space) and the whole cone. Generators must be nonzero.
/// Sorted by dimension descending, then lexicographically by member list.
inline std::vector<GeneratorFace> enumerate_faces(const std::vector<IntVector>& generators, const ConeHRep& h) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(generators.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto current = queue[head];
        for (const auto& f : h.facets) {
            std::vector<std::size_t> sub;
            for (auto i : current)
                if (dot(f, generators[i]) == 0) sub.push_back(i);
            if (seen.insert(sub).second) queue.push_back(sub);
        }
    }
    std::vector<GeneratorFace> faces;
    for (const auto& s : seen) {
        std::vector<IntVector> vs;
        for (auto i : s) vs.push_back(generators[i]);
        faces.push_back(GeneratorFace{s, rank_of(vs, h.dim)});
    }
    std::sort(faces.begin(), faces.end(), [](const GeneratorFace& a, const GeneratorFace& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        return a.members < b.members;
    });
    return faces;
}

}  // namespace f1
