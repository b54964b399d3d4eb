#pragma once

#include "f1/polyhedral.hpp"

namespace f1 {

/// Extreme rays (primitive) and lineality basis of cone(generators).
inline ConeVRep cone_vrep(const std::vector<IntVector>& generators, std::size_t dim) {
    return vrep_from_hrep(hrep_from_generators(generators, dim));
}

/// Placing triangulation of the pointed cone spanned by `rays`, inserting rays in the given order.
/// Each simplex is a list of indices into `rays`; redundant (interior) rays are skipped.
inline std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays,
                                                                   std::size_t dim) {
    std::vector<std::vector<std::size_t>> simplices{{}};
    std::vector<IntVector> placed;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const IntVector& v = rays[i];
        if (is_zero(v)) continue;
        auto extended = placed;
        extended.push_back(v);
        if (rank_of(extended, dim) > rank_of(placed, dim)) {
            for (auto& s : simplices) s.push_back(i);
        } else {
            ConeHRep h = hrep_from_generators(placed, dim);
            std::vector<std::vector<std::size_t>> added;
            for (const auto& f : h.facets) {
                if (dot(f, v) >= 0) continue;
                for (const auto& s : simplices)
                    for (std::size_t drop = 0; drop < s.size(); ++drop) {
                        bool on_facet = true;
                        for (std::size_t j = 0; j < s.size() && on_facet; ++j)
                            if (j != drop && dot(f, rays[s[j]]) != 0) on_facet = false;
                        if (!on_facet) continue;
                        std::vector<std::size_t> t;
                        for (std::size_t j = 0; j < s.size(); ++j)
                            if (j != drop) t.push_back(s[j]);
                        t.push_back(i);
                        added.push_back(std::move(t));
                    }
            }
            simplices.insert(simplices.end(), added.begin(), added.end());
        }
        placed.push_back(v);
    }
    if (simplices.size() == 1 && simplices.front().empty()) return {};
    return simplices;
}

/// Lattice points of the half-open fundamental parallelepiped {sum l_i v_i : 0 <= l_i < 1} of a
/// simplicial cone, with respect to the lattice Z^dim intersected with span(v_i).
/// Enumerated as coset representatives of Z^dim ∩ span modulo the sublattice spanned by the v_i.
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& simplex, std::size_t dim) {
    const std::size_t k = simplex.size();
    if (k == 0) return {zero_vector(dim)};
    // Basis of the saturated lattice Z^dim ∩ span(simplex).
    auto normals = rational_kernel(simplex, dim);
    std::vector<IntVector> basis;
    if (normals.empty())
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vector(dim, i));
    else
        basis = integer_kernel(IntMatrix::from_rows(normals, dim));
    IntMatrix B = IntMatrix::from_columns(basis, dim);
    // Coordinates of the simplex rays in that basis.
    IntMatrix M(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto y = solve_integer(B, simplex[j]);
        if (!y) throw Error("parallelepiped_points: ray outside its own lattice span");
        for (std::size_t i = 0; i < k; ++i) M(i, j) = (*y)[i];
    }
    SmithForm s = smith_normal_form(M);
    IntMatrix Pinv = unimodular_inverse(s.left);
    Int volume = 1;
    for (std::size_t i = 0; i < k; ++i) volume *= s.diagonal(i, i);
    if (volume > 1000000) throw ResourceError("parallelepiped_points: simplex volume exceeds 10^6");

    IntMatrix V = IntMatrix::from_columns(simplex, dim);
    std::vector<IntVector> out;
    IntVector z(k, Int(0));
    for (;;) {
        IntVector y = Pinv * z;
        IntVector x = B * y;
        auto lambda = solve_rational(V, to_rational(x));
        IntVector p = x;
        for (std::size_t i = 0; i < k; ++i) p = p - floor((*lambda)[i]) * simplex[i];
        out.push_back(std::move(p));
        // odometer over 0 <= z_i < d_i
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++z[i] < s.diagonal(i, i)) break;
            z[i] = 0;
        }
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Hilbert basis of cone(rays) ∩ Z^dim for a pointed cone: placing triangulation, fundamental
/// parallelepiped points of each simplex, then reduction to the irreducible elements.
inline std::vector<IntVector> hilbert_basis_of_pointed(const std::vector<IntVector>& generators, std::size_t dim) {
    ConeHRep h = hrep_from_generators(generators, dim);
    ConeVRep v = vrep_from_hrep(h);
    if (!v.lineality.empty()) throw ValidationError("hilbert basis requested for a cone containing a line");
    std::vector<IntVector> rays = v.rays;  // primitive, sorted lexicographically
    std::set<IntVector> candidates(rays.begin(), rays.end());
    for (const auto& simplex : placing_triangulation(rays, dim)) {
        std::vector<IntVector> sr;
        for (auto i : simplex) sr.push_back(rays[i]);
        for (auto& p : parallelepiped_points(sr, dim))
            if (!is_zero(p)) candidates.insert(p);
    }
    std::vector<IntVector> basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& y : candidates) {
            if (y == x) continue;
            IntVector d = x - y;
            if (!is_zero(d) && h.contains(d)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

/// Monoid generators of cone(generators) ∩ L, where L is the lattice spanned by the columns of
/// `lattice_basis` and the cone lies in L ⊗ Q. Lines in the cone contribute ± a lattice basis of
/// the lineality space; the pointed remainder contributes its Hilbert basis.
inline std::vector<IntVector> cone_lattice_generators(const std::vector<IntVector>& generators,
                                                      const IntMatrix& lattice_basis) {
    const std::size_t k = lattice_basis.cols();
    if (k == 0) return {};
    std::vector<IntVector> coords;
    for (const auto& g : generators) {
        auto y = solve_rational(lattice_basis, to_rational(g));
        if (!y) throw ValidationError("cone generator outside the lattice span");
        IntVector p = primitive(*y);
        if (!is_zero(p)) coords.push_back(p);
    }
    ConeHRep h = hrep_from_generators(coords, k);
    std::vector<IntVector> cut = h.facets;
    cut.insert(cut.end(), h.equations.begin(), h.equations.end());
    std::vector<IntVector> lin;
    if (cut.empty())
        for (std::size_t i = 0; i < k; ++i) lin.push_back(unit_vector(k, i));
    else
        lin = integer_kernel(IntMatrix::from_rows(cut, k));

    std::vector<IntVector> result_coords;
    const std::size_t l = lin.size();
    IntMatrix P = IntMatrix::identity(k);
    if (l > 0) P = smith_normal_form(IntMatrix::from_columns(lin, k)).left;
    IntMatrix Pinv = unimodular_inverse(P);
    for (const auto& b : lin) {
        result_coords.push_back(b);
        result_coords.push_back(-b);
    }
    if (l < k) {
        std::vector<IntVector> projected;
        for (const auto& y : coords) {
            IntVector w = P * y;
            IntVector z(w.begin() + static_cast<std::ptrdiff_t>(l), w.end());
            if (!is_zero(z)) projected.push_back(z);
        }
        if (!projected.empty())
            for (const auto& z : hilbert_basis_of_pointed(projected, k - l)) {
                IntVector w = zero_vector(l);
                w.insert(w.end(), z.begin(), z.end());
                result_coords.push_back(Pinv * w);
            }
    }
    std::set<IntVector> out;
    for (const auto& y : result_coords) out.insert(lattice_basis * y);
    return {out.begin(), out.end()};
}

inline std::vector<IntVector> cone_lattice_generators(const std::vector<IntVector>& generators, std::size_t dim) {
    return cone_lattice_generators(generators, IntMatrix::identity(dim));
}

}  // namespace f1
