#pragma once

#include "f1/polynomial.hpp"
#include "f1/scheme.hpp"

namespace f1 {

inline constexpr std::size_t max_cone_rank = 4;

/// A rational polyhedral cone in Q^n in canonical form: primitive extreme rays sorted
/// lexicographically, plus a lineality basis (empty for strictly convex cones).
struct RationalCone {
    std::size_t lattice_rank = 0;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;

    static RationalCone from_generators(std::size_t n, const std::vector<IntVector>& generators) {
        for (const auto& g : generators)
            if (g.size() != n) throw ValidationError("cone generator has wrong length");
        ConeVRep v = cone_vrep(generators, n);
        return RationalCone{n, v.rays, v.lineality};
    }

    std::vector<IntVector> generators() const {
        auto g = rays;
        for (const auto& l : lineality) {
            g.push_back(l);
            g.push_back(-l);
        }
        return g;
    }

    ConeHRep hrep() const { return hrep_from_generators(generators(), lattice_rank); }
    std::size_t dimension() const { return rank_of(generators(), lattice_rank); }
    bool is_strictly_convex() const { return lineality.empty(); }
    bool is_simplicial() const { return is_strictly_convex() && rank_of(rays, lattice_rank) == rays.size(); }
    bool contains(const IntVector& x) const { return hrep().contains(x); }

    /// Equal as subsets of Q^n.
    bool same_cone(const RationalCone& o) const {
        if (lattice_rank != o.lattice_rank) return false;
        ConeHRep h = hrep(), ho = o.hrep();
        for (const auto& g : o.generators())
            if (!h.contains(g)) return false;
        for (const auto& g : generators())
            if (!ho.contains(g)) return false;
        return true;
    }

    bool operator==(const RationalCone&) const = default;
};

/// All faces, from the cone itself down to its minimal face (the origin when strictly convex).
inline std::vector<RationalCone> faces(const RationalCone& sigma) {
    auto gens = sigma.generators();
    std::vector<RationalCone> out;
    if (gens.empty()) return {sigma};
    for (const auto& f : enumerate_faces(gens, sigma.hrep())) {
        std::vector<IntVector> sub;
        for (auto i : f.members) sub.push_back(gens[i]);
        out.push_back(RationalCone::from_generators(sigma.lattice_rank, sub));
    }
    return out;
}

/// {u : <u, v> >= 0 for all v in sigma}.
inline RationalCone dual_cone(const RationalCone& sigma) {
    if (sigma.lattice_rank > max_cone_rank)
        throw ResourceError("dual cone: lattice rank above " + std::to_string(max_cone_rank));
    ConeVRep v = double_description(sigma.generators(), sigma.lattice_rank);
    return RationalCone{sigma.lattice_rank, v.rays, v.lineality};
}

/// Minimal generating set of sigma ∩ Z^n.
inline std::vector<IntVector> hilbert_basis(const RationalCone& sigma) {
    if (!sigma.is_strictly_convex())
        throw ValidationError("hilbert basis: cone contains a line; split off the lineality space (its lattice "
                              "points are units) and pass the pointed part");
    if (sigma.lattice_rank > max_cone_rank)
        throw ResourceError("hilbert basis: lattice rank above " + std::to_string(max_cone_rank));
    if (sigma.rays.empty()) return {};
    return hilbert_basis_of_pointed(sigma.rays, sigma.lattice_rank);
}

/// The affine monoid sigma ∩ Z^n (lineality allowed: its lattice points become units).
inline AffineMonoid lattice_points_monoid(const RationalCone& sigma) {
    if (sigma.lattice_rank > max_cone_rank)
        throw ResourceError("cone monoid: lattice rank above " + std::to_string(max_cone_rank));
    auto gens = sigma.generators();
    std::vector<IntVector> g = gens.empty() ? std::vector<IntVector>{} : cone_lattice_generators(gens, sigma.lattice_rank);
    return AffineMonoid(AmbientGroup{sigma.lattice_rank, {}}, g);
}

/// A fan of simplicial cones given by ray indices. Cones are closed under faces on
/// construction and kept sorted by dimension, then lexicographically; cone 0 is the origin.
class Fan {
public:
    Fan(std::size_t rank, std::vector<IntVector> rays, const std::vector<std::vector<std::size_t>>& cones)
        : rank_(rank), rays_(std::move(rays)) {
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (rays_[i].size() != rank_) throw ValidationError("fan: ray " + std::to_string(i) + " has wrong length");
            if (is_zero(rays_[i])) throw ValidationError("fan: ray " + std::to_string(i) + " is zero");
            rays_[i] = primitive(rays_[i]);
            for (std::size_t j = 0; j < i; ++j)
                if (rays_[j] == rays_[i]) throw ValidationError("fan: rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
        }
        std::set<std::vector<std::size_t>> closed{{}};
        for (auto c : cones) {
            std::sort(c.begin(), c.end());
            if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw ValidationError("fan: repeated ray in a cone");
            for (auto i : c)
                if (i >= rays_.size()) throw ValidationError("fan: cone refers to a missing ray");
            std::vector<IntVector> vs;
            for (auto i : c) vs.push_back(rays_[i]);
            if (rank_of(vs, rank_) != c.size()) throw ValidationError("fan: cone " + cone_name(c) + " is not simplicial");
            for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if ((mask >> j) & 1u) sub.push_back(c[j]);
                closed.insert(sub);
            }
        }
        cones_.assign(closed.begin(), closed.end());
        std::stable_sort(cones_.begin(), cones_.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (std::size_t i = 0; i < cones_.size(); ++i)
            for (std::size_t j = i + 1; j < cones_.size(); ++j) {
                std::vector<std::size_t> common;
                std::set_intersection(cones_[i].begin(), cones_[i].end(), cones_[j].begin(), cones_[j].end(),
                                      std::back_inserter(common));
                ConeHRep h = cone(i).hrep();
                ConeHRep hj = cone(j).hrep();
                h.facets.insert(h.facets.end(), hj.facets.begin(), hj.facets.end());
                h.equations.insert(h.equations.end(), hj.equations.begin(), hj.equations.end());
                ConeVRep meet = vrep_from_hrep(h);
                RationalCone inter{rank_, meet.rays, meet.lineality};
                if (!inter.same_cone(cone_of(common)))
                    throw ValidationError("fan: cones " + cone_name(cones_[i]) + " and " + cone_name(cones_[j]) +
                                          " do not meet in a common face");
            }
    }

    std::size_t rank() const { return rank_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<std::vector<std::size_t>>& cones() const { return cones_; }
    std::size_t size() const { return cones_.size(); }
    std::size_t dimension(std::size_t c) const { return cones_.at(c).size(); }
    RationalCone cone(std::size_t c) const { return cone_of(cones_.at(c)); }

    std::optional<std::size_t> cone_index(std::vector<std::size_t> ray_indices) const {
        std::sort(ray_indices.begin(), ray_indices.end());
        for (std::size_t i = 0; i < cones_.size(); ++i)
            if (cones_[i] == ray_indices) return i;
        return std::nullopt;
    }

    /// Cones not properly contained in another cone.
    std::vector<std::size_t> maximal_cones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < cones_.size(); ++i) {
            bool top = true;
            for (std::size_t j = 0; j < cones_.size() && top; ++j)
                if (j != i && cones_[j].size() > cones_[i].size() &&
                    std::includes(cones_[j].begin(), cones_[j].end(), cones_[i].begin(), cones_[i].end()))
                    top = false;
            if (top) out.push_back(i);
        }
        return out;
    }

    bool is_face(std::size_t small, std::size_t big) const {
        return std::includes(cones_[big].begin(), cones_[big].end(), cones_[small].begin(), cones_[small].end());
    }

    bool operator==(const Fan& o) const { return rank_ == o.rank_ && rays_ == o.rays_ && cones_ == o.cones_; }

private:
    RationalCone cone_of(const std::vector<std::size_t>& c) const {
        std::vector<IntVector> vs;
        for (auto i : c) vs.push_back(rays_[i]);
        std::sort(vs.begin(), vs.end());
        return RationalCone{rank_, vs, {}};
    }

    static std::string cone_name(const std::vector<std::size_t>& c) {
        std::string s = "{";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "}";
    }

    std::size_t rank_;
    std::vector<IntVector> rays_;
    std::vector<std::vector<std::size_t>> cones_;
};

// ---------------------------------------------------------------------------
// Standard fans

inline Fan torus_fan(std::size_t n) { return Fan(n, {}, {}); }

inline Fan affine_space_fan(std::size_t n) {
    std::vector<IntVector> rays;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) {
        rays.push_back(unit_vector(n, i));
        all.push_back(i);
    }
    return Fan(n, rays, {all});
}

inline Fan projective_space_fan(std::size_t n) {
    if (n == 0) return torus_fan(0);
    std::vector<IntVector> rays;
    IntVector last = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        rays.push_back(unit_vector(n, i));
        last[i] = -1;
    }
    rays.push_back(last);
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(c);
    }
    return Fan(n, rays, cones);
}

inline Fan hirzebruch_fan(long a) {
    std::vector<IntVector> rays{IntVector{1, 0}, IntVector{0, 1}, IntVector{-1, a}, IntVector{0, -1}};
    return Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Fan product_fan(const Fan& A, const Fan& B) {
    const std::size_t n = A.rank() + B.rank();
    std::vector<IntVector> rays;
    for (const auto& r : A.rays()) {
        IntVector v = r;
        v.resize(n, Int(0));
        rays.push_back(v);
    }
    for (const auto& r : B.rays()) {
        IntVector v = zero_vector(A.rank());
        v.insert(v.end(), r.begin(), r.end());
        rays.push_back(v);
    }
    std::vector<std::vector<std::size_t>> cones;
    for (auto a : A.maximal_cones())
        for (auto b : B.maximal_cones()) {
            auto c = A.cones()[a];
            for (auto j : B.cones()[b]) c.push_back(A.rays().size() + j);
            cones.push_back(c);
        }
    return Fan(n, rays, cones);
}

/// Named constructors: "affine" n, "projective" n, "torus" n, "hirzebruch" a.
inline Fan standard_fan(const std::string& name, long param) {
    if (param < 0 && name != "hirzebruch") throw ValidationError("standard fan: negative dimension");
    if (name == "affine") return affine_space_fan(static_cast<std::size_t>(param));
    if (name == "projective") return projective_space_fan(static_cast<std::size_t>(param));
    if (name == "torus") return torus_fan(static_cast<std::size_t>(param));
    if (name == "hirzebruch") return hirzebruch_fan(param);
    throw ValidationError("standard fan: unknown name '" + name + "'");
}

/// sum over cones of (q-1)^{n - dim tau}: the count of the toric variety by torus orbits.
inline CountingPolynomial orbit_count_polynomial(const Fan& fan) {
    std::vector<Int> b(fan.rank() + 1, Int(0));
    for (std::size_t c = 0; c < fan.size(); ++c) b[fan.rank() - fan.dimension(c)] += 1;
    return CountingPolynomial::from_q_minus_one_basis(b);
}

// ---------------------------------------------------------------------------
// Kato functor

/// kato(fan) together with the cone of each point and the maximal cone of each chart.
struct ToricMScheme {
    Fan fan;
    MScheme scheme;
    std::vector<std::size_t> point_cone;
    std::vector<std::size_t> chart_cone;
};

/// The M-scheme glued from Spec(tau^v ∩ Z^n) over the maximal cones tau; charts c, d are
/// glued along the face of tau_c ∩ tau_d with the identity on Z^n.
inline ToricMScheme kato(const Fan& fan) {
    const std::size_t n = fan.rank();
    std::vector<std::size_t> chart_cone = fan.maximal_cones();
    std::vector<AffineMonoid> charts;
    for (auto c : chart_cone) charts.push_back(lattice_points_monoid(dual_cone(fan.cone(c))));
    auto orthogonal_generators = [&](const AffineMonoid& A, const std::vector<std::size_t>& rays) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < A.generators().size(); ++i) {
            bool ortho = true;
            for (auto r : rays) ortho = ortho && dot(A.generators()[i], fan.rays()[r]) == 0;
            if (ortho) face.push_back(i);
        }
        return face;
    };
    std::vector<GluingRecord> gluings;
    for (std::size_t a = 0; a < charts.size(); ++a)
        for (std::size_t b = a + 1; b < charts.size(); ++b) {
            const auto& ca = fan.cones()[chart_cone[a]];
            const auto& cb = fan.cones()[chart_cone[b]];
            std::vector<std::size_t> common;
            std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(common));
            gluings.push_back(GluingRecord{a, orthogonal_generators(charts[a], common), b,
                                           orthogonal_generators(charts[b], common), IntMatrix::identity(n)});
        }
    MScheme X(charts, gluings);
    std::vector<std::size_t> point_cone;
    for (std::size_t x = 0; x < X.size(); ++x) {
        const ChartPoint& r = X.representative(x);
        const AffineMonoid& A = X.charts()[r.chart];
        std::vector<std::size_t> rays;
        for (auto i : fan.cones()[chart_cone[r.chart]]) {
            bool ortho = true;
            for (auto g : A.faces()[r.face].members) ortho = ortho && dot(A.generators()[g], fan.rays()[i]) == 0;
            if (ortho) rays.push_back(i);
        }
        auto idx = fan.cone_index(rays);
        if (!idx) throw Error("kato: a point does not correspond to a cone");
        point_cone.push_back(*idx);
    }
    return ToricMScheme{fan, std::move(X), std::move(point_cone), std::move(chart_cone)};
}

// ---------------------------------------------------------------------------
// Fans in Z^n (collections of monoids)

struct FanViolation {
    int condition = 0;  // 1: monoid conditions, 2: closed under faces, 3: intersections
    std::size_t member = 0;
    std::size_t other = 0;
    std::string message;
};

/// Checks the three conditions on a collection of submonoids of Z^n:
/// (1) finitely generated, saturated, trivial units, Z^n / Quot A torsion-free;
/// (2) A \ p is a member for every prime p of a member A;
/// (3) A ∩ B is a face of both A and B.
inline std::vector<FanViolation> check_fan_in_Zn(const std::vector<AffineMonoid>& members) {
    std::vector<FanViolation> out;
    std::vector<bool> good(members.size(), true);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const AffineMonoid& A = members[i];
        auto bad = [&](const std::string& why) {
            out.push_back({1, i, i, why});
            good[i] = false;
        };
        if (!A.ambient().is_torsion_free() || A.pointed()) {
            bad("member is not a submonoid of Z^n");
            continue;
        }
        if (i > 0 && !(A.ambient() == members[0].ambient())) bad("members live in different lattices");
        if (!is_saturated(A)) bad("not saturated");
        if (!units(A).is_trivial()) bad("has nontrivial units");
        if (!A.generators().empty()) {
            IntMatrix L = image_basis(IntMatrix::from_columns(A.generators(), A.ambient().rank));
            if (!smith_normal_form(L).invariants().empty() &&
                smith_normal_form(L).invariants().back() != 1)
                bad("Z^n / Quot A has torsion");
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!good[i]) continue;
        const AffineMonoid& A = members[i];
        for (const auto& f : A.faces()) {
            AffineMonoid face = A.with_generators(A.face_generators(f));
            bool found = false;
            for (const auto& B : members) found = found || (B.ambient() == face.ambient() && B.same_submonoid(face));
            if (!found) out.push_back({2, i, i, "a face of this member is missing from the collection"});
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!good[i] || !good[j]) continue;
            const AffineMonoid& A = members[i];
            const AffineMonoid& B = members[j];
            // Saturated with torsion-free cokernel, so each member is its cone's lattice points.
            ConeHRep h = A.cone();
            h.facets.insert(h.facets.end(), B.cone().facets.begin(), B.cone().facets.end());
            h.equations.insert(h.equations.end(), B.cone().equations.begin(), B.cone().equations.end());
            ConeVRep v = vrep_from_hrep(h);
            RationalCone meet{A.ambient().rank, v.rays, v.lineality};
            AffineMonoid inter = lattice_points_monoid(meet);
            auto is_face_of = [&](const AffineMonoid& M) {
                for (const auto& f : M.faces())
                    if (M.with_generators(M.face_generators(f)).same_submonoid(inter)) return true;
                return false;
            };
            if (!is_face_of(A) || !is_face_of(B))
                out.push_back({3, i, j, "the intersection is not a common face"});
        }
    return out;
}

/// The fan in Z^n of a fan: the monoids tau ∩ Z^n for every cone tau, with their checks.
struct FanInZn {
    std::vector<AffineMonoid> monoids;
    std::vector<FanViolation> violations;
    bool valid() const { return violations.empty(); }
};

inline FanInZn fan_in_Zn(const Fan& fan) {
    FanInZn out;
    for (std::size_t c = 0; c < fan.size(); ++c) out.monoids.push_back(lattice_points_monoid(fan.cone(c)));
    out.violations = check_fan_in_Zn(out.monoids);
    return out;
}

}  // namespace f1
