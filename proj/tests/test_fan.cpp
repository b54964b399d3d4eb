#include <gtest/gtest.h>

#include "f1/fan.hpp"

using namespace f1;

namespace {

IntVector vec(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

RationalCone cone(std::size_t n, std::vector<std::vector<long>> gens) {
    std::vector<IntVector> g;
    for (auto& x : gens) g.push_back(vec(x));
    return RationalCone::from_generators(n, g);
}

std::vector<IntVector> box_points(std::size_t n, long bound) {
    std::vector<IntVector> pts{IntVector{}};
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<IntVector> next;
        for (const auto& p : pts)
            for (long c = -bound; c <= bound; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(q);
            }
        pts = std::move(next);
    }
    return pts;
}

// Irreducible lattice points of a pointed cone, found among the points of a box.
std::vector<IntVector> brute_force_hilbert_basis(const RationalCone& sigma, long bound) {
    ConeHRep h = sigma.hrep();
    std::vector<IntVector> in_cone;
    for (const auto& p : box_points(sigma.lattice_rank, bound))
        if (!is_zero(p) && h.contains(p)) in_cone.push_back(p);
    std::set<IntVector> members(in_cone.begin(), in_cone.end());
    std::vector<IntVector> irreducible;
    for (const auto& x : in_cone) {
        bool split = false;
        for (const auto& y : in_cone)
            if (y != x && members.count(x - y)) split = true;
        if (!split) irreducible.push_back(x);
    }
    std::sort(irreducible.begin(), irreducible.end());
    return irreducible;
}

// Every lattice point of the cone with coordinate sum (in absolute value) at most `limit` is a
// nonnegative combination of `basis`: dynamic programming over the points by increasing size.
bool generates_up_to(const RationalCone& sigma, const std::vector<IntVector>& basis, long limit) {
    ConeHRep h = sigma.hrep();
    auto size = [](const IntVector& v) {
        Int s = 0;
        for (const auto& c : v) s += abs(c);
        return s;
    };
    std::vector<IntVector> pts;
    for (const auto& p : box_points(sigma.lattice_rank, limit))
        if (h.contains(p) && size(p) <= limit) pts.push_back(p);
    std::set<IntVector> reached{zero_vector(sigma.lattice_rank)};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& p : pts) {
            if (reached.count(p)) continue;
            for (const auto& b : basis)
                if (reached.count(p - b)) {
                    reached.insert(p);
                    grew = true;
                    break;
                }
        }
    }
    for (const auto& p : pts)
        if (!reached.count(p)) return false;
    return true;
}

}  // namespace

TEST(Cone, Faces) {
    EXPECT_EQ(faces(cone(2, {{1, 0}, {0, 1}})).size(), 4u);
    EXPECT_EQ(faces(cone(1, {{1}})).size(), 2u);
    EXPECT_EQ(faces(dual_cone(cone(2, {{1, 0}, {1, 2}}))).size(), 4u);
}

TEST(Cone, DualExamples) {
    auto orthant = cone(2, {{1, 0}, {0, 1}});
    EXPECT_TRUE(dual_cone(orthant).same_cone(orthant));
    auto half = dual_cone(cone(2, {{1, 0}}));
    EXPECT_EQ(half.rays, (std::vector<IntVector>{vec({1, 0})}));
    EXPECT_EQ(half.lineality.size(), 1u);
    EXPECT_TRUE(half.same_cone(cone(2, {{1, 0}, {0, 1}, {0, -1}})));
    auto d = dual_cone(cone(2, {{1, 0}, {1, 2}}));
    EXPECT_EQ(d.rays, (std::vector<IntVector>{vec({0, 1}), vec({2, -1})}));
}

TEST(Cone, DualOfDualIsOriginal) {
    std::vector<RationalCone> corpus{cone(2, {{1, 0}, {1, 2}}), cone(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
                                     cone(3, {{1, 1, 1}, {1, -1, 1}, {-1, 0, 1}}), cone(2, {{1, 0}}),
                                     cone(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, -1, 2}})};
    for (const auto& c : corpus) {
        auto dd = dual_cone(dual_cone(c));
        EXPECT_EQ(dd.rays, c.rays);
        EXPECT_TRUE(dd.same_cone(c));
    }
}

TEST(Cone, RankGuard) {
    RationalCone big{5, {unit_vector(5, 0)}, {}};
    EXPECT_THROW(dual_cone(big), ResourceError);
    EXPECT_THROW(hilbert_basis(big), ResourceError);
}

TEST(HilbertBasis, ExamplesMatchEnumeration) {
    EXPECT_EQ(hilbert_basis(cone(2, {{1, 0}, {0, 1}})), (std::vector<IntVector>{vec({0, 1}), vec({1, 0})}));
    auto a = cone(2, {{0, 1}, {2, -1}});
    EXPECT_EQ(hilbert_basis(a), (std::vector<IntVector>{vec({0, 1}), vec({1, 0}), vec({2, -1})}));
    EXPECT_EQ(hilbert_basis(a), brute_force_hilbert_basis(a, 4));
    auto b = cone(2, {{1, 0}, {1, 2}});
    EXPECT_EQ(hilbert_basis(b), (std::vector<IntVector>{vec({1, 0}), vec({1, 1}), vec({1, 2})}));
    EXPECT_EQ(hilbert_basis(b), brute_force_hilbert_basis(b, 4));
    EXPECT_THROW(hilbert_basis(cone(2, {{1, 0}, {-1, 0}})), ValidationError);
}

TEST(HilbertBasis, GeneratesLatticePointsUpToSizeTen) {
    std::vector<RationalCone> corpus{cone(2, {{1, 0}, {1, 2}}), cone(2, {{0, 1}, {2, -1}}), cone(2, {{1, 0}, {1, 5}}),
                                     cone(2, {{2, 1}, {-1, 3}}), cone(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}),
                                     cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})};
    for (const auto& c : corpus) {
        auto hb = hilbert_basis(c);
        EXPECT_TRUE(generates_up_to(c, hb, 10)) << to_string(c.rays[0]);
        if (c.lattice_rank == 2) {
            EXPECT_EQ(hb, brute_force_hilbert_basis(c, 6));
        }
        // irredundant
        for (std::size_t i = 0; i < hb.size(); ++i) {
            auto rest = hb;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_FALSE(generates_up_to(c, rest, 10));
        }
    }
}

TEST(StandardFans, ConeCounts) {
    EXPECT_EQ(projective_space_fan(1).size(), 3u);
    EXPECT_EQ(projective_space_fan(2).size(), 7u);
    EXPECT_EQ(projective_space_fan(3).size(), 15u);
    EXPECT_EQ(hirzebruch_fan(1).size(), 9u);
    EXPECT_EQ(affine_space_fan(3).size(), 8u);
    EXPECT_EQ(product_fan(projective_space_fan(1), projective_space_fan(1)).size(), 9u);
    EXPECT_THROW(standard_fan("grassmannian", 2), ValidationError);
}

TEST(Fan, RejectsOverlappingCones) {
    // cone(e1, e2) contains cone(e1, e1+e2)
    std::vector<IntVector> rays{vec({1, 0}), vec({0, 1}), vec({1, 1})};
    EXPECT_THROW(Fan(2, rays, {{0, 1}, {0, 2}}), ValidationError);
    EXPECT_THROW(Fan(2, {vec({1, 0}), vec({2, 0})}, {{0}}), ValidationError);
    EXPECT_THROW(Fan(2, {vec({1, 0}), vec({-1, 0})}, {{0, 1}}), ValidationError);
}

TEST(Kato, PointCountsAndFlags) {
    auto gm = kato(torus_fan(1));
    EXPECT_EQ(gm.scheme.size(), 1u);
    EXPECT_EQ(gm.scheme.rank(0), 1u);
    auto p1 = kato(projective_space_fan(1));
    EXPECT_EQ(p1.scheme.size(), 3u);
    EXPECT_EQ(p1.scheme.charts().size(), 2u);
    auto p2 = kato(projective_space_fan(2));
    EXPECT_EQ(p2.scheme.size(), 7u);
    ASSERT_EQ(p2.scheme.charts().size(), 3u);
    for (const auto& c : p2.scheme.charts()) EXPECT_EQ(c.generators().size(), 2u);
}

TEST(Kato, PointPosetMatchesConePoset) {
    std::vector<Fan> corpus{affine_space_fan(2), projective_space_fan(1), projective_space_fan(2), hirzebruch_fan(1),
                            product_fan(projective_space_fan(1), projective_space_fan(1)), hirzebruch_fan(3)};
    for (const auto& fan : corpus) {
        auto t = kato(fan);
        ASSERT_EQ(t.scheme.size(), fan.size());
        std::set<std::size_t> seen(t.point_cone.begin(), t.point_cone.end());
        EXPECT_EQ(seen.size(), fan.size());
        for (std::size_t x = 0; x < t.scheme.size(); ++x) {
            EXPECT_EQ(t.scheme.rank(x), fan.rank() - fan.dimension(t.point_cone[x]));
            for (std::size_t y = 0; y < t.scheme.size(); ++y) {
                // y in the closure of x  <=>  cone(x) is a face of cone(y), so generization reverses faces
                EXPECT_EQ(t.scheme.leq(x, y), fan.is_face(t.point_cone[x], t.point_cone[y]));
            }
        }
    }
}

TEST(Kato, ClassifiesAsConnectedIntegralExponentOne) {
    for (const auto& fan : {affine_space_fan(1), affine_space_fan(3), projective_space_fan(2), hirzebruch_fan(2),
                            torus_fan(2), product_fan(projective_space_fan(1), projective_space_fan(1))}) {
        EXPECT_EQ(classify(kato(fan).scheme), (SchemeFlags{true, true, true, true}));
    }
}

TEST(Kato, OrbitFormulaIsMonicForCompleteFans) {
    EXPECT_EQ(orbit_count_polynomial(projective_space_fan(2)).to_string(), "q^2+q+1");
    EXPECT_EQ(orbit_count_polynomial(hirzebruch_fan(1)).to_string(), "q^2+2q+1");
    EXPECT_EQ(orbit_count_polynomial(affine_space_fan(3)).to_string(), "q^3");
    for (const auto& fan : {projective_space_fan(1), projective_space_fan(3), hirzebruch_fan(4),
                            product_fan(projective_space_fan(1), projective_space_fan(2))}) {
        auto N = orbit_count_polynomial(fan);
        EXPECT_EQ(N.degree(), static_cast<int>(fan.rank()));
        EXPECT_EQ(N.leading(), 1);
    }
}

TEST(FanInZn, StandardFansPass) {
    auto p1 = fan_in_Zn(projective_space_fan(1));
    EXPECT_TRUE(p1.valid());
    ASSERT_EQ(p1.monoids.size(), 3u);
    EXPECT_TRUE(p1.monoids[0].generators().empty());
    EXPECT_TRUE(fan_in_Zn(projective_space_fan(2)).valid());
    EXPECT_TRUE(fan_in_Zn(hirzebruch_fan(1)).valid());
}

TEST(FanInZn, MissingFacesAreReported) {
    auto report = check_fan_in_Zn({AffineMonoid::free_commutative(2)});
    ASSERT_FALSE(report.empty());
    for (const auto& v : report) EXPECT_EQ(v.condition, 2);
}

TEST(FanInZn, UnitsAndTorsionCokernelAreReported) {
    auto with_units = check_fan_in_Zn({AffineMonoid::free_group(1)});
    ASSERT_FALSE(with_units.empty());
    EXPECT_EQ(with_units.front().condition, 1);
    // 2N inside Z: saturated, but Z / 2Z is torsion
    auto two = check_fan_in_Zn({AffineMonoid(AmbientGroup{1, {}}, {vec({2})}), AffineMonoid(AmbientGroup{1, {}}, {})});
    ASSERT_FALSE(two.empty());
    EXPECT_EQ(two.front().condition, 1);
}

TEST(FanInZn, QuadricConeMonoidIsSaturated) {
    // the A_1 singularity: cone((0,1),(2,-1)) and its faces
    Fan a1(2, {vec({0, 1}), vec({2, -1})}, {{0, 1}});
    auto f = fan_in_Zn(a1);
    EXPECT_TRUE(f.valid());
    auto dual = lattice_points_monoid(dual_cone(a1.cone(a1.maximal_cones().front())));
    EXPECT_TRUE(is_saturated(dual));
    EXPECT_EQ(dual.generators().size(), 3u);
}
