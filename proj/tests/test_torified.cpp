#include <gtest/gtest.h>

#include "f1/cc_triple.hpp"
#include "oracles.hpp"

using namespace f1;
using namespace oracle;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(TorifyCell, Examples) {
    EXPECT_EQ(torify_cell(0, 0), (std::vector<std::size_t>{0}));
    EXPECT_EQ(sorted(torify_cell(2, 0)), (std::vector<std::size_t>{0, 1, 1, 2}));
    EXPECT_EQ(sorted(torify_cell(1, 1)), (std::vector<std::size_t>{1, 2}));
    for (std::size_t d = 0; d <= 6; ++d) {
        std::vector<Int> qd(d + 1, Int(0));
        qd[d] = 1;
        EXPECT_TRUE(verify_torification(Torification::of(torify_cell(d, 0)), CountingPolynomial(qd)));
    }
    EXPECT_EQ(Torification::of(torify_cell(1, 1)).count().to_string(), "q^2-q");
}

TEST(Verify, RanksMustMatchExactly) {
    EXPECT_FALSE(verify_torification(Torification::of({1}), CountingPolynomial::q()));
    EXPECT_TRUE(verify_torification(Torification::of({1, 0}), CountingPolynomial::q()));
}

TEST(GaussianBinomial, Examples) {
    EXPECT_EQ(gaussian_binomial(2, 1).to_string(), "q+1");
    EXPECT_EQ(gaussian_binomial(4, 2).to_string(), "q^4+q^3+2q^2+q+1");
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(gaussian_binomial(n, 0), CountingPolynomial::constant(1));
    EXPECT_EQ(gaussian_binomial(4, 2)(2), 35);
    EXPECT_THROW(gaussian_binomial(13, 2), ValidationError);
    EXPECT_THROW(gaussian_binomial(3, 4), ValidationError);
}

TEST(GaussianBinomial, SubspaceEnumeration) {
    EXPECT_EQ(subspace_count(2, 4, 2), 35);
    EXPECT_EQ(subspace_count(2, 4, 3), 130);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (long p : {2L, 3L})
                if (k * n <= (p == 2 ? 12u : 8u)) {
                    EXPECT_EQ(gaussian_binomial(n, k)(p), subspace_count(k, n, p)) << k << "," << n;
                }
    // the plane counts over five fields determine the degree-4 polynomial
    std::vector<CountSample> samples;
    for (long q : {2L, 3L, 4L, 5L, 7L}) samples.push_back({q, plane_count(q)});
    EXPECT_EQ(fit_counting_polynomial(samples, 4), gaussian_binomial(4, 2));
}

TEST(Schubert, CellsAndCounts) {
    auto cells = schubert_cells(2, 4);
    std::vector<std::size_t> dims;
    for (const auto& c : cells) dims.push_back(c.free.size());
    EXPECT_EQ(dims, (std::vector<std::size_t>{0, 1, 2, 2, 3, 4}));
    EXPECT_EQ(schubert_cells(1, 2).size(), 2u);
    auto [T0, N0] = schubert_torification(0, 5);
    EXPECT_EQ(T0.ranks, (std::vector<std::size_t>{0}));
    EXPECT_EQ(N0, CountingPolynomial::constant(1));
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            auto [T, N] = schubert_torification(k, n);
            EXPECT_EQ(N, gaussian_binomial(n, k));
            EXPECT_TRUE(verify_torification(T, N)) << k << "," << n;
        }
    EXPECT_THROW(schubert_torification(2, 9), ValidationError);
}

TEST(Schubert, PartitionsFitTheBox) {
    for (const auto& c : schubert_cells(3, 6)) {
        ASSERT_EQ(c.partition.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_LE(c.partition[i], 3u);
            if (i) {
                EXPECT_GE(c.partition[i - 1], c.partition[i]);
            }
        }
    }
}

TEST(Bruhat, GroupsAgainstMatrixEnumeration) {
    auto [S, NS] = bruhat_torification("SL2");
    auto [G, NG] = bruhat_torification("GL2");
    EXPECT_TRUE(verify_torification(S, NS));
    EXPECT_TRUE(verify_torification(G, NG));
    EXPECT_EQ(NS.to_string(), "q^3-q");
    EXPECT_EQ(NG.to_string(), "q^4-q^3-q^2+q");
    EXPECT_EQ(matrix_count(2, true), 6);
    EXPECT_EQ(matrix_count(3, true), 24);
    EXPECT_EQ(matrix_count(2, false), 6);
    EXPECT_EQ(matrix_count(3, false), 48);
    std::vector<CountSample> sl, gl;
    for (long p : {2L, 3L, 5L, 7L}) {
        sl.push_back({p, matrix_count(p, true)});
        gl.push_back({p, matrix_count(p, false)});
    }
    EXPECT_EQ(fit_counting_polynomial(sl, 3), NS);
    gl.push_back({11, matrix_count(11, false)});
    EXPECT_EQ(fit_counting_polynomial(gl, 4), NG);
    EXPECT_THROW(bruhat_torification("SL3"), UnsupportedError);
}

TEST(Orbit, RanksAndAffineness) {
    auto P1 = orbit_torification(kato(projective_space_fan(1)));
    EXPECT_EQ(sorted(P1.ranks), (std::vector<std::size_t>{0, 0, 1}));
    auto P2 = orbit_torification(kato(projective_space_fan(2)));
    EXPECT_EQ(sorted(P2.ranks), (std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 2}));
    EXPECT_TRUE(verify_torification(P2, CountingPolynomial::parse("q^2+q+1")));
    auto A1 = orbit_torification(kato(affine_space_fan(1)));
    EXPECT_EQ(sorted(A1.ranks), (std::vector<std::size_t>{0, 1}));
    for (const auto& fan : {projective_space_fan(1), projective_space_fan(2), affine_space_fan(2), hirzebruch_fan(1),
                            product_fan(projective_space_fan(1), projective_space_fan(1)), torus_fan(2)}) {
        auto T = orbit_torification(kato(fan));
        EXPECT_TRUE(verify_torification(T, orbit_count_polynomial(fan)));
        EXPECT_EQ(is_affinely_torified(T).affine, std::optional<bool>(true));
    }
}

TEST(Affine, SubsetTorificationOfPlane) {
    auto T = Torification::of(torify_cell(2, 0));
    T.chart_tori = std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}};
    T.chart_counts = {CountingPolynomial::parse("q^2")};
    EXPECT_EQ(is_affinely_torified(T).affine, std::optional<bool>(true));
    auto bare = Torification::of(torify_cell(2, 0));
    EXPECT_FALSE(is_affinely_torified(bare).affine.has_value());
}

TEST(Affine, GrassmannianPluckerChartsFail) {
    auto report = plucker_charts(2, 4);
    EXPECT_EQ(report.charts.size(), 6u);
    auto verdict = is_affinely_torified(report.torification);
    EXPECT_EQ(verdict.affine, std::optional<bool>(false)) << verdict.diagnostic;
    EXPECT_FALSE(report.split_tori.empty());
    // P^1 = Gr(1,2): cells {pt}, A^1 and charts p_1, p_2 are compatible
    auto p1 = plucker_charts(1, 2);
    EXPECT_EQ(is_affinely_torified(p1.torification).affine, std::optional<bool>(true));
    EXPECT_TRUE(p1.split_tori.empty());
}

TEST(Triple, FunctorF) {
    auto gm = f_functor(MScheme::affine(AffineMonoid::free_group(1)));
    EXPECT_EQ(gm.target.to_string(), "q-1");
    EXPECT_TRUE(gm.tilde.pointed());
    auto p1 = f_functor(kato(projective_space_fan(1)).scheme);
    EXPECT_EQ(p1.target.to_string(), "q+1");
    auto a2 = f_functor(MScheme::affine(adjoin_zero(AffineMonoid::free_commutative(2))));
    EXPECT_EQ(a2.target.to_string(), "q^2");
}

TEST(Triple, CCRoundTrip) {
    auto p1 = f_functor(kato(projective_space_fan(1)).scheme);
    auto r = to_cc(p1);
    ASSERT_TRUE(r.verified);
    std::vector<Int> at;
    for (const auto& s : r.target)
        if (s.q == 2 || s.q == 3 || s.q == 5 || s.q == 7) at.push_back(s.count);
    EXPECT_EQ(at, (std::vector<Int>{3, 4, 6, 8}));
    EXPECT_EQ(from_cc(r), p1);

    std::vector<MScheme> corpus{kato(projective_space_fan(2)).scheme, kato(hirzebruch_fan(2)).scheme,
                                MScheme::affine(AffineMonoid::free_group(2)),
                                kato(product_fan(affine_space_fan(1), projective_space_fan(1))).scheme};
    for (const auto& X : corpus) {
        auto t = f_functor(X);
        auto rec = to_cc(t);
        EXPECT_TRUE(rec.verified);
        EXPECT_EQ(from_cc(rec), t);
    }
}

TEST(Triple, CorruptedTargetFailsAtTwo) {
    auto t = f_functor(kato(projective_space_fan(1)).scheme);
    t.target = t.target + CountingPolynomial::constant(1);
    auto r = to_cc(t);
    EXPECT_FALSE(r.verified);
    ASSERT_FALSE(r.mismatches.empty());
    EXPECT_EQ(r.mismatches.front().rfind("q=2:", 0), 0u);
    EXPECT_THROW(from_cc(r), ValidationError);
}

TEST(Triple, OrbitTorifiedProjectivePlane) {
    auto T = orbit_torification(kato(projective_space_fan(2)));
    auto t = torified_triple(T, CountingPolynomial::parse("q^2+q+1"));
    EXPECT_TRUE(to_cc(t).verified);
    EXPECT_TRUE(is_torified_cc(t));
    EXPECT_EQ(f1_points(t), 3u);
}

TEST(Triple, TorifiedCC) {
    auto tori = torified_triple(Torification::of({0, 2, 1}), CountingPolynomial::parse("q^2-q+1"));
    EXPECT_TRUE(is_torified_cc(tori));
    auto line = f_functor(MScheme::affine(AffineMonoid::free_commutative(1)));
    EXPECT_FALSE(is_torified_cc(line));
    AffineMonoid mu3(AmbientGroup{1, {3}}, {IntVector{1, 0}, IntVector{-1, 0}, IntVector{0, 1}}, true);
    GenTorifiedTriple torsion{MScheme::affine(mu3), CountingPolynomial(), "identity"};
    EXPECT_FALSE(is_torified_cc(torsion));
    EXPECT_THROW(f1_points(torsion), UnsupportedError);
}

TEST(F1Points, Examples) {
    EXPECT_EQ(f1_points(f_functor(kato(projective_space_fan(1)).scheme)), 2u);
    EXPECT_EQ(f1_points(f_functor(MScheme::affine(AffineMonoid::free_group(3)))), 1u);
    auto [S, NS] = bruhat_torification("SL2");
    auto sl2 = torified_triple(S, NS);
    EXPECT_TRUE(to_cc(sl2).verified);
    EXPECT_EQ(f1_points(sl2), 2u);
    auto [G, NG] = bruhat_torification("GL2");
    EXPECT_EQ(f1_points(torified_triple(G, NG)), 2u);
}

TEST(F1Points, MinimalRankToriMatchTriple) {
    std::vector<Torification> corpus{orbit_torification(kato(projective_space_fan(3))), schubert_torification(2, 4).first,
                                     schubert_torification(3, 6).first, bruhat_torification("SL2").first,
                                     orbit_torification(kato(torus_fan(2)))};
    for (const auto& T : corpus) {
        EXPECT_EQ(T.minimal_rank_count(), f1_points(torified_triple(T, T.count())));
        // (q-1)^0 coefficient of the count is the number of rank-0 tori
        EXPECT_EQ(T.count().to_q_minus_one_basis()[0], Int(std::count(T.ranks.begin(), T.ranks.end(), 0u)));
    }
}
