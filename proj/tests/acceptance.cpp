// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "f1/f1.hpp"
#include "oracles.hpp"

using namespace f1;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// A failed check: the message becomes the detail of the FAIL line.
struct Failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failed(what);
}

std::string str(const Int& v) { return v.str(); }

IntVector vec(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

AffineMonoid monoid(std::size_t rank, std::vector<std::vector<long>> gens, std::vector<long> torsion = {}) {
    std::vector<IntVector> g;
    for (auto& x : gens) g.push_back(vec(x));
    AmbientGroup G{rank, {}};
    for (auto t : torsion) G.torsion.push_back(t);
    return AffineMonoid(G, g);
}

std::vector<std::pair<std::string, Fan>> commutation_fans() {
    return {{"A1", affine_space_fan(1)},
            {"A2", affine_space_fan(2)},
            {"A3", affine_space_fan(3)},
            {"P1", projective_space_fan(1)},
            {"P2", projective_space_fan(2)},
            {"P1xP1", product_fan(projective_space_fan(1), projective_space_fan(1))},
            {"F1", hirzebruch_fan(1)}};
}

std::vector<std::pair<std::string, Fan>> fan_corpus() {
    auto fans = commutation_fans();
    fans.push_back({"P3", projective_space_fan(3)});
    fans.push_back({"F2", hirzebruch_fan(2)});
    fans.push_back({"F3", hirzebruch_fan(3)});
    fans.push_back({"T2", torus_fan(2)});
    fans.push_back({"A1xP1", product_fan(affine_space_fan(1), projective_space_fan(1))});
    return fans;
}

// Membership agreement on every ambient element with free coordinates in [-3, 3].
bool same_elements(const AffineMonoid& a, const AffineMonoid& b) {
    if (!(a.ambient() == b.ambient())) return false;
    const auto& G = a.ambient();
    std::vector<IntVector> pts{IntVector{}};
    for (std::size_t i = 0; i < G.width(); ++i) {
        long hi = i < G.rank ? 3 : to_i64(G.torsion[i - G.rank]) - 1;
        long lo = i < G.rank ? -3 : 0;
        std::vector<IntVector> next;
        for (const auto& p : pts)
            for (long c = lo; c <= hi; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(q);
            }
        pts = std::move(next);
    }
    for (const auto& p : pts)
        if ((is_zero(p) || a.contains(p)) != (is_zero(p) || b.contains(p))) return false;
    return true;
}

std::vector<std::shared_ptr<const TableMonoid>> table_corpus() {
    return {finite_pointed(TableMonoid::boolean()), finite_pointed(TableMonoid::cyclic_with_zero(2)),
            finite_pointed(TableMonoid::cyclic_with_zero(3))};
}

// --- criteria ---------------------------------------------------------------

std::string spectrum_combinatorics() {
    auto start = Clock::now();
    for (std::size_t n = 1; n <= 6; ++n) {
        Spectrum S(AffineMonoid::free_commutative(n));
        require(S.size() == std::size_t{1} << n, "N^" + std::to_string(n) + " has " + std::to_string(S.size()) + " primes");
        std::set<std::vector<std::size_t>> faces;
        for (const auto& p : S.points()) faces.insert(p.complement_face);
        require(faces.size() == S.size(), "N^" + std::to_string(n) + ": repeated prime");
        for (std::size_t x = 0; x < S.size(); ++x)
            for (std::size_t y = 0; y < S.size(); ++y) {
                const auto& fx = S.points()[x].complement_face;
                const auto& fy = S.points()[y].complement_face;
                bool subset = std::includes(fx.begin(), fx.end(), fy.begin(), fy.end());
                require(S.leq(x, y) == subset, "N^" + std::to_string(n) + ": order is not inclusion of primes");
            }
    }
    double t = seconds_since(start);
    require(t < 1.0, "took " + std::to_string(t) + " s");
    return "2^n primes ordered as the Boolean lattice, n = 1..6";
}

std::string toric_counting() {
    auto start = Clock::now();
    for (const auto& [name, F] : commutation_fans()) {
        auto X = kato(F).scheme;
        auto orbit = orbit_count_polynomial(F);
        for (long q : {2L, 3L}) {
            Int c = count_points(X, q).count;
            Int oracle_count = oracle::cox_count(F, q);
            require(c == orbit(q) && c == oracle_count, name + " at q=" + std::to_string(q) + ": count " + str(c) +
                                                            ", orbit " + str(orbit(q)) + ", oracle " + str(oracle_count));
        }
    }
    auto P2 = kato(projective_space_fan(2)).scheme;
    require(count_points(P2, 2).count == oracle::projective_points(2, 2) && oracle::projective_points(2, 2) == 7,
            "P2 over F_2");
    require(count_points(P2, 3).count == oracle::projective_points(2, 3) && oracle::projective_points(2, 3) == 13,
            "P2 over F_3");
    double t = seconds_since(start);
    require(t < 5.0, "took " + std::to_string(t) + " s");
    return "7 fans agree with the orbit formula and Cox enumeration over F_2, F_3 (P2: 7, 13)";
}

std::string kato_forward() {
    for (const auto& [name, F] : fan_corpus()) {
        auto f = classify(kato(F).scheme);
        require(f.connected && f.integral && f.finite_type && f.exponent_one, name + " is not classified as a fan scheme");
    }
    return std::to_string(fan_corpus().size()) + " fans: connected, integral, finite type, exponent 1";
}

std::string sheaf_axioms() {
    std::vector<AffineMonoid> corpus{AffineMonoid::free_commutative(1),
                                     AffineMonoid::free_commutative(2),
                                     AffineMonoid::free_commutative(3),
                                     monoid(2, {{1, 0}, {1, 1}, {1, 2}}),
                                     monoid(2, {{0, 1}, {1, 0}, {2, -1}}),
                                     monoid(1, {{2}, {3}}),
                                     monoid(2, {{1, 0}, {-1, 0}, {0, 1}}),
                                     monoid(1, {{0, 1}, {1, 0}}, {3}),
                                     monoid(2, {{2, 0}, {1, 1}, {0, 2}}),
                                     AffineMonoid::free_group(2)};
    std::size_t stalks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& A = corpus[i];
        Spectrum S(A);
        require(same_elements(S.global_sections(), A), "monoid " + std::to_string(i) + ": global sections differ from A");
        for (std::size_t x = 0; x < S.size(); ++x, ++stalks) {
            require(same_elements(S.stalk(x), localize(A, S.points()[x]).first),
                    "monoid " + std::to_string(i) + ": stalk " + std::to_string(x) + " differs from A_p");
            require(same_elements(S.stalk(x), stalk_via_principal_open(A, S.points()[x])),
                    "monoid " + std::to_string(i) + ": stalk " + std::to_string(x) + " differs from the colimit");
        }
    }
    return "global sections = A and " + std::to_string(stalks) + " stalks = A_p on 10 monoids";
}

std::string grassmannian() {
    auto [T, N] = schubert_torification(2, 4);
    auto expected = CountingPolynomial::parse("q^4+q^3+2q^2+q+1");
    require(N == gaussian_binomial(4, 2) && N == expected, "Gaussian binomial is " + gaussian_binomial(4, 2).to_string());
    require(verify_torification(T, gaussian_binomial(4, 2)), "torification sums to " + T.count().to_string());
    long f2 = oracle::subspace_count(2, 4, 2), f3 = oracle::subspace_count(2, 4, 3);
    require(f2 == 35 && f3 == 130, "subspace oracle gives " + std::to_string(f2) + ", " + std::to_string(f3));
    require(N(2) == f2 && N(3) == f3, "N(2), N(3) = " + str(N(2)) + ", " + str(N(3)));
    return "Gr(2,4): " + N.to_string() + ", 35 over F_2, 130 over F_3";
}

std::string weyl_group() {
    std::ostringstream out;
    for (const auto& [group, poly, special, at2, at3] :
         {std::tuple{"SL2", "q^3-q", true, 6L, 24L}, std::tuple{"GL2", "q^4-q^3-q^2+q", false, 6L, 48L}}) {
        auto [T, N] = bruhat_torification(group);
        require(N == CountingPolynomial::parse(poly), std::string(group) + " counts as " + N.to_string());
        require(verify_torification(T, N), std::string(group) + " torification sums to " + T.count().to_string());
        long o2 = oracle::matrix_count(2, special), o3 = oracle::matrix_count(3, special);
        require(o2 == at2 && o3 == at3 && N(2) == o2 && N(3) == o3,
                std::string(group) + ": oracle " + std::to_string(o2) + ", " + std::to_string(o3));
        auto pts = f1_points(torified_triple(T, N));
        require(pts == 2, std::string(group) + " has " + std::to_string(pts) + " F1-points");
        out << group << " " << N.to_string() << " (" << o2 << ", " << o3 << ") ";
    }
    return out.str() + "with 2 = |W| F1-points each";
}

std::string zeta_normalization() {
    using Root = ZetaFunction::Root;
    auto z1 = zeta(CountingPolynomial::parse("1"));
    auto zq = zeta(CountingPolynomial::parse("q"));
    auto zp1 = zeta(CountingPolynomial::parse("q+1"));
    require(z1.roots() == std::vector<Root>{{0, 1}} && z1.pretty() == "s", "zeta(1) = " + z1.pretty());
    require(zq.roots() == std::vector<Root>{{1, 1}} && zq.pretty() == "(s-1)", "zeta(q) = " + zq.pretty());
    require(zp1.pretty() == "s(s-1)" && zp1.canonical() == "(s-0)(s-1)", "zeta(q+1) = " + zp1.pretty());
    return "zeta(1) = s, zeta(q) = s-1, zeta(q+1) = s(s-1)";
}

std::string lambda_structure() {
    using Ring = RingElement<AffineMonoid>;
    auto start = Clock::now();
    auto owner = std::make_shared<const AffineMonoid>(AffineMonoid::free_commutative(2));
    std::mt19937_64 rng(20240601);
    std::vector<Ring> xs;
    for (int i = 0; i < 200; ++i) xs.push_back(random_element(owner, rng));
    const std::vector<unsigned> primes{2, 3, 5};
    for (const auto& x : xs) {
        for (unsigned p : primes) require(frobenius_check(x, p), "psi_" + std::to_string(p) + " fails on " + x.to_string());
        for (unsigned p : primes)
            for (unsigned l : primes) require(psi(psi(x, p), l) == psi(psi(x, l), p), "psi does not commute on " + x.to_string());
    }
    // negative control: a -> (p+1)a is multiplicative but not a Frobenius lift
    std::size_t caught = 0;
    for (unsigned p : primes) {
        std::function<Ring(const Ring&)> mutated = [p](const Ring& x) {
            return x.map_support([&](const IntVector& a) -> std::optional<IntVector> {
                return x.owner().ambient().scale(Int(p + 1), a);
            });
        };
        for (const auto& x : xs)
            if (!frobenius_check(x, p, mutated)) ++caught;
    }
    require(caught > 0, "mutated psi was never rejected");
    double t = seconds_since(start);
    require(t < 2.0, "took " + std::to_string(t) + " s");
    return "200 elements of Z[N^2], p = 2,3,5; mutated psi rejected " + std::to_string(caught) + " times";
}

std::string haran_edge() {
    std::size_t checks = 0;
    for (const auto& M : table_corpus()) {
        auto report = fmatrix_laws(M, 3);
        for (const auto& l : report.laws) {
            require(l.passed, l.law + " fails: " + l.counterexample);
            checks += l.checked;
        }
        require(underlying_monoid_of_matrices(M) == *M, "underlying monoid differs");
    }
    return std::to_string(checks) + " exhaustive checks on {1,0}, Z/2+0, Z/3+0";
}

std::string durov_edge() {
    std::size_t checks = 0;
    for (const auto& M : table_corpus()) {
        MonadTM T(M);
        require(T.apply(0) == 1, "T_M(empty) has " + std::to_string(T.apply(0)) + " elements");
        for (std::size_t n = 0; n <= 3; ++n)
            require(T.apply(n) == (M->size() - 1) * n + 1, "size formula fails at |X| = " + std::to_string(n));
        auto report = monad_laws(M, 3);
        for (const auto& l : report.laws) {
            require(l.passed, l.law + " fails: " + l.counterexample);
            checks += l.checked;
        }
    }
    return std::to_string(checks) + " monad law checks; |T_M(X)| = (|M|-1)|X|+1";
}

std::string cc_equivalence() {
    std::vector<GenTorifiedTriple> corpus;
    for (const auto& F : {projective_space_fan(1), projective_space_fan(2), affine_space_fan(2), hirzebruch_fan(1),
                          product_fan(affine_space_fan(1), projective_space_fan(1)), torus_fan(1)})
        corpus.push_back(f_functor(kato(F).scheme));
    corpus.push_back(f_functor(MScheme::affine(AffineMonoid::free_group(2))));
    corpus.push_back(torified_triple(orbit_torification(kato(projective_space_fan(2))), CountingPolynomial::parse("q^2+q+1")));
    auto sl2 = bruhat_torification("SL2");
    corpus.push_back(torified_triple(sl2.first, sl2.second));
    auto gr = schubert_torification(2, 4);
    corpus.push_back(torified_triple(gr.first, gr.second));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto rec = to_cc(corpus[i]);
        require(rec.verified, "triple " + std::to_string(i) + ": " + (rec.mismatches.empty() ? "" : rec.mismatches.front()));
        require(from_cc(rec) == corpus[i], "triple " + std::to_string(i) + " does not round trip");
    }
    auto tori = torified_triple(Torification::of({0, 1, 2}), CountingPolynomial::parse("q^2-q+1"));
    require(is_torified_cc(tori), "disjoint tori are not torified");
    require(!is_torified_cc(f_functor(MScheme::affine(AffineMonoid::free_commutative(1)))), "pointed spec N is torified");
    AffineMonoid mu3(AmbientGroup{1, {3}}, {IntVector{1, 0}, IntVector{-1, 0}, IntVector{0, 1}}, true);
    require(!is_torified_cc(GenTorifiedTriple{MScheme::affine(mu3), CountingPolynomial(), "identity"}),
            "torsion chart is torified");
    return std::to_string(corpus.size()) + " triples round trip; tori / spec N / torsion classified";
}

std::string polynomial_fit() {
    std::vector<std::pair<std::string, std::function<Int(long)>>> oracles;
    std::vector<MScheme> schemes;
    for (const auto& [name, F] : fan_corpus()) {
        if (F.rays().size() < F.rank()) continue;
        schemes.push_back(kato(F).scheme);
        oracles.push_back({name, [F](long q) { return oracle::cox_count(F, q); }});
    }
    for (const auto& A : {AffineMonoid::free_group(2), monoid(1, {{2}, {3}}), monoid(2, {{2, 0}, {1, 1}, {0, 2}}), monoid(2, {{1, 0}, {1, 1}, {1, 2}}),
                          monoid(2, {{1, 0}, {-1, 0}, {0, 1}})}) {
        schemes.push_back(MScheme::affine(A));
        oracles.push_back({"affine chart", [A](long q) { return oracle::binomial_count(A, q); }});
    }
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        std::vector<CountSample> samples;
        for (const auto& q : sample_field_sizes()) samples.push_back({q, oracles[i].second(to_i64(q))});
        auto symbolic = counting_polynomial(schemes[i]).polynomial();
        require(symbolic.has_value(), oracles[i].first + " has no polynomial count");
        auto fitted = fit_counting_polynomial(samples, 4);
        require(fitted == *symbolic, oracles[i].first + ": fit " + fitted.to_string() + " vs " + symbolic->to_string());
    }
    std::vector<CountSample> bad;
    for (const auto& q : sample_field_sizes()) bad.push_back({q, q + 1});
    bad.back().count += 1;
    bool rejected = false;
    try {
        fit_counting_polynomial(bad, 4);
    } catch (const ValidationError&) {
        rejected = true;
    }
    require(rejected, "an inconsistent sample set was accepted");
    return std::to_string(schemes.size()) + " schemes fitted from oracle samples; inconsistent samples rejected";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"spectrum combinatorics", spectrum_combinatorics},
        {"toric counting commutation", toric_counting},
        {"fan schemes are connected, integral, finite type, exponent 1", kato_forward},
        {"sheaf axioms", sheaf_axioms},
        {"Grassmannian Gr(2,4)", grassmannian},
        {"Weyl group realization", weyl_group},
        {"zeta normalization", zeta_normalization},
        {"Frobenius lifts", lambda_structure},
        {"F<M> laws", haran_edge},
        {"T_M monad laws", durov_edge},
        {"CC equivalence at desk scale", cc_equivalence},
        {"counting polynomial fit", polynomial_fit},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, run] = criteria[i];
        auto start = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        if (!ok) ++failed;
        std::printf("%s %2zu %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, name.c_str(), detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
