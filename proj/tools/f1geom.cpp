#include <CLI11.hpp>
#include <iostream>

#include "f1/f1.hpp"

using namespace f1;
using io::json;

namespace {

struct Result {
    json data = json::object();
    std::ostringstream text;
    bool ok = true;
};

struct Options {
    std::string fan, monoid, scheme, input, counting, standard, group, table;
    std::vector<long> q{2, 3, 4, 5, 7, 8, 9};
    std::vector<unsigned> primes{2, 3, 5};
    std::vector<std::size_t> grassmannian;
    long param = 0;
    unsigned degree_bound = 0;
    bool degree_bound_set = false;
    std::size_t trials = 200;
    std::size_t max_size = 3;
    std::uint64_t seed = 20240601;
    bool json_out = false;
    bool charts = false;
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string group_string(const AbelianGroupInv& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

Fan load_fan(const Options& o) {
    if (!o.standard.empty()) return standard_fan(o.standard, o.param);
    return io::fan_from_json(io::read_file(o.fan));
}

/// The scheme named by --fan, --standard, --monoid or --scheme.
MScheme load_scheme(const Options& o) {
    if (!o.fan.empty() || !o.standard.empty()) return kato(load_fan(o)).scheme;
    if (!o.monoid.empty()) return MScheme::affine(io::monoid_from_json(io::read_file(o.monoid)));
    if (!o.scheme.empty()) return io::any_scheme_from_json(io::read_file(o.scheme));
    throw ValidationError("one of --fan, --standard, --monoid or --scheme is required");
}

std::vector<Int> field_sizes(const Options& o) {
    std::vector<Int> qs;
    for (long q : o.q) {
        require_prime_power(q);
        qs.push_back(q);
    }
    return qs;
}

// --- verbs ------------------------------------------------------------------

void run_spec(const Options& o, Result& r) {
    MScheme X = load_scheme(o);
    json points = json::array();
    r.text << X.size() << " points\n";
    for (std::size_t x = 0; x < X.size(); ++x) {
        const auto& rep = X.representative(x);
        const auto& face = X.charts()[rep.chart].faces()[rep.face].members;
        auto U = X.unit_group(x);
        json above = json::array();
        for (std::size_t y = 0; y < X.size(); ++y)
            if (y != x && X.leq(x, y)) above.push_back(y);
        points.push_back({{"point", x}, {"chart", rep.chart}, {"face", face}, {"rank", U.free_rank},
                          {"units", group_string(U)}, {"specializations", above}});
        r.text << "  x" << x << ": chart " << rep.chart << " face {" << join(face) << "} units " << U << "\n";
    }
    auto flags = classify(X);
    r.data["points"] = points;
    r.data["flags"] = io::to_json(flags);
    r.data["minimal_rank_points"] = minimal_rank_points(X);
    r.text << "flags: " << flags << "\n";
}

void run_fan(const Options& o, Result& r) {
    Fan F = load_fan(o);
    auto T = kato(F);
    auto orbit = orbit_count_polynomial(F);
    auto check = fan_in_Zn(F);
    json cones = json::array();
    for (std::size_t c = 0; c < F.size(); ++c) cones.push_back(F.cones()[c]);
    r.data["fan"] = io::to_json(F);
    r.data["cones"] = cones;
    r.data["orbit_count"] = orbit.to_string();
    r.data["kato_points"] = T.scheme.size();
    r.data["flags"] = io::to_json(classify(T.scheme));
    r.data["fan_in_Zn"] = check.valid();
    r.text << F.size() << " cones, " << F.maximal_cones().size() << " maximal\n"
           << "orbit count: " << orbit.to_string() << "\n"
           << "kato: " << T.scheme.size() << " points, " << classify(T.scheme) << "\n"
           << "fan in Z^n: " << (check.valid() ? "valid" : "invalid") << "\n";
    for (const auto& v : check.violations) r.text << "  condition " << v.condition << ": " << v.message << "\n";
    r.ok = check.valid();
}

void run_count(const Options& o, Result& r) {
    MScheme X = load_scheme(o);
    auto N = counting_polynomial(X);
    json records = json::array();
    for (const auto& q : field_sizes(o)) {
        auto rec = count_points(X, q);
        records.push_back(io::to_json(rec));
        r.text << "q=" << q << ": " << rec.count << "\n";
        if (N(q) != rec.count) r.ok = false;
    }
    r.data["counts"] = records;
    r.data["counting"] = N.to_string();
    r.data["polynomial"] = N.is_polynomial();
    r.text << "N(q) = " << N.to_string() << (N.is_polynomial() ? "" : "  (not polynomial in q)") << "\n";
}

void run_zeta(const Options& o, Result& r) {
    CountingPolynomial N;
    if (!o.counting.empty()) {
        N = CountingPolynomial::parse(o.counting);
    } else if (!o.input.empty()) {
        auto samples = io::counts_from_json(io::read_file(o.input));
        unsigned bound = o.degree_bound_set ? o.degree_bound : static_cast<unsigned>(samples.size()) - 1;
        N = fit_counting_polynomial(samples, bound);
    } else {
        N = *counting_polynomial(load_scheme(o)).polynomial();
    }
    auto Z = zeta(N);
    r.data = io::to_json(Z);
    r.data["counting"] = N.to_string();
    r.text << Z.canonical() << "\n";
}

Torification load_torification(const Options& o, std::optional<CountingPolynomial>& N) {
    if (!o.grassmannian.empty()) {
        if (o.grassmannian.size() != 2) throw ValidationError("--grassmannian takes k,n");
        std::size_t k = o.grassmannian[0], n = o.grassmannian[1];
        if (o.charts) {
            auto rep = plucker_charts(k, n);
            N = gaussian_binomial(n, k);
            return rep.torification;
        }
        auto [T, G] = schubert_torification(k, n);
        N = G;
        return T;
    }
    if (!o.group.empty()) {
        auto [T, G] = bruhat_torification(o.group);
        N = G;
        return T;
    }
    if (!o.fan.empty() || !o.standard.empty()) {
        Fan F = load_fan(o);
        N = orbit_count_polynomial(F);
        return orbit_torification(kato(F));
    }
    if (!o.input.empty()) {
        json j = io::read_file(o.input);
        if (io::kind_of(j) == "cells") return torify(io::cells_from_json(j));
        N = io::declared_counting(j);
        return io::torification_from_json(j);
    }
    throw ValidationError("one of --grassmannian, --group, --fan, --standard or --input is required");
}

void run_torify(const Options& o, Result& r) {
    std::optional<CountingPolynomial> N;
    Torification T = load_torification(o, N);
    auto sum = T.count();
    std::vector<std::size_t> ranks = T.ranks;
    std::sort(ranks.begin(), ranks.end());
    r.data["torification"] = io::to_json(T, N);
    r.data["sorted_ranks"] = ranks;
    r.data["sum"] = sum.to_string();
    r.text << T.ranks.size() << " tori, ranks {" << join(ranks) << "}\nsum (q-1)^d = " << sum.to_string() << "\n";
    r.text << "minimal rank " << T.minimal_rank() << " on " << T.minimal_rank_count() << " tori\n";
    if (o.charts) {
        auto a = is_affinely_torified(T);
        r.data["affine"] = a.affine ? json(*a.affine) : json(nullptr);
        r.data["affine_diagnostic"] = a.diagnostic;
        r.text << "affine: " << (a.affine ? (*a.affine ? "yes" : "no") : "unknown") << " (" << a.diagnostic << ")\n";
    }
}

void run_verify(const Options& o, Result& r) {
    if (!o.grassmannian.empty() || !o.group.empty() || !o.input.empty()) {
        std::optional<CountingPolynomial> N;
        Torification T = load_torification(o, N);
        if (!N) throw ValidationError("verify: the torification declares no counting polynomial");
        bool ok = verify_torification(T, *N);
        r.data["verified"] = ok;
        r.data["counting"] = N->to_string();
        r.data["sum"] = T.count().to_string();
        r.text << "sum (q-1)^d = " << T.count().to_string() << " vs N = " << N->to_string() << ": " << (ok ? "ok" : "MISMATCH")
               << "\n";
        r.ok = ok;
        return;
    }
    auto t = f_functor(load_scheme(o));
    auto rec = to_cc(t);
    bool round_trip = rec.verified && from_cc(rec) == t;
    r.data["cc"] = io::to_json(rec);
    r.data["round_trip"] = round_trip;
    r.data["torified"] = is_torified_cc(t);
    r.data["f1_points"] = f1_points(t);
    r.text << "N(q) = " << t.target.to_string() << "\n";
    for (std::size_t i = 0; i < rec.source.size(); ++i)
        r.text << "q=" << rec.source[i].q << ": " << rec.source[i].count << " / " << rec.target[i].count << "\n";
    r.text << "bijection: " << (rec.verified ? "ok" : "FAILED") << ", round trip: " << (round_trip ? "ok" : "FAILED")
           << ", F1-points: " << f1_points(t) << "\n";
    r.ok = round_trip;
}

void run_lambda(const Options& o, Result& r) {
    AffineMonoid A = o.monoid.empty() ? AffineMonoid::free_commutative(2) : io::monoid_from_json(io::read_file(o.monoid));
    auto owner = std::make_shared<const AffineMonoid>(A);
    std::mt19937_64 rng(o.seed);
    json per_prime = json::object();
    std::size_t failures = 0, commute_failures = 0;
    std::vector<RingElement<AffineMonoid>> xs;
    for (std::size_t i = 0; i < o.trials; ++i) xs.push_back(random_element(owner, rng));
    for (unsigned p : o.primes) {
        std::size_t bad = 0;
        for (const auto& x : xs)
            if (!frobenius_check(x, p)) ++bad;
        per_prime[std::to_string(p)] = bad == 0;
        failures += bad;
        r.text << "p=" << p << ": " << (xs.size() - bad) << "/" << xs.size() << " pass\n";
    }
    for (std::size_t a = 0; a < o.primes.size(); ++a)
        for (std::size_t b = a + 1; b < o.primes.size(); ++b)
            for (const auto& x : xs)
                if (psi(psi(x, o.primes[a]), o.primes[b]) != psi(psi(x, o.primes[b]), o.primes[a])) ++commute_failures;
    r.data["seed"] = o.seed;
    r.data["trials"] = o.trials;
    r.data["frobenius"] = per_prime;
    r.data["commuting"] = commute_failures == 0;
    r.text << "psi_p commute: " << (commute_failures == 0 ? "yes" : "no") << "\n";
    r.ok = failures == 0 && commute_failures == 0;
}

std::shared_ptr<const TableMonoid> load_table(const Options& o) {
    if (!o.table.empty()) return finite_pointed(io::table_monoid_from_json(io::read_file(o.table)));
    if (o.standard == "boolean" || o.standard.empty()) return finite_pointed(TableMonoid::boolean());
    if (o.standard.rfind("Z", 0) == 0) return finite_pointed(TableMonoid::cyclic_with_zero(std::stoul(o.standard.substr(1))));
    throw ValidationError("fzoo: unknown monoid '" + o.standard + "' (boolean, Z2, Z3, ...)");
}

void run_fzoo(const Options& o, Result& r) {
    auto M = load_table(o);
    auto f = fmatrix_laws(M, o.max_size);
    auto t = monad_laws(M, o.max_size);
    r.data["haran"] = io::to_json(f);
    r.data["durov"] = io::to_json(t);
    for (const auto* rep : {&f, &t})
        for (const auto& l : rep->laws) {
            r.text << (rep == &f ? "F<M> " : "T_M  ") << l.law << ": " << (l.passed ? "pass" : "FAIL") << " (" << l.checked
                   << " checks)";
            if (!l.passed) r.text << " counterexample " << l.counterexample;
            r.text << "\n";
        }
    r.ok = f.passed() && t.passed();
}

void run_diagram(const Options& o, Result& r) {
    json checks = json::array();
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
        r.text << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
        r.ok = r.ok && ok;
    };

    std::vector<std::pair<std::string, Fan>> fans{{"A1", affine_space_fan(1)},   {"A2", affine_space_fan(2)},
                                                  {"A3", affine_space_fan(3)},   {"P1", projective_space_fan(1)},
                                                  {"P2", projective_space_fan(2)}, {"P1xP1", product_fan(projective_space_fan(1), projective_space_fan(1))},
                                                  {"F1", hirzebruch_fan(1)}};
    for (const auto& [name, F] : fans) {
        auto X = kato(F).scheme;
        auto orbit = orbit_count_polynomial(F);
        bool ok = true;
        for (const auto& q : field_sizes(o)) ok = ok && count_points(X, q).count == orbit(q);
        record("kato then count = orbit formula: " + name, ok, orbit.to_string());
    }

    std::size_t trips = 0;
    bool trips_ok = true;
    for (const auto& [name, F] : fans) {
        auto t = f_functor(kato(F).scheme);
        auto rec = to_cc(t);
        trips_ok = trips_ok && rec.verified && from_cc(rec) == t;
        ++trips;
    }
    record("F then to_cc round trip", trips_ok, std::to_string(trips) + " triples");

    std::vector<AffineMonoid> monoids{AffineMonoid::free_commutative(2), AffineMonoid::free_group(1),
                                      AffineMonoid(AmbientGroup{1, {}}, {IntVector{2}, IntVector{3}}),
                                      AffineMonoid(AmbientGroup{2, {}}, {IntVector{1, 0}, IntVector{1, 1}, IntVector{1, 2}})};
    bool zero_ok = true;
    for (const auto& A : monoids) {
        Spectrum S(A), S0(adjoin_zero(A));
        zero_ok = zero_ok && S.size() == S0.size();
        for (std::size_t x = 0; x < S.size() && zero_ok; ++x)
            for (std::size_t y = 0; y < S.size(); ++y) zero_ok = zero_ok && S.leq(x, y) == S0.leq(x, y);
    }
    record("+0 then primes = primes", zero_ok, std::to_string(monoids.size()) + " monoids");

    auto owner = std::make_shared<const AffineMonoid>(AffineMonoid::free_commutative(2));
    std::mt19937_64 rng(o.seed);
    bool psi_ok = true;
    for (std::size_t i = 0; i < o.trials; ++i) {
        auto x = random_element(owner, rng);
        psi_ok = psi_ok && psi(psi(x, 2), 3) == psi(psi(x, 3), 2) && psi(psi(x, 3), 5) == psi(psi(x, 5), 3);
    }
    record("psi_p commuting family", psi_ok, std::to_string(o.trials) + " elements of Z[N^2]");
    r.data["checks"] = checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with monoid schemes, toric fans, point counts and torifications"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "Emit JSON");

    auto scheme_inputs = [&](CLI::App* c) {
        c->add_option("--fan", o.fan, "Fan file");
        c->add_option("--standard", o.standard, "Standard fan (A<n>, P<n>, T<n>, F<a>) or monoid name");
        c->add_option("--param", o.param, "Parameter of a standard fan");
        c->add_option("--monoid", o.monoid, "Monoid file");
        c->add_option("--scheme", o.scheme, "Scheme file (scheme, monoid or fan)");
    };
    auto q_option = [&](CLI::App* c) { c->add_option("--q", o.q, "Field sizes")->delimiter(','); };
    auto seed_option = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "Random seed (default 20240601)");
        c->add_option("--trials", o.trials, "Random elements");
    };

    auto* spec = app.add_subcommand("spec", "Points, ranks and flags of an M-scheme");
    scheme_inputs(spec);
    auto* fan = app.add_subcommand("fan", "Cones, orbit count and Kato scheme of a fan");
    scheme_inputs(fan);
    auto* count = app.add_subcommand("count", "Points over F_q");
    scheme_inputs(count);
    q_option(count);
    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function of a counting polynomial");
    scheme_inputs(zeta_cmd);
    zeta_cmd->add_option("--counting", o.counting, "Counting polynomial, e.g. \"q+1\"");
    zeta_cmd->add_option("--input", o.input, "Counts file to interpolate");
    zeta_cmd->add_option("--degree-bound", o.degree_bound, "Degree bound for interpolation")->each([&](const std::string&) {
        o.degree_bound_set = true;
    });
    auto* torify_cmd = app.add_subcommand("torify", "Torifications and their counts");
    auto* verify_cmd = app.add_subcommand("verify", "Check a torification or the CC round trip of a scheme");
    for (auto* c : {torify_cmd, verify_cmd}) {
        scheme_inputs(c);
        c->add_option("--grassmannian", o.grassmannian, "Schubert torification of Gr(k,n)")->delimiter(',');
        c->add_option("--group", o.group, "Bruhat torification (SL2, GL2)");
        c->add_option("--input", o.input, "Torification or cell file");
        c->add_flag("--charts", o.charts, "Attach charts and check affineness");
    }
    auto* lambda = app.add_subcommand("lambda-check", "Frobenius lifts psi_p on random ring elements");
    lambda->add_option("--monoid", o.monoid, "Monoid file (default N^2)");
    lambda->add_option("--p", o.primes, "Primes")->delimiter(',');
    seed_option(lambda);
    auto* fzoo = app.add_subcommand("fzoo", "Laws of F<M> and T_M");
    fzoo->add_option("--monoid", o.table, "Table monoid file");
    fzoo->add_option("--standard", o.standard, "boolean, Z2, Z3, ...");
    fzoo->add_option("--max-size", o.max_size, "Largest index set");
    auto* diagram = app.add_subcommand("diagram-check", "Commutation checks across modules");
    q_option(diagram);
    seed_option(diagram);

    CLI11_PARSE(app, argc, argv);

    Result r;
    std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (verb == "spec") run_spec(o, r);
        else if (verb == "fan") run_fan(o, r);
        else if (verb == "count") run_count(o, r);
        else if (verb == "zeta") run_zeta(o, r);
        else if (verb == "torify") run_torify(o, r);
        else if (verb == "verify") run_verify(o, r);
        else if (verb == "lambda-check") run_lambda(o, r);
        else if (verb == "fzoo") run_fzoo(o, r);
        else if (verb == "diagram-check") run_diagram(o, r);
    } catch (const std::exception& e) {
        json err{{"kind", "error"}, {"schema", io::schema_version}, {"verb", verb}, {"error", e.what()}};
        if (const auto* p = dynamic_cast<const io::ParseError*>(&e)) {
            if (p->line) err["line"] = p->line, err["column"] = p->column;
            if (!p->path.empty()) err["path"] = p->path;
        }
        if (o.json_out)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.json_out) {
        json out = r.data;
        out["kind"] = "report";
        out["schema"] = io::schema_version;
        out["verb"] = verb;
        out["ok"] = r.ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << r.text.str();
    }
    return r.ok ? 0 : 1;
}
