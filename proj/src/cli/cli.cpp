#include "quadrilift/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "quadrilift/error.hpp"
#include "quadrilift/json_io.hpp"
#include "quadrilift/local_factors.hpp"
#include "quadrilift/local_oracle.hpp"
#include "quadrilift/orthogonal.hpp"
#include "quadrilift/weil.hpp"

namespace quadrilift {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::string dump(const Json& j) { return j.dump() + "\n"; }

CommandResponse reply(const Json& j, int code = kExitOk) { return {code, dump(j), {}}; }

CommandResponse verdict_reply(const Json& j, bool affirmative) {
    return reply(j, affirmative ? kExitOk : kExitNegative);
}

std::string read_payload(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

QuadraticSpace space_arg(const std::string& text) { return space_from_json(parse_json(text)); }

QuadCharacter local_character(const std::string& text, std::size_t dim) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw InputError("character must be an object");
    QuadCharacter chi;
    chi.dim = dim;
    if (j.contains("lambda")) chi.lambda = rational_from_json(j.at("lambda"));
    if (j.contains("eps")) {
        if (!j.at("eps").is_number_integer()) throw InputError("local eps must be 1 or -1");
        chi.eps = j.at("eps").get<int>();
        if (chi.eps != 1 && chi.eps != -1) throw InputError("local eps must be 1 or -1");
    }
    if (j.contains("dim")) chi.dim = j.at("dim").get<std::size_t>();
    return chi;
}

Json character_json(const QuadCharacter& chi) {
    return Json{{"lambda", chi.lambda.to_string()}, {"eps", chi.eps}, {"dim", chi.dim}};
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json places_json(const std::vector<Place>& places) {
    Json out = Json::array();
    for (const auto& p : places) out.push_back(p.to_string());
    return out;
}

Json check_json(const std::string& name, bool passed, const std::string& detail) {
    return Json{{"name", name}, {"passed", passed}, {"detail", detail}};
}

Vector random_anisotropic(std::mt19937_64& rng, const QuadraticSpace& q) {
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Vector v(q.dim());
        for (auto& x : v) x = entry(rng);
        if (!q.value(v).is_zero()) return v;
    }
}

// ---- selftest suites ----

Json suite_hilbert(const HilbertFn& symbol) {
    const std::vector<long> values{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 15, -15, 30, -30};
    const std::vector<Place> places{Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                                    Place::finite(7)};
    std::size_t mismatches = 0;
    std::size_t total = 0;
    std::string first;
    for (const auto& place : places) {
        for (long a : values) {
            for (long b : values) {
                ++total;
                if (symbol(a, b, place) != hilbert_oracle(a, b, place)) {
                    if (mismatches++ == 0) {
                        first = "(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + place.to_string();
                    }
                }
            }
        }
    }
    std::string detail = std::to_string(total) + " symbols, " + std::to_string(mismatches) + " mismatches";
    if (!first.empty()) detail += ", first at " + first;
    return check_json("hilbert", mismatches == 0, detail);
}

Json suite_product_formula(const HilbertFn& symbol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-200, 200);
    std::uniform_int_distribution<long> den(1, 60);
    int bad = 0;
    const int pairs = 200;
    for (int i = 0; i < pairs; ++i) {
        Rational a;
        Rational b;
        do {
            a = Rational(Integer(num(rng)), Integer(den(rng)));
        } while (a.is_zero());
        do {
            b = Rational(Integer(num(rng)), Integer(den(rng)));
        } while (b.is_zero());
        int product = 1;
        for (const auto& place : bad_places({a, b})) product *= symbol(a, b, place);
        if (product != 1) ++bad;
    }
    return check_json("product_formula", bad == 0,
                      std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations");
}

Json suite_cartan_dieudonne(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int bad = 0;
    int total = 0;
    for (const auto& entries : std::vector<std::vector<long>>{{1, 2, -3}, {1, 1, 1, -1}, {2, -5, 7}}) {
        std::vector<Rational> d(entries.begin(), entries.end());
        const QuadraticSpace q(d);
        std::uniform_int_distribution<std::size_t> len(0, 2 * q.dim());
        for (int i = 0; i < 10; ++i) {
            OrthogonalElement h = OrthogonalElement::identity(q);
            const std::size_t k = len(rng);
            for (std::size_t j = 0; j < k; ++j) h = reflection(q, random_anisotropic(rng, q)) * h;
            const ReflectionWord w = cartan_dieudonne(h);
            ++total;
            const bool ok = w.vectors.size() <= q.dim() && word_product(q, w) == h &&
                            (w.vectors.size() % 2 == 0) == (h.det() == 1);
            if (!ok) ++bad;
        }
    }
    return check_json("cartan_dieudonne", bad == 0,
                      std::to_string(total) + " elements, " + std::to_string(bad) + " failures");
}

Json suite_weil(long p, std::uint64_t seed) {
    const weil::FiniteWeilModel model(p, {1, 1, 1}, 1);
    bool ok = true;
    std::string failed;
    for (const auto& r : weil::run_weil_checks(model, seed)) {
        if (!r.passed) {
            ok = false;
            failed += (failed.empty() ? "" : ", ") + r.name;
        }
    }
    return check_json("weil_p" + std::to_string(p), ok, ok ? "all invariants hold" : "failed: " + failed);
}

Json suite_unramified() {
    bool ok = true;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        const UnramifiedDatum datum{p, 3, 1, 1, 1};
        ok = ok && unramified_pairing(datum) == RationalFunctionInT::geometric();
        const Polynomial one_minus_t(std::vector<Rational>{1, -1});
        ok = ok && one_minus_t * shell_partial_sum(datum, 64) == Polynomial(1) - Polynomial::monomial(65);
    }
    return check_json("unramified", ok, "pairing = 1/(1 - t) at p = 3, 5, 7, 11");
}

// ---- subcommands ----

struct Args {
    std::string a, b, place, q, qp, beta, matrix, lambda, xi, xip, quadruple;
    int eps = 1;
    std::size_t n = 0;
    bool global = false;
    bool oracle = false;
    bool fast = false;
    bool residue = false;
    long p = 5;
    std::vector<long> diag{1, 1, 1};
    std::size_t weil_n = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t up = 5;
    std::size_t m = 3;
    std::size_t mp = 1;
    std::string d = "1";
    std::string dp = "1";
    std::optional<double> s_value;
    std::vector<std::uint64_t> exclude;
    std::uint64_t bound = 1000000;
    double s = 2.0;
};

CommandResponse cmd_hilbert(const Args& a) {
    const Rational x = Rational::parse(a.a);
    const Rational y = Rational::parse(a.b);
    if (a.place.empty()) {
        Json symbols = Json::object();
        int product = 1;
        for (const auto& place : bad_places({x, y})) {
            const int s = hilbert(x, y, place);
            symbols[place.to_string()] = s;
            product *= s;
        }
        return reply(Json{{"symbols", symbols}, {"product", product}});
    }
    const Place place = Place::parse(a.place);
    Json out{{"symbol", hilbert(x, y, place)}};
    if (a.oracle) out["oracle"] = hilbert_oracle(x, y, place);
    return reply(out);
}

CommandResponse cmd_invariants(const Args& a) { return reply(to_json(invariants(space_arg(a.q)))); }

CommandResponse cmd_isometric(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    const QuadraticSpace qp = space_arg(a.qp);
    if (!a.place.empty()) {
        const bool iso = is_isometric_local(q, qp, Place::parse(a.place));
        return verdict_reply(Json{{"isometric", iso}}, iso);
    }
    std::vector<Rational> values = q.diag();
    values.insert(values.end(), qp.diag().begin(), qp.diag().end());
    Json per_place = Json::object();
    bool all = true;
    for (const auto& place : bad_places(values)) {
        const bool iso = is_isometric_local(q, qp, place);
        per_place[place.to_string()] = iso;
        all = all && iso;
    }
    return verdict_reply(Json{{"isometric", all}, {"places", per_place}}, all);
}

CommandResponse cmd_isotropy(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    if (!a.place.empty()) {
        const bool iso = is_isotropic_local(q, Place::parse(a.place));
        return verdict_reply(Json{{"isotropic", iso}}, iso);
    }
    const AnisotropyReport r = anisotropy_report(q);
    Json out{{"isotropic", !r.anisotropic},
             {"anisotropic", r.anisotropic},
             {"high_dimension", r.high_dimension},
             {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)},
             {"places_checked", places_json(r.places_checked)}};
    return verdict_reply(out, !r.anisotropic);
}

CommandResponse cmd_represents(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    const Place place = Place::parse(a.place);
    Matrix beta;
    if (!a.beta.empty() && a.beta.front() == '[') {
        beta = matrix_from_json(parse_json(a.beta));
    } else {
        beta = Matrix::from_rows({{Rational::parse(a.beta)}});
    }
    const auto complement = representation_complement(q, beta, place);
    Json c = nullptr;
    if (complement) {
        c = Json::array();
        for (const auto& x : *complement) c.push_back(to_json(x));
    }
    return verdict_reply(Json{{"represents", complement.has_value()}, {"complement", c}}, complement.has_value());
}

CommandResponse cmd_spinor_norm(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    const OrthogonalElement h(q, matrix_from_json(parse_json(a.matrix)));
    const ReflectionWord w = cartan_dieudonne(h);
    Json reflections = Json::array();
    for (const auto& v : w.vectors) reflections.push_back(vector_json(v));
    return reply(Json{{"det", h.det()},
                      {"spinor_norm", spinor_norm(h).to_string()},
                      {"length", w.vectors.size()},
                      {"reflections", reflections}});
}

CommandResponse cmd_character_eval(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    const OrthogonalElement h(q, matrix_from_json(parse_json(a.matrix)));
    const QuadCharacter chi{Rational::parse(a.lambda), a.eps, q.dim()};
    const Place place = Place::parse(a.place);
    return reply(Json{{"value", xi_eval(chi, h, place)}, {"det", h.det()}, {"spinor_norm", spinor_norm(h).to_string()}});
}

CommandResponse cmd_admissible(const Args& a) {
    const QuadraticSpace q = space_arg(a.q);
    const QuadraticSpace qp = space_arg(a.qp);
    const std::optional<std::size_t> n = a.n == 0 ? std::nullopt : std::optional<std::size_t>(a.n);
    if ((a.xi.empty()) != (a.xip.empty())) throw InputError("give both --xi and --xip or neither");
    if (a.global) {
        Json j{{"q", to_json(q)}, {"qp", to_json(qp)}};
        if (n) j["n"] = *n;
        if (!a.xi.empty()) {
            j["xi"] = parse_json(a.xi);
            j["xip"] = parse_json(a.xip);
        }
        const GlobalQuadruple alpha = quadruple_from_json(j);
        const GlobalAdmissibility g = globally_admissible(alpha);
        Json reports = Json::array();
        for (const auto& r : g.reports) reports.push_back(to_json(r));
        Json out{{"admissible", g.admissible}, {"automorphic", g.automorphic},
                 {"n", alpha.n},               {"xi", to_json(alpha.xi)},
                 {"xip", to_json(alpha.xip)},  {"bad_set", places_json(bad_set(alpha))},
                 {"failing", places_json(g.failing)}, {"reports", reports}};
        return verdict_reply(out, g.admissible);
    }
    if (a.place.empty()) throw InputError("admissible needs --place or --global");
    const Place place = Place::parse(a.place);
    const Quadruple alpha = a.xi.empty() ? constructed_quadruple(q, qp, place, n)
                                         : Quadruple{q, local_character(a.xi, q.dim()), qp,
                                                     local_character(a.xip, qp.dim()),
                                                     n.value_or(std::min(q.dim(), qp.dim()))};
    const AdmissibilityReport r = locally_admissible(alpha, place);
    Json out = to_json(r);
    out["n"] = alpha.n;
    out["xi"] = character_json(alpha.xi);
    out["xip"] = character_json(alpha.xip);
    return verdict_reply(out, r.verdict);
}

CommandResponse cmd_weil_check(const Args& a, const CliEnvironment& env) {
    const std::uint64_t seed = a.seed.value_or(env.seed.value_or(kDefaultSeed));
    const weil::FiniteWeilModel model(a.p, a.diag, a.weil_n);
    Json checks = Json::array();
    bool ok = true;
    for (const auto& r : weil::run_weil_checks(model, seed)) {
        checks.push_back(check_json(r.name, r.passed, r.detail));
        ok = ok && r.passed;
    }
    Json diag = Json::array();
    for (long x : model.diag()) diag.push_back(x);
    return verdict_reply(Json{{"p", model.p()}, {"diag", diag}, {"n", model.n()}, {"seed", seed},
                              {"passed", ok}, {"checks", checks}},
                         ok);
}

CommandResponse cmd_unramified(const Args& a) {
    const UnramifiedDatum datum{a.up, a.m, a.mp, Rational::parse(a.d), Rational::parse(a.dp)};
    const RationalFunctionInT f = unramified_pairing(datum);
    Json out{{"p", datum.p},
             {"pairing", f.to_string()},
             {"numerator", f.numerator().to_string()},
             {"denominator", f.denominator().to_string()},
             {"euler_factor", "(1 - " + std::to_string(datum.p) + "^-s)^-1"},
             {"integrand_exponent", integrand_exponents(1).total().to_string()}};
    if (a.s_value) {
        const double t = std::pow(static_cast<double>(datum.p), -*a.s_value);
        out["value_at_s"] = f.evaluate(t);
    }
    return reply(out);
}

CommandResponse cmd_euler(const Args& a) {
    const std::set<std::uint64_t> excluded(a.exclude.begin(), a.exclude.end());
    Json ex = Json::array();
    for (auto p : excluded) ex.push_back(p);
    if (a.residue) {
        const ResidueCheck r = residue_check(excluded);
        return verdict_reply(Json{{"excluded", ex},
                                  {"residue", r.closed_form.to_string()},
                                  {"numeric", r.numeric},
                                  {"s", r.s},
                                  {"agrees", r.agrees}},
                             r.agrees);
    }
    const EulerProductEstimate e = partial_euler(excluded, a.bound, a.s);
    return reply(Json{{"excluded", ex},
                      {"bound", e.bound},
                      {"s", e.s},
                      {"value", e.value},
                      {"factors", e.factors},
                      {"tail_bound", e.tail_bound},
                      {"tail_note", e.tail_note}});
}

CommandResponse cmd_verdict(const Args& a) {
    const GlobalQuadruple alpha = quadruple_from_json(parse_json(read_payload(a.quadruple)));
    const VerdictReport v = verdict(alpha);
    Json out{{"verdict", v.verdict},
             {"pole_at", v.pole_at_rho ? Json(v.rho.to_string()) : Json(nullptr)},
             {"rho", v.rho.to_string()},
             {"admissible", v.admissible},
             {"automorphic", v.automorphic},
             {"failing", places_json(v.failing)},
             {"kappa", v.kappa},
             {"summary", v.summary}};
    return verdict_reply(out, v.verdict == "isomorphic");
}

CommandResponse cmd_selftest(const Args& a, const CliEnvironment& env) {
    const std::uint64_t seed = env.seed.value_or(kDefaultSeed);
    const HilbertFn symbol = env.hilbert ? env.hilbert : HilbertFn(&hilbert);
    Json suites = Json::array();
    suites.push_back(suite_hilbert(symbol));
    suites.push_back(suite_product_formula(symbol, seed));
    suites.push_back(suite_cartan_dieudonne(seed));
    suites.push_back(suite_weil(5, seed));
    if (!a.fast) suites.push_back(suite_weil(7, seed));
    suites.push_back(suite_unramified());
    Json failing = Json::array();
    for (const auto& s : suites) {
        if (!s["passed"].get<bool>()) failing.push_back(s["name"]);
    }
    const bool ok = failing.empty();
    return verdict_reply(Json{{"passed", ok}, {"fast", a.fast}, {"failing", failing}, {"suites", suites}}, ok);
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr) return "input-error";
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return "domain-error";
    if (dynamic_cast<const DegenerateGramError*>(&e) != nullptr) return "degenerate-gram";
    if (dynamic_cast<const PreconditionError*>(&e) != nullptr) return "precondition";
    if (dynamic_cast<const UnsupportedError*>(&e) != nullptr) return "unsupported";
    if (dynamic_cast<const NoAdmissibleDataError*>(&e) != nullptr) return "no-admissible-data";
    if (dynamic_cast<const DivergenceError*>(&e) != nullptr) return "divergence";
    return "error";
}

}  // namespace

CliEnvironment environment_from_process() {
    CliEnvironment env;
    if (const char* s = std::getenv("QUADRILIFT_SEED"); s != nullptr && *s != '\0') {
        const std::string text(s);
        if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 19) {
            throw DomainError("QUADRILIFT_SEED must be a non-negative integer");
        }
        env.seed = std::stoull(text);
    }
    return env;
}

CommandResponse run_command(const std::vector<std::string>& args, const CliEnvironment& env) {
    CLI::App app{"Local invariants, orthogonal characters and theta-lift admissibility checks over Q.", "quadrilift"};
    app.require_subcommand(1);
    Args a;

    auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a place, or at every relevant place");
    hil->add_option("-a", a.a, "first argument (rational)")->required();
    hil->add_option("-b", a.b, "second argument (rational)")->required();
    hil->add_option("--place", a.place, "real or p:<prime>; omit for all places dividing 2ab and Real");
    hil->add_flag("--oracle", a.oracle, "also report the residue-enumeration oracle");

    auto* inv = app.add_subcommand("invariants", "dimension, discriminant and Hasse invariants");
    inv->add_option("--q", a.q, "quadratic space as JSON {\"diag\": [...]}")->required();

    auto* iso = app.add_subcommand("isometric", "local or global isometry test");
    iso->add_option("--q", a.q, "first space (JSON)")->required();
    iso->add_option("--qp", a.qp, "second space (JSON)")->required();
    iso->add_option("--place", a.place, "place; omit to test every relevant place");

    auto* ist = app.add_subcommand("isotropy", "local isotropy, or global anisotropy by Hasse-Minkowski");
    ist->add_option("--q", a.q, "quadratic space (JSON)")->required();
    ist->add_option("--place", a.place, "place; omit for the global test");

    auto* rep = app.add_subcommand("represents", "does q represent beta (a value or a Gram matrix) locally");
    rep->add_option("--q", a.q, "quadratic space (JSON)")->required();
    rep->add_option("--beta", a.beta, "rational, or JSON array of rows")->required();
    rep->add_option("--place", a.place, "place")->required();

    auto* sn = app.add_subcommand("spinor-norm", "reflection factorization and spinor norm of an isometry");
    sn->add_option("--q", a.q, "quadratic space (JSON)")->required();
    sn->add_option("--matrix", a.matrix, "isometry as JSON array of rows")->required();

    auto* ce = app.add_subcommand("character-eval", "evaluate xi_{lambda, eps} on an isometry at a place");
    ce->add_option("--q", a.q, "odd-dimensional quadratic space (JSON)")->required();
    ce->add_option("--matrix", a.matrix, "isometry as JSON array of rows")->required();
    ce->add_option("--lambda", a.lambda, "lambda (rational)")->required();
    ce->add_option("--eps", a.eps, "value at -1")->check(CLI::IsMember({-1, 1}));
    ce->add_option("--place", a.place, "place")->required();

    auto* adm = app.add_subcommand("admissible", "CC and FC conditions for (q, xi, q', xi')");
    adm->add_option("--q", a.q, "first space (JSON)")->required();
    adm->add_option("--qp", a.qp, "second space (JSON)")->required();
    adm->add_option("--n", a.n, "rank of the Gram matrices (default from the dimensions)");
    adm->add_option("--xi", a.xi, "character of O(q) as JSON; constructed if omitted");
    adm->add_option("--xip", a.xip, "character of O(q') as JSON; constructed if omitted");
    auto* place_opt = adm->add_option("--place", a.place, "place for the local test");
    adm->add_flag("--global", a.global, "test every place of the bad set and the product conditions")
        ->excludes(place_opt);

    auto* wc = app.add_subcommand("weil-check", "finite-field Weil representation checks");
    wc->add_option("--p", a.p, "odd prime <= 7")->required();
    wc->add_option("--diag", a.diag, "diagonal entries mod p, comma separated")->delimiter(',')->required();
    wc->add_option("--n", a.weil_n, "number of copies, 1 or 2");
    wc->add_option("--seed", a.seed, "random seed (default QUADRILIFT_SEED)");

    auto* uf = app.add_subcommand("unramified-factor", "local pairing at an unramified prime");
    uf->add_option("--p", a.up, "prime")->required();
    uf->add_option("--m", a.m, "dimension of q (1 or 3)");
    uf->add_option("--mp", a.mp, "dimension of q' (1 or 3)");
    uf->add_option("--d", a.d, "discriminant of q (unit at p)");
    uf->add_option("--dp", a.dp, "discriminant of q' (unit at p)");
    uf->add_option("--s", a.s_value, "also evaluate at this real s");

    auto* eu = app.add_subcommand("euler", "partial Euler product of zeta outside S, or its residue at 1");
    eu->add_option("--exclude", a.exclude, "excluded primes, comma separated")->delimiter(',');
    eu->add_option("--bound", a.bound, "largest prime used");
    eu->add_option("--s", a.s, "real s > 1");
    eu->add_flag("--residue", a.residue, "report the residue at s = 1 instead");

    auto* vd = app.add_subcommand("verdict", "admissibility and pole test for a global quadruple");
    vd->add_option("--quadruple", a.quadruple, "JSON file or inline JSON object")->required();

    auto* st = app.add_subcommand("selftest", "run the built-in consistency suites");
    st->add_flag("--fast", a.fast, "skip the p = 7 finite model");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream out;
    std::ostringstream err;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
    }

    try {
        if (*hil) return cmd_hilbert(a);
        if (*inv) return cmd_invariants(a);
        if (*iso) return cmd_isometric(a);
        if (*ist) return cmd_isotropy(a);
        if (*rep) return cmd_represents(a);
        if (*sn) return cmd_spinor_norm(a);
        if (*ce) return cmd_character_eval(a);
        if (*adm) return cmd_admissible(a);
        if (*wc) return cmd_weil_check(a, env);
        if (*uf) return cmd_unramified(a);
        if (*eu) return cmd_euler(a);
        if (*vd) return cmd_verdict(a);
        if (*st) return cmd_selftest(a, env);
    } catch (const Json::exception& e) {
        return {kExitInput, dump(Json{{"error", {{"kind", "input-error"}, {"message", e.what()}}}}), {}};
    } catch (const Error& e) {
        return {kExitInput, dump(Json{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}}), {}};
    }
    return {kExitUsage, {}, "no subcommand\n"};
}

}  // namespace quadrilift
