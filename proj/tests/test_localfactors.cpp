#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "quadrilift/error.hpp"
#include "quadrilift/local_factors.hpp"

using namespace quadrilift;

namespace {

QuadraticSpace form(std::initializer_list<long> entries) {
    std::vector<Rational> d;
    for (long e : entries) d.emplace_back(e);
    return QuadraticSpace(d);
}

Polynomial one_minus_t() { return Polynomial(std::vector<Rational>{1, -1}); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial a(std::vector<Rational>{1, 2, 1});
    const Polynomial b(std::vector<Rational>{1, 1});
    CHECK(a.degree() == 2);
    CHECK(b * b == a);
    const auto qr = divide(a, b);
    CHECK(qr.quotient == b);
    CHECK(qr.remainder.is_zero());
    CHECK(gcd(a, b * Polynomial(3)) == b);
    CHECK(Polynomial(std::vector<Rational>{0, 0}).is_zero());
    CHECK(a.evaluate(Rational(2)) == Rational(9));
    CHECK(a.to_string() == "1 + 2*t + t^2");
    CHECK(one_minus_t().to_string() == "1 - t");
    CHECK_THROWS_AS(divide(a, Polynomial()), DomainError);
}

TEST_CASE("rational functions reduce to a monic denominator") {
    const RationalFunctionInT g = RationalFunctionInT::geometric();
    CHECK(g.denominator().leading() == Rational(1));
    CHECK(g.numerator() == Polynomial(-1));
    CHECK(g.evaluate(Rational(1, 9)) == Rational(9, 8));
    const RationalFunctionInT r(one_minus_t() * Polynomial(std::vector<Rational>{2, 3}), one_minus_t() * one_minus_t());
    CHECK(r.denominator().degree() == 1);
    CHECK(r == RationalFunctionInT(Polynomial(std::vector<Rational>{2, 3}), one_minus_t()));
    CHECK(g * RationalFunctionInT(one_minus_t()) == RationalFunctionInT(Polynomial(1)));
    CHECK(g - g == RationalFunctionInT());
    CHECK((g + g).evaluate(Rational(1, 2)) == Rational(4));
    CHECK_THROWS_AS(g.evaluate(Rational(1)), DomainError);
    CHECK_THROWS_AS(RationalFunctionInT(Polynomial(1), Polynomial()), DomainError);
}

TEST_CASE("unramified data") {
    CHECK_NOTHROW(validate(UnramifiedDatum{5, 3, 1, 1, 1}));
    CHECK_THROWS_AS(validate(UnramifiedDatum{4, 3, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(validate(UnramifiedDatum{5, 2, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(validate(UnramifiedDatum{5, 3, 1, 10, 1}), DomainError);
    const auto d = unramified_datum(form({1, 1, 1}), form({1}), 7);
    CHECK(d.m == 3);
    CHECK(d.mp == 1);
    CHECK_THROWS_AS(unramified_datum(form({1, 1, 7}), form({1}), 7), DomainError);
}

TEST_CASE("unramified W'") {
    const UnramifiedDatum datum{5, 3, 1, 1, 1};
    CHECK(unramified_W_prime(datum, 0) == FormalValue{1, 0, true});
    CHECK(unramified_W_prime(datum, 2) == FormalValue{1, -1, true});
    CHECK(unramified_W_prime(datum, 3).q_exponent == Rational(-3, 2));
    CHECK_FALSE(unramified_W_prime(datum, -1).indicator);
    CHECK_THROWS_AS(unramified_W_prime(UnramifiedDatum{5, 1, 3, 1, 1}, 0), PreconditionError);
}

TEST_CASE("integrand exponents") {
    const auto e = integrand_exponents(1);
    CHECK(e.delta_inverse == SExponent{0, -2});
    CHECK(e.section == SExponent{1, 1});
    CHECK((e.delta_inverse + e.section) == SExponent{1, -1});
    CHECK(e.total() == SExponent{1, 0});
    CHECK(e.total().to_string() == "s");
    CHECK(integrand_exponents(2).section.constant == Rational(3, 2));
}

TEST_CASE("shell sums are geometric") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) {
        const UnramifiedDatum datum{p, 3, 1, 1, 1};
        for (long k = 0; k < 5; ++k) CHECK(shell_term(datum, k).coefficient() == Rational(1));
        for (std::size_t K = 0; K <= 64; ++K) {
            const Polynomial partial = shell_partial_sum(datum, K);
            CHECK(one_minus_t() * partial == Polynomial(1) - Polynomial::monomial(K + 1));
        }
    }
    const UnramifiedDatum datum{3, 3, 1, 1, 1};
    CHECK(RationalFunctionInT(shell_partial_sum(datum, 30)) ==
          RationalFunctionInT(Polynomial(1) - Polynomial::monomial(31), one_minus_t()));
}

TEST_CASE("unramified pairing") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL}) {
        const auto f = unramified_pairing(UnramifiedDatum{p, 3, 1, 1, 1});
        CHECK(f == RationalFunctionInT::geometric());
    }
    const auto f = unramified_pairing(UnramifiedDatum{3, 3, 1, 1, 1});
    CHECK(f.evaluate(Rational(1, 9)) == Rational(9, 8));
    CHECK_THROWS_AS(unramified_pairing(UnramifiedDatum{3, 3, 1, 1, 1}, 2), UnsupportedError);
    CHECK_THROWS_AS(unramified_pairing(UnramifiedDatum{3, 3, 1, 3, 1}), DomainError);
}

TEST_CASE("partial Euler products") {
    const double z2 = std::numbers::pi * std::numbers::pi / 6;
    const auto full = partial_euler({}, 1000000, 2.0);
    CHECK(std::abs(full.value - z2) < 1e-4);
    CHECK(std::abs(full.value - z2) / z2 <= full.tail_bound);
    const auto no2 = partial_euler({2}, 1000000, 2.0);
    CHECK(std::abs(no2.value - 0.75 * z2) < 1e-4);
    CHECK(partial_euler({}, 1, 2.0).value == 1.0);
    CHECK(partial_euler({}, 1, 2.0).factors == 0);
    CHECK_THROWS_AS(partial_euler({}, 100, 1.0), DivergenceError);
    CHECK_THROWS_AS(partial_euler({}, 100, 0.5), DivergenceError);
    CHECK_THROWS_AS(partial_euler({7}, 5, 2.0), PreconditionError);
    CHECK_THROWS_AS(partial_euler({4}, 5, 2.0), DomainError);
}

TEST_CASE("Euler products: monotone in X and complete exactly") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> s_dist(1.05, 4.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double s = s_dist(rng);
        double last = 0;
        for (std::uint64_t x : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
            const double v = partial_euler({2, 3}, x, s).value;
            CHECK(v > last);
            last = v;
        }
        const std::set<std::uint64_t> S{3, 7, 11};
        double completed = partial_euler(S, 5000, s).value;
        for (const auto p : S) completed /= 1.0 - std::pow(static_cast<double>(p), -s);
        const double full = partial_euler({}, 5000, s).value;
        CHECK(std::abs(completed - full) / full < 1e-12);
    }
}

TEST_CASE("zeta and the residue at 1") {
    CHECK(std::abs(zeta_eta(2.0) - std::numbers::pi * std::numbers::pi / 6) < 1e-10);
    CHECK(std::abs(zeta_eta(4.0) - std::pow(std::numbers::pi, 4) / 90) < 1e-10);
    CHECK(std::abs(zeta_eta(0.5) + 1.4603545088095868) < 1e-8);
    CHECK_THROWS_AS(zeta_eta(1.0), DomainError);
    const auto empty = residue_check({});
    CHECK(empty.closed_form == Rational(1));
    CHECK(empty.agrees);
    const auto two_three = residue_check({2, 3});
    CHECK(two_three.closed_form == Rational(1, 3));
    CHECK(two_three.agrees);
    CHECK(std::abs(two_three.numeric - 1.0 / 3) < 5e-3);
}

TEST_CASE("verdicts") {
    const auto base = construct_global(form({1, 1, 1}), form({1}), 1);
    const auto v = verdict(base);
    CHECK(v.verdict == "isomorphic");
    CHECK(v.pole_at_rho);
    CHECK(v.rho == Rational(1));

    auto broken = base;
    broken.xi.eps[Place::real()] = -1;
    broken.xi.eps[Place::finite(2)] = -1;
    const auto vb = verdict(broken);
    CHECK(vb.verdict == "not-admissible");
    CHECK_FALSE(vb.pole_at_rho);
    CHECK_FALSE(vb.failing.empty());

    const auto q = form({1, 1, 1});
    GlobalQuadruple wide{q, {}, q, {}, 2};
    wide.xi.dim = 3;
    wide.xip.dim = 3;
    const auto vw = verdict(wide);
    CHECK(vw.admissible);
    CHECK(vw.verdict == "conjectural");
    CHECK(vw.rho == Rational(3, 2));
}
