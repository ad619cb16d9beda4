#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadrilift/admissibility.hpp"
#include "quadrilift/error.hpp"
#include "quadrilift/local_oracle.hpp"

using namespace quadrilift;

namespace {

QuadraticSpace form(std::initializer_list<long> entries) {
    std::vector<Rational> d;
    for (long e : entries) d.emplace_back(e);
    return QuadraticSpace(d);
}

const std::vector<Place>& places() {
    static const std::vector<Place> out{Place::real(), Place::finite(2), Place::finite(3), Place::finite(5),
                                        Place::finite(7)};
    return out;
}

Quadruple swapped(const Quadruple& a) { return {a.qp, a.xip, a.q, a.xi, a.n}; }

}  // namespace

TEST_CASE("boxed data for <1,1,1> and <1>") {
    const auto q = form({1, 1, 1});
    const auto qp = form({1});
    const auto d5 = construct_characters(q, qp, Place::finite(5));
    CHECK(d5.lambda == Rational(-1));
    CHECK(d5.eps == 1);
    CHECK(d5.eps_prime == 1);
    CHECK(d5.lambda_is_local_square);
    const auto dr = construct_characters(q, qp, Place::real());
    CHECK(dr.eps == 1);
    CHECK(dr.eps_prime == -1);
    CHECK_FALSE(dr.lambda_is_local_square);
    const auto d2 = construct_characters(q, qp, Place::finite(2));
    CHECK(d2.eps == 1);
    CHECK(d2.eps_prime == -1);
    for (const auto& v : places()) {
        const auto a = construct_characters(q, qp, v);
        const auto b = construct_characters(q, form({4}), v);
        CHECK(a.lambda == b.lambda);
        CHECK(a.eps == b.eps);
        CHECK(a.eps_prime == b.eps_prime);
    }
}

TEST_CASE("boxed data passes at the bad places") {
    const auto q = form({1, 1, 1});
    const auto qp = form({1});
    for (const auto& v : {Place::real(), Place::finite(2)}) {
        const auto alpha = constructed_quadruple(q, qp, v);
        const auto r = locally_admissible(alpha, v);
        CHECK(r.cc);
        CHECK(r.fc);
        CHECK(r.verdict);
        CHECK(r.represented_classes == std::vector<std::string>{"1"});

        auto flipped = alpha;
        flipped.xi.eps = -flipped.xi.eps;
        const auto rf = locally_admissible(flipped, v);
        CHECK_FALSE(rf.cc);
        CHECK_FALSE(rf.verdict);

        auto flipped_prime = alpha;
        flipped_prime.xip.eps = -flipped_prime.xip.eps;
        CHECK_FALSE(cc_holds(flipped_prime, v));
    }
    auto other = constructed_quadruple(q, qp, Place::finite(2));
    other.qp = form({5});
    const auto r5 = locally_admissible(other, Place::finite(2));
    CHECK(r5.cc);
    CHECK_FALSE(r5.fc);
    CHECK_FALSE(r5.verdict);
}

TEST_CASE("a square lambda defeats the Fourier condition") {
    // At 5 the constructed lambda = -1 is a square, xi is trivial on SO(V) and
    // <1,1,1> has nonvanishing coefficients at every class while <1> has one.
    const auto alpha = constructed_quadruple(form({1, 1, 1}), form({1}), Place::finite(5));
    const auto r = locally_admissible(alpha, Place::finite(5));
    CHECK(r.cc);
    CHECK_FALSE(r.fc);
    CHECK(r.represented_classes.size() == 4);
    CHECK(r.represented_classes_prime == std::vector<std::string>{"1"});
}

TEST_CASE("fc examples") {
    const auto q = form({1, 1, 1});
    const Quadruple same{q, {-1, 1, 3}, q, {-1, 1, 3}, 1};
    for (const auto& v : places()) {
        CHECK(cc_holds(same, v));
        CHECK(fc_holds(same, v));
    }
    auto alpha = constructed_quadruple(q, form({1}), Place::finite(5));
    alpha.qp = form({2});
    CHECK_FALSE(fc_holds(alpha, Place::finite(5)));
    // <2> at 5 supports only the class of 2
    CHECK(fourier_support(form({2}), {1, 1, 1}, 1, Place::finite(5)) == std::vector<std::string>{"2"});
}

TEST_CASE("construct and verify closure") {
    const std::vector<QuadraticSpace> ternary{form({1, 1, 1}), form({1, 1, -1}), form({1, 2, 3}), form({1, -3, 5}),
                                              form({-1, -1, 3}), form({2, 3, 7})};
    const std::vector<QuadraticSpace> unary{form({1}), form({-1}), form({2}), form({3}), form({-5}), form({7})};
    int checked = 0;
    int square_lambda = 0;
    for (const auto& v : places()) {
        for (const auto& q : ternary) {
            for (const auto& qp : unary) {
                CharacterData d;
                try {
                    d = construct_characters(q, qp, v);
                } catch (const NoAdmissibleDataError&) {
                    continue;
                }
                const auto alpha = constructed_quadruple(q, qp, v);
                const auto r = locally_admissible(alpha, v);
                CHECK(r.cc);
                CHECK(r.fc == !d.lambda_is_local_square);
                const auto mirrored = locally_admissible(constructed_quadruple(qp, q, v), v);
                CHECK(mirrored.verdict == r.verdict);
                ++checked;
                square_lambda += d.lambda_is_local_square ? 1 : 0;
            }
            for (const auto& qp : ternary) {
                try {
                    const auto alpha = constructed_quadruple(q, qp, v);
                    CHECK(locally_admissible(alpha, v).verdict);
                    ++checked;
                } catch (const NoAdmissibleDataError&) {
                }
            }
        }
        for (const auto& q : unary) {
            for (const auto& qp : unary) {
                if (!is_isometric_local(q, qp, v)) {
                    CHECK_THROWS_AS(construct_characters(q, qp, v), NoAdmissibleDataError);
                    continue;
                }
                CHECK(locally_admissible(constructed_quadruple(q, qp, v), v).verdict);
                ++checked;
            }
        }
    }
    CHECK(checked > 200);
    CHECK(square_lambda > 0);
}

TEST_CASE("cc is symmetric and fc is an equivalence") {
    const std::vector<QuadraticSpace> spaces{form({1, 1, 1}), form({1, 2, 3}), form({-1, 2, 5}), form({1, 1, 2})};
    const QuadCharacter chi{-1, 1, 3};
    for (const auto& v : places()) {
        std::vector<std::vector<std::string>> supports;
        for (const auto& s : spaces) supports.push_back(fourier_support(s, chi, 1, v));
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            for (std::size_t j = 0; j < spaces.size(); ++j) {
                for (int e : {1, -1}) {
                    const Quadruple a{spaces[i], chi, spaces[j], {3, e, 3}, 1};
                    CHECK(cc_holds(a, v) == cc_holds(swapped(a), v));
                }
                const Quadruple a{spaces[i], chi, spaces[j], chi, 1};
                CHECK(fc_holds(a, v) == (supports[i] == supports[j]));
                CHECK(fc_holds(a, v) == fc_holds(swapped(a), v));
            }
        }
    }
}

TEST_CASE("represented classes agree with the oracle") {
    const std::vector<QuadraticSpace> spaces{form({1}), form({-3}), form({10}), form({1, 1, 1}), form({1, 2, -5}),
                                             form({3, 7, 6}), form({-1, -1, -1})};
    for (const auto& v : places()) {
        for (const auto& q : spaces) {
            for (const auto& beta : local_class_representatives(v)) {
                INFO(q.to_string(), " ", beta.to_string(), " ", v.to_string());
                CHECK(represents_value_local(q, beta, v) == oracle_represents(q.diag(), beta, v));
            }
        }
    }
}

TEST_CASE("n = 2 with ternary spaces") {
    const auto q = form({1, 1, 1});
    const Quadruple same{q, {-1, 1, 3}, q, {-1, 1, 3}, 2};
    for (const auto& v : places()) CHECK(locally_admissible(same, v).verdict);
    const auto support = fourier_support(q, {-1, 1, 3}, 2, Place::real());
    CHECK(support == std::vector<std::string>{"<1,1>"});
}

TEST_CASE("unsupported patterns") {
    CHECK_THROWS_AS(construct_characters(form({1, 1, 1, 1, 1}), form({1}), Place::real()), UnsupportedError);
    CHECK_THROWS_AS(construct_characters(form({1, 1}), form({1}), Place::real()), UnsupportedError);
    const Quadruple bad{form({1, 1}), {1, 1, 2}, form({1}), {1, 1, 1}, 1};
    CHECK_THROWS_AS(cc_holds(bad, Place::real()), PreconditionError);
}

TEST_CASE("dimension restrictions") {
    CHECK(dimension_compatible(3, 1, true).compatible);
    CHECK(dimension_compatible(3, 1, true).in_sharpened_set);
    CHECK_FALSE(dimension_compatible(5, 1, true).compatible);
    CHECK(dimension_compatible(5, 1, false).compatible);
    CHECK(dimension_compatible(2, 2, true).compatible);
    CHECK(dimension_compatible(2, 2, true).in_sharpened_set);
    CHECK_FALSE(dimension_compatible(4, 1, true).in_sharpened_set);
}

TEST_CASE("global admissibility") {
    const auto base = construct_global(form({1, 1, 1}), form({1}), 1);
    CHECK(base.xi.lambda.representative() == -1);
    const auto places_s = bad_set(base);
    CHECK(places_s == std::vector<Place>{Place::real(), Place::finite(2)});
    CHECK(base.xip.eps_at(Place::real()) == -1);
    CHECK(base.xip.eps_at(Place::finite(2)) == -1);
    CHECK(base.xi.eps_at(Place::finite(2)) == 1);
    const auto g = globally_admissible(base);
    CHECK(g.admissible);
    CHECK(g.automorphic);
    CHECK(g.reports.size() == 2);

    auto broken = base;
    broken.xi.eps[Place::real()] = -1;
    broken.xi.eps[Place::finite(2)] = -1;
    const auto gb = globally_admissible(broken);
    CHECK_FALSE(gb.admissible);
    CHECK(gb.automorphic);
    CHECK(gb.failing == std::vector<Place>{Place::real(), Place::finite(2)});
    CHECK_FALSE(gb.reports[0].cc);

    auto lopsided = base;
    lopsided.xip.eps[Place::finite(2)] = 1;
    const auto gl = globally_admissible(lopsided);
    CHECK_FALSE(gl.automorphic);
    CHECK_FALSE(gl.admissible);

    const auto wider = construct_global(form({1, 1, 3}), form({3}), 1);
    const auto sw = bad_set(wider);
    CHECK(sw == std::vector<Place>{Place::real(), Place::finite(2), Place::finite(3)});
    CHECK_THROWS_AS(construct_global(form({1, 1, 1}), form({1, 1, 1}), 1), UnsupportedError);
}
