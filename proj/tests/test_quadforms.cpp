#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadrilift/error.hpp"
#include "quadrilift/local_oracle.hpp"
#include "quadrilift/quadratic_space.hpp"

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

std::vector<QuadraticSpace> sample_forms(std::mt19937_64& rng, std::size_t dim, int count) {
    static const std::vector<long> pool{1, -1, 2, -2, 3, -3, 5, -5, 6, -7, 10, 14, -15, 21};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<QuadraticSpace> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> d;
        for (std::size_t j = 0; j < dim; ++j) d.emplace_back(pool[pick(rng)]);
        out.emplace_back(d);
    }
    return out;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        }
        if (!determinant(a).is_zero()) return a;
    }
}

}  // namespace

TEST_CASE("matrix helpers") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    CHECK(determinant(a) == Rational(-2));
    CHECK(a * inverse(a) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), DomainError);
    const auto ns = null_space(Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vector{-1, 1, 0});
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("gram examples") {
    const auto q = form({1, 1, 1});
    CHECK(gram(q, {{1, 0, 0}}) == Matrix::from_rows({{1}}));
    CHECK(gram(q, {{1, 1, 0}, {1, -1, 0}}) == Matrix::from_rows({{2, 0}, {0, 2}}));
    CHECK(gram(form({2, 3}), {{0, 0}}) == Matrix::from_rows({{0}}));
    CHECK_THROWS_AS(gram(q, {{1, 0}}), PreconditionError);
}

TEST_CASE("diagonalize examples") {
    const auto id = diagonalize(Matrix::identity(2));
    CHECK(id.diag == std::vector<Rational>{1, 1});
    CHECK(id.basis == Matrix::identity(2));
    const Matrix h = Matrix::from_rows({{0, 1}, {1, 0}});
    const auto dh = diagonalize(h);
    REQUIRE(dh.rank == 2);
    CHECK(dh.basis * h * dh.basis.transpose() == Matrix::diagonal(dh.diag));
    for (const auto& v : places()) CHECK(is_isometric_local(QuadraticSpace(dh.diag), form({1, -1}), v));
    CHECK(diagonalize(Matrix(3, 3)).rank == 0);
    const Matrix deg = Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
    const auto dd = diagonalize(deg);
    CHECK(dd.rank == 1);
    Matrix expect(3, 3);
    expect(0, 0) = dd.diag[0];
    CHECK(dd.basis * deg * dd.basis.transpose() == expect);
}

TEST_CASE("discriminant and hasse examples") {
    CHECK(discriminant(form({1, 1, 1})).representative() == 1);
    CHECK(discriminant(form({2, 3})).representative() == 6);
    CHECK(discriminant(QuadraticSpace({8, Rational(1, 2)})).representative() == 1);
    for (const auto& v : places()) CHECK(hasse(form({1, 1, 1}), v) == 1);
    CHECK(hasse(form({-1, -1}), Place::real()) == -1);
    CHECK(hasse(form({2, 5}), Place::finite(5)) == -1);
}

TEST_CASE("isometry examples") {
    CHECK(is_isometric_local(form({1, 1}), form({2, 2}), Place::finite(5)));
    CHECK_FALSE(is_isometric_local(form({1}), form({1, 1}), Place::finite(3)));
    CHECK(is_isometric_local(form({3, 5, 7}), form({3, 5, 7}), Place::finite(7)));
    // same dim, disc and Hasse at the real place but different signatures
    CHECK_FALSE(is_isometric_local(form({1, 1, 1, 1}), form({-1, -1, -1, -1}), Place::real()));
}

TEST_CASE("isotropy examples") {
    CHECK(is_isotropic_local(form({1, 1, 1, 1, 1}), Place::finite(7)));
    CHECK_FALSE(is_isotropic_local(form({1, 1}), Place::real()));
    for (const auto& v : places()) CHECK(is_isotropic_local(form({1, -1}), v));
    CHECK_FALSE(is_isotropic_local(form({1, 1, 1}), Place::finite(2)));
    CHECK_FALSE(is_isotropic_local(form({1, 1, 1, 1}), Place::finite(2)));
}

TEST_CASE("isotropy agrees with the enumeration oracle") {
    std::mt19937_64 rng(11);
    for (std::size_t dim = 1; dim <= 5; ++dim) {
        for (const auto& q : sample_forms(rng, dim, dim <= 4 ? 40 : 10)) {
            for (const auto& v : places()) {
                INFO(q.to_string(), " at ", v.to_string());
                CHECK(is_isotropic_local(q, v) == oracle_has_zero(q.diag(), v));
            }
        }
    }
}

TEST_CASE("value representation agrees with the enumeration oracle") {
    std::mt19937_64 rng(12);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (const auto& q : sample_forms(rng, dim, 12)) {
            for (const auto& v : places()) {
                if (v == Place::finite(2)) continue;
                for (const auto& beta : local_class_representatives(v)) {
                    INFO(q.to_string(), " beta ", beta.to_string(), " at ", v.to_string());
                    CHECK(represents_value_local(q, beta, v) == oracle_represents(q.diag(), beta, v));
                }
            }
        }
    }
}

TEST_CASE("represents examples") {
    for (const auto& v : places()) CHECK(represents_value_local(form({1}), 4, v));
    CHECK(represents_value_local(form({1, 1, 1}), 2, Place::finite(5)));
    CHECK_FALSE(represents_value_local(form({1}), -1, Place::real()));
    CHECK_THROWS_AS(represents_value_local(form({1}), 0, Place::real()), DomainError);
    const auto q = form({1, 1, 1});
    CHECK(represents_gram_local(q, Matrix::from_rows({{2}}), Place::finite(5)));
    const Matrix basis = Matrix::from_rows({{1, 1, 0}, {1, -1, 1}, {0, 2, 3}});
    for (const auto& v : places()) {
        CHECK(represents_gram_local(q, basis * q.gram_matrix() * basis.transpose(), v));
    }
    CHECK_THROWS_AS(represents_gram_local(form({1}), Matrix::identity(2), Place::real()), PreconditionError);
    CHECK_THROWS_AS(represents_gram_local(q, Matrix::from_rows({{1, 1}, {1, 1}}), Place::finite(3)),
                    DegenerateGramError);
    CHECK_THROWS_AS(represents_gram_local(q, Matrix(1, 1), Place::finite(3)), DegenerateGramError);
}

TEST_CASE("gram representation of one vector matches value representation") {
    std::mt19937_64 rng(13);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (const auto& q : sample_forms(rng, dim, 10)) {
            for (const auto& v : places()) {
                for (const auto& beta : local_class_representatives(v)) {
                    const auto comp = representation_complement(q, Matrix::from_rows({{beta}}), v);
                    CHECK(comp.has_value() == represents_value_local(q, beta, v));
                    if (comp && !comp->empty()) {
                        std::vector<Rational> full{beta};
                        full.insert(full.end(), comp->begin(), comp->end());
                        CHECK(is_isometric_local(q, QuadraticSpace(full), v));
                    }
                }
            }
        }
    }
}

TEST_CASE("binary gram representation against explicit embeddings") {
    // <1,1,1> contains the Gram matrix of (e1 + e2, e3) exactly.
    const auto q = form({1, 1, 1});
    const Matrix beta = gram(q, {{1, 1, 0}, {0, 0, 1}});
    for (const auto& v : places()) CHECK(represents_gram_local(q, beta, v));
    // diag(-1,-1) is not represented by a positive definite form over R.
    CHECK_FALSE(represents_gram_local(q, Matrix::diagonal({-1, -1}), Place::real()));
    // <1,1> is anisotropic at 3, so it does not contain a hyperbolic plane there.
    CHECK_FALSE(represents_gram_local(form({1, 1, 1, 1}), Matrix::from_rows({{0, 1}, {1, 0}}), Place::finite(2)));
    CHECK(represents_gram_local(form({1, 1, 1, 1}), Matrix::from_rows({{0, 1}, {1, 0}}), Place::finite(3)));
}

TEST_CASE("congruence invariance of invariants") {
    std::mt19937_64 rng(14);
    for (std::size_t dim = 2; dim <= 5; ++dim) {
        for (const auto& q : sample_forms(rng, dim, 5)) {
            const auto inv = invariants(q);
            for (int trial = 0; trial < 20; ++trial) {
                const Matrix a = random_invertible(rng, dim);
                const auto d = diagonalize(a * q.gram_matrix() * a.transpose());
                REQUIRE(d.rank == dim);
                const QuadraticSpace r(d.diag);
                CHECK(discriminant(r) == inv.disc);
                for (const auto& [place, h] : inv.hasse) {
                    CHECK(hasse(r, place) == h);
                    CHECK(is_isometric_local(q, r, place));
                }
            }
        }
    }
}

TEST_CASE("hasse concatenation law") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 60; ++i) {
        const auto a = sample_forms(rng, 1 + i % 3, 1)[0];
        const auto b = sample_forms(rng, 1 + (i / 3) % 3, 1)[0];
        for (const auto& v : places()) {
            CHECK(hasse(a + b, v) == hasse(a, v) * hasse(b, v) *
                                         hilbert(discriminant(a).as_rational(), discriminant(b).as_rational(), v));
        }
    }
}

TEST_CASE("isometry is an equivalence relation on samples") {
    std::mt19937_64 rng(16);
    const auto forms = sample_forms(rng, 3, 25);
    for (const auto& v : places()) {
        for (const auto& a : forms) {
            CHECK(is_isometric_local(a, a, v));
            for (const auto& b : forms) {
                CHECK(is_isometric_local(a, b, v) == is_isometric_local(b, a, v));
                if (!is_isometric_local(a, b, v)) continue;
                for (const auto& c : forms) {
                    if (is_isometric_local(b, c, v)) CHECK(is_isometric_local(a, c, v));
                }
            }
        }
    }
}

TEST_CASE("global anisotropy") {
    CHECK(is_anisotropic_global(form({1, 1, 1})));
    CHECK_FALSE(is_anisotropic_global(form({1, -1})));
    const auto r = anisotropy_report(form({1, 1, 1, 1, 1}));
    CHECK(r.anisotropic);
    CHECK(r.high_dimension);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->is_real());
    CHECK_FALSE(is_anisotropic_global(form({1, 1, 1, 1, -1})));
    CHECK(is_anisotropic_global(form({1, 1, -7})));
    CHECK_FALSE(is_anisotropic_global(form({1, 1, -2})));
    CHECK(is_anisotropic_global(form({1, 1, -3})));
}

TEST_CASE("local form classes") {
    CHECK(local_form_classes(1, Place::finite(5)).size() == 4);
    CHECK(local_form_classes(1, Place::finite(2)).size() == 8);
    CHECK(local_form_classes(2, Place::finite(5)).size() == 7);
    CHECK(local_form_classes(2, Place::finite(2)).size() == 15);
    CHECK(local_form_classes(3, Place::finite(3)).size() == 8);
    CHECK(local_form_classes(3, Place::real()).size() == 4);
}
