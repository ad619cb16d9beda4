#include "quadrilift/admissibility.hpp"

#include <algorithm>
#include <set>

#include "quadrilift/error.hpp"
#include "quadrilift/number_theory.hpp"

namespace quadrilift {

namespace {

Rational disc_value(const QuadraticSpace& q) { return discriminant(q).as_rational(); }

int minus_one_power(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

std::string class_label(const QuadraticSpace& beta) {
    return beta.dim() == 1 ? beta[0].to_string() : beta.to_string();
}

void require_odd(const QuadraticSpace& q) {
    if (q.dim() % 2 == 0) throw UnsupportedError("characters are defined for odd-dimensional spaces only");
}

/// Data for m = n + 2 over m' = n.
CharacterData construct_codim_two(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place) {
    CharacterData out;
    out.lambda = Rational(squarefree_part(-disc_value(q) * disc_value(qp)));
    out.lambda_prime = out.lambda;
    const auto w = representation_complement(q, qp.gram_matrix(), place);
    if (!w) throw NoAdmissibleDataError(q.to_string() + " does not contain " + qp.to_string() + " at " + place.to_string());
    out.eps = hilbert(disc_value(q) * (*w)[0], out.lambda, place);
    const Rational sign = minus_one_power(qp.dim());
    out.eps_prime = chi_V(q, sign, place) * out.eps * chi_V(qp, sign, place);
    out.lambda_is_local_square = is_local_square(out.lambda, place);
    return out;
}

CharacterData construct_equal(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place,
                              std::size_t n) {
    const Rational sign = minus_one_power(n);
    for (const auto& beta : gram_classes(n, place)) {
        const auto w = representation_complement(q, beta.gram_matrix(), place);
        const auto wp = representation_complement(qp, beta.gram_matrix(), place);
        if (!w || !wp) continue;
        CharacterData d;
        d.lambda = Rational(squarefree_part(-disc_value(q) * disc_value(beta)));
        d.lambda_prime = Rational(squarefree_part(-disc_value(qp) * disc_value(beta)));
        if (is_local_square(d.lambda, place) || is_local_square(d.lambda_prime, place)) continue;
        d.eps = hilbert(disc_value(q) * (*w)[0], d.lambda, place);
        d.eps_prime = hilbert(disc_value(qp) * (*wp)[0], d.lambda_prime, place);
        if (chi_V(q, sign, place) * d.eps != chi_V(qp, sign, place) * d.eps_prime) continue;
        return d;
    }
    throw NoAdmissibleDataError("no admissible characters for " + q.to_string() + " and " + qp.to_string() + " at " +
                                place.to_string());
}

}  // namespace

void validate(const Quadruple& alpha) {
    if (alpha.n == 0) throw PreconditionError("symplectic rank n must be >= 1");
    if (alpha.q.dim() % 2 == 0 || alpha.qp.dim() % 2 == 0) {
        throw PreconditionError("quadruples need odd-dimensional spaces");
    }
    if (alpha.xi.dim != alpha.q.dim() || alpha.xip.dim != alpha.qp.dim()) {
        throw PreconditionError("character dimension does not match its space");
    }
    for (const auto* chi : {&alpha.xi, &alpha.xip}) {
        if (chi->lambda.is_zero()) throw DomainError("lambda must be nonzero");
        if (chi->eps != 1 && chi->eps != -1) throw DomainError("eps must be +1 or -1");
    }
}

bool cc_holds(const Quadruple& alpha, const Place& place) {
    validate(alpha);
    const Rational a = minus_one_power(alpha.n);
    const int lhs = chi_V(alpha.q, a, place) * xi_eval(alpha.xi, OrthogonalElement::minus_identity(alpha.q), place);
    const int rhs =
        chi_V(alpha.qp, a, place) * xi_eval(alpha.xip, OrthogonalElement::minus_identity(alpha.qp), place);
    return lhs == rhs;
}

std::vector<QuadraticSpace> gram_classes(std::size_t n, const Place& place) { return local_form_classes(n, place); }

bool fourier_predicate(const QuadraticSpace& q, const QuadCharacter& xi, const QuadraticSpace& beta,
                       const Place& place) {
    if (beta.dim() > q.dim()) return false;
    const auto w = representation_complement(q, beta.gram_matrix(), place);
    if (!w) return false;
    std::vector<Rational> model = beta.diag();
    model.insert(model.end(), w->begin(), w->end());
    // q and beta + w are isometric at the place, and xi transports along any
    // local isometry, so the check runs in the diagonal model.
    const QuadraticSpace s(model);
    std::vector<Vector> frame;
    for (std::size_t i = 0; i < beta.dim(); ++i) frame.push_back(unit_vector(s.dim(), i));
    return xi_trivial_on_stabilizer(s, xi, frame, place);
}

std::vector<std::string> fourier_support(const QuadraticSpace& q, const QuadCharacter& xi, std::size_t n,
                                         const Place& place) {
    std::vector<std::string> out;
    for (const auto& beta : gram_classes(n, place)) {
        if (fourier_predicate(q, xi, beta, place)) out.push_back(class_label(beta));
    }
    return out;
}

bool fc_holds(const Quadruple& alpha, const Place& place) {
    validate(alpha);
    return fourier_support(alpha.q, alpha.xi, alpha.n, place) == fourier_support(alpha.qp, alpha.xip, alpha.n, place);
}

AdmissibilityReport locally_admissible(const Quadruple& alpha, const Place& place) {
    AdmissibilityReport r;
    r.place = place;
    r.cc = cc_holds(alpha, place);
    r.represented_classes = fourier_support(alpha.q, alpha.xi, alpha.n, place);
    r.represented_classes_prime = fourier_support(alpha.qp, alpha.xip, alpha.n, place);
    r.fc = r.represented_classes == r.represented_classes_prime;
    r.verdict = r.cc && r.fc;
    return r;
}

CharacterData construct_characters(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place,
                                   std::optional<std::size_t> n) {
    require_odd(q);
    require_odd(qp);
    const std::size_t m = q.dim();
    const std::size_t mp = qp.dim();
    if (m == mp + 2 && (!n || *n == mp)) return construct_codim_two(q, qp, place);
    if (mp == m + 2 && (!n || *n == m)) {
        CharacterData d = construct_codim_two(qp, q, place);
        std::swap(d.lambda, d.lambda_prime);
        std::swap(d.eps, d.eps_prime);
        return d;
    }
    if (m == mp) {
        const std::size_t rank = n.value_or(m >= 3 ? m - 2 : m);
        if (rank + 2 == m) return construct_equal(q, qp, place, rank);
        if (rank == m) {
            if (!is_isometric_local(q, qp, place)) {
                throw NoAdmissibleDataError(q.to_string() + " and " + qp.to_string() + " are not isometric at " +
                                            place.to_string());
            }
            return {};
        }
    }
    throw UnsupportedError("no character construction for dimensions (" + std::to_string(m) + ", " +
                           std::to_string(mp) + ")" + (n ? " with n = " + std::to_string(*n) : std::string()));
}

Quadruple constructed_quadruple(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place,
                                std::optional<std::size_t> n) {
    const auto d = construct_characters(q, qp, place, n);
    const std::size_t rank = n.value_or(q.dim() == qp.dim() ? (q.dim() >= 3 ? q.dim() - 2 : q.dim())
                                                            : std::min(q.dim(), qp.dim()));
    return {q, {d.lambda, d.eps, q.dim()}, qp, {d.lambda_prime, d.eps_prime, qp.dim()}, rank};
}

DimensionCheck dimension_compatible(std::size_t m, std::size_t n, bool nontrivial_character) {
    DimensionCheck out;
    out.compatible = !nontrivial_character || m <= n + 2;
    out.in_sharpened_set = m == n || m == n + 2;
    return out;
}

Quadruple GlobalQuadruple::at(const Place& place) const { return {q, xi.at(place), qp, xip.at(place), n}; }

std::vector<Place> bad_set(const GlobalQuadruple& alpha) {
    std::vector<Rational> values = alpha.q.diag();
    values.insert(values.end(), alpha.qp.diag().begin(), alpha.qp.diag().end());
    values.push_back(alpha.xi.lambda.as_rational());
    values.push_back(alpha.xip.lambda.as_rational());
    std::set<Place> places;
    for (const auto& p : bad_places(values)) places.insert(p);
    for (const auto* chi : {&alpha.xi, &alpha.xip}) {
        for (const auto& [place, sign] : chi->eps) places.insert(place);
    }
    return {places.begin(), places.end()};
}

GlobalAdmissibility globally_admissible(const GlobalQuadruple& alpha) {
    GlobalAdmissibility out;
    const auto places = bad_set(alpha);
    int prod = 1;
    int prod_prime = 1;
    for (const auto& place : places) {
        prod *= alpha.xi.eps_at(place);
        prod_prime *= alpha.xip.eps_at(place);
    }
    out.automorphic = prod == 1 && prod_prime == 1;
    for (const auto& place : places) {
        out.reports.push_back(locally_admissible(alpha.at(place), place));
        if (!out.reports.back().verdict) out.failing.push_back(place);
    }
    out.admissible = out.automorphic && out.failing.empty();
    return out;
}

GlobalQuadruple construct_global(const QuadraticSpace& q, const QuadraticSpace& qp, std::size_t n) {
    const std::size_t m = q.dim();
    const std::size_t mp = qp.dim();
    const bool codim_two = (m == mp + 2 && n == mp) || (mp == m + 2 && n == m);
    const bool equal = m == mp && n == m;
    if (!codim_two && !equal) {
        throw UnsupportedError("global construction needs dimensions (n + 2, n), (n, n + 2) or (n, n)");
    }
    GlobalQuadruple alpha{q, {}, qp, {}, n};
    alpha.xi.dim = m;
    alpha.xip.dim = mp;
    const SquareClass lambda(codim_two ? -disc_value(q) * disc_value(qp) : Rational(1));
    alpha.xi.lambda = lambda;
    alpha.xip.lambda = lambda;
    for (const auto& place : bad_set(alpha)) {
        const auto d = construct_characters(q, qp, place, n);
        alpha.xi.eps[place] = d.eps;
        alpha.xip.eps[place] = d.eps_prime;
    }
    return alpha;
}

}  // namespace quadrilift
