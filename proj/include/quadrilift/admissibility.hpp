#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadrilift/orthogonal.hpp"

namespace quadrilift {

/// Local data ((q, V), xi, (q', V'), xi') with symplectic rank n.
struct Quadruple {
    QuadraticSpace q;
    QuadCharacter xi;
    QuadraticSpace qp;
    QuadCharacter xip;
    std::size_t n = 1;
};

/// Throws PreconditionError unless both dimensions are odd, the characters
/// match them, and n >= 1.
void validate(const Quadruple& alpha);

struct AdmissibilityReport {
    Place place = Place::real();
    bool cc = false;
    bool fc = false;
    /// Local classes of n-forms beta where the Fourier coefficient predicate holds, for each side.
    std::vector<std::string> represented_classes;
    std::vector<std::string> represented_classes_prime;
    bool verdict = false;
};

/// chi_V((-1)^n) xi(-I) = chi_V'((-1)^n) xi'(-I).
bool cc_holds(const Quadruple& alpha, const Place& place);

/// The n-forms beta, one per local isometry class, tested by the FC condition.
std::vector<QuadraticSpace> gram_classes(std::size_t n, const Place& place);

/// q represents beta and xi is trivial on the stabilizer of a realizing frame.
bool fourier_predicate(const QuadraticSpace& q, const QuadCharacter& xi, const QuadraticSpace& beta,
                       const Place& place);

/// Labels of the classes among gram_classes(n, place) where the predicate holds.
std::vector<std::string> fourier_support(const QuadraticSpace& q, const QuadCharacter& xi, std::size_t n,
                                         const Place& place);

bool fc_holds(const Quadruple& alpha, const Place& place);

AdmissibilityReport locally_admissible(const Quadruple& alpha, const Place& place);

struct CharacterData {
    Rational lambda = 1;
    Rational lambda_prime = 1;
    int eps = 1;
    int eps_prime = 1;
    /// lambda is a square at the place: xi is then trivial on SO(V) and the
    /// Fourier coefficient condition cannot hold with the returned data.
    bool lambda_is_local_square = false;
};

/// Character data making (q, q') admissible at the place, for the dimension
/// patterns (n + 2, n), (n, n + 2), (n + 2, n + 2) and (n, n). When the two
/// dimensions agree, n defaults to dim - 2 for dim >= 3 and to dim otherwise.
/// Throws UnsupportedError for other patterns and NoAdmissibleDataError when
/// no data exists for the pattern.
CharacterData construct_characters(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place,
                                   std::optional<std::size_t> n = std::nullopt);

/// The quadruple built from constructed data.
Quadruple constructed_quadruple(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place,
                                std::optional<std::size_t> n = std::nullopt);

struct DimensionCheck {
    /// Trivial characters always pass; nontrivial ones need m - n <= 2.
    bool compatible = false;
    /// m lies in the sharpened set {n, n + 2}.
    bool in_sharpened_set = false;
};

DimensionCheck dimension_compatible(std::size_t m, std::size_t n, bool nontrivial_character);

struct GlobalQuadruple {
    QuadraticSpace q;
    GlobalQuadCharacter xi;
    QuadraticSpace qp;
    GlobalQuadCharacter xip;
    std::size_t n = 1;

    Quadruple at(const Place& place) const;
};

/// Real, 2, primes dividing an entry of q or q' or either lambda, and places where
/// a sign is specified. Sorted with Real first.
std::vector<Place> bad_set(const GlobalQuadruple& alpha);

struct GlobalAdmissibility {
    bool admissible = false;
    /// The products of eps and eps' over the bad set are both +1.
    bool automorphic = false;
    std::vector<AdmissibilityReport> reports;
    /// Places whose local verdict is false.
    std::vector<Place> failing;
};

GlobalAdmissibility globally_admissible(const GlobalQuadruple& alpha);

/// Global data for the patterns (n + 2, n), (n, n + 2) and (n, n): lambda is
/// the square-free part of -d(q) d(q') and the signs come from the local
/// construction at each bad place.
GlobalQuadruple construct_global(const QuadraticSpace& q, const QuadraticSpace& qp, std::size_t n);

}  // namespace quadrilift
