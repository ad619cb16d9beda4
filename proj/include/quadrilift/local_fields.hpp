#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadrilift/rational.hpp"

namespace quadrilift {

/// A place of Q: the real place or a finite prime.
///
/// Places order as Real first, then primes ascending. The complex place never
/// occurs over Q (the Hilbert symbol would be identically 1 there).
class Place {
public:
    static Place real() { return Place(0); }
    /// Throws DomainError unless p is prime.
    static Place finite(std::uint64_t p);
    /// "real" or "p:<prime>".
    static Place parse(std::string_view text);

    bool is_real() const { return prime_ == 0; }
    bool is_finite() const { return prime_ != 0; }
    /// The prime of a finite place (0 for the real place).
    std::uint64_t prime() const { return prime_; }
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;

private:
    explicit Place(std::uint64_t p) : prime_(p) {}
    std::uint64_t prime_;
};

/// Element of Q^x / (Q^x)^2, stored as its square-free integer representative.
class SquareClass {
public:
    SquareClass() = default;
    explicit SquareClass(const Rational& x);

    const Integer& representative() const { return rep_; }
    Rational as_rational() const { return Rational(rep_); }
    std::string to_string() const { return rep_.get_str(); }

    SquareClass operator*(const SquareClass& other) const;

    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }

private:
    Integer rep_ = 1;
};

/// Label of a local square class in Q_v^x / (Q_v^x)^2.
///
/// Real: sign. Odd p: (valuation mod 2, residue character of the unit part).
/// p = 2: (valuation mod 2, unit part mod 8). Two nonzero rationals share a
/// label iff their ratio is a square in the completion.
struct LocalClass {
    Place place = Place::real();
    int sign = 1;         ///< real place only
    int parity = 0;       ///< valuation mod 2 (finite places)
    int unit = 1;         ///< odd p: +-1 residue character; p = 2: 1, 3, 5 or 7

    /// Canonical rational representative of the class.
    Rational representative() const;
    std::string to_string() const;

    friend bool operator==(const LocalClass&, const LocalClass&) = default;
    friend auto operator<=>(const LocalClass&, const LocalClass&) = default;
};

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& x, std::uint64_t p);

/// Hilbert symbol (a, b) at a place, from the classical residue formulas.
int hilbert(const Rational& a, const Rational& b, const Place& place);

/// Brute-force Hilbert symbol: search for a primitive zero of
/// z^2 - a x^2 - b y^2 modulo p^depth (finite places) or sign analysis
/// (real place). The default depth is 2 (|v(a)| + |v(b)|) + 5.
int hilbert_oracle(const Rational& a, const Rational& b, const Place& place, int depth = -1);

/// Places where (a, b) = -1, examined over Real and every prime dividing 2ab.
/// The list has even length by the product formula.
std::vector<std::pair<Place, int>> hilbert_product(const Rational& a, const Rational& b);

/// Local square class of a nonzero rational.
LocalClass local_square_class(const Rational& x, const Place& place);

/// True iff x is a square in the completion at the place.
bool is_local_square(const Rational& x, const Place& place);

/// Representatives of every local square class at the place:
/// 2 at Real, 4 at odd p, 8 at p = 2.
std::vector<Rational> local_class_representatives(const Place& place);

/// Smallest quadratic non-residue modulo an odd prime.
std::uint64_t least_nonresidue(std::uint64_t p);

/// Real place followed by 2 and every prime dividing one of the values.
std::vector<Place> bad_places(const std::vector<Rational>& values);

}  // namespace quadrilift
