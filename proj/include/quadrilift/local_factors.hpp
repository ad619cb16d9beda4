#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "quadrilift/admissibility.hpp"
#include "quadrilift/rational.hpp"

namespace quadrilift {

/// Polynomial in t with rational coefficients; coefficient i multiplies t^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    static Polynomial monomial(std::size_t degree, const Rational& coefficient = 1);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    std::string to_string() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; DomainError for a zero divisor.
PolynomialDivision divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Rational function num/den in t = q^{-s}, reduced with a monic denominator.
class RationalFunctionInT {
public:
    RationalFunctionInT() : RationalFunctionInT(Polynomial(0)) {}
    RationalFunctionInT(Polynomial numerator, Polynomial denominator = Polynomial(1));  // NOLINT

    /// (1 - t)^{-1}.
    static RationalFunctionInT geometric();

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    /// DomainError at a pole.
    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    std::string to_string() const;

    friend RationalFunctionInT operator+(const RationalFunctionInT& a, const RationalFunctionInT& b);
    friend RationalFunctionInT operator-(const RationalFunctionInT& a, const RationalFunctionInT& b);
    friend RationalFunctionInT operator*(const RationalFunctionInT& a, const RationalFunctionInT& b);
    friend RationalFunctionInT operator/(const RationalFunctionInT& a, const RationalFunctionInT& b);
    friend bool operator==(const RationalFunctionInT&, const RationalFunctionInT&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Local data at a prime where everything is unramified: the spaces have unit
/// discriminants and the test function is the indicator of the standard lattice.
struct UnramifiedDatum {
    std::uint64_t p = 3;
    std::size_t m = 3;
    std::size_t mp = 1;
    Rational d = 1;
    Rational dp = 1;
};

/// DomainError unless p is prime, m, m' lie in {1, 3} and both discriminants are p-adic units.
void validate(const UnramifiedDatum& datum);

/// The datum of a quadruple at a prime outside its bad set.
UnramifiedDatum unramified_datum(const QuadraticSpace& q, const QuadraticSpace& qp, std::uint64_t p);

/// gamma^{gamma_power} q^{q_exponent} [indicator], with gamma a formal modulus-1 symbol.
struct FormalValue {
    int gamma_power = 1;
    Rational q_exponent = 0;
    bool indicator = true;

    std::string to_string() const;
    friend bool operator==(const FormalValue&, const FormalValue&) = default;
};

/// W'(m(a)) for a = p^k u on the one-dimensional side: (gamma, q^{-k/2}, [k >= 0]).
/// PreconditionError unless m' = 1; unit_class must be +-1.
FormalValue unramified_W_prime(const UnramifiedDatum& datum, long k, int unit_class = 1);

/// Exponent c s + e of |a| in one factor of the Mellin integrand.
struct SExponent {
    Rational s_coefficient = 0;
    Rational constant = 0;

    std::string to_string() const;
    friend SExponent operator+(const SExponent& a, const SExponent& b) {
        return {a.s_coefficient + b.s_coefficient, a.constant + b.constant};
    }
    friend bool operator==(const SExponent&, const SExponent&) = default;
};

/// |a| from the two Whittaker factors, delta_P^{-1} = |a|^{-(n+1)} and
/// Psi_s = |a|^{s + rho_n} with rho_n = (n + 1) / 2.
struct IntegrandExponents {
    SExponent whittaker;
    SExponent delta_inverse;
    SExponent section;

    SExponent total() const { return whittaker + delta_inverse + section; }
};

IntegrandExponents integrand_exponents(std::size_t n);

/// Contribution of the shell p^k O^x as exact rationals. The additive volume
/// times the Jacobian to the multiplicative measure normalized by vol(O^x) = 1
/// gives the shell weight; the |a|-powers at s = 0 multiply to q_power.
struct ShellTerm {
    long k = 0;
    Rational additive_volume;
    Rational jacobian;
    Rational q_power;
    /// Coefficient of t^k.
    Rational coefficient() const { return additive_volume * jacobian * q_power; }
};

ShellTerm shell_term(const UnramifiedDatum& datum, long k);

/// Sum of the shells k = 0..K as a polynomial in t.
Polynomial shell_partial_sum(const UnramifiedDatum& datum, std::size_t K);

/// The local pairing for n = 1 as a rational function in t = q^{-s}, obtained by
/// recognizing the ratio of the shell sums up to K = 64. UnsupportedError for n > 1.
RationalFunctionInT unramified_pairing(const UnramifiedDatum& datum, std::size_t n = 1);

struct EulerProductEstimate {
    std::set<std::uint64_t> excluded;
    std::uint64_t bound = 0;
    double s = 0;
    double value = 1;
    std::size_t factors = 0;
    /// Relative error bound exp(2 X^{1-s} / (s - 1)) - 1 from the omitted primes.
    double tail_bound = 0;
    std::string tail_note;
};

/// prod_{p <= X, p not in S} (1 - p^{-s})^{-1} in ascending prime order.
/// DivergenceError for s <= 1; PreconditionError when X < max(S).
EulerProductEstimate partial_euler(const std::set<std::uint64_t>& excluded, std::uint64_t bound, double s);

/// Riemann zeta for real s > 0, s != 1, from the alternating series with
/// repeated averaging of the final partial sums.
double zeta_eta(double s, std::size_t terms = 10000);

struct ResidueCheck {
    Rational closed_form;
    double numeric = 0;
    double s = 0;
    bool agrees = false;
};

/// Residue of zeta_S at 1, prod_{p in S} (1 - 1/p), checked against
/// (s - 1) zeta(s) prod_{p in S} (1 - p^{-s}) at s = 1.001 within 5e-3.
ResidueCheck residue_check(const std::set<std::uint64_t>& excluded);

struct VerdictReport {
    std::string summary;
    bool admissible = false;
    bool automorphic = false;
    bool pole_at_rho = false;
    Rational rho;
    std::string verdict;
    std::string kappa;
    std::vector<Place> failing;
};

/// isomorphic (admissible, n = 1), not-admissible, or conjectural (admissible, n > 1).
VerdictReport verdict(const GlobalQuadruple& alpha);

}  // namespace quadrilift
