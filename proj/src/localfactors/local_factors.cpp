#include "quadrilift/local_factors.hpp"

#include <cmath>
#include <sstream>

#include "quadrilift/error.hpp"
#include "quadrilift/local_fields.hpp"
#include "quadrilift/number_theory.hpp"

namespace quadrilift {

namespace {

constexpr std::size_t kRecognitionDepth = 64;

Rational prime_rational(std::uint64_t p) { return Rational(Integer(static_cast<unsigned long>(p))); }

std::string term(const Rational& c, std::size_t i, bool first) {
    std::string out;
    const Rational a = c.sign() < 0 ? -c : c;
    if (first) {
        out = c.sign() < 0 ? "-" : "";
    } else {
        out = c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = a == Rational(1);
    if (i == 0 || !unit) out += a.to_string();
    if (i > 0 && !unit) out += "*";
    if (i == 1) out += "t";
    if (i > 1) out += "t^" + std::to_string(i);
    return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const Rational& constant) : c_{constant} { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coefficient) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * t + c_[i - 1];
    return acc;
}

double Polynomial::evaluate(double t) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * t + c_[i - 1].to_double();
    return acc;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        out += term(c_[i], i, first);
        first = false;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

PolynomialDivision divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    PolynomialDivision out{Polynomial(), a};
    const Rational lead = b.leading();
    while (!out.remainder.is_zero() && out.remainder.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(out.remainder.degree() - b.degree());
        const Polynomial step = Polynomial::monomial(shift, out.remainder.leading() / lead);
        out.quotient = out.quotient + step;
        out.remainder = out.remainder - step * b;
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Polynomial(Rational(1) / x.leading());
}

RationalFunctionInT::RationalFunctionInT(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    num_ = divide(num_, g).quotient;
    den_ = divide(den_, g).quotient;
    const Polynomial scale(Rational(1) / den_.leading());
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RationalFunctionInT RationalFunctionInT::geometric() {
    return {Polynomial(1), Polynomial(std::vector<Rational>{1, -1})};
}

Rational RationalFunctionInT::evaluate(const Rational& t) const {
    const Rational d = den_.evaluate(t);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_.evaluate(t) / d;
}

double RationalFunctionInT::evaluate(double t) const { return num_.evaluate(t) / den_.evaluate(t); }

std::string RationalFunctionInT::to_string() const {
    if (den_ == Polynomial(1)) return num_.to_string();
    // Displayed with the denominator's constant term scaled to 1 when possible.
    Polynomial n = num_;
    Polynomial d = den_;
    if (!d.coefficient(0).is_zero()) {
        const Polynomial scale(Rational(1) / d.coefficient(0));
        n = n * scale;
        d = d * scale;
    }
    const std::string top = n.coefficients().size() == 1 && n.coefficient(0).sign() > 0 ? n.to_string()
                                                                                        : "(" + n.to_string() + ")";
    return top + "/(" + d.to_string() + ")";
}

RationalFunctionInT operator+(const RationalFunctionInT& a, const RationalFunctionInT& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionInT operator-(const RationalFunctionInT& a, const RationalFunctionInT& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionInT operator*(const RationalFunctionInT& a, const RationalFunctionInT& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunctionInT operator/(const RationalFunctionInT& a, const RationalFunctionInT& b) {
    if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

void validate(const UnramifiedDatum& datum) {
    if (!is_prime(datum.p)) throw DomainError("unramified datum needs a prime p");
    for (const std::size_t dim : {datum.m, datum.mp}) {
        if (dim != 1 && dim != 3) throw DomainError("unramified datum needs dimensions in {1, 3}");
    }
    for (const Rational& d : {datum.d, datum.dp}) {
        if (d.is_zero() || valuation(d, datum.p) != 0) {
            throw DomainError("discriminant " + d.to_string() + " is not a unit at p = " + std::to_string(datum.p));
        }
    }
}

UnramifiedDatum unramified_datum(const QuadraticSpace& q, const QuadraticSpace& qp, std::uint64_t p) {
    UnramifiedDatum datum{p, q.dim(), qp.dim(), discriminant(q).as_rational(), discriminant(qp).as_rational()};
    for (const QuadraticSpace* space : {&q, &qp}) {
        for (const auto& a : space->diag()) {
            if (valuation(a, p) != 0) throw DomainError("diagonal entry " + a.to_string() + " is not a unit at p");
        }
    }
    validate(datum);
    return datum;
}

std::string FormalValue::to_string() const {
    std::ostringstream os;
    os << "gamma^" << gamma_power << " * q^(" << q_exponent.to_string() << ") * " << (indicator ? 1 : 0);
    return os.str();
}

FormalValue unramified_W_prime(const UnramifiedDatum& datum, long k, int unit_class) {
    validate(datum);
    if (datum.mp != 1) throw PreconditionError("W' is only computed on the one-dimensional side");
    if (unit_class != 1 && unit_class != -1) throw DomainError("unit class must be +1 or -1");
    return {1, Rational(Integer(-k), Integer(2)), k >= 0};
}

std::string SExponent::to_string() const {
    std::string out;
    if (!s_coefficient.is_zero()) out = (s_coefficient == Rational(1) ? "" : s_coefficient.to_string() + "*") + "s";
    if (!constant.is_zero() || out.empty()) {
        if (out.empty()) return constant.to_string();
        out += constant.sign() < 0 ? " - " + (-constant).to_string() : " + " + constant.to_string();
    }
    return out;
}

IntegrandExponents integrand_exponents(std::size_t n) {
    if (n == 0) throw PreconditionError("n must be positive");
    const Rational rho(Integer(static_cast<unsigned long>(n + 1)), Integer(2));
    const Rational dn(static_cast<long>(n + 1));
    return {{0, 1}, {0, -dn}, {1, rho}};
}

ShellTerm shell_term(const UnramifiedDatum& datum, long k) {
    validate(datum);
    if (k < 0) throw PreconditionError("shells start at k = 0");
    const Rational q = prime_rational(datum.p);
    const Rational unit_volume = Rational(1) - Rational(1) / q;
    ShellTerm out;
    out.k = k;
    out.additive_volume = pow(q, -k) * unit_volume;
    // d^x a = da / ((1 - 1/q) |a|) normalizes vol(O^x) = 1.
    out.jacobian = pow(q, k) / unit_volume;
    const SExponent total = integrand_exponents(1).total();
    // |a| = q^{-k}; the s-part becomes t^k.
    out.q_power = pow(q, -k * total.constant.numerator().get_si());
    return out;
}

Polynomial shell_partial_sum(const UnramifiedDatum& datum, std::size_t K) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= K; ++k) c.push_back(shell_term(datum, static_cast<long>(k)).coefficient());
    return Polynomial(std::move(c));
}

RationalFunctionInT unramified_pairing(const UnramifiedDatum& datum, std::size_t n) {
    validate(datum);
    if (n != 1) throw UnsupportedError("the unramified pairing is only computed for n = 1");
    const Polynomial sum = shell_partial_sum(datum, kRecognitionDepth);
    const Rational c0 = sum.coefficient(0);
    if (c0.is_zero()) throw Error("shell sum has a vanishing constant term");
    const Rational ratio = sum.coefficient(1) / c0;
    for (std::size_t k = 1; k <= kRecognitionDepth; ++k) {
        if (sum.coefficient(k) != sum.coefficient(k - 1) * ratio) throw Error("shell sums are not geometric");
    }
    const RationalFunctionInT f(Polynomial(c0), Polynomial(std::vector<Rational>{1, -ratio}));
    // (1 - r t) * partial == c0 (1 - (r t)^{K+1}) exactly.
    const Polynomial check = Polynomial(std::vector<Rational>{1, -ratio}) * sum;
    const Polynomial expect =
        Polynomial(c0) - Polynomial::monomial(kRecognitionDepth + 1, c0 * pow(ratio, static_cast<long>(kRecognitionDepth + 1)));
    if (!(check == expect)) throw Error("geometric recognition failed");
    return f;
}

EulerProductEstimate partial_euler(const std::set<std::uint64_t>& excluded, std::uint64_t bound, double s) {
    if (!(s > 1)) throw DivergenceError("Euler product diverges for s <= 1");
    for (const auto p : excluded) {
        if (!is_prime(p)) throw DomainError("excluded value " + std::to_string(p) + " is not prime");
    }
    if (!excluded.empty() && bound < *excluded.rbegin()) {
        throw PreconditionError("bound X must be at least max(S)");
    }
    EulerProductEstimate out;
    out.excluded = excluded;
    out.bound = bound;
    out.s = s;
    for (const auto p : primes_up_to(bound)) {
        if (excluded.count(p) != 0) continue;
        out.value /= 1.0 - std::pow(static_cast<double>(p), -s);
        ++out.factors;
    }
    const double x = std::max<double>(static_cast<double>(bound), 1.0);
    out.tail_bound = std::expm1(2.0 * std::pow(x, 1.0 - s) / (s - 1.0));
    std::ostringstream os;
    os << "primes above " << bound << " change the product by a relative factor of at most " << out.tail_bound;
    out.tail_note = os.str();
    return out;
}

double zeta_eta(double s, std::size_t terms) {
    if (!(s > 0) || s == 1) throw DomainError("zeta_eta needs real s > 0 with s != 1");
    constexpr std::size_t tail = 40;
    if (terms < tail) throw PreconditionError("too few terms for the alternating series");
    std::vector<double> partial;
    double sum = 0;
    for (std::size_t k = 1; k <= terms; ++k) {
        const double term = std::pow(static_cast<double>(k), -s);
        sum += (k % 2 == 1) ? term : -term;
        if (k + tail > terms) partial.push_back(sum);
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return partial[0] / (1.0 - std::pow(2.0, 1.0 - s));
}

ResidueCheck residue_check(const std::set<std::uint64_t>& excluded) {
    ResidueCheck out;
    out.s = 1.001;
    out.closed_form = 1;
    double correction = 1;
    for (const auto p : excluded) {
        if (!is_prime(p)) throw DomainError("excluded value " + std::to_string(p) + " is not prime");
        const Rational pr = prime_rational(p);
        out.closed_form *= Rational(1) - Rational(1) / pr;
        correction *= 1.0 - std::pow(static_cast<double>(p), -out.s);
    }
    out.numeric = (out.s - 1.0) * zeta_eta(out.s) * correction;
    out.agrees = std::abs(out.numeric - out.closed_form.to_double()) < 5e-3;
    return out;
}

VerdictReport verdict(const GlobalQuadruple& alpha) {
    VerdictReport out;
    out.summary = "q = " + alpha.q.to_string() + ", q' = " + alpha.qp.to_string() + ", n = " + std::to_string(alpha.n);
    out.rho = Rational(Integer(static_cast<unsigned long>(alpha.n + 1)), Integer(2));
    out.kappa = "nonzero residue constant, kept symbolic";
    const auto global = globally_admissible(alpha);
    out.admissible = global.admissible;
    out.automorphic = global.automorphic;
    out.failing = global.failing;
    if (!out.admissible) {
        out.verdict = "not-admissible";
    } else if (alpha.n == 1) {
        // The partial zeta completes to the Riemann zeta, whose pole at 1 survives.
        out.pole_at_rho = true;
        out.verdict = "isomorphic";
    } else {
        out.verdict = "conjectural";
    }
    return out;
}

}  // namespace quadrilift
