#include "quadrilift/local_fields.hpp"

#include <algorithm>
#include <set>

#include "quadrilift/error.hpp"
#include "quadrilift/number_theory.hpp"

namespace quadrilift {

namespace {

void require_nonzero(const Rational& x, const char* what) {
    if (x.is_zero()) throw DomainError(std::string(what) + " must be nonzero");
}

/// x = p^v * u; returns (v, numerator of u, denominator of u).
struct UnitSplit {
    long val = 0;
    Integer num;
    Integer den;
};

UnitSplit split_unit(const Rational& x, std::uint64_t p) {
    UnitSplit out;
    out.num = x.numerator();
    out.den = x.denominator();
    const Integer pp(static_cast<unsigned long>(p));
    const long vn = static_cast<long>(mpz_remove(out.num.get_mpz_t(), out.num.get_mpz_t(), pp.get_mpz_t()));
    const long vd = static_cast<long>(mpz_remove(out.den.get_mpz_t(), out.den.get_mpz_t(), pp.get_mpz_t()));
    out.val = vn - vd;
    return out;
}

int unit_legendre(const UnitSplit& u, std::uint64_t p) { return legendre(u.num, p) * legendre(u.den, p); }

int unit_mod8(const UnitSplit& u) {
    // d odd implies d^2 = 1 (mod 8), so n/d = n*d (mod 8).
    const Integer r = ((u.num * u.den) % 8 + 8) % 8;
    return static_cast<int>(r.get_si());
}

int eps2(int u) { return ((u - 1) / 2) & 1; }
int omega2(int u) { return ((u * u - 1) / 8) & 1; }

}  // namespace

Place Place::finite(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("place p:" + std::to_string(p) + " is not prime");
    return Place(p);
}

Place Place::parse(std::string_view text) {
    if (text == "real" || text == "inf" || text == "infinity") return real();
    if (text.size() > 2 && text.substr(0, 2) == "p:") {
        const auto digits = text.substr(2);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            digits.size() > 18) {
            throw DomainError("malformed place '" + std::string(text) + "'");
        }
        return finite(std::stoull(std::string(digits)));
    }
    throw DomainError("malformed place '" + std::string(text) + "' (expected real or p:<prime>)");
}

std::string Place::to_string() const { return is_real() ? "real" : "p:" + std::to_string(prime_); }

SquareClass::SquareClass(const Rational& x) : rep_(squarefree_part(x)) {}

SquareClass SquareClass::operator*(const SquareClass& other) const {
    // a, b square-free: ab = g^2 (a/g)(b/g) with g = gcd(a, b).
    Integer g;
    mpz_gcd(g.get_mpz_t(), rep_.get_mpz_t(), other.rep_.get_mpz_t());
    SquareClass out;
    out.rep_ = (rep_ / g) * (other.rep_ / g);
    return out;
}

Rational LocalClass::representative() const {
    if (place.is_real()) return sign;
    const std::uint64_t p = place.prime();
    Rational u = 1;
    if (p == 2) {
        u = unit;
    } else if (unit == -1) {
        u = Rational(Integer(static_cast<unsigned long>(least_nonresidue(p))));
    }
    return parity == 1 ? u * Rational(Integer(static_cast<unsigned long>(p))) : u;
}

std::string LocalClass::to_string() const { return representative().to_string(); }

long valuation(const Rational& x, std::uint64_t p) {
    if (x.is_zero()) throw DomainError("valuation of zero is undefined");
    if (!is_prime(p)) throw DomainError("valuation at non-prime " + std::to_string(p));
    return split_unit(x, p).val;
}

int hilbert(const Rational& a, const Rational& b, const Place& place) {
    require_nonzero(a, "hilbert: a");
    require_nonzero(b, "hilbert: b");
    if (place.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const std::uint64_t p = place.prime();
    const UnitSplit ua = split_unit(a, p);
    const UnitSplit ub = split_unit(b, p);
    const long alpha = ua.val;
    const long beta = ub.val;
    if (p != 2) {
        int sign = 1;
        if ((alpha & 1L) != 0 && (beta & 1L) != 0 && ((p - 1) / 2) % 2 == 1) sign = -sign;
        if ((beta & 1L) != 0) sign *= unit_legendre(ua, p);
        if ((alpha & 1L) != 0) sign *= unit_legendre(ub, p);
        return sign;
    }
    const int u = unit_mod8(ua);
    const int v = unit_mod8(ub);
    const long exponent = eps2(u) * eps2(v) + (alpha & 1L) * omega2(v) + (beta & 1L) * omega2(u);
    return (exponent & 1L) != 0 ? -1 : 1;
}

std::vector<std::pair<Place, int>> hilbert_product(const Rational& a, const Rational& b) {
    require_nonzero(a, "hilbert_product: a");
    require_nonzero(b, "hilbert_product: b");
    std::vector<std::pair<Place, int>> out;
    for (const auto& place : bad_places({a, b})) {
        const int s = hilbert(a, b, place);
        if (s == -1) out.emplace_back(place, s);
    }
    return out;
}

LocalClass local_square_class(const Rational& x, const Place& place) {
    require_nonzero(x, "local_square_class: argument");
    LocalClass out;
    out.place = place;
    if (place.is_real()) {
        out.sign = x.sign();
        return out;
    }
    const std::uint64_t p = place.prime();
    const UnitSplit u = split_unit(x, p);
    out.parity = static_cast<int>(u.val & 1L);
    out.unit = p == 2 ? unit_mod8(u) : unit_legendre(u, p);
    return out;
}

bool is_local_square(const Rational& x, const Place& place) {
    return local_square_class(x, place) == local_square_class(Rational(1), place);
}

std::vector<Rational> local_class_representatives(const Place& place) {
    if (place.is_real()) return {Rational(1), Rational(-1)};
    const std::uint64_t p = place.prime();
    const Rational pr(Integer(static_cast<unsigned long>(p)));
    if (p == 2) {
        std::vector<Rational> out;
        for (int parity = 0; parity < 2; ++parity) {
            for (int u : {1, 3, 5, 7}) out.push_back(parity == 0 ? Rational(u) : Rational(u) * pr);
        }
        return out;
    }
    const Rational n(Integer(static_cast<unsigned long>(least_nonresidue(p))));
    return {Rational(1), n, pr, n * pr};
}

std::uint64_t least_nonresidue(std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw DomainError("least_nonresidue requires an odd prime");
    for (std::uint64_t n = 2;; ++n) {
        if (legendre(Integer(static_cast<unsigned long>(n)), p) == -1) return n;
    }
}

std::vector<Place> bad_places(const std::vector<Rational>& values) {
    std::set<std::uint64_t> primes{2};
    for (const auto& v : values) {
        for (auto p : prime_divisors(v)) primes.insert(p);
    }
    std::vector<Place> out{Place::real()};
    for (auto p : primes) out.push_back(Place::finite(p));
    return out;
}

}  // namespace quadrilift
