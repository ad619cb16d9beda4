#include "quadrilift/rational.hpp"

#include <cctype>
#include <ostream>

#include "quadrilift/error.hpp"

namespace quadrilift {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole, bool allow_sign) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        i = 1;
    }
    if (i == digits.size()) {
        throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
    Integer result = 0;
    for (; i < digits.size(); ++i) {
        const char c = digits[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw DomainError("malformed rational '" + std::string(whole) + "'");
        }
        result = result * 10 + (c - '0');
    }
    return negative ? Integer(-result) : result;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string_view body = text.substr(begin, end - begin);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(body, text, true));
    }
    const Integer num = parse_integer(body.substr(0, slash), text, true);
    const Integer den = parse_integer(body.substr(slash + 1), text, false);
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational pow(const Rational& x, long exponent) {
    if (exponent < 0) {
        if (x.is_zero()) throw DomainError("zero to a negative power");
        return pow(Rational(1) / x, -exponent);
    }
    Rational result = 1;
    Rational base = x;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace quadrilift
