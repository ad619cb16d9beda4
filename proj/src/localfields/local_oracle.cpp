#include "quadrilift/local_oracle.hpp"

#include <cstdint>
#include <limits>

#include "quadrilift/error.hpp"

namespace quadrilift {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

class ZeroSearch {
public:
    ZeroSearch(std::vector<u64> coeffs, u64 p, int depth) : coeffs_(std::move(coeffs)), p_(p), depth_(depth) {
        powers_.push_back(1);
        for (int i = 0; i < depth_; ++i) powers_.push_back(powers_.back() * p_);
        modulus_ = powers_.back();
        for (auto& c : coeffs_) c %= modulus_;
    }

    bool run() {
        const std::size_t n = coeffs_.size();
        for (std::size_t pivot = 0; pivot < n; ++pivot) {
            std::vector<u64> x(n, 0);
            x[pivot] = 1;
            if (seed_level_one(x, pivot, pivot + 1)) return true;
        }
        return false;
    }

private:
    u64 value(const std::vector<u64>& x) const {
        u128 acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const u128 sq = static_cast<u128>(x[i]) * x[i] % modulus_;
            acc = (acc + sq * coeffs_[i]) % modulus_;
        }
        return static_cast<u64>(acc);
    }

    // Coordinates after the pivot range over all residues mod p at level 1;
    // coordinates before it stay divisible by p.
    bool seed_level_one(std::vector<u64>& x, std::size_t pivot, std::size_t index) {
        if (index == x.size()) {
            if (value(x) % p_ != 0) return false;
            return lift(x, pivot, 1);
        }
        for (u64 t = 0; t < p_; ++t) {
            x[index] = t;
            if (seed_level_one(x, pivot, index + 1)) return true;
        }
        x[index] = 0;
        return false;
    }

    bool lift(std::vector<u64>& x, std::size_t pivot, int level) {
        if (level >= depth_) return true;
        return lift_coordinate(x, pivot, level, 0);
    }

    bool lift_coordinate(std::vector<u64>& x, std::size_t pivot, int level, std::size_t index) {
        if (index == x.size()) {
            if (value(x) % powers_[level + 1] != 0) return false;
            return lift(x, pivot, level + 1);
        }
        if (index == pivot) return lift_coordinate(x, pivot, level, index + 1);
        const u64 base = x[index];
        for (u64 t = 0; t < p_; ++t) {
            x[index] = base + t * powers_[level];
            if (lift_coordinate(x, pivot, level, index + 1)) return true;
        }
        x[index] = base;
        return false;
    }

    std::vector<u64> coeffs_;
    u64 p_;
    int depth_;
    std::vector<u64> powers_;
    u64 modulus_ = 1;
};

}  // namespace

bool oracle_has_zero(const std::vector<Rational>& coefficients, const Place& place, int depth) {
    for (const auto& c : coefficients) {
        if (c.is_zero()) throw DomainError("oracle: zero coefficient");
    }
    if (coefficients.size() < 2) return false;
    if (place.is_real()) {
        bool pos = false;
        bool neg = false;
        for (const auto& c : coefficients) (c.sign() > 0 ? pos : neg) = true;
        return pos && neg;
    }
    const u64 p = place.prime();
    const Integer pp(static_cast<unsigned long>(p));
    const Integer p2 = pp * pp;
    std::vector<Integer> reduced;
    long total_val = 0;
    for (const auto& c : coefficients) {
        Integer v = c.numerator() * c.denominator();
        while (mpz_divisible_p(v.get_mpz_t(), p2.get_mpz_t()) != 0) v /= p2;
        if (mpz_divisible_p(v.get_mpz_t(), pp.get_mpz_t()) != 0) ++total_val;
        reduced.push_back(v);
    }
    if (depth < 0) depth = static_cast<int>(2 * total_val + 5);
    if (depth < 1) throw PreconditionError("oracle depth must be positive");
    // p^depth must stay below 2^62 so that products fit in 128 bits.
    long double bound = 1;
    for (int i = 0; i < depth; ++i) bound *= static_cast<long double>(p);
    if (bound > static_cast<long double>(std::numeric_limits<u64>::max() >> 2U)) {
        throw PreconditionError("oracle depth too large for p = " + std::to_string(p));
    }
    u64 modulus = 1;
    for (int i = 0; i < depth; ++i) modulus *= p;
    const Integer m(static_cast<unsigned long>(modulus));
    std::vector<u64> coeffs;
    for (const auto& v : reduced) {
        const Integer r = ((v % m) + m) % m;
        coeffs.push_back(r.get_ui());
    }
    return ZeroSearch(std::move(coeffs), p, depth).run();
}

bool oracle_represents(const std::vector<Rational>& diag, const Rational& beta, const Place& place) {
    if (beta.is_zero()) throw DomainError("oracle: beta must be nonzero");
    std::vector<Rational> form = diag;
    form.push_back(-beta);
    return oracle_has_zero(form, place);
}

int hilbert_oracle(const Rational& a, const Rational& b, const Place& place, int depth) {
    if (a.is_zero() || b.is_zero()) throw DomainError("hilbert_oracle: arguments must be nonzero");
    if (place.is_real()) {
        // z^2 = a x^2 + b y^2 needs a x^2 + b y^2 >= 0 at some (x, y) != 0.
        for (const auto& [x, y] : {std::pair<int, int>{1, 0}, std::pair<int, int>{0, 1}}) {
            if ((a * Rational(x * x) + b * Rational(y * y)).sign() > 0) return 1;
        }
        return -1;
    }
    return oracle_has_zero({Rational(1), -a, -b}, place, depth) ? 1 : -1;
}

}  // namespace quadrilift
