#include "quadrilift/number_theory.hpp"

#include <algorithm>
#include <array>

#include "quadrilift/error.hpp"

namespace quadrilift {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2;
        Integer x;
        Integer g = 1;
        Integer q = 1;
        Integer ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (probable_prime(n)) {
        out[n] += 1;
        return;
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::map<Integer, unsigned> factor(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> out;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            m /= p;
            out[Integer(p)] += 1;
        }
    }
    // Perfect powers are factored through their root.
    for (unsigned long k = 2; m > 1 && mpz_perfect_power_p(m.get_mpz_t()) != 0 && k < 64; ++k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
            for (const auto& [p, e] : factor(root)) out[p] += e * static_cast<unsigned>(k);
            return out;
        }
    }
    factor_into(m, out);
    return out;
}

int legendre(const Integer& a, std::uint64_t p) {
    const Integer pp(static_cast<unsigned long>(p));
    return mpz_legendre(Integer(((a % pp) + pp) % pp).get_mpz_t(), pp.get_mpz_t());
}

Integer squarefree_part(const Rational& x) {
    if (x.is_zero()) throw DomainError("square class of zero");
    // num/den and num*den differ by the square den^2.
    const Integer n = x.numerator() * x.denominator();
    Integer result = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(n)) {
        if (e % 2 == 1) result *= p;
    }
    return result;
}

Integer squarefree_part_of_product(const std::vector<Rational>& factors) {
    // Refine the factors into a multiset of pairwise coprime-or-equal integers
    // with the same product; only the odd-multiplicity ones need factoring,
    // and they are usually small even when the individual factors are not.
    int sign = 1;
    std::vector<Integer> pool;
    for (const auto& x : factors) {
        if (x.is_zero()) throw DomainError("square class of zero");
        sign *= x.sign();
        for (const Integer& part : {x.numerator(), x.denominator()}) {
            Integer a = abs(part);
            if (a != 1) pool.push_back(a);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
                if (pool[i] == pool[j]) continue;
                Integer g;
                mpz_gcd(g.get_mpz_t(), pool[i].get_mpz_t(), pool[j].get_mpz_t());
                if (g == 1) continue;
                pool[i] /= g;
                pool[j] /= g;
                pool.push_back(g);
                pool.push_back(g);
                pool.erase(std::remove(pool.begin(), pool.end(), Integer(1)), pool.end());
                changed = true;
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    Integer result = sign;
    for (std::size_t i = 0; i < pool.size();) {
        std::size_t j = i;
        while (j < pool.size() && pool[j] == pool[i]) ++j;
        if ((j - i) % 2 == 1) result *= squarefree_part(Rational(pool[i]));
        i = j;
    }
    return result;
}

std::vector<std::uint64_t> prime_divisors(const Rational& x) {
    if (x.is_zero()) throw DomainError("prime divisors of zero");
    std::vector<std::uint64_t> out;
    for (const auto* part : {&x.raw().get_num(), &x.raw().get_den()}) {
        if (abs(*part) == 1) continue;
        for (const auto& [p, e] : factor(*part)) {
            if (!p.fits_ulong_p()) throw DomainError("prime factor exceeds 64 bits");
            out.push_back(p.get_ui());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace quadrilift
