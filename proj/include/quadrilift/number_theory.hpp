#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quadrilift/rational.hpp"

namespace quadrilift {

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// Prime factorization of |n| (n != 0). Trial division followed by
/// Pollard-Brent for large cofactors.
std::map<Integer, unsigned> factor(const Integer& n);

/// Legendre symbol (a|p) for an odd prime p; 0 when p divides a.
int legendre(const Integer& a, std::uint64_t p);

/// Square-free integer in the square class of a nonzero rational.
Integer squarefree_part(const Rational& x);

/// Square-free integer in the square class of a product of nonzero rationals,
/// without factoring the (possibly large) product itself.
Integer squarefree_part_of_product(const std::vector<Rational>& factors);

/// Sorted primes dividing the numerator or the denominator of x.
std::vector<std::uint64_t> prime_divisors(const Rational& x);

/// Primes p <= bound in ascending order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace quadrilift
