#ifndef MODUNITS_ARITH_HPP
#define MODUNITS_ARITH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modunits/errors.hpp"

namespace modunits {

// All coefficient arithmetic in this library is exact. Rational values are
// kept in lowest terms with positive denominator by the backing type.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "a" or "a/b"; denominators of 1 are omitted.
std::string to_string(const Rational& r);

struct PrimePower {
    std::int64_t prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization, primes strictly increasing. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::int64_t n);

Factorization factorize(std::int64_t n);

// All positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// sigma_k(n) = sum of d^k over divisors d of n.
Int sigma(int k, std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// m-th Bernoulli number for even m >= 2 (Akiyama-Tanigawa, memoized).
Rational bernoulli(int m);

// (-4/p) for p prime: 0 at p=2, +1 for p = 1 mod 4, -1 for p = 3 mod 4.
int kronecker_minus4(std::int64_t p);

// (-3/p) for p prime: 0 at p=3, +1 for p = 1 mod 3, -1 for p = 2 mod 3.
int kronecker_minus3(std::int64_t p);

// n choose k as an exact integer (n may be any integer; k >= 0).
Int binomial(const Int& n, int k);

} // namespace modunits

#endif
