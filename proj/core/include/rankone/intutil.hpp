#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rankone {

using Int = mpz_class;
using Rat = mpq_class;

// q^e for signed e (q != 0 when e < 0).
Rat rat_pow(const Rat& q, long e);
Int int_pow(const Int& b, unsigned long e);

bool is_prime(const Int& n);

// Full factorization of |n| (n != 0): prime -> multiplicity, primes ascending.
// Trial division up to 2^20, then Pollard rho; fine for desk-scale inputs.
std::map<Int, unsigned> factor_integer(Int n);

// Largest e with ord_p(q) = e, i.e. the p-adic valuation of a rational.
long padic_ord(const Rat& q, const Int& p);

// Strips every power of p from n (n != 0).
Int remove_prime_power(Int n, const Int& p);

// Exact decimal rendering of a rational: round toward -inf/+inf to `digits`
// fractional digits. Deterministic; used by all report writers.
std::string decimal_floor(const Rat& q, int digits);
std::string decimal_ceil(const Rat& q, int digits);

// Euler phi for small arguments (torsion-order bounds).
unsigned long euler_phi(unsigned long n);

// Largest m with phi(m) <= d; every root of unity in a degree-d number
// field has order at most this.
unsigned long max_torsion_order(unsigned degree);

}  // namespace rankone
