#include "rankone/intutil.hpp"

#include "rankone/errors.hpp"

#include <algorithm>

namespace rankone {

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0 && e < 0) throw_config("DivisionByZero", "0 cannot be raised to a negative power");
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat acc(1);
    Rat sq = base;
    while (k) {
        if (k & 1) acc *= sq;
        sq *= sq;
        k >>= 1;
    }
    return acc;
}

Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n composite, odd, not a prime power of interest.
    Int x(2), y(2), d(1), c(1);
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != n && d != 1) return d;
        c += 1;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factor_integer(Int n) {
    std::map<Int, unsigned> out;
    if (n < 0) n = -n;
    if (n == 0) throw_config("FactorZero", "cannot factor 0");
    for (Int p : {Int(2), Int(3), Int(5)}) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
    }
    Int p(7);
    while (p * p <= n && p < (1 << 20)) {
        while (n % p == 0) {
            out[p]++;
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

long padic_ord(const Rat& q, const Int& p) {
    if (q == 0) throw_config("OrdOfZero", "valuation of 0 is undefined");
    long v = 0;
    Int num = q.get_num();
    Int den = q.get_den();
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

Int remove_prime_power(Int n, const Int& p) {
    while (n % p == 0) n /= p;
    return n;
}

namespace {

std::string decimal_render(const Rat& q, int digits, bool round_up) {
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    Int num = q.get_num() * scale;
    Int den = q.get_den();
    Int quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (round_up && rem != 0) quo += 1;  // fdiv floors, so +1 gives ceil
    bool neg = quo < 0;
    Int mag = neg ? Int(-quo) : quo;
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace

std::string decimal_floor(const Rat& q, int digits) { return decimal_render(q, digits, false); }
std::string decimal_ceil(const Rat& q, int digits) { return decimal_render(q, digits, true); }

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned long max_torsion_order(unsigned degree) {
    // phi(m) <= degree bounds m; phi(m) >= sqrt(m/2), so m <= 2(d+1)^2 is safe.
    unsigned long best = 2;
    unsigned long cap = 2ul * (degree + 1) * (degree + 1);
    for (unsigned long m = 1; m <= cap; ++m) {
        if (euler_phi(m) <= degree) best = std::max(best, m);
    }
    return best;
}

}  // namespace rankone
