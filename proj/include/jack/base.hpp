#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jack {

using Int = mpz_class;
using Rat = mpq_class;

// thrown when a computation exceeds a configured size bound
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int int_pow(long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 0, 0);  // placeholder, overwritten below
    Int b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw std::domain_error("zero to a negative power");
    Rat b = e > 0 ? x : Rat(1) / x;
    unsigned long k = e > 0 ? e : -e;
    Rat r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace jack
