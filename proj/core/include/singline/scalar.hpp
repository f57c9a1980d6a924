#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace singline {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Binomial coefficient C(n, r) with C(n, r) = 0 for 0 <= n < r.
/// Negative n is rejected; nothing in the system needs the extended definition.
inline Integer choose(long n, long r) {
    if (n < 0) {
        throw std::domain_error("choose: negative upper index " + std::to_string(n));
    }
    if (r < 0 || r > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline bool is_integral(const Scalar& x) { return x.get_den() == 1; }

/// "p/q" rendering; integers keep an explicit "/1".
inline std::string to_ratio_string(const Scalar& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace singline
