#ifndef QPARITY_KRONECKER_HPP
#define QPARITY_KRONECKER_HPP

#include <cstdint>

namespace qparity {

/// Kronecker symbol (a|n), extending the Jacobi and Legendre symbols to
/// arbitrary integers.  Totally multiplicative in both arguments;
/// (a|2) is 0 for even a and +-1 according to a mod 8.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// The character (-D|k) attached to the negative fundamental
/// discriminant -D; vanishes exactly when gcd(k, D) > 1 (D odd).
inline int kronecker_minus_d(std::int64_t d, std::int64_t k)
{
    return kronecker_symbol(-d, k);
}

} // namespace qparity

#endif
