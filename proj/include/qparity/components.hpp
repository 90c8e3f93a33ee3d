#ifndef QPARITY_COMPONENTS_HPP
#define QPARITY_COMPONENTS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qparity/series.hpp"

namespace qparity {

/// The twelve vector components, indexed by residue j mod 12.  Components
/// 0, 3, 6, 9 vanish; 1, 5, 7, 11 are (+,-,+,-) q^{-1} f(q^24); 2, 4, 8,
/// 10 are signed even/odd pieces of 2 q^8 omega(+-q^12).  C(j; n) denotes
/// the coefficient of q^n in component j.
struct ComponentTable {
    std::size_t order = 0; // exponents n < order are covered
    bool dense = false;

    // Dense mode: comps[j] entry i holds C(j; i + shifts[j]); shift is -1
    // for j = 1, 5, 7, 11 and 0 otherwise.
    std::array<ZSeries, 12> comps;
    std::array<int, 12> shifts{};
    ZSeries f_small; // a_f(k) for the covered k
    ZSeries w_small; // omega_k for the covered k

    // Sparse mode: only the scattered indices actually requested.
    std::map<std::int64_t, mpz_class> f_at;
    std::map<std::int64_t, mpz_class> w_at;
};

/// Dense table covering all exponents in [-1, order).
ComponentTable build_components(std::size_t order);

/// Sparse table covering C(m mod 12; D m^2) for each (D, order) pair and
/// all 1 <= m < order.  Memory scales with the number of distinct mock
/// theta coefficients touched, not with D m^2.
ComponentTable build_components_sparse(
    const std::vector<std::pair<std::int64_t, std::size_t>> &needs);

/// C(j; n); zero outside the support congruences.  Throws if n is past
/// the truncation, or if a sparse table does not cover a supported n.
mpz_class coefficient(const ComponentTable &table, int j, std::int64_t n);

/// C(m mod 12; D m^2), the exponent of the summand q^m in the product.
mpz_class borcherds_exponent(const ComponentTable &table, std::int64_t d, std::int64_t m);

/// C(1;n) - C(5;n) + C(7;n) - C(11;n): equals 4 a_f((n+1)/24) when
/// n = -1 mod 24 and 0 otherwise.
mpz_class packet_functional(const ComponentTable &table, std::int64_t n);

} // namespace qparity

#endif
