#ifndef QPARITY_PSI_HPP
#define QPARITY_PSI_HPP

#include <cstdint>

#include "qparity/bitseries.hpp"
#include "qparity/components.hpp"
#include "qparity/cyclo.hpp"
#include "qparity/partitions.hpp"
#include "qparity/quad.hpp"
#include "qparity/series.hpp"

namespace qparity {

/// The twisted product for discriminant -d, expanded exactly over
/// Q(sqrt(-d)).  Construction verifies: constant term 1, algebraic
/// integrality of every coefficient, and coeffs * conj(coeffs) = 1 up to
/// the truncation.
struct PsiExpansion {
    std::int64_t d = 0;
    std::size_t order = 0;
    Series<QuadElem> log_coeffs;
    Series<QuadElem> coeffs;
};

/// log of the product: sum_{m>=1} C(m mod 12; d m^2) * sqrt(-d) *
/// sum_{k>=1} (-d/k) q^{mk} / k, truncated.  Every coefficient is a pure
/// sqrt(-d) multiple of a rational.
Series<QuadElem> log_psi(std::int64_t d, std::size_t order, const ComponentTable &table);

PsiExpansion psi(std::int64_t d, std::size_t order, const ComponentTable &table);
/// Convenience form that builds its own sparse component table.
PsiExpansion psi(std::int64_t d, std::size_t order);

/// Coefficientwise residue modulo a prime above 2 (sqrt(-d) -> 1).
BitSeries psi_mod2(const PsiExpansion &p);

/// q * Psi' / Psi over the binary field.
BitSeries qdlog_psi_mod2(const PsiExpansion &p);

/// sum over m < order with (m,6)=1 of [p((d m^2+1)/24) mod 2] *
/// q^m/(1-q^m), over the binary field.
BitSeries lambert_rhs(std::int64_t d, std::size_t order, const ParityBitmap &bitmap);

/// sum over m < order with (m,6)=1 of q^m/(1-q^m), mod 2.
BitSeries omega_series_mod2(std::size_t order);

/// Direct truncated expansion of the character-indexed product
/// prod_{b mod d} (1 - zeta_d^{-b} q^m)^{(-d/b)} in the cyclotomic ring;
/// the independent check for the closed form behind log_psi.
Series<CycloElem> oracle_PD(std::int64_t d, std::size_t m, std::size_t order);

} // namespace qparity

#endif
