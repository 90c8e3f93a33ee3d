#ifndef QPARITY_CYCLO_HPP
#define QPARITY_CYCLO_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace qparity {

/// Shared context for arithmetic in Q(zeta_D): the degree phi(D) and the
/// D-th cyclotomic polynomial, used to reduce products.
class CycloField {
public:
    explicit CycloField(std::int64_t d);

    std::int64_t modulus() const { return d_; }
    std::size_t degree() const { return phi_; }
    /// Monic minimal polynomial of zeta_D, integer coefficients,
    /// constant term first, length degree()+1.
    const std::vector<mpz_class> &min_poly() const { return min_poly_; }

    static std::shared_ptr<const CycloField> get(std::int64_t d);

private:
    std::int64_t d_;
    std::size_t phi_;
    std::vector<mpz_class> min_poly_;
};

/// Element of Q(zeta_D) in the power basis 1, zeta, ..., zeta^{phi(D)-1}.
/// A null field context marks a plain rational, so zeros and integer
/// literals combine with elements of any modulus.
class CycloElem {
public:
    CycloElem() : coords_(1, mpq_class(0)) {}
    CycloElem(long v) : coords_(1, mpq_class(v)) {} // NOLINT: implicit by design
    explicit CycloElem(const mpq_class &v) : coords_(1, v) { coords_[0].canonicalize(); }
    CycloElem(std::shared_ptr<const CycloField> field, std::vector<mpq_class> coords);

    /// zeta_D^k for any integer k (negative exponents wrap around).
    static CycloElem zeta_power(const std::shared_ptr<const CycloField> &field,
                                std::int64_t k);
    static CycloElem rational(const std::shared_ptr<const CycloField> &field,
                              const mpq_class &v);

    const std::shared_ptr<const CycloField> &field() const { return field_; }
    const std::vector<mpq_class> &coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational coordinate; requires is_rational().
    mpq_class rational_value() const;

    friend CycloElem operator+(const CycloElem &a, const CycloElem &b);
    friend CycloElem operator-(const CycloElem &a, const CycloElem &b);
    friend CycloElem operator*(const CycloElem &a, const CycloElem &b);
    friend bool operator==(const CycloElem &a, const CycloElem &b);
    friend bool operator!=(const CycloElem &a, const CycloElem &b) { return !(a == b); }

    CycloElem inverse() const;

    /// Galois conjugation zeta -> zeta^g for g coprime to the modulus.
    CycloElem galois(std::int64_t g) const;

    friend std::ostream &operator<<(std::ostream &os, const CycloElem &a);

private:
    // Reduce a raw coefficient vector (any length) modulo the minimal
    // polynomial into the power basis.
    static std::vector<mpq_class> reduce(const CycloField &f, std::vector<mpq_class> p);

    std::shared_ptr<const CycloField> field_; // null => rational constant
    std::vector<mpq_class> coords_;
};

inline bool is_zero(const CycloElem &a) { return a.is_zero(); }
inline bool is_unit(const CycloElem &a) { return !a.is_zero(); }
inline CycloElem ring_inverse(const CycloElem &a) { return a.inverse(); }
CycloElem div_int(const CycloElem &a, long n);

/// The Gauss-sum embedding of sqrt(-D): G = sum_{b mod D} (-D|b) zeta_D^b,
/// which satisfies G^2 = -D.  Requires square-free D = 23 mod 24.
CycloElem gauss_sum_embed(std::int64_t d);

} // namespace qparity

#endif
