#include "qparity/psi.hpp"

#include <stdexcept>
#include <string>

#include "qparity/forms.hpp"
#include "qparity/kronecker.hpp"

namespace qparity {

namespace {

void require_modulus(std::int64_t d, const char *who)
{
    if (d % 24 != 23 || !is_square_free(d)) {
        throw std::invalid_argument(std::string(who) + ": need square-free d = 23 mod 24");
    }
}

} // namespace

Series<QuadElem> log_psi(std::int64_t d, std::size_t order, const ComponentTable &table)
{
    require_modulus(d, "log_psi");
    if (order < 2) {
        throw std::invalid_argument("log_psi: order must be >= 2");
    }
    const std::int64_t top = d * static_cast<std::int64_t>(order - 1) *
                             static_cast<std::int64_t>(order - 1);
    if (top >= static_cast<std::int64_t>(table.order)) {
        throw std::invalid_argument("log_psi: component table too short");
    }

    std::vector<mpq_class> y(order, mpq_class(0));
    for (std::size_t m = 1; m < order; ++m) {
        const mpz_class cm = borcherds_exponent(table, d, static_cast<std::int64_t>(m));
        if (sgn(cm) == 0) {
            continue;
        }
        for (std::size_t k = 1; m * k < order; ++k) {
            const int chi = kronecker_minus_d(d, static_cast<std::int64_t>(k));
            if (chi == 0) {
                continue;
            }
            mpq_class term(chi > 0 ? cm : mpz_class(-cm), static_cast<unsigned long>(k));
            term.canonicalize();
            y[m * k] += term;
        }
    }

    Series<QuadElem> out = Series<QuadElem>::zeros(order);
    for (std::size_t n = 1; n < order; ++n) {
        if (sgn(y[n]) != 0) {
            out[n] = QuadElem(d, 0, y[n]);
        }
    }
    return out;
}

PsiExpansion psi(std::int64_t d, std::size_t order, const ComponentTable &table)
{
    PsiExpansion p;
    p.d = d;
    p.order = order;
    p.log_coeffs = log_psi(d, order, table);
    p.coeffs = ser_exp(p.log_coeffs);

    if (!(p.coeffs[0] == QuadElem(1L))) {
        throw std::runtime_error("psi: constant term is not 1");
    }
    Series<QuadElem> conj = Series<QuadElem>::zeros(order);
    for (std::size_t n = 0; n < order; ++n) {
        if (!p.coeffs[n].is_integral()) {
            throw std::runtime_error("psi: non-integral coefficient at q^" + std::to_string(n));
        }
        conj[n] = p.coeffs[n].conj();
    }
    if (!(ser_mul(p.coeffs, conj) == Series<QuadElem>::one(order))) {
        throw std::runtime_error("psi: conjugate series is not the inverse");
    }
    return p;
}

PsiExpansion psi(std::int64_t d, std::size_t order)
{
    const ComponentTable table = build_components_sparse({{d, order}});
    return psi(d, order, table);
}

BitSeries psi_mod2(const PsiExpansion &p)
{
    BitSeries bits(p.order);
    for (std::size_t n = 0; n < p.order; ++n) {
        if (p.coeffs[n].mod2() != 0) {
            bits.set(n, true);
        }
    }
    return bits;
}

BitSeries qdlog_psi_mod2(const PsiExpansion &p)
{
    return bits_qdlog(psi_mod2(p));
}

BitSeries lambert_rhs(std::int64_t d, std::size_t order, const ParityBitmap &bitmap)
{
    require_modulus(d, "lambert_rhs");
    if (order < 1) {
        throw std::invalid_argument("lambert_rhs: order must be >= 1");
    }
    BitSeries out(order);
    for (std::size_t m = 1; m < order; ++m) {
        if (m % 2 == 0 || m % 3 == 0) {
            continue;
        }
        const std::uint64_t idx =
            (static_cast<std::uint64_t>(d) * m * m + 1) / 24;
        if (idx >= bitmap.limit) {
            throw std::invalid_argument("lambert_rhs: parity bitmap too short");
        }
        if (!bitmap.bit(idx)) {
            continue;
        }
        for (std::size_t e = m; e < order; e += m) {
            out.flip(e);
        }
    }
    return out;
}

BitSeries omega_series_mod2(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("omega_series_mod2: order must be >= 1");
    }
    BitSeries out(order);
    for (std::size_t m = 1; m < order; ++m) {
        if (m % 2 == 0 || m % 3 == 0) {
            continue;
        }
        for (std::size_t e = m; e < order; e += m) {
            out.flip(e);
        }
    }
    return out;
}

Series<CycloElem> oracle_PD(std::int64_t d, std::size_t m, std::size_t order)
{
    require_modulus(d, "oracle_PD");
    if (m < 1 || order < 1) {
        throw std::invalid_argument("oracle_PD: need m >= 1 and order >= 1");
    }
    auto field = CycloField::get(d);

    // Work in X = q^m; only exponents X^j with m*j < order survive.
    const std::size_t x_order = (order - 1) / m + 1;
    Series<CycloElem> plus = Series<CycloElem>::one(x_order);
    Series<CycloElem> minus = Series<CycloElem>::one(x_order);
    for (std::int64_t b = 1; b < d; ++b) {
        const int chi = kronecker_minus_d(d, b);
        if (chi == 0) {
            continue;
        }
        Series<CycloElem> factor = Series<CycloElem>::one(x_order);
        if (x_order > 1) {
            factor[1] = CycloElem(0L) - CycloElem::zeta_power(field, -b);
        }
        if (chi > 0) {
            plus = ser_mul(plus, factor);
        } else {
            minus = ser_mul(minus, factor);
        }
    }
    const Series<CycloElem> in_x = ser_mul(plus, ser_inv(minus));

    Series<CycloElem> out = Series<CycloElem>::zeros(order);
    for (std::size_t j = 0; j < x_order; ++j) {
        out[j * m] = in_x[j];
    }
    return out;
}

} // namespace qparity
