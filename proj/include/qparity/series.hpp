#ifndef QPARITY_SERIES_HPP
#define QPARITY_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qparity {

/// Truncated formal power series over an exact coefficient ring R.
///
/// The truncation order is the (exclusive) bound on stored exponents:
/// coeff(n) is the coefficient of q^n for 0 <= n < order().  Binary
/// operations are strict about orders: both operands must have the same
/// order, and the result keeps it.  Use truncated() to shorten a series
/// explicitly.
///
/// R must be default-constructible to its additive identity and
/// constructible from long.  The Q-like operations (ser_exp, ser_log)
/// additionally require div_int(R, long).
template <class R>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {}

    static Series zeros(std::size_t order) { return Series(std::vector<R>(order)); }

    static Series one(std::size_t order)
    {
        if (order == 0) {
            throw std::invalid_argument("Series::one: order must be positive");
        }
        Series s = zeros(order);
        s.c_[0] = R(1);
        return s;
    }

    /// Monomial coef*q^n, truncated to the given order.
    static Series monomial(std::size_t order, std::size_t n, const R &coef)
    {
        Series s = zeros(order);
        if (n < order) {
            s.c_[n] = coef;
        }
        return s;
    }

    std::size_t order() const { return c_.size(); }

    const R &operator[](std::size_t n) const { return c_[n]; }
    R &operator[](std::size_t n) { return c_[n]; }

    const std::vector<R> &coeffs() const { return c_; }
    std::vector<R> &coeffs() { return c_; }

    Series truncated(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw std::invalid_argument("Series::truncated: cannot extend precision");
        }
        return Series(std::vector<R>(c_.begin(), c_.begin() + new_order));
    }

    bool operator==(const Series &other) const { return c_ == other.c_; }
    bool operator!=(const Series &other) const { return !(*this == other); }

private:
    std::vector<R> c_;
};

namespace detail {

inline void require_same_order(std::size_t a, std::size_t b, const char *what)
{
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": truncation order mismatch ("
                                    + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Ring helpers.  Overloads for the GMP scalars live here; QuadElem and
// CycloElem provide their own in their headers.
// ---------------------------------------------------------------------------

inline bool is_zero(const mpz_class &x) { return sgn(x) == 0; }
inline bool is_zero(const mpq_class &x) { return sgn(x) == 0; }

inline mpq_class div_int(const mpq_class &x, long n)
{
    if (n == 0) {
        throw std::invalid_argument("div_int: division by zero");
    }
    mpq_class r = x / mpq_class(n);
    r.canonicalize();
    return r;
}

/// True if x is invertible when used as a leading coefficient.  For the
/// integers only +-1 qualifies; fields accept anything nonzero.
inline bool is_unit(const mpz_class &x) { return x == 1 || x == -1; }
inline bool is_unit(const mpq_class &x) { return sgn(x) != 0; }

inline mpz_class ring_inverse(const mpz_class &x)
{
    if (!is_unit(x)) {
        throw std::invalid_argument("ring_inverse: non-unit integer");
    }
    return x;
}

inline mpq_class ring_inverse(const mpq_class &x)
{
    if (sgn(x) == 0) {
        throw std::invalid_argument("ring_inverse: division by zero");
    }
    return mpq_class(1) / x;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

template <class R>
Series<R> ser_add(const Series<R> &f, const Series<R> &g)
{
    detail::require_same_order(f.order(), g.order(), "ser_add");
    Series<R> h = f;
    for (std::size_t i = 0; i < g.order(); ++i) {
        h[i] = h[i] + g[i];
    }
    return h;
}

template <class R>
Series<R> ser_sub(const Series<R> &f, const Series<R> &g)
{
    detail::require_same_order(f.order(), g.order(), "ser_sub");
    Series<R> h = f;
    for (std::size_t i = 0; i < g.order(); ++i) {
        h[i] = h[i] - g[i];
    }
    return h;
}

template <class R>
Series<R> ser_neg(const Series<R> &f)
{
    Series<R> h = f;
    for (std::size_t i = 0; i < h.order(); ++i) {
        h[i] = R{} - h[i];
    }
    return h;
}

template <class R>
Series<R> ser_scale(const Series<R> &f, const R &a)
{
    Series<R> h = f;
    for (std::size_t i = 0; i < h.order(); ++i) {
        h[i] = h[i] * a;
    }
    return h;
}

/// Cauchy product truncated to the common order (schoolbook).
template <class R>
Series<R> ser_mul(const Series<R> &f, const Series<R> &g)
{
    detail::require_same_order(f.order(), g.order(), "ser_mul");
    const std::size_t n = f.order();
    Series<R> h = Series<R>::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(f[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!is_zero(g[j])) {
                h[i + j] = h[i + j] + f[i] * g[j];
            }
        }
    }
    return h;
}

/// Multiplicative inverse: g with f*g = 1 to the truncation order.
/// Requires a unit constant term.
template <class R>
Series<R> ser_inv(const Series<R> &f)
{
    const std::size_t n = f.order();
    if (n == 0) {
        throw std::invalid_argument("ser_inv: empty series");
    }
    if (!is_unit(f[0])) {
        throw std::invalid_argument("ser_inv: constant term is not a unit");
    }
    const R u = ring_inverse(f[0]);
    Series<R> g = Series<R>::zeros(n);
    g[0] = u;
    for (std::size_t k = 1; k < n; ++k) {
        R acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero(f[j])) {
                acc = acc + f[j] * g[k - j];
            }
        }
        g[k] = R{} - u * acc;
    }
    return g;
}

/// q * d/dq.
template <class R>
Series<R> ser_qderiv(const Series<R> &f)
{
    Series<R> h = f;
    for (std::size_t i = 0; i < h.order(); ++i) {
        h[i] = h[i] * R(static_cast<long>(i));
    }
    return h;
}

/// Logarithmic derivative q*f'/f; additive over products.  Requires a
/// unit constant term.
template <class R>
Series<R> ser_qdlog(const Series<R> &f)
{
    return ser_mul(ser_qderiv(f), ser_inv(f));
}

/// Power-series exponential.  Requires constant term 0 and a coefficient
/// ring containing the rationals (div_int).
template <class R>
Series<R> ser_exp(const Series<R> &f)
{
    const std::size_t n = f.order();
    if (n == 0) {
        throw std::invalid_argument("ser_exp: empty series");
    }
    if (!is_zero(f[0])) {
        throw std::invalid_argument("ser_exp: constant term must be 0");
    }
    // g' = f' g termwise: n*g_n = sum_{k=1..n} k f_k g_{n-k}.
    Series<R> g = Series<R>::zeros(n);
    g[0] = R(1);
    for (std::size_t m = 1; m < n; ++m) {
        R acc{};
        for (std::size_t k = 1; k <= m; ++k) {
            if (!is_zero(f[k])) {
                acc = acc + R(static_cast<long>(k)) * f[k] * g[m - k];
            }
        }
        g[m] = div_int(acc, static_cast<long>(m));
    }
    return g;
}

/// Power-series logarithm; inverse of ser_exp.  Requires constant term 1.
template <class R>
Series<R> ser_log(const Series<R> &f)
{
    const std::size_t n = f.order();
    if (n == 0) {
        throw std::invalid_argument("ser_log: empty series");
    }
    if (f[0] != R(1)) {
        throw std::invalid_argument("ser_log: constant term must be 1");
    }
    // log f = integral of f'/f; work with q d/dq and divide indices out.
    Series<R> t = ser_qdlog(f);
    Series<R> g = Series<R>::zeros(n);
    for (std::size_t m = 1; m < n; ++m) {
        g[m] = div_int(t[m], static_cast<long>(m));
    }
    return g;
}

/// Substitute q -> sign*q^k, truncating to the original order.
template <class R>
Series<R> ser_substitute(const Series<R> &f, std::size_t k, int sign)
{
    if (k == 0) {
        throw std::invalid_argument("ser_substitute: k must be >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("ser_substitute: sign must be +-1");
    }
    const std::size_t n = f.order();
    Series<R> g = Series<R>::zeros(n);
    for (std::size_t i = 0; i * k < n; ++i) {
        if ((sign < 0) && (i % 2 == 1)) {
            g[i * k] = R{} - f[i];
        } else {
            g[i * k] = f[i];
        }
    }
    return g;
}

/// The geometric tail q^m + q^{2m} + ... = q^m/(1-q^m), truncated.
template <class R>
Series<R> lambert_term(std::size_t m, std::size_t order)
{
    if (m == 0) {
        throw std::invalid_argument("lambert_term: m must be >= 1");
    }
    Series<R> g = Series<R>::zeros(order);
    for (std::size_t e = m; e < order; e += m) {
        g[e] = R(1);
    }
    return g;
}

// Operator sugar; same strict-order semantics as the named functions.
template <class R>
Series<R> operator+(const Series<R> &f, const Series<R> &g) { return ser_add(f, g); }
template <class R>
Series<R> operator-(const Series<R> &f, const Series<R> &g) { return ser_sub(f, g); }
template <class R>
Series<R> operator*(const Series<R> &f, const Series<R> &g) { return ser_mul(f, g); }

using ZSeries = Series<mpz_class>;
using QSeries = Series<mpq_class>;

} // namespace qparity

#endif
