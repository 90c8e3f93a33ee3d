#ifndef QPARITY_BITSERIES_HPP
#define QPARITY_BITSERIES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "qparity/series.hpp"

namespace qparity {

/// Truncated power series over the binary field, bit-packed: bit n is the
/// coefficient of q^n.  Addition is XOR, so every element is its own
/// additive inverse.
class BitSeries {
public:
    BitSeries() = default;
    explicit BitSeries(std::size_t order)
        : order_(order), words_((order + 63) / 64, 0) {}

    static BitSeries one(std::size_t order)
    {
        if (order == 0) {
            throw std::invalid_argument("BitSeries::one: order must be positive");
        }
        BitSeries s(order);
        s.set(0, true);
        return s;
    }

    std::size_t order() const { return order_; }

    bool get(std::size_t n) const
    {
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }

    void set(std::size_t n, bool b)
    {
        const std::uint64_t mask = std::uint64_t(1) << (n & 63);
        if (b) {
            words_[n >> 6] |= mask;
        } else {
            words_[n >> 6] &= ~mask;
        }
    }

    void flip(std::size_t n) { words_[n >> 6] ^= std::uint64_t(1) << (n & 63); }

    bool is_zero() const
    {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    const std::vector<std::uint64_t> &words() const { return words_; }

    bool operator==(const BitSeries &other) const
    {
        return order_ == other.order_ && words_ == other.words_;
    }
    bool operator!=(const BitSeries &other) const { return !(*this == other); }

    BitSeries &operator^=(const BitSeries &other)
    {
        detail::require_same_order(order_, other.order_, "BitSeries::operator^=");
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }

    friend BitSeries operator^(BitSeries a, const BitSeries &b)
    {
        a ^= b;
        return a;
    }
    // Addition and subtraction coincide with XOR in characteristic 2.
    friend BitSeries operator+(const BitSeries &a, const BitSeries &b) { return a ^ b; }
    friend BitSeries operator-(const BitSeries &a, const BitSeries &b) { return a ^ b; }

    /// Indices with coefficient 1, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> idx;
        for (std::size_t n = 0; n < order_; ++n) {
            if (get(n)) {
                idx.push_back(n);
            }
        }
        return idx;
    }

private:
    std::size_t order_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Mod-2 reduction of an integer series.
inline BitSeries bits_from(const ZSeries &f)
{
    BitSeries b(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (mpz_odd_p(f[n].get_mpz_t())) {
            b.set(n, true);
        }
    }
    return b;
}

/// Carry-less Cauchy product, truncated to the common order.
inline BitSeries bits_mul(const BitSeries &f, const BitSeries &g)
{
    detail::require_same_order(f.order(), g.order(), "bits_mul");
    const std::size_t n = f.order();
    BitSeries h(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.get(i)) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (g.get(j)) {
                h.flip(i + j);
            }
        }
    }
    return h;
}

inline BitSeries bits_inv(const BitSeries &f)
{
    const std::size_t n = f.order();
    if (n == 0 || !f.get(0)) {
        throw std::invalid_argument("bits_inv: constant term must be 1");
    }
    BitSeries g(n);
    g.set(0, true);
    for (std::size_t k = 1; k < n; ++k) {
        bool acc = false;
        for (std::size_t j = 1; j <= k; ++j) {
            if (f.get(j) && g.get(k - j)) {
                acc = !acc;
            }
        }
        g.set(k, acc);
    }
    return g;
}

/// q*f'/f over the binary field.  In characteristic 2, q*f' keeps exactly
/// the odd-exponent bits of f.
inline BitSeries bits_qdlog(const BitSeries &f)
{
    const std::size_t n = f.order();
    if (n == 0 || !f.get(0)) {
        throw std::invalid_argument("bits_qdlog: constant term must be 1");
    }
    BitSeries num(n);
    for (std::size_t k = 1; k < n; k += 2) {
        if (f.get(k)) {
            num.set(k, true);
        }
    }
    return bits_mul(num, bits_inv(f));
}

/// Frobenius square: (sum a_n q^n)^2 = sum a_n q^{2n} in characteristic 2.
inline BitSeries bits_square(const BitSeries &f)
{
    BitSeries h(f.order());
    for (std::size_t k = 0; 2 * k < f.order(); ++k) {
        if (f.get(k)) {
            h.set(2 * k, true);
        }
    }
    return h;
}

/// Square root at truncation order, if one exists: succeeds iff f is
/// supported on even exponents, in which case g(q) with g^2 = f is read
/// off bit by bit.
inline bool bits_sqrt(const BitSeries &f, BitSeries &root)
{
    const std::size_t n = f.order();
    for (std::size_t k = 1; k < n; k += 2) {
        if (f.get(k)) {
            return false;
        }
    }
    root = BitSeries(n);
    for (std::size_t k = 0; 2 * k < n; ++k) {
        if (f.get(2 * k)) {
            root.set(k, true);
        }
    }
    return true;
}

inline BitSeries bits_substitute(const BitSeries &f, std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("bits_substitute: k must be >= 1");
    }
    BitSeries g(f.order());
    for (std::size_t i = 0; i * k < f.order(); ++i) {
        if (f.get(i)) {
            g.set(i * k, true);
        }
    }
    return g;
}

} // namespace qparity

#endif
