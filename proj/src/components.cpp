#include "qparity/components.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "qparity/partitions.hpp"

namespace qparity {

namespace {

ZSeries pad_to(const ZSeries &small, std::size_t order)
{
    ZSeries out = ZSeries::zeros(order);
    for (std::size_t i = 0; i < small.order() && i < order; ++i) {
        out[i] = small[i];
    }
    return out;
}

ZSeries shift_up(const ZSeries &s, std::size_t by)
{
    ZSeries out = ZSeries::zeros(s.order());
    for (std::size_t i = 0; i + by < s.order(); ++i) {
        out[i + by] = s[i];
    }
    return out;
}

// a_f(k) or omega_k from whichever storage the table carries.
const mpz_class &sub_coefficient(const ComponentTable &table, bool from_f, std::int64_t k)
{
    if (table.dense) {
        const ZSeries &s = from_f ? table.f_small : table.w_small;
        if (k < 0 || static_cast<std::size_t>(k) >= s.order()) {
            throw std::logic_error("component table: sub-series shorter than its order implies");
        }
        return s[static_cast<std::size_t>(k)];
    }
    const auto &m = from_f ? table.f_at : table.w_at;
    auto it = m.find(k);
    if (it == m.end()) {
        throw std::invalid_argument("component table: exponent not covered by sparse build");
    }
    return it->second;
}

} // namespace

mpz_class coefficient(const ComponentTable &table, int j, std::int64_t n)
{
    j = ((j % 12) + 12) % 12;
    if (n >= static_cast<std::int64_t>(table.order)) {
        throw std::invalid_argument("coefficient: exponent beyond table order");
    }
    if (j % 3 == 0) {
        return 0;
    }
    if (j % 2 == 1) {
        // +- q^{-1} f(q^24): support n = -1 mod 24
        if (n < -1 || (n + 1) % 24 != 0) {
            return 0;
        }
        const std::int64_t k = (n + 1) / 24;
        const mpz_class &a = sub_coefficient(table, true, k);
        return (j == 1 || j == 7) ? a : mpz_class(-a);
    }
    // signed pieces of 2 q^8 omega(+-q^12): support n = 8 mod 12, split by
    // the parity of (n-8)/12
    if (n < 8 || (n - 8) % 12 != 0) {
        return 0;
    }
    const std::int64_t k = (n - 8) / 12;
    const bool k_even = (k % 2 == 0);
    if ((j == 2 || j == 10) == k_even) {
        return 0; // j=2,10 carry odd k; j=4,8 carry even k
    }
    const mpz_class &w = sub_coefficient(table, false, k);
    mpz_class val = 4 * w;
    if (j == 2 || j == 4) {
        val = -val;
    }
    return val;
}

ComponentTable build_components(std::size_t order)
{
    if (order < 24) {
        throw std::invalid_argument("build_components: order must be >= 24");
    }
    ComponentTable t;
    t.order = order;
    t.dense = true;

    const std::size_t kf = order / 24 + 1;
    const std::size_t kw = (order >= 9) ? (order - 9) / 12 + 1 : 1;
    t.f_small = mock_f(kf);
    t.w_small = mock_omega(kw);

    // Assemble the twelve expansions by substitution.  Entry i of a
    // packet component is C(j; i-1); the q^{-1} shift becomes one extra
    // slot instead of a Laurent type.
    const ZSeries f24 = ser_substitute(pad_to(t.f_small, order + 1), 24, +1);
    const ZSeries w12p = ser_substitute(pad_to(t.w_small, order), 12, +1);
    const ZSeries w12m = ser_substitute(pad_to(t.w_small, order), 12, -1);
    const ZSeries even_part =
        ser_scale(shift_up(ser_add(w12p, w12m), 8), mpz_class(2)); // 4 omega_k, k even
    const ZSeries odd_part =
        ser_scale(shift_up(ser_sub(w12p, w12m), 8), mpz_class(2)); // 4 omega_k, k odd

    for (int j : {1, 5, 7, 11}) {
        t.shifts[static_cast<std::size_t>(j)] = -1;
    }
    t.comps[1] = f24;
    t.comps[7] = f24;
    t.comps[5] = ser_neg(f24);
    t.comps[11] = ser_neg(f24);
    t.comps[2] = ser_neg(odd_part);
    t.comps[10] = odd_part;
    t.comps[4] = ser_neg(even_part);
    t.comps[8] = even_part;
    for (int j : {0, 3, 6, 9}) {
        t.comps[static_cast<std::size_t>(j)] = ZSeries::zeros(order);
    }

    // The substitution route and the index arithmetic in coefficient()
    // must agree everywhere; a mismatch means a broken table.
    for (int j = 0; j < 12; ++j) {
        const ZSeries &s = t.comps[static_cast<std::size_t>(j)];
        const int shift = t.shifts[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < s.order(); ++i) {
            const std::int64_t n = static_cast<std::int64_t>(i) + shift;
            if (n >= static_cast<std::int64_t>(order)) {
                break;
            }
            if (coefficient(t, j, n) != s[i]) {
                throw std::runtime_error("build_components: assembled series disagrees with index map at j=" +
                                         std::to_string(j) + ", n=" + std::to_string(n));
            }
        }
    }
    return t;
}

ComponentTable build_components_sparse(
    const std::vector<std::pair<std::int64_t, std::size_t>> &needs)
{
    std::set<std::int64_t> fidx;
    std::set<std::int64_t> widx;
    std::int64_t max_n = 23; // keep order >= 24 even for empty needs
    for (const auto &[d, ord] : needs) {
        if (d < 1) {
            throw std::invalid_argument("build_components_sparse: discriminant must be positive");
        }
        for (std::int64_t m = 1; m < static_cast<std::int64_t>(ord); ++m) {
            const std::int64_t n = d * m * m;
            max_n = std::max(max_n, n);
            const int j = static_cast<int>(m % 12);
            if (j % 3 == 0) {
                continue;
            }
            if (j % 2 == 1) {
                if ((n + 1) % 24 == 0) {
                    fidx.insert((n + 1) / 24);
                }
            } else if (n >= 8 && (n - 8) % 12 == 0) {
                widx.insert((n - 8) / 12);
            }
        }
    }
    ComponentTable t;
    t.order = static_cast<std::size_t>(max_n) + 1;
    t.dense = false;
    t.f_at = mock_f_at(std::vector<std::int64_t>(fidx.begin(), fidx.end()));
    t.w_at = mock_omega_at(std::vector<std::int64_t>(widx.begin(), widx.end()));
    return t;
}

mpz_class borcherds_exponent(const ComponentTable &table, std::int64_t d, std::int64_t m)
{
    if (d < 1 || m < 1) {
        throw std::invalid_argument("borcherds_exponent: need D >= 1 and m >= 1");
    }
    const std::int64_t n = d * m * m;
    if (n >= static_cast<std::int64_t>(table.order)) {
        throw std::invalid_argument("borcherds_exponent: D*m^2 beyond table order");
    }
    return coefficient(table, static_cast<int>(m % 12), n);
}

mpz_class packet_functional(const ComponentTable &table, std::int64_t n)
{
    return coefficient(table, 1, n) - coefficient(table, 5, n) + coefficient(table, 7, n) -
           coefficient(table, 11, n);
}

} // namespace qparity
