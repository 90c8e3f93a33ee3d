#include "qparity/partitions.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace qparity {

PartitionTable partition_table(std::size_t limit)
{
    PartitionTable table;
    extend_partition_table(table, limit);
    return table;
}

void extend_partition_table(PartitionTable &table, std::size_t limit)
{
    if (limit < 1) {
        throw std::invalid_argument("partition_table: limit must be >= 1");
    }
    if (table.values.empty()) {
        table.values.emplace_back(1);
    }
    table.values.reserve(std::max(limit, table.values.size()));
    for (std::size_t n = table.values.size(); n < limit; ++n) {
        mpz_class acc(0);
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const bool plus = (k % 2) == 1;
            if (plus) {
                acc += table.values[n - g1];
            } else {
                acc -= table.values[n - g1];
            }
            const std::size_t g2 = g1 + k;
            if (g2 <= n) {
                if (plus) {
                    acc += table.values[n - g2];
                } else {
                    acc -= table.values[n - g2];
                }
            }
        }
        table.values.push_back(std::move(acc));
    }
    table.limit = table.values.size();
}

ParityBitmap parity_bitmap(std::size_t limit)
{
    ParityBitmap bitmap;
    extend_parity_bitmap(bitmap, limit);
    return bitmap;
}

void extend_parity_bitmap(ParityBitmap &bitmap, std::size_t limit)
{
    if (limit < 1) {
        throw std::invalid_argument("parity_bitmap: limit must be >= 1");
    }
    if (limit <= bitmap.limit) {
        return;
    }
    bitmap.words.resize((limit + 63) / 64, 0);
    std::size_t start = bitmap.limit;
    if (start == 0) {
        bitmap.words[0] |= 1u; // p(0) = 1
        start = 1;
    }
    for (std::size_t n = start; n < limit; ++n) {
        unsigned acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            acc ^= static_cast<unsigned>(bitmap.bit(n - g1));
            const std::size_t g2 = g1 + k;
            if (g2 <= n) {
                acc ^= static_cast<unsigned>(bitmap.bit(n - g2));
            }
        }
        if (acc) {
            bitmap.words[n >> 6] |= std::uint64_t(1) << (n & 63);
        }
    }
    bitmap.limit = limit;
}

void save_parity_cache(const std::string &path, const ParityBitmap &bitmap)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("save_parity_cache: cannot open " + path);
    }
    out.write("PPAR1", 5);
    const std::uint64_t n = bitmap.limit;
    unsigned char hdr[8];
    for (int i = 0; i < 8; ++i) {
        hdr[i] = static_cast<unsigned char>((n >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char *>(hdr), 8);
    const std::size_t nbytes = (bitmap.limit + 7) / 8;
    std::vector<unsigned char> bytes(nbytes, 0);
    for (std::size_t i = 0; i < nbytes; ++i) {
        bytes[i] = static_cast<unsigned char>(
            (bitmap.words[i / 8] >> (8 * (i % 8))) & 0xff);
    }
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(nbytes));
    if (!out) {
        throw std::runtime_error("save_parity_cache: write failed for " + path);
    }
}

ParityBitmap load_parity_cache(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("load_parity_cache: cannot open " + path);
    }
    char magic[5];
    in.read(magic, 5);
    if (!in || std::memcmp(magic, "PPAR1", 5) != 0) {
        throw std::runtime_error("load_parity_cache: bad magic in " + path);
    }
    unsigned char hdr[8];
    in.read(reinterpret_cast<char *>(hdr), 8);
    if (!in) {
        throw std::runtime_error("load_parity_cache: truncated header in " + path);
    }
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        n |= static_cast<std::uint64_t>(hdr[i]) << (8 * i);
    }
    const std::size_t nbytes = (static_cast<std::size_t>(n) + 7) / 8;
    std::vector<unsigned char> bytes(nbytes);
    in.read(reinterpret_cast<char *>(bytes.data()),
            static_cast<std::streamsize>(nbytes));
    if (!in) {
        throw std::runtime_error("load_parity_cache: truncated payload in " + path);
    }
    ParityBitmap bitmap;
    bitmap.limit = static_cast<std::size_t>(n);
    bitmap.words.assign((bitmap.limit + 63) / 64, 0);
    for (std::size_t i = 0; i < nbytes; ++i) {
        bitmap.words[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    }
    return bitmap;
}

ZSeries pentagonal_series(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("pentagonal_series: order must be >= 1");
    }
    ZSeries out = ZSeries::zeros(order);
    out[0] = 1;
    for (std::size_t k = 1;; ++k) {
        const std::size_t g1 = k * (3 * k - 1) / 2;
        if (g1 >= order) {
            break;
        }
        const int sign = (k % 2 == 1) ? -1 : 1;
        out[g1] = sign;
        const std::size_t g2 = g1 + k;
        if (g2 < order) {
            out[g2] = sign;
        }
    }
    return out;
}

ZSeries euler_product(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("euler_product: order must be >= 1");
    }
    // (1 - q^n) applied as an in-place sparse update, highest index first.
    ZSeries out = ZSeries::zeros(order);
    out[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        for (std::size_t j = order; j-- > n;) {
            if (sgn(out[j - n]) != 0) {
                out[j] -= out[j - n];
            }
        }
    }
    return out;
}

namespace {

// In place u *= 1/(1 - sign*q^c) on a buffer whose entries are the
// coefficients of q^{base..base+size-1}; the recurrence is the same in
// shifted coordinates because the factor has constant term 1.
void div_in_place(std::vector<mpz_class> &u, std::size_t c, int sign)
{
    const std::size_t n = u.size();
    if (sign > 0) {
        for (std::size_t j = c; j < n; ++j) {
            u[j] += u[j - c];
        }
    } else {
        for (std::size_t j = c; j < n; ++j) {
            u[j] -= u[j - c];
        }
    }
}

// Summands q^{m^2} / prod_{j<=m} (1 - sign*q^j)^2 for m = 1, 2, ...,
// each produced from the previous one by a shift of q^{2m-1} (a base
// move, no data move) and two divisions.  emit(base, t) sees the
// coefficients of q^{base+i} in t[i], truncated at `order`.
template <typename Emit>
void square_summands(std::size_t order, int sign, Emit &&emit)
{
    std::vector<mpz_class> t;
    std::size_t base = 0;
    for (std::size_t m = 1;; ++m) {
        base += 2 * m - 1;
        if (base >= order) {
            break;
        }
        if (m == 1) {
            t.assign(order - base, mpz_class(0));
            t[0] = 1;
        } else {
            t.resize(order - base); // entries past the truncation fall off
        }
        div_in_place(t, m, sign);
        div_in_place(t, m, sign);
        emit(base, t);
    }
}

// Summands q^{2n^2+2n} / prod_{j<=n} (1 - q^{2j+1})^2 for n = 0, 1, ...
template <typename Emit>
void omega_summands(std::size_t order, Emit &&emit)
{
    std::vector<mpz_class> t;
    std::size_t base = 0;
    for (std::size_t n = 0;; ++n) {
        base += (n == 0) ? 0 : 4 * n;
        if (base >= order) {
            break;
        }
        if (n == 0) {
            t.assign(order, mpz_class(0));
            t[0] = 1;
        } else {
            t.resize(order - base);
        }
        div_in_place(t, 2 * n + 1, +1);
        div_in_place(t, 2 * n + 1, +1);
        emit(base, t);
    }
}

void require_order(std::size_t order, const char *who)
{
    if (order < 1) {
        throw std::invalid_argument(std::string(who) + ": order must be >= 1");
    }
}

} // namespace

ZSeries durfee_series(std::size_t order)
{
    require_order(order, "durfee_series");
    ZSeries out = ZSeries::zeros(order);
    out[0] = 1;
    square_summands(order, +1, [&](std::size_t base, const std::vector<mpz_class> &t) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (sgn(t[j]) != 0) {
                out[base + j] += t[j];
            }
        }
    });
    return out;
}

ZSeries mock_f(std::size_t order)
{
    require_order(order, "mock_f");
    ZSeries out = ZSeries::zeros(order);
    out[0] = 1;
    square_summands(order, -1, [&](std::size_t base, const std::vector<mpz_class> &t) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (sgn(t[j]) != 0) {
                out[base + j] += t[j];
            }
        }
    });
    return out;
}

ZSeries mock_omega(std::size_t order)
{
    require_order(order, "mock_omega");
    ZSeries out = ZSeries::zeros(order);
    omega_summands(order, [&](std::size_t base, const std::vector<mpz_class> &t) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (sgn(t[j]) != 0) {
                out[base + j] += t[j];
            }
        }
    });
    return out;
}

namespace {

std::map<std::int64_t, mpz_class> prepare_targets(const std::vector<std::int64_t> &indices)
{
    std::map<std::int64_t, mpz_class> out;
    for (std::int64_t i : indices) {
        if (i < 0) {
            throw std::invalid_argument("coefficient index must be nonnegative");
        }
        out.emplace(i, mpz_class(0));
    }
    return out;
}

} // namespace

std::map<std::int64_t, mpz_class> mock_f_at(const std::vector<std::int64_t> &indices)
{
    auto out = prepare_targets(indices);
    if (out.empty()) {
        return out;
    }
    auto it0 = out.find(0);
    if (it0 != out.end()) {
        it0->second = 1;
    }
    const std::size_t order = static_cast<std::size_t>(out.rbegin()->first) + 1;
    square_summands(order, -1, [&](std::size_t base, const std::vector<mpz_class> &t) {
        for (auto it = out.lower_bound(static_cast<std::int64_t>(base)); it != out.end();
             ++it) {
            it->second += t[static_cast<std::size_t>(it->first) - base];
        }
    });
    return out;
}

std::map<std::int64_t, mpz_class> mock_omega_at(const std::vector<std::int64_t> &indices)
{
    auto out = prepare_targets(indices);
    if (out.empty()) {
        return out;
    }
    const std::size_t order = static_cast<std::size_t>(out.rbegin()->first) + 1;
    omega_summands(order, [&](std::size_t base, const std::vector<mpz_class> &t) {
        for (auto it = out.lower_bound(static_cast<std::int64_t>(base)); it != out.end();
             ++it) {
            it->second += t[static_cast<std::size_t>(it->first) - base];
        }
    });
    return out;
}

} // namespace qparity
