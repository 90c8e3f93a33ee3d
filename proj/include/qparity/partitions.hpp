#ifndef QPARITY_PARTITIONS_HPP
#define QPARITY_PARTITIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qparity/series.hpp"

namespace qparity {

/// Exact p(0..limit-1), filled by the pentagonal-number recurrence.
struct PartitionTable {
    std::size_t limit = 0;
    std::vector<mpz_class> values;
};

PartitionTable partition_table(std::size_t limit);
/// Grows an existing table in place; the recurrence only reads lower
/// indices, so no recomputation happens.
void extend_partition_table(PartitionTable &table, std::size_t limit);

/// Bit n = p(n) mod 2, packed 64 per word, least significant bit first.
struct ParityBitmap {
    std::size_t limit = 0;
    std::vector<std::uint64_t> words;

    bool bit(std::size_t n) const { return (words[n >> 6] >> (n & 63)) & 1u; }
};

ParityBitmap parity_bitmap(std::size_t limit);
void extend_parity_bitmap(ParityBitmap &bitmap, std::size_t limit);

/// Cache file layout: magic "PPAR1", 64-bit little-endian count n, then
/// ceil(n/8) bytes with bit k of byte floor(k/8) (LSB first) = p(k) mod 2.
void save_parity_cache(const std::string &path, const ParityBitmap &bitmap);
ParityBitmap load_parity_cache(const std::string &path);

/// sum_{k in Z} (-1)^k q^{k(3k-1)/2}: the pentagonal-number expansion
/// of prod_{n>=1} (1 - q^n).
ZSeries pentagonal_series(std::size_t order);
/// prod_{n>=1} (1 - q^n) truncated, multiplied out factor by factor.
ZSeries euler_product(std::size_t order);

/// 1 + sum_{m>=1} q^{m^2} / ((1-q)(1-q^2)...(1-q^m))^2: partitions
/// counted by the side of their Durfee square.
ZSeries durfee_series(std::size_t order);

/// f(q) = 1 + sum_{n>=1} q^{n^2} / ((1+q)(1+q^2)...(1+q^n))^2.
ZSeries mock_f(std::size_t order);
/// omega(q) = sum_{n>=0} q^{2n^2+2n} / ((1-q)(1-q^3)...(1-q^{2n+1}))^2.
ZSeries mock_omega(std::size_t order);

/// Coefficients at the given indices only.  Peak memory is a single
/// dense summand buffer, not the whole expansion; every requested index
/// is present in the result.
std::map<std::int64_t, mpz_class> mock_f_at(const std::vector<std::int64_t> &indices);
std::map<std::int64_t, mpz_class> mock_omega_at(const std::vector<std::int64_t> &indices);

} // namespace qparity

#endif
