#ifndef QPARITY_REPORT_HPP
#define QPARITY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qparity/forms.hpp"
#include "qparity/partitions.hpp"

namespace qparity {

struct VerifyOptions {
    std::size_t order = 300;             // truncation for the product/Lambert stage
    std::optional<bool> lambert;         // unset: run exactly for d = 23, 47
    std::uint64_t index_cap = 10000000;  // largest partition index the searches consult
    // Optional read-only bitmap consulted before any local extension;
    // lets a scan share one table across worker threads.
    const ParityBitmap *shared_bitmap = nullptr;
};

/// Everything the per-discriminant pipeline measures.
struct ParityReport {
    std::int64_t d = 0;
    bool admissible = false;
    std::size_t h = 0;
    std::size_t frob_order = 0;
    std::size_t orbit_count = 0;
    std::vector<int> eps_profile;              // genus sign per Heegner representative
    std::optional<std::int64_t> first_odd_m;   // least m, (m,6)=1, p((d m^2+1)/24) odd
    std::optional<std::int64_t> first_even_m;
    std::int64_t odd_bound = 0;                // 12 h + 2
    std::int64_t even_bound = 0;               // (12 h + 2) prod_{ell | d} (ell + 1)
    bool bounds_ok = false;
    std::size_t lambert_checked_to = 0;        // 0 when the stage was skipped
    std::vector<std::int64_t> lambert_mismatches;
    OddOrderEquivalences profile;
    std::string error;                         // nonempty when a scan stage failed
};

/// Least m with (m,6)=1 and p((d m^2+1)/24) odd; the bitmap grows on
/// demand.  Empty when the index cap is reached first.
std::optional<std::int64_t> first_odd(std::int64_t d, ParityBitmap &bitmap,
                                      std::uint64_t index_cap = 10000000);
std::optional<std::int64_t> first_even(std::int64_t d, ParityBitmap &bitmap,
                                       std::uint64_t index_cap = 10000000);

/// Runs the full pipeline for one discriminant: admissibility, class
/// group, Heegner orbits, the four order conditions, parity searches
/// against the effective bounds, and (optionally) the mod-2 Lambert
/// comparison.  Stage failures propagate with the stage named.
ParityReport verify_discriminant(std::int64_t d, const VerifyOptions &opts = {});

struct ScanOptions {
    VerifyOptions verify;
    unsigned jobs = 1;
};

/// verify_discriminant over every square-free d = 23 mod 24 up to dmax,
/// ascending; per-d failures are captured in the report's error field.
std::vector<ParityReport> scan(std::int64_t dmax, const ScanOptions &opts = {});

nlohmann::json report_to_json(const ParityReport &r);
ParityReport report_from_json(const nlohmann::json &j);
/// One row per report, scalar fields only.
std::string reports_to_csv(const std::vector<ParityReport> &reports);

} // namespace qparity

#endif
