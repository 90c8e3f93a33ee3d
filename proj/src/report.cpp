#include "qparity/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qparity/psi.hpp"

namespace qparity {

namespace {

// Search m = 1, 5, 7, 11, ... for the first index whose partition parity
// matches; bit(idx) pulls from a caller-supplied source.
template <typename BitFn>
std::optional<std::int64_t> first_parity(std::int64_t d, bool want_odd,
                                         std::uint64_t index_cap, BitFn &&bit)
{
    if (d % 24 != 23) {
        throw std::invalid_argument("parity search: need d = 23 mod 24");
    }
    for (std::int64_t m = 1;; m += (m % 6 == 1) ? 4 : 2) {
        const std::uint64_t idx =
            (static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(m) *
                 static_cast<std::uint64_t>(m) +
             1) /
            24;
        if (idx > index_cap) {
            return std::nullopt;
        }
        if (bit(idx) == want_odd) {
            return m;
        }
    }
}

// Auto-extending lookup over a mutable bitmap, doubling to amortize.
bool extending_bit(ParityBitmap &bitmap, std::uint64_t idx, std::uint64_t index_cap)
{
    if (idx >= bitmap.limit) {
        const std::uint64_t target =
            std::min(std::max<std::uint64_t>(idx + 1, 2 * bitmap.limit), index_cap + 1);
        extend_parity_bitmap(bitmap, static_cast<std::size_t>(target));
    }
    return bitmap.bit(static_cast<std::size_t>(idx));
}

} // namespace

std::optional<std::int64_t> first_odd(std::int64_t d, ParityBitmap &bitmap,
                                      std::uint64_t index_cap)
{
    return first_parity(d, true, index_cap,
                        [&](std::uint64_t idx) { return extending_bit(bitmap, idx, index_cap); });
}

std::optional<std::int64_t> first_even(std::int64_t d, ParityBitmap &bitmap,
                                       std::uint64_t index_cap)
{
    return first_parity(d, false, index_cap,
                        [&](std::uint64_t idx) { return extending_bit(bitmap, idx, index_cap); });
}

ParityReport verify_discriminant(std::int64_t d, const VerifyOptions &opts)
{
    ParityReport report;
    report.d = d;

    auto run = [](const char *name, auto &&fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            throw std::runtime_error("stage " + std::string(name) + ": " + e.what());
        }
    };

    report.admissible = is_admissible(d);

    ClassGroup group;
    run("class_group", [&] { group = class_group(d); });
    report.h = group.h();

    OrbitReport orbits;
    run("orbit_report", [&] { orbits = orbit_report(d); });
    report.frob_order = orbits.frob_order;
    report.orbit_count = orbits.orbits.size();
    report.eps_profile = orbits.eps;

    run("odd_order_equivalences", [&] { report.profile = odd_order_equivalences(d); });

    report.odd_bound = 12 * static_cast<std::int64_t>(report.h) + 2;
    report.even_bound = report.odd_bound;
    for (std::int64_t ell : prime_factors(d)) {
        report.even_bound *= ell + 1;
    }

    // Parity searches: consult the shared bitmap when one is provided,
    // fall back to a locally grown one past its end.
    ParityBitmap local;
    auto bit = [&](std::uint64_t idx) {
        if (opts.shared_bitmap && idx < opts.shared_bitmap->limit) {
            return opts.shared_bitmap->bit(static_cast<std::size_t>(idx));
        }
        return extending_bit(local, idx, opts.index_cap);
    };
    run("first_odd", [&] { report.first_odd_m = first_parity(d, true, opts.index_cap, bit); });
    run("first_even", [&] { report.first_even_m = first_parity(d, false, opts.index_cap, bit); });
    report.bounds_ok = report.first_odd_m.has_value() && report.first_even_m.has_value() &&
                       *report.first_odd_m <= report.odd_bound &&
                       *report.first_even_m <= report.even_bound;

    const bool lambert = opts.lambert.value_or(d == 23 || d == 47);
    if (lambert) {
        run("lambert", [&] {
            const PsiExpansion p = psi(d, opts.order);
            const BitSeries lhs = qdlog_psi_mod2(p);
            const std::uint64_t top = static_cast<std::uint64_t>(d) * (opts.order - 1) *
                                          (opts.order - 1) / 24 +
                                      1;
            extend_parity_bitmap(local, std::max<std::uint64_t>(local.limit, top + 1));
            const BitSeries rhs = lambert_rhs(d, opts.order, local);
            report.lambert_checked_to = opts.order;
            for (std::size_t n = 1; n < opts.order; ++n) {
                if (lhs.get(n) != rhs.get(n)) {
                    report.lambert_mismatches.push_back(static_cast<std::int64_t>(n));
                }
            }
        });
    }
    return report;
}

std::vector<ParityReport> scan(std::int64_t dmax, const ScanOptions &opts)
{
    if (dmax < 23) {
        throw std::invalid_argument("scan: dmax must be >= 23");
    }
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 23; d <= dmax; d += 24) {
        if (is_square_free(d)) {
            ds.push_back(d);
        }
    }

    // One bitmap shared read-only by all workers, sized generously for
    // the typical search depth; rare deeper probes extend per-d copies.
    const std::uint64_t initial =
        std::min<std::uint64_t>(std::max<std::uint64_t>(600 * static_cast<std::uint64_t>(dmax),
                                                        1u << 16),
                                opts.verify.index_cap + 1);
    const ParityBitmap shared = parity_bitmap(static_cast<std::size_t>(initial));
    VerifyOptions verify = opts.verify;
    verify.shared_bitmap = &shared;

    std::vector<ParityReport> out(ds.size());
    auto work = [&](std::size_t i) {
        try {
            out[i] = verify_discriminant(ds[i], verify);
        } catch (const std::exception &e) {
            out[i] = ParityReport{};
            out[i].d = ds[i];
            out[i].error = e.what();
        }
    };

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || ds.size() <= 1) {
        for (std::size_t i = 0; i < ds.size(); ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(ds.size()));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= ds.size()) {
                        return;
                    }
                    work(i);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return out;
}

nlohmann::json report_to_json(const ParityReport &r)
{
    nlohmann::json j;
    j["d"] = r.d;
    j["admissible"] = r.admissible;
    j["h"] = r.h;
    j["frob_order"] = r.frob_order;
    j["orbit_count"] = r.orbit_count;
    j["eps_profile"] = r.eps_profile;
    j["first_odd_m"] = r.first_odd_m ? nlohmann::json(*r.first_odd_m) : nlohmann::json(nullptr);
    j["first_even_m"] = r.first_even_m ? nlohmann::json(*r.first_even_m) : nlohmann::json(nullptr);
    j["odd_bound"] = r.odd_bound;
    j["even_bound"] = r.even_bound;
    j["bounds_ok"] = r.bounds_ok;
    j["lambert_checked_to"] = r.lambert_checked_to;
    j["lambert_mismatches"] = r.lambert_mismatches;
    j["odd_order_profile"] = {
        {"ord_odd", r.profile.ord_odd},       {"frob_square", r.profile.frob_square},
        {"chi_all_plus", r.profile.chi_all_plus}, {"primes_1_7", r.profile.primes_1_7},
        {"eq_12", r.profile.eq_12},           {"eq_34", r.profile.eq_34},
        {"all_agree", r.profile.all_agree},
    };
    if (!r.error.empty()) {
        j["error"] = r.error;
    }
    return j;
}

ParityReport report_from_json(const nlohmann::json &j)
{
    ParityReport r;
    r.d = j.at("d").get<std::int64_t>();
    r.admissible = j.at("admissible").get<bool>();
    r.h = j.at("h").get<std::size_t>();
    r.frob_order = j.at("frob_order").get<std::size_t>();
    r.orbit_count = j.at("orbit_count").get<std::size_t>();
    r.eps_profile = j.at("eps_profile").get<std::vector<int>>();
    if (!j.at("first_odd_m").is_null()) {
        r.first_odd_m = j.at("first_odd_m").get<std::int64_t>();
    }
    if (!j.at("first_even_m").is_null()) {
        r.first_even_m = j.at("first_even_m").get<std::int64_t>();
    }
    r.odd_bound = j.at("odd_bound").get<std::int64_t>();
    r.even_bound = j.at("even_bound").get<std::int64_t>();
    r.bounds_ok = j.at("bounds_ok").get<bool>();
    r.lambert_checked_to = j.at("lambert_checked_to").get<std::size_t>();
    r.lambert_mismatches = j.at("lambert_mismatches").get<std::vector<std::int64_t>>();
    const auto &p = j.at("odd_order_profile");
    r.profile.ord_odd = p.at("ord_odd").get<bool>();
    r.profile.frob_square = p.at("frob_square").get<bool>();
    r.profile.chi_all_plus = p.at("chi_all_plus").get<bool>();
    r.profile.primes_1_7 = p.at("primes_1_7").get<bool>();
    r.profile.eq_12 = p.at("eq_12").get<bool>();
    r.profile.eq_34 = p.at("eq_34").get<bool>();
    r.profile.all_agree = p.at("all_agree").get<bool>();
    if (j.contains("error")) {
        r.error = j.at("error").get<std::string>();
    }
    return r;
}

std::string reports_to_csv(const std::vector<ParityReport> &reports)
{
    std::ostringstream out;
    out << "d,admissible,h,frob_order,orbit_count,first_odd_m,first_even_m,"
           "odd_bound,even_bound,bounds_ok,lambert_checked_to\n";
    for (const ParityReport &r : reports) {
        out << r.d << ',' << (r.admissible ? "true" : "false") << ',' << r.h << ','
            << r.frob_order << ',' << r.orbit_count << ',';
        if (r.first_odd_m) {
            out << *r.first_odd_m;
        }
        out << ',';
        if (r.first_even_m) {
            out << *r.first_even_m;
        }
        out << ',' << r.odd_bound << ',' << r.even_bound << ','
            << (r.bounds_ok ? "true" : "false") << ',' << r.lambert_checked_to << '\n';
    }
    return out.str();
}

} // namespace qparity
