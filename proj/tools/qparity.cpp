// Command-line front end: per-discriminant verification, range scans,
// expansion printing, class group inspection, identity sanity suite,
// and the partition parity cache.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 usage error.

#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qparity/forms.hpp"
#include "qparity/partitions.hpp"
#include "qparity/psi.hpp"
#include "qparity/report.hpp"
#include "qparity/series.hpp"

namespace {

using namespace qparity;

// The subcommands all operate on square-free d = 23 mod 24; anything
// else is rejected before any computation starts.
bool valid_discriminant(std::int64_t d)
{
    return d > 1 && d % 24 == 23 && is_square_free(d);
}

int usage_error(const std::string &msg)
{
    std::cerr << "error: " << msg << '\n';
    return 2;
}

// Mismatches at indices sharing a factor with d are the expected
// boundary behavior; a mismatch at gcd(n, d) = 1 is a real failure.
bool lambert_clean(const ParityReport &r)
{
    for (std::int64_t n : r.lambert_mismatches) {
        if (std::gcd(n, r.d) == 1) {
            return false;
        }
    }
    return true;
}

int report_verdict(const ParityReport &r)
{
    if (!r.error.empty()) {
        return 1;
    }
    if (!lambert_clean(r)) {
        return 1;
    }
    if (r.admissible && (!r.bounds_ok || !r.profile.ord_odd)) {
        return 1;
    }
    return 0;
}

void print_report(std::ostream &os, const ParityReport &r)
{
    os << "d " << r.d << ": " << (r.admissible ? "admissible" : "not admissible") << '\n';
    if (!r.error.empty()) {
        os << "  error: " << r.error << '\n';
        return;
    }
    os << "  h = " << r.h << ", frobenius order = " << r.frob_order << ", orbits = "
       << r.orbit_count << ", eps = [";
    for (std::size_t i = 0; i < r.eps_profile.size(); ++i) {
        os << (i ? " " : "") << (r.eps_profile[i] > 0 ? "+1" : "-1");
    }
    os << "]\n";
    os << "  first odd m = ";
    if (r.first_odd_m) {
        os << *r.first_odd_m;
    } else {
        os << "none (cap reached)";
    }
    os << " (bound " << r.odd_bound << "), first even m = ";
    if (r.first_even_m) {
        os << *r.first_even_m;
    } else {
        os << "none (cap reached)";
    }
    os << " (bound " << r.even_bound << "), bounds "
       << (r.bounds_ok ? "ok" : "NOT SATISFIED") << '\n';
    os << "  odd-order conditions: ord_odd=" << r.profile.ord_odd << " square="
       << r.profile.frob_square << " chi_plus=" << r.profile.chi_all_plus
       << " primes_1_7=" << r.profile.primes_1_7 << " agree=" << r.profile.all_agree << '\n';
    if (r.lambert_checked_to > 0) {
        os << "  lambert to " << r.lambert_checked_to << ": " << r.lambert_mismatches.size()
           << " mismatches";
        if (!r.lambert_mismatches.empty()) {
            os << " at";
            for (std::int64_t n : r.lambert_mismatches) {
                os << ' ' << n;
            }
            os << (lambert_clean(r) ? " (all share a factor with d)" : " (UNEXPECTED)");
        }
        os << '\n';
    }
}

int run_verify(std::int64_t d, std::size_t order, bool force_lambert,
               const std::string &json_path)
{
    if (!valid_discriminant(d)) {
        return usage_error("verify: --d must be square-free and 23 mod 24");
    }
    if (order < 2) {
        return usage_error("verify: --order must be at least 2");
    }
    VerifyOptions opts;
    opts.order = order;
    if (force_lambert) {
        opts.lambert = true;
    }
    const ParityReport r = verify_discriminant(d, opts);
    print_report(std::cout, r);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << '\n';
            return 1;
        }
        out << report_to_json(r).dump(2) << '\n';
    }
    return report_verdict(r);
}

int run_scan(std::int64_t dmax, unsigned jobs, const std::string &out_path)
{
    if (dmax < 23) {
        return usage_error("scan: --dmax must be at least 23");
    }
    const bool want_json = out_path.size() >= 5 &&
                           out_path.compare(out_path.size() - 5, 5, ".json") == 0;
    const bool want_csv = out_path.size() >= 4 &&
                          out_path.compare(out_path.size() - 4, 4, ".csv") == 0;
    if (!out_path.empty() && !want_json && !want_csv) {
        return usage_error("scan: --out must end in .json or .csv");
    }

    ScanOptions opts;
    opts.jobs = jobs;
    const std::vector<ParityReport> reports = scan(dmax, opts);

    std::cout << std::setw(6) << "d" << std::setw(5) << "adm" << std::setw(5) << "h"
              << std::setw(6) << "frob" << std::setw(5) << "orb" << std::setw(10)
              << "first_odd" << std::setw(11) << "first_even" << std::setw(8) << "odd_bd"
              << std::setw(9) << "even_bd" << std::setw(5) << "ok" << '\n';
    int failures = 0;
    for (const ParityReport &r : reports) {
        if (!r.error.empty()) {
            std::cout << std::setw(6) << r.d << "  error: " << r.error << '\n';
            ++failures;
            continue;
        }
        std::cout << std::setw(6) << r.d << std::setw(5) << (r.admissible ? "yes" : "no")
                  << std::setw(5) << r.h << std::setw(6) << r.frob_order << std::setw(5)
                  << r.orbit_count << std::setw(10)
                  << (r.first_odd_m ? std::to_string(*r.first_odd_m) : "-") << std::setw(11)
                  << (r.first_even_m ? std::to_string(*r.first_even_m) : "-") << std::setw(8)
                  << r.odd_bound << std::setw(9) << r.even_bound << std::setw(5)
                  << (r.bounds_ok ? "yes" : "NO");
        if (r.admissible && !r.profile.ord_odd) {
            std::cout << "  frob order even";
        }
        if (!lambert_clean(r)) {
            std::cout << "  lambert mismatch at coprime index";
        }
        std::cout << '\n';
        failures += report_verdict(r) != 0;
    }
    std::cout << "scanned " << reports.size() << " discriminants, " << failures
              << " failures\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 1;
        }
        if (want_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const ParityReport &r : reports) {
                arr.push_back(report_to_json(r));
            }
            out << arr.dump(2) << '\n';
        } else {
            out << reports_to_csv(reports);
        }
    }
    return failures == 0 ? 0 : 1;
}

int run_psi(std::int64_t d, std::size_t order, bool mod2)
{
    if (!valid_discriminant(d)) {
        return usage_error("psi: --d must be square-free and 23 mod 24");
    }
    if (order < 2) {
        return usage_error("psi: --order must be at least 2");
    }
    const PsiExpansion p = psi(d, order);
    if (mod2) {
        const BitSeries bits = psi_mod2(p);
        std::cout << "Psi_" << d << " mod 2 = ";
        bool first = true;
        for (std::size_t n = 0; n < order; ++n) {
            if (!bits.get(n)) {
                continue;
            }
            if (!first) {
                std::cout << " + ";
            }
            first = false;
            if (n == 0) {
                std::cout << "1";
            } else if (n == 1) {
                std::cout << "q";
            } else {
                std::cout << "q^" << n;
            }
        }
        std::cout << (first ? "0 + " : " + ") << "O(q^" << order << ")\n";
        return 0;
    }
    std::cout << "Psi_" << d << " to order " << order
              << ", coefficients in Z[(1+sqrt(-" << d << "))/2]\n";
    for (std::size_t n = 0; n < order; ++n) {
        std::cout << "q^" << n << ": " << p.coeffs[n] << '\n';
    }
    return 0;
}

int run_class(std::int64_t d)
{
    if (!valid_discriminant(d)) {
        return usage_error("class: --d must be square-free and 23 mod 24");
    }
    const OrbitReport rep = orbit_report(d);
    const ClassGroup group = class_group(d);

    std::cout << "discriminant -" << d << ": h = " << group.h() << '\n';
    std::cout << "reduced classes:\n";
    for (std::size_t i = 0; i < group.classes.size(); ++i) {
        const Form &f = group.classes[i];
        std::cout << "  [" << i << "] " << f << "  order " << class_order(group, f)
                  << (is_principal(f) ? "  (principal)" : "") << '\n';
    }
    std::cout << "frobenius class " << rep.frob_class << ", order " << rep.frob_order << '\n';
    std::cout << "heegner set (6 | a, b = 1 mod 12):\n";
    for (std::size_t i = 0; i < rep.heegner.reps.size(); ++i) {
        std::cout << "  [" << i << "] " << rep.heegner.reps[i] << " -> class "
                  << rep.heegner.classes[i] << ", eps "
                  << (rep.eps[i] > 0 ? "+1" : "-1") << '\n';
    }
    std::cout << "orbits under frobenius translation:\n";
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
        std::cout << "  orbit " << i << ": reps";
        for (std::size_t j : rep.orbits[i]) {
            std::cout << ' ' << j;
        }
        std::cout << " (size " << rep.orbits[i].size() << "), residue parity "
                  << rep.residue_parity[i] << '\n';
    }
    return 0;
}

int run_identities(std::size_t order)
{
    if (order < 24) {
        return usage_error("identities: --order must be at least 24");
    }
    int rc = 0;
    auto line = [&](const std::string &name, bool ok, const std::string &detail) {
        std::cout << name << ": " << (ok ? "ok" : "FAIL " + detail) << '\n';
        if (!ok) {
            rc = 1;
        }
    };

    PartitionTable table = partition_table(order);
    ZSeries p_series = ZSeries::zeros(order);
    for (std::size_t n = 0; n < order; ++n) {
        p_series[n] = table.values[n];
    }

    const ZSeries durfee = durfee_series(order);
    std::size_t bad = order;
    for (std::size_t n = 0; n < order; ++n) {
        if (durfee[n] != p_series[n]) {
            bad = n;
            break;
        }
    }
    line("durfee identity to order " + std::to_string(order), bad == order,
         "at index " + std::to_string(bad));

    const ZSeries f = mock_f(order);
    bad = order;
    for (std::size_t n = 0; n < order; ++n) {
        if (mpz_class((p_series[n] - f[n]) % 4) != 0) {
            bad = n;
            break;
        }
    }
    line("P = f mod 4 to order " + std::to_string(order), bad == order,
         "at index " + std::to_string(bad));

    const struct {
        std::size_t mod, res;
    } cases[] = {{5, 4}, {7, 5}, {11, 6}};
    for (const auto &c : cases) {
        bad = 0;
        bool ok = true;
        for (std::size_t n = c.res; n < order; n += c.mod) {
            if (mpz_class(table.values[n] % c.mod) != 0) {
                ok = false;
                bad = n;
                break;
            }
        }
        line("ramanujan p(" + std::to_string(c.mod) + "n+" + std::to_string(c.res) +
                 ") = 0 mod " + std::to_string(c.mod) + " below " + std::to_string(order),
             ok, "at argument " + std::to_string(bad));
    }
    return rc;
}

int run_cache_build(std::size_t limit, const std::string &out_path)
{
    if (limit < 1) {
        return usage_error("cache build: --limit must be at least 1");
    }
    const ParityBitmap bitmap = parity_bitmap(limit);
    save_parity_cache(out_path, bitmap);
    std::size_t odd = 0;
    for (std::uint64_t w : bitmap.words) {
        odd += std::popcount(w);
    }
    std::cout << "wrote " << out_path << ": " << bitmap.limit << " parities, " << odd
              << " odd\n";
    return 0;
}

int run_cache_info(const std::string &path)
{
    const ParityBitmap bitmap = load_parity_cache(path);
    std::size_t odd = 0;
    for (std::uint64_t w : bitmap.words) {
        odd += std::popcount(w);
    }
    std::cout << path << ": " << bitmap.limit << " parities, " << odd << " odd ("
              << std::fixed << std::setprecision(4)
              << (bitmap.limit ? double(odd) / double(bitmap.limit) : 0.0) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Partition parity toolkit: twisted Borcherds products, Heegner class "
                 "orbits, and effective parity searches in exact arithmetic"};
    app.require_subcommand(1);

    std::int64_t d = 0;
    std::int64_t dmax = 0;
    std::size_t order = 300;
    std::size_t identities_order = 500;
    std::size_t cache_limit = 0;
    unsigned jobs = 1;
    bool force_lambert = false;
    bool mod2 = false;
    std::string json_path;
    std::string out_path;
    std::string cache_out;
    std::string cache_file;

    CLI::App *verify = app.add_subcommand("verify", "Full report for one discriminant");
    verify->add_option("--d", d, "Discriminant (square-free, 23 mod 24)")->required();
    verify->add_option("--order", order, "Truncation order for the Lambert stage");
    verify->add_flag("--lambert", force_lambert,
                     "Run the Lambert comparison even when d is not 23 or 47");
    verify->add_option("--json", json_path, "Write the report as JSON to this path");

    CLI::App *scan_cmd = app.add_subcommand("scan", "Reports for all d = 23 mod 24 up to a bound");
    scan_cmd->add_option("--dmax", dmax, "Largest discriminant to scan")->required();
    scan_cmd->add_option("--jobs", jobs, "Worker threads");
    scan_cmd->add_option("--out", out_path, "Write reports to this .json or .csv path");

    CLI::App *psi_cmd = app.add_subcommand("psi", "Print the product expansion");
    psi_cmd->add_option("--d", d, "Discriminant (square-free, 23 mod 24)")->required();
    psi_cmd->add_option("--order", order, "Truncation order")->required();
    psi_cmd->add_flag("--mod2", mod2, "Reduce coefficients modulo a prime above 2");

    CLI::App *class_cmd = app.add_subcommand("class", "Class group, Heegner set, orbits");
    class_cmd->add_option("--d", d, "Discriminant (square-free, 23 mod 24)")->required();

    CLI::App *identities = app.add_subcommand("identities", "Partition identity sanity suite");
    identities->add_option("--order", identities_order, "Truncation order");

    CLI::App *cache = app.add_subcommand("cache", "Partition parity cache files");
    cache->require_subcommand(1);
    CLI::App *cache_build = cache->add_subcommand("build", "Compute and save parities");
    cache_build->add_option("--limit", cache_limit, "Number of parities p(0)..p(limit-1)")
        ->required();
    cache_build->add_option("--out", cache_out, "Output path")->required();
    CLI::App *cache_info = cache->add_subcommand("info", "Describe a cache file");
    cache_info->add_option("file", cache_file, "Cache path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            return run_verify(d, order, force_lambert, json_path);
        }
        if (*scan_cmd) {
            return run_scan(dmax, jobs, out_path);
        }
        if (*psi_cmd) {
            return run_psi(d, order, mod2);
        }
        if (*class_cmd) {
            return run_class(d);
        }
        if (*identities) {
            return run_identities(identities_order);
        }
        if (*cache_build) {
            return run_cache_build(cache_limit, cache_out);
        }
        if (*cache_info) {
            return run_cache_info(cache_file);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
