// fibdiv -- Fibonacci divisibility toolkit.
//
// Subcommands: period, check, seq, stats, verify. Results go to stdout,
// one line per fact; diagnostics and usage errors go to stderr. Exit codes:
// 0 success (and verification passed), 1 verification failed, 2 usage error.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibdiv/fibdiv.hpp"
#include "fibdiv/json.hpp"

namespace {

constexpr std::uint64_t kModulusMax = std::uint64_t{1} << 31;
constexpr std::uint64_t kSeqLimitMax = 1'000'000;       // desk scale
constexpr std::uint64_t kWitnessValueMax = 50'000;      // largest index printed exactly

unsigned worker_threads() {
    if (const char* env = std::getenv("FIBDIV_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        return 1;
    }
    return 0;  // auto
}

void print_check(const fibdiv::DivisibilityReport& r) {
    std::cout << r.n << ": ";
    if (r.divides_no_odd_fib) {
        std::cout << "divides no odd Fibonacci ";
        if (r.n % 2 == 0)
            std::cout << "(even)\n";
        else
            std::cout << "(fun=" << r.fundamental << ", 3 | fun)\n";
        return;
    }
    std::cout << "divides an odd Fibonacci (witness index " << *r.witness_index;
    if (*r.witness_index <= kWitnessValueMax)
        std::cout << ", F_" << *r.witness_index << " = "
                  << fibdiv::fib_exact(*r.witness_index).get_str();
    std::cout << ")\n";
}

int print_report(const fibdiv::VerificationReport& report, bool as_json) {
    if (as_json) {
        std::cout << nlohmann::json(report).dump() << "\n";
    } else {
        std::cout << fibdiv::claim_name(report.claim) << " [" << report.range
                  << "]: " << (report.passed ? "PASS" : "FAIL") << "\n";
        for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
        for (const auto& tuple : report.counterexamples) {
            std::cout << "counterexample:";
            for (std::uint64_t v : tuple) std::cout << ' ' << v;
            std::cout << "\n";
        }
    }
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides which integers divide no odd Fibonacci number; "
                 "computes Pisano and fundamental periods; generates the "
                 "A133246 / A133247 / BASE sequences; brute-force-verifies "
                 "the underlying theorems."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for all subcommands");

    std::uint64_t period_k = 0;
    auto* period_cmd = app.add_subcommand("period", "Pisano and fundamental period of K");
    period_cmd->add_option("K", period_k, "modulus")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, kModulusMax));
    std::string period_format = "plain";
    period_cmd->add_option("--format", period_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::uint64_t check_n = 0;
    auto* check_cmd = app.add_subcommand("check", "Does any odd Fibonacci divide by n?");
    check_cmd->add_option("n", check_n, "integer >= 1")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, kModulusMax));
    std::string check_format = "plain";
    check_cmd->add_option("--format", check_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string seq_id;
    std::uint64_t seq_limit = 0;
    std::string seq_format = "plain";
    bool seq_exclude_two = false;
    auto* seq_cmd = app.add_subcommand("seq", "Generate a sequence up to a limit");
    seq_cmd->add_option("id", seq_id, "a133246|a133247|base")
        ->required()
        ->check(CLI::IsMember({"a133246", "a133247", "base"}, CLI::ignore_case));
    seq_cmd->add_option("--limit", seq_limit, "inclusive scan bound")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, kSeqLimitMax));
    seq_cmd->add_option("--format", seq_format, "plain|bfile|json")
        ->check(CLI::IsMember({"plain", "bfile", "json"}));
    seq_cmd->add_flag("--exclude-two", seq_exclude_two,
                      "a133247 only: drop 2 (strict odd-prime reading)");

    std::uint64_t stats_primes = 0;
    auto* stats_cmd = app.add_subcommand("stats", "Count nondividing primes");
    stats_cmd->add_option("--primes", stats_primes, "how many primes, from 2 up")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100'000}));
    std::string stats_format = "plain";
    stats_cmd->add_option("--format", stats_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string verify_claim;
    std::uint64_t verify_max = 0, verify_tmax = 0, verify_samples = 0, verify_kmax = 0;
    std::string verify_format = "plain";
    auto* verify_cmd = app.add_subcommand("verify", "Brute-force-check one claim");
    verify_cmd->add_option("claim", verify_claim,
                           "zero-structure|pisano-bound|criterion-erratum|"
                           "coprime-lcm|lemma-prime-power|corollary-power|"
                           "theorem-base|fastpath")
        ->required();
    verify_cmd->add_option("--max", verify_max, "scan bound (claim-specific default)")
        ->check(CLI::Range(std::uint64_t{1}, kSeqLimitMax));
    verify_cmd->add_option("--tmax", verify_tmax, "max prime-power exponent")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{8}));
    verify_cmd->add_option("--samples", verify_samples, "fastpath sample count")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));
    verify_cmd->add_option("--kmax", verify_kmax, "fastpath modulus bound")
        ->check(CLI::Range(std::uint64_t{1}, kModulusMax));
    verify_cmd->add_option("--format", verify_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (period_cmd->parsed()) {
            const fibdiv::PeriodInfo info = fibdiv::period_info(period_k);
            if (period_format == "json")
                std::cout << nlohmann::json(info).dump() << "\n";
            else
                std::cout << info.modulus << ": pisano=" << info.pisano
                          << " fundamental=" << info.fundamental
                          << " zeros_per_period=" << info.zero_count << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            const fibdiv::DivisibilityReport report = fibdiv::divides_no_odd_fib(check_n);
            if (check_format == "json")
                std::cout << nlohmann::json(report).dump() << "\n";
            else
                print_check(report);
            return 0;
        }

        if (seq_cmd->parsed()) {
            std::string id_lower;
            for (char c : seq_id) id_lower += static_cast<char>(std::tolower(c));
            fibdiv::SequenceId id = fibdiv::SequenceId::BASE;
            if (id_lower == "a133246") id = fibdiv::SequenceId::A133246;
            else if (id_lower == "a133247") id = fibdiv::SequenceId::A133247;
            if (seq_exclude_two && id != fibdiv::SequenceId::A133247) {
                std::cerr << "--exclude-two only applies to a133247\n" << app.help();
                return 2;
            }
            fibdiv::GenerateOptions options;
            options.threads = worker_threads();
            options.include_two = !seq_exclude_two;
            const fibdiv::TermList list = fibdiv::generate(id, seq_limit, options);
            if (seq_format == "bfile") {
                std::cout << fibdiv::to_bfile(list);
            } else if (seq_format == "json") {
                std::cout << nlohmann::json(list).dump() << "\n";
            } else {
                for (std::uint64_t term : list.terms) std::cout << term << "\n";
            }
            return 0;
        }

        if (stats_cmd->parsed()) {
            const auto [count, total] = fibdiv::prime_nondividing_count(stats_primes);
            if (stats_format == "json")
                std::cout << nlohmann::json({{"count", count}, {"total", total}}).dump()
                          << "\n";
            else
                std::cout << count << " / " << total << "\n";
            return 0;
        }

        // verify
        const auto claim = fibdiv::claim_from_name(verify_claim);
        if (!claim) {
            std::cerr << "unknown claim: " << verify_claim << "\n" << app.help();
            return 2;
        }
        const bool as_json = verify_format == "json";
        using fibdiv::Claim;
        switch (*claim) {
            case Claim::ZERO_STRUCTURE:
                return print_report(
                    fibdiv::verify_zero_structure(verify_max ? verify_max : 2000),
                    as_json);
            case Claim::PISANO_BOUND:
                return print_report(
                    fibdiv::verify_pisano_bound(verify_max ? verify_max : 10'000),
                    as_json);
            case Claim::CRITERION_ERRATUM:
                return print_report(
                    fibdiv::verify_criterion_erratum(verify_max ? verify_max : 500),
                    as_json);
            case Claim::COPRIME_LCM:
                return print_report(
                    fibdiv::verify_coprime_lcm(verify_max ? verify_max : 300),
                    as_json);
            case Claim::LEMMA_PRIME_POWER:
                return print_report(
                    fibdiv::verify_lemma_prime_powers(verify_max ? verify_max : 50,
                                                      verify_tmax ? verify_tmax : 3),
                    as_json);
            case Claim::COROLLARY_POWER:
                return print_report(
                    fibdiv::verify_corollary_power(verify_max ? verify_max : 50,
                                                   verify_tmax ? verify_tmax : 3),
                    as_json);
            case Claim::THEOREM_BASE:
                return print_report(
                    fibdiv::verify_theorem_base(verify_max ? verify_max : 10'000,
                                                worker_threads()),
                    as_json);
            case Claim::FASTPATH_EQUIV:
                return print_report(
                    fibdiv::verify_fastpath(verify_samples ? verify_samples : 10'000,
                                            verify_max ? verify_max : 100'000,
                                            verify_kmax ? verify_kmax : 1'000'000),
                    as_json);
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
