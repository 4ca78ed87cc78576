#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibdiv/sequences.hpp"

namespace fibdiv {

enum class Claim {
    ZERO_STRUCTURE,     // zeros of F mod K are exactly the multiples of fun(K)
    PISANO_BOUND,       // pisano(K) <= 6K
    CRITERION_ERRATUM,  // no odd Fibonacci divisible by n <=> 3 | fun(n);
                        // the inverted-polarity misquote is refuted
    COPRIME_LCM,        // fun(mn) = lcm(fun(m), fun(n)) for coprime m, n;
                        // the gcd misstatement is refuted
    LEMMA_PRIME_POWER,  // fun(p^{t+1}) is fun(p^t) or p*fun(p^t)
    COROLLARY_POWER,    // fun(p^t)/fun(p) is a power of p
    THEOREM_BASE,       // 9 is the only composite in BASE
    FASTPATH_EQUIV,     // fast doubling equals the iterative exact oracle
};

inline std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::ZERO_STRUCTURE: return "ZERO_STRUCTURE";
        case Claim::PISANO_BOUND: return "PISANO_BOUND";
        case Claim::CRITERION_ERRATUM: return "CRITERION_ERRATUM";
        case Claim::COPRIME_LCM: return "COPRIME_LCM";
        case Claim::LEMMA_PRIME_POWER: return "LEMMA_PRIME_POWER";
        case Claim::COROLLARY_POWER: return "COROLLARY_POWER";
        case Claim::THEOREM_BASE: return "THEOREM_BASE";
        case Claim::FASTPATH_EQUIV: return "FASTPATH_EQUIV";
    }
    throw std::invalid_argument("fibdiv: unknown claim");
}

/// Accepts the canonical name in any case, with '-' and '_' interchangeable
/// ("criterion-erratum" == "CRITERION_ERRATUM").
inline std::optional<Claim> claim_from_name(std::string_view name) {
    std::string key;
    for (char ch : name)
        key += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (Claim c : {Claim::ZERO_STRUCTURE, Claim::PISANO_BOUND,
                    Claim::CRITERION_ERRATUM, Claim::COPRIME_LCM,
                    Claim::LEMMA_PRIME_POWER, Claim::COROLLARY_POWER,
                    Claim::THEOREM_BASE, Claim::FASTPATH_EQUIV})
        if (key == claim_name(c)) return c;
    if (key == "FASTPATH") return Claim::FASTPATH_EQUIV;
    return std::nullopt;
}

/// Result of one brute-force scan. A failing report always carries at least
/// one counterexample tuple, each reproducible by a single library call;
/// notes carry side findings (equality attainers, refutations of the
/// misprinted forms) that are not failures.
struct VerificationReport {
    Claim claim = Claim::ZERO_STRUCTURE;
    std::string range;
    bool passed = false;
    std::vector<std::vector<std::uint64_t>> counterexamples;
    std::vector<std::string> notes;
};

namespace detail {

// Largest modulus the 64-bit residue arithmetic promises exactness for.
inline constexpr std::uint64_t kArithmeticContractMax = std::uint64_t{1} << 31;

inline std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out.empty() ? std::string("none") : out;
}

inline bool is_power_of(std::uint64_t value, std::uint64_t p) {
    while (value % p == 0) value /= p;
    return value == 1;
}

}  // namespace detail

/// For each 2 <= K <= k_max: the zero indices of F mod K within one Pisano
/// period are exactly {0, m, 2m, ...} for m = fun(K).
inline VerificationReport verify_zero_structure(std::uint64_t k_max) {
    if (k_max < 2) throw std::invalid_argument("fibdiv: k_max must be >= 2");
    VerificationReport report;
    report.claim = Claim::ZERO_STRUCTURE;
    report.range = "K in [2, " + std::to_string(k_max) + "]";
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        const std::uint64_t m = fundamental_period(k);
        const std::uint64_t pisano = pisano_period(k);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t z = 0; z < pisano; z += m) expected.push_back(z);
        if (zero_indices(k) != expected) report.counterexamples.push_back({k});
    }
    report.passed = report.counterexamples.empty();
    return report;
}

/// pisano(K) <= 6K for all K <= k_max; the set of K attaining equality is
/// reported as a note.
inline VerificationReport verify_pisano_bound(std::uint64_t k_max) {
    if (k_max < 1) throw std::invalid_argument("fibdiv: k_max must be >= 1");
    VerificationReport report;
    report.claim = Claim::PISANO_BOUND;
    report.range = "K in [1, " + std::to_string(k_max) + "]";
    std::vector<std::uint64_t> equality;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        try {
            const std::uint64_t pisano = pisano_period(k);
            if (pisano > 6 * k)
                report.counterexamples.push_back({k});
            else if (pisano == 6 * k)
                equality.push_back(k);
        } catch (const std::runtime_error&) {
            // scan cap blown: a violation, not an infrastructure failure
            report.counterexamples.push_back({k});
        }
    }
    report.notes.push_back("pisano(K) == 6K at K: " + detail::join_u64(equality));
    report.passed = report.counterexamples.empty();
    return report;
}

/// For odd 3 <= n <= n_max, compare the criterion 3 | fun(n) against a
/// direct scan of exact Fibonacci integers over one Pisano period. The
/// scan is the oracle; any disagreement is a counterexample. The inverted
/// polarity ("no odd Fibonacci divisible by n <=> 3 does not divide
/// fun(n)") must disagree with the oracle somewhere; where it does is
/// recorded in notes.
inline VerificationReport verify_criterion_erratum(std::uint64_t n_max) {
    if (n_max < 3) throw std::invalid_argument("fibdiv: n_max must be >= 3");
    VerificationReport report;
    report.claim = Claim::CRITERION_ERRATUM;
    report.range = "odd n in [3, " + std::to_string(n_max) + "]";
    std::vector<std::uint64_t> literal_failures;
    for (std::uint64_t n = 3; n <= n_max; n += 2) {
        const std::uint64_t pisano = pisano_period(n);
        bool found_odd_multiple = false;
        mpz_class a = 0, b = 1;  // exact F_j walk, independent of fib_mod
        for (std::uint64_t j = 1; j <= pisano && !found_odd_multiple; ++j) {
            mpz_add(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_swap(a.get_mpz_t(), b.get_mpz_t());
            if (mpz_odd_p(a.get_mpz_t()) &&
                mpz_divisible_ui_p(a.get_mpz_t(), n))
                found_odd_multiple = true;
        }
        const bool oracle_no_odd = !found_odd_multiple;
        const std::uint64_t fun = fundamental_period(n);
        if ((fun % 3 == 0) != oracle_no_odd) report.counterexamples.push_back({n});
        if ((fun % 3 != 0) != oracle_no_odd) literal_failures.push_back(n);
    }
    report.notes.push_back("inverted polarity fails at " +
                           std::to_string(literal_failures.size()) +
                           " values of n; first: " +
                           (literal_failures.empty()
                                ? "none"
                                : std::to_string(literal_failures.front())));
    if (std::find(literal_failures.begin(), literal_failures.end(), 17) !=
        literal_failures.end())
        report.notes.push_back(
            "inverted polarity misclassifies n = 17 (fun(17) = 9)");
    report.passed = report.counterexamples.empty() && !literal_failures.empty();
    return report;
}

/// fun(m*n) = lcm(fun(m), fun(n)) for all coprime 2 <= m < n <= m_max,
/// fun(m*n) taken by direct scan. The gcd misstatement must fail in range;
/// its failures are counted in notes.
inline VerificationReport verify_coprime_lcm(std::uint64_t m_max) {
    if (m_max < 2) throw std::invalid_argument("fibdiv: m_max must be >= 2");
    VerificationReport report;
    report.claim = Claim::COPRIME_LCM;
    report.range = "coprime 2 <= m < n <= " + std::to_string(m_max);
    std::vector<std::uint64_t> fun_of(m_max + 1, 0);
    for (std::uint64_t v = 2; v <= m_max; ++v) fun_of[v] = fundamental_period(v);
    std::uint64_t pairs = 0, gcd_failures = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> first_gcd_failure;
    for (std::uint64_t m = 2; m <= m_max; ++m) {
        for (std::uint64_t n = m + 1; n <= m_max; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++pairs;
            const std::uint64_t direct = fundamental_period(m * n);
            if (direct != std::lcm(fun_of[m], fun_of[n]))
                report.counterexamples.push_back({m, n});
            if (direct != std::gcd(fun_of[m], fun_of[n])) {
                ++gcd_failures;
                if (!first_gcd_failure) first_gcd_failure = {m, n};
            }
        }
    }
    if (first_gcd_failure) {
        auto [m, n] = *first_gcd_failure;
        report.notes.push_back(
            "gcd form fails at " + std::to_string(gcd_failures) + " of " +
            std::to_string(pairs) + " pairs; first: (" + std::to_string(m) +
            ", " + std::to_string(n) + ") where fun(" + std::to_string(m * n) +
            ") = " + std::to_string(fundamental_period(m * n)) +
            ", gcd(fun(m), fun(n)) = " +
            std::to_string(std::gcd(fun_of[m], fun_of[n])));
    }
    report.passed = report.counterexamples.empty() &&
                    (pairs == 0 || gcd_failures > 0);
    return report;
}

/// fun(p^{t+1}) is either fun(p^t) or p*fun(p^t), for odd primes p <= p_max
/// and 1 <= t <= t_max, while p^{t+1} stays within the arithmetic contract.
inline VerificationReport verify_lemma_prime_powers(std::uint64_t p_max,
                                                    std::uint64_t t_max) {
    if (p_max < 3 || t_max < 1)
        throw std::invalid_argument("fibdiv: need p_max >= 3 and t_max >= 1");
    VerificationReport report;
    report.claim = Claim::LEMMA_PRIME_POWER;
    report.range = "odd primes p <= " + std::to_string(p_max) + ", t in [1, " +
                   std::to_string(t_max) + "]";
    const auto is_prime = detail::prime_table(p_max);
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime[p]) continue;
        std::uint64_t power = p;  // p^t
        std::uint64_t fun_pt = fundamental_period(p);
        for (std::uint64_t t = 1; t <= t_max; ++t) {
            if (power > detail::kArithmeticContractMax / p) break;
            power *= p;  // now p^{t+1}
            const std::uint64_t fun_next = fundamental_period(power);
            if (fun_next != fun_pt && fun_next != p * fun_pt)
                report.counterexamples.push_back({p, t});
            fun_pt = fun_next;
        }
    }
    report.passed = report.counterexamples.empty();
    return report;
}

/// fun(p^t) / fun(p) is an integer power of p across the same range.
inline VerificationReport verify_corollary_power(std::uint64_t p_max,
                                                 std::uint64_t t_max) {
    if (p_max < 3 || t_max < 1)
        throw std::invalid_argument("fibdiv: need p_max >= 3 and t_max >= 1");
    VerificationReport report;
    report.claim = Claim::COROLLARY_POWER;
    report.range = "odd primes p <= " + std::to_string(p_max) + ", t in [1, " +
                   std::to_string(t_max) + "]";
    const auto is_prime = detail::prime_table(p_max);
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime[p]) continue;
        const std::uint64_t fun_p = fundamental_period(p);
        std::uint64_t power = 1;
        for (std::uint64_t t = 1; t <= t_max; ++t) {
            if (power > detail::kArithmeticContractMax / p) break;
            power *= p;  // p^t
            const std::uint64_t fun_pt = fundamental_period(power);
            if (fun_pt % fun_p != 0 || !detail::is_power_of(fun_pt / fun_p, p))
                report.counterexamples.push_back({p, t});
        }
    }
    report.passed = report.counterexamples.empty();
    return report;
}

/// BASE up to limit contains exactly one composite, 9.
inline VerificationReport verify_theorem_base(std::uint64_t limit,
                                              unsigned threads = 1) {
    if (limit < 9) throw std::invalid_argument("fibdiv: limit must be >= 9");
    VerificationReport report;
    report.claim = Claim::THEOREM_BASE;
    report.range = "BASE up to " + std::to_string(limit);
    GenerateOptions options;
    options.threads = threads;
    const TermList base = generate(SequenceId::BASE, limit, options);
    const auto is_prime = detail::prime_table(limit);
    std::vector<std::uint64_t> composites;
    for (std::uint64_t term : base.terms)
        if (!is_prime[term]) composites.push_back(term);
    for (std::uint64_t c : composites)
        if (c != 9) report.counterexamples.push_back({c});
    const bool nine_present =
        std::find(composites.begin(), composites.end(), 9) != composites.end();
    if (!nine_present) report.counterexamples.push_back({9});
    report.notes.push_back("composites found: " + detail::join_u64(composites));
    report.passed = report.counterexamples.empty();
    return report;
}

namespace detail {

// Knuth's MMIX linear congruential step; fixed constants so every run (and
// every reimplementation) draws the same sample set.
inline constexpr std::uint64_t kFastpathSeed = 0x0123456789ABCDEFull;

struct Lcg {
    std::uint64_t state = kFastpathSeed;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state;
    }
};

}  // namespace detail

/// Seeded random (n, K) pairs: the fast-doubling path must agree with the
/// exact iterative oracle reduced mod K. One exact Fibonacci walk serves
/// all samples.
inline VerificationReport verify_fastpath(std::uint64_t samples,
                                          std::uint64_t n_max,
                                          std::uint64_t k_max) {
    if (samples < 1) throw std::invalid_argument("fibdiv: samples must be >= 1");
    if (k_max < 1) throw std::invalid_argument("fibdiv: k_max must be >= 1");
    VerificationReport report;
    report.claim = Claim::FASTPATH_EQUIV;
    report.range = std::to_string(samples) + " samples, n <= " +
                   std::to_string(n_max) + ", K <= " + std::to_string(k_max);

    detail::Lcg rng;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> draws(samples);
    for (auto& [n, k] : draws) {
        n = rng.next() % (n_max + 1);
        k = 1 + rng.next() % k_max;
    }
    std::sort(draws.begin(), draws.end());

    mpz_class a = 0, b = 1;  // (F_i, F_{i+1})
    std::uint64_t i = 0;
    for (const auto& [n, k] : draws) {
        while (i < n) {
            mpz_add(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_swap(a.get_mpz_t(), b.get_mpz_t());
            ++i;
        }
        const std::uint64_t expected = mpz_fdiv_ui(a.get_mpz_t(), k);
        if (fib_mod(n, k) != expected) report.counterexamples.push_back({n, k});
    }
    report.counterexamples.erase(
        std::unique(report.counterexamples.begin(), report.counterexamples.end()),
        report.counterexamples.end());
    report.passed = report.counterexamples.empty();
    return report;
}

}  // namespace fibdiv
