#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibdiv/fib.hpp"

namespace fibdiv {

/// A modulus together with its Pisano period P_K, fundamental period
/// fun(K) (smallest n >= 1 with K | F_n, the rank of apparition) and the
/// number of zero residues per Pisano period.
struct PeriodInfo {
    Modulus modulus = 0;
    std::uint64_t pisano = 0;
    std::uint64_t fundamental = 0;
    std::uint64_t zero_count = 0;  // = pisano / fundamental

    bool operator==(const PeriodInfo&) const = default;
};

namespace detail {

// Scan cap: the Pisano period never exceeds 6K. Exceeding the cap would
// falsify that bound, so the scanners abort loudly instead of looping.
inline std::uint64_t period_scan_cap(Modulus k) { return 6 * k + 2; }

[[noreturn]] inline void period_bound_violated(const char* what, Modulus k) {
    throw std::runtime_error(std::string("fibdiv: ") + what + " for K=" +
                             std::to_string(k) +
                             " not found within 6K+2 steps; the 6K period bound "
                             "would be falsified");
}

}  // namespace detail

/// Smallest P >= 1 with F_{n+P} == F_n (mod k) for all n, found by scanning
/// consecutive residue pairs for the reappearance of (0, 1).
inline std::uint64_t pisano_period(Modulus k) {
    detail::require_modulus(k);
    if (k == 1) return 1;  // constant-zero residue sequence
    std::uint64_t a = 0, b = 1;
    const std::uint64_t cap = detail::period_scan_cap(k);
    for (std::uint64_t i = 1; i <= cap; ++i) {
        std::uint64_t c = detail::add_mod(a, b, k);
        a = b;
        b = c;  // (a, b) = (F_i, F_{i+1})
        if (a == 0 && b == 1) return i;
    }
    detail::period_bound_violated("Pisano period", k);
}

/// Smallest m >= 1 with k | F_m.
inline std::uint64_t fundamental_period(Modulus k) {
    detail::require_modulus(k);
    if (k == 1) return 1;
    std::uint64_t a = 0, b = 1;
    const std::uint64_t cap = detail::period_scan_cap(k);
    for (std::uint64_t i = 1; i <= cap; ++i) {
        std::uint64_t c = detail::add_mod(a, b, k);
        a = b;
        b = c;
        if (a == 0) return i;
    }
    detail::period_bound_violated("fundamental period", k);
}

/// Indices n in [0, pisano_period(k)) with F_n == 0 (mod k). These are
/// exactly the multiples of fundamental_period(k); the verify module checks
/// that claim rather than assuming it here.
inline std::vector<std::uint64_t> zero_indices(Modulus k) {
    if (k < 2) throw std::invalid_argument("fibdiv: zero_indices needs K >= 2");
    const std::uint64_t period = pisano_period(k);
    std::vector<std::uint64_t> zeros;
    std::uint64_t a = 0, b = 1;
    for (std::uint64_t i = 0; i < period; ++i) {
        if (a == 0) zeros.push_back(i);
        std::uint64_t c = detail::add_mod(a, b, k);
        a = b;
        b = c;
    }
    return zeros;
}

/// Pisano + fundamental period of k in one struct. Aborts loudly if the
/// divisibility fun(K) | P_K ever failed, rather than returning a bogus
/// zero count.
inline PeriodInfo period_info(Modulus k) {
    PeriodInfo info;
    info.modulus = k;
    info.pisano = pisano_period(k);
    info.fundamental = fundamental_period(k);
    if (info.pisano % info.fundamental != 0)
        throw std::runtime_error("fibdiv: fundamental period does not divide "
                                 "Pisano period at K=" + std::to_string(k));
    info.zero_count = info.pisano / info.fundamental;
    return info;
}

/// Prime-power decomposition, primes strictly increasing.
struct Factorization {
    std::vector<std::pair<std::uint64_t, unsigned>> pairs;  // (prime, exponent)

    std::uint64_t value() const {
        std::uint64_t n = 1;
        for (auto [p, e] : pairs)
            for (unsigned i = 0; i < e; ++i) n *= p;
        return n;
    }

    bool operator==(const Factorization&) const = default;
};

/// Trial division up to sqrt(n). Desk-scale only.
inline Factorization factorize(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("fibdiv: factorize needs n >= 2");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.pairs.emplace_back(p, e);
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

/// fun(n) through n's factorization: lcm over prime powers p^e of
/// fun(p^e), each computed by direct scan. Must agree with
/// fundamental_period(n); the verify module tests that equivalence.
inline std::uint64_t fundamental_period_factored(const Factorization& f) {
    if (f.pairs.empty())
        throw std::invalid_argument("fibdiv: empty factorization");
    std::uint64_t result = 1;
    for (auto [p, e] : f.pairs) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        result = std::lcm(result, fundamental_period(pe));
    }
    return result;
}

}  // namespace fibdiv
