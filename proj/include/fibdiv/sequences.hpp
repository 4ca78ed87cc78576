#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "fibdiv/divisibility.hpp"

namespace fibdiv {

enum class SequenceId {
    A133246,  // odd n >= 3 such that no odd Fibonacci is divisible by n
    A133247,  // primes p (2 included) such that no odd Fibonacci is divisible by p
    BASE,     // minimal elements of S = {n >= 2 : no odd Fibonacci divisible by n}
};

inline std::string_view sequence_id_name(SequenceId id) {
    switch (id) {
        case SequenceId::A133246: return "A133246";
        case SequenceId::A133247: return "A133247";
        case SequenceId::BASE: return "BASE";
    }
    throw std::invalid_argument("fibdiv: unknown sequence id");
}

/// Complete, ordered member list of one sequence up to an inclusive limit.
struct TermList {
    SequenceId id = SequenceId::A133246;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> terms;

    bool operator==(const TermList&) const = default;
};

struct GenerateOptions {
    // Worker threads for the membership scan; 0 = one per hardware thread.
    // The produced TermList is identical for every thread count.
    unsigned threads = 1;
    // A133247 lists 2 even though 2 is not odd; drop it for the
    // strict-odd-prime reading.
    bool include_two = true;
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// in_s[n] = 1 iff n >= 2 and no odd Fibonacci number is divisible by n.
// Even n qualify trivially; odd n are tested via 3 | fun(n). Odd candidates
// are dealt out round-robin so each worker writes disjoint slots and the
// table never depends on the thread count.
inline std::vector<std::uint8_t> nondividing_table(std::uint64_t limit,
                                                   unsigned threads) {
    std::vector<std::uint8_t> in_s(limit + 1, 0);
    for (std::uint64_t n = 2; n <= limit; n += 2) in_s[n] = 1;

    threads = resolve_threads(threads);
    auto scan = [&in_s, limit](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t n = first; n <= limit; n += stride)
            in_s[n] = fundamental_period(n) % 3 == 0;
    };
    if (threads <= 1 || limit < 64) {
        scan(3, 2);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back(scan, 3 + 2 * static_cast<std::uint64_t>(t),
                                 2 * static_cast<std::uint64_t>(threads));
        for (auto& w : workers) w.join();
    }
    return in_s;
}

// Sieve of Eratosthenes; index n => n prime.
inline std::vector<std::uint8_t> prime_table(std::uint64_t limit) {
    std::vector<std::uint8_t> is_prime(limit + 1, 1);
    is_prime[0] = 0;
    if (limit >= 1) is_prime[1] = 0;
    for (std::uint64_t p = 2; p * p <= limit; ++p)
        if (is_prime[p])
            for (std::uint64_t m = p * p; m <= limit; m += p) is_prime[m] = 0;
    return is_prime;
}

// First count primes, growing the sieve bound until enough are found.
inline std::vector<std::uint64_t> first_primes(std::uint64_t count) {
    std::uint64_t bound = 64;
    if (count >= 6) {
        double d = static_cast<double>(count);
        bound = static_cast<std::uint64_t>(d * (std::log(d) + std::log(std::log(d)))) + 16;
    }
    for (;;) {
        auto table = prime_table(bound);
        std::vector<std::uint64_t> primes;
        primes.reserve(count);
        for (std::uint64_t n = 2; n <= bound && primes.size() < count; ++n)
            if (table[n]) primes.push_back(n);
        if (primes.size() == count) return primes;
        bound *= 2;
    }
}

}  // namespace detail

/// Generate one of the three sequences, complete up to `limit` inclusive.
inline TermList generate(SequenceId id, std::uint64_t limit,
                         const GenerateOptions& options = {}) {
    if (limit < 2) throw std::invalid_argument("fibdiv: generate needs limit >= 2");
    TermList result;
    result.id = id;
    result.limit = limit;

    switch (id) {
        case SequenceId::A133246: {
            for (std::uint64_t n = 3; n <= limit; n += 2)
                if (fundamental_period(n) % 3 == 0) result.terms.push_back(n);
            break;
        }
        case SequenceId::A133247: {
            auto is_prime = detail::prime_table(limit);
            if (options.include_two && limit >= 2) result.terms.push_back(2);
            for (std::uint64_t p = 3; p <= limit; p += 2)
                if (is_prime[p] && fundamental_period(p) % 3 == 0)
                    result.terms.push_back(p);
            break;
        }
        case SequenceId::BASE: {
            // Definition-faithful sieve: member iff in S and no proper
            // divisor >= 2 is in S. Not derived from the other two lists.
            auto in_s = detail::nondividing_table(limit, options.threads);
            for (std::uint64_t n = 2; n <= limit; ++n) {
                if (!in_s[n]) continue;
                // Every proper divisor >= 2 shows up as d or n/d below.
                bool minimal = true;
                for (std::uint64_t d = 2; d * d <= n && minimal; ++d) {
                    if (n % d != 0) continue;
                    if (in_s[d] || in_s[n / d]) minimal = false;
                }
                if (minimal) result.terms.push_back(n);
            }
            break;
        }
    }
    return result;
}

/// Among the first num_primes primes (starting at 2), how many divide no
/// odd Fibonacci number. Returns (count, num_primes).
inline std::pair<std::uint64_t, std::uint64_t>
prime_nondividing_count(std::uint64_t num_primes) {
    if (num_primes < 1)
        throw std::invalid_argument("fibdiv: prime count needs num_primes >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t p : detail::first_primes(num_primes))
        if (divides_no_odd_fib(p).divides_no_odd_fib) ++count;
    return {count, num_primes};
}

/// OEIS b-file text: "index term" per line, 1-based, newline-terminated.
inline std::string to_bfile(const TermList& t) {
    std::string out;
    std::uint64_t index = 1;
    for (std::uint64_t term : t.terms) {
        out += std::to_string(index++);
        out += ' ';
        out += std::to_string(term);
        out += '\n';
    }
    return out;
}

}  // namespace fibdiv
