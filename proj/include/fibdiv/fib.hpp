#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

namespace fibdiv {

// Index convention throughout: F_0 = 0, F_1 = 1.
using FibIndex = std::uint64_t;
using Modulus = std::uint64_t;
using Residue = std::uint64_t;

namespace detail {

inline void require_modulus(Modulus k) {
    if (k == 0) throw std::invalid_argument("fibdiv: modulus must be >= 1");
}

// The add/sub helpers assume both operands already lie in [0, k).
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
    std::uint64_t s = a + b;
    if (s >= k) s -= k;
    return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
    return a >= b ? a - b : a + (k - b);
}

// 128-bit intermediate keeps the product exact for any k < 2^63,
// well past the 2^31 the rest of the library promises.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % k);
}

}  // namespace detail

/// F_n as an exact integer, by plain iteration of F_{k+1} = F_k + F_{k-1}.
/// This is the oracle the modular fast path is checked against; intended
/// for n up to ~1e5.
inline mpz_class fib_exact(FibIndex n) {
    mpz_class a = 0, b = 1;
    for (FibIndex i = 0; i < n; ++i) {
        mpz_add(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_swap(a.get_mpz_t(), b.get_mpz_t());
    }
    return a;
}

/// (F_n mod k, F_{n+1} mod k) in O(log n) steps via the doubling identities
/// F_{2i} = F_i * (2*F_{i+1} - F_i) and F_{2i+1} = F_i^2 + F_{i+1}^2.
inline std::pair<Residue, Residue> fib_pair_mod(FibIndex n, Modulus k) {
    detail::require_modulus(k);
    if (k == 1) return {0, 0};
    std::uint64_t a = 0, b = 1;  // (F_i, F_{i+1}) for the bits consumed so far
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        std::uint64_t f2i =
            detail::mul_mod(a, detail::sub_mod(detail::add_mod(b, b, k), a, k), k);
        std::uint64_t f2i1 =
            detail::add_mod(detail::mul_mod(a, a, k), detail::mul_mod(b, b, k), k);
        a = f2i;
        b = f2i1;
        if ((n >> bit) & 1) {
            std::uint64_t c = detail::add_mod(a, b, k);
            a = b;
            b = c;
        }
    }
    return {a, b};
}

/// F_n mod k.
inline Residue fib_mod(FibIndex n, Modulus k) { return fib_pair_mod(n, k).first; }

/// L_n mod k, with L_0 = 2, L_1 = 1. For n >= 1 computed as
/// F_{n-1} + F_{n+1}; n = 0 is special-cased so no negative index appears.
inline Residue lucas_mod(FibIndex n, Modulus k) {
    detail::require_modulus(k);
    if (n == 0) return 2 % k;
    auto [fnm1, fn] = fib_pair_mod(n - 1, k);
    return detail::add_mod(fnm1, detail::add_mod(fnm1, fn, k), k);
}

}  // namespace fibdiv
