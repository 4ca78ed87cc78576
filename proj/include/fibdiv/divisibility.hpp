#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "fibdiv/periods.hpp"

namespace fibdiv {

/// Answer to "is any odd Fibonacci number divisible by n", with evidence.
/// When the answer is "some odd Fibonacci is divisible", witness_index is
/// the smallest j with F_j odd and n | F_j.
struct DivisibilityReport {
    std::uint64_t n = 0;
    bool divides_no_odd_fib = false;
    std::uint64_t fundamental = 0;  // fun(n)
    std::optional<std::uint64_t> witness_index;

    bool operator==(const DivisibilityReport&) const = default;
};

/// Decide whether n divides no odd Fibonacci number.
///
/// Even n divide no odd integer at all. For odd n the criterion is
/// 3 | fun(n): the indices of Fibonacci numbers divisible by n are exactly
/// the multiples of fun(n), and F_j is even iff 3 | j, so every such
/// Fibonacci is even iff 3 | fun(n). When 3 does not divide fun(n),
/// F_{fun(n)} itself is the smallest odd witness.
///
/// Note the polarity: the criterion is sometimes misquoted as
/// "3 does not divide fun(n)". n = 17 refutes that reading (fun(17) = 9,
/// yet no odd Fibonacci is divisible by 17); verify_criterion_erratum
/// demonstrates it by brute force.
inline DivisibilityReport divides_no_odd_fib(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("fibdiv: divisibility needs n >= 1");
    DivisibilityReport report;
    report.n = n;
    report.fundamental = fundamental_period(n);
    if (n % 2 == 0) {
        report.divides_no_odd_fib = true;
    } else if (report.fundamental % 3 == 0) {
        report.divides_no_odd_fib = true;
    } else {
        report.witness_index = report.fundamental;
    }
    return report;
}

/// The manual method: n divides no odd Fibonacci iff 3 | P_n and every zero
/// of F mod n within one Pisano period sits at an index divisible by 3.
/// Agrees with divides_no_odd_fib for odd n; kept as an independent route.
inline bool check_by_zero_scan(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("fibdiv: check_by_zero_scan needs n >= 2");
    if (pisano_period(n) % 3 != 0) return false;
    for (std::uint64_t z : zero_indices(n))
        if (z % 3 != 0) return false;
    return true;
}

}  // namespace fibdiv
