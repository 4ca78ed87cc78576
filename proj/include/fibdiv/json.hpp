#pragma once

// nlohmann-json adapters for the machine-readable output formats.

#include <string>

#include <json.hpp>

#include "fibdiv/divisibility.hpp"
#include "fibdiv/periods.hpp"
#include "fibdiv/sequences.hpp"
#include "fibdiv/verify.hpp"

namespace fibdiv {

inline void to_json(nlohmann::json& j, const PeriodInfo& info) {
    j = {{"modulus", info.modulus},
         {"pisano", info.pisano},
         {"fundamental", info.fundamental},
         {"zero_count", info.zero_count}};
}

inline void to_json(nlohmann::json& j, const DivisibilityReport& report) {
    j = {{"n", report.n},
         {"divides_no_odd_fib", report.divides_no_odd_fib},
         {"fundamental", report.fundamental}};
    if (report.witness_index) j["witness_index"] = *report.witness_index;
}

inline void to_json(nlohmann::json& j, const TermList& list) {
    j = {{"id", std::string(sequence_id_name(list.id))},
         {"limit", list.limit},
         {"terms", list.terms}};
}

inline void to_json(nlohmann::json& j, const VerificationReport& report) {
    j = {{"claim", std::string(claim_name(report.claim))},
         {"range", report.range},
         {"passed", report.passed},
         {"counterexamples", report.counterexamples},
         {"notes", report.notes}};
}

}  // namespace fibdiv
