#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "logchern/arrangement.hpp"
#include "logchern/numeric.hpp"

namespace logchern {

struct LogChernPair {
    Int c1sq;
    Int c2;

    Rat ratio() const;

    bool operator==(const LogChernPair&) const = default;
};

// Closed form for the extended arrangement:
//   c1^2 = (d-1)(2 delta + 4(g-1) - e) + tau,   c2 = (d-1)(2(g-1) + delta).
LogChernPair log_chern_extended(const ArrangementSpec& spec);

// Extended values corrected for the removed fibers:
//   c2   -> c2 - sum k_j + 2 eps
//   c1^2 -> c1^2 - sum k_j^o - 2 sum k_j + 4 eps.
LogChernPair log_chern_partial(const ArrangementSpec& spec, const ExtensionChoice& choice);

struct InequalityCheck {
    std::string name;
    bool holds;
    Rat lhs;
    Rat rhs;
    bool applicable;  // false: reported informationally (wrong characteristic,
                      // not a line arrangement, or extended-only bound)
};

struct InequalityReport {
    std::vector<InequalityCheck> checks;

    bool all_applicable_hold() const;
    const InequalityCheck& find(const std::string& name) const;
};

// Every stated bound on the log Chern numbers of the extended and the given
// partially extended arrangement. Characteristic-0-only checks are evaluated
// but flagged not-applicable when char_p is set; the ratio > 2 bound is
// extended-only and flagged not-applicable for epsilon > 0.
InequalityReport check_inequalities(const ArrangementSpec& spec, const ExtensionChoice& choice);

// Extended log Chern ratio after r Frobenius pull-backs, in closed form:
// 2 + p^r (ratio - 2). Equals log_chern_extended(frobenius_pullback(spec,r)).ratio().
Rat frobenius_ratio(const ArrangementSpec& spec, int r);

struct ScanEntry {
    ExtensionChoice choice;
    LogChernPair pair;
};

struct ScanResult {
    ScanEntry best;
    std::vector<ScanEntry> entries;  // in exploration order
    std::size_t explored = 0;
};

// Evaluates the given choices and returns the one with maximal ratio
// (lexicographically smallest removed-set on ties).
ScanResult ratio_scan(const ArrangementSpec& spec, std::span<const ExtensionChoice> choices);

// Explores admissible choices: exhaustively when 2^(#removable) <= budget,
// otherwise `budget` seeded random subsets (plus the empty choice).
ScanResult ratio_scan_random(const ArrangementSpec& spec, std::size_t budget, std::uint64_t seed);

}  // namespace logchern
