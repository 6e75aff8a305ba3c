#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logchern/arrangement.hpp"
#include "logchern/numeric.hpp"
#include "logchern/resolution.hpp"

namespace logchern {

// A positive solution of the weighted partition
//   e(x_1 + ... + x_d) + y_1 + ... + y_{delta-eps} = p,
// with x_{d+1} := p - sum x_i (automatically in (0,p)).
struct PartitionSolution {
    std::int64_t p = 0;
    std::vector<std::int64_t> x;  // size d
    std::vector<std::int64_t> y;  // size delta - eps, indexed by kept fibers in order
    std::int64_t x_last = 0;      // x_{d+1}
};

// Exact number of positive solutions, as a sum of binomial products over the
// section subtotal.
Int count_solutions(const ArrangementSpec& spec, const ExtensionChoice& choice, std::int64_t p);

// Leading-term estimate p^(d+delta-eps-1) / ((d+delta-eps-1)! e^d).
Rat count_solutions_estimate(const ArrangementSpec& spec, const ExtensionChoice& choice,
                             std::int64_t p);

// Uniformly random positive solution, deterministic under seed: the section
// subtotal is drawn by exact suffix counts, then each block is a uniform
// composition.
PartitionSolution sample_solution(const ArrangementSpec& spec, const ExtensionChoice& choice,
                                  std::int64_t p, std::uint64_t seed);

// Total-transform multiplicities on the resolution: sections carry x_i, the
// zero-section x_{d+1}, kept fibers y_j, and every exceptional the sum of the
// multiplicities through its center. All must land in (0, p).
struct MultiplicityAssignment {
    std::int64_t p = 0;
    std::vector<Int> nu;  // per component id; 0 for components outside the divisor
};

MultiplicityAssignment assign_multiplicities(const ResolutionGraph& graph,
                                             const PartitionSolution& solution);

// Node taxonomy of the reduced divisor:
//   I   section-section           (never produced by the full resolution)
//   II  fiber-section
//   III fiber-zero-section
//   IV  exceptional-section
//   V   exceptional-exceptional and fiber-exceptional (resolution towers)
enum class NodeType { I, II, III, IV, V };

const char* to_string(NodeType t);

struct NodeRecord {
    int comp_a, comp_b;
    Int nu_a, nu_b;
    NodeType type;
    std::int64_t count;
    std::int64_t residue;  // p - nu_a' nu_b mod p, canonicalized into {1..p-1}
};

std::vector<NodeRecord> classify_nodes(const ResolutionGraph& graph,
                                       const MultiplicityAssignment& assignment);

// CCF = sum over nodes of c(residue, p) * count, LCF likewise with l.
std::pair<Rat, Int> ccf_lcf(const std::vector<NodeRecord>& nodes, std::int64_t p);

struct SurfaceInvariants {
    std::int64_t p = 0;
    Int c1sq;
    Int c2;
    Rat ccf;
    Int lcf;
    bool good = false;

    Rat ratio() const { return Rat(c1sq, c2); }
};

// Chern numbers of the p-th root cover along the weighted divisor:
//   c1^2(X) = bc1 p + 2(c2 - bc2) + (c1 - bc1 + 2 bc2 - 2 c2)/p - CCF
//   c2(X)   = bc2 p + (c2 - bc2) + LCF
// Integrality of both and c1^2 + c2 = 0 mod 12 are asserted; `good` means
// every node residue avoids the bad set.
SurfaceInvariants chern_of_X(const ArrangementSpec& spec, const ExtensionChoice& choice,
                             const PartitionSolution& solution);

struct ConvergeRow {
    std::int64_t p;
    int attempts;        // solutions drawn
    bool good;           // a good solution was found within the retry budget
    SurfaceInvariants invariants;  // the good run, or the closest-ratio run
};

// For each prime, redraws solutions until one is good (up to `retries`),
// otherwise reports the attempt whose ratio is closest to the log Chern
// target. Deterministic under seed and independent of `workers`.
std::vector<ConvergeRow> converge(const ArrangementSpec& spec, const ExtensionChoice& choice,
                                  const std::vector<std::int64_t>& primes, std::uint64_t seed,
                                  int retries, int workers = 1);

}  // namespace logchern
