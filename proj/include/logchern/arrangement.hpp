#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logchern/numeric.hpp"

namespace logchern {

// One singular point of the arrangement on a fiber: the set of sections
// through it and their pairwise local intersection multiplicities.
//
// The contact matrix is symmetric with positive entries; for any three
// sections the minimum pairwise contact is attained at least twice
// (smooth branches meeting a common point are ultrametric), which is what
// makes the nested cluster structure below well defined.
struct ContactPoint {
    std::vector<int> sections;           // 1-based section ids, strictly increasing
    std::vector<std::int64_t> contact_;  // k*k symmetric, zero diagonal

    int size() const { return static_cast<int>(sections.size()); }

    std::int64_t contact_at(int a, int b) const {
        return contact_[static_cast<std::size_t>(a) * sections.size() + b];
    }
    void set_contact_at(int a, int b, std::int64_t v) {
        contact_[static_cast<std::size_t>(a) * sections.size() + b] = v;
        contact_[static_cast<std::size_t>(b) * sections.size() + a] = v;
    }
    // by section id
    std::int64_t contact_between(int si, int sj) const;

    bool contains(int section_id) const;

    // all pairwise contacts = 1
    static ContactPoint ordinary(std::vector<int> section_ids);
    // two sections with the given contact order
    static ContactPoint tangency(int si, int sj, std::int64_t order);
};

struct FiberData {
    std::vector<ContactPoint> points;
};

// Combinatorial arrangement of d rational sections over a genus-g curve,
// with deg L = e. Only fibers containing singular points are listed; delta
// is their count. char_p is metadata gating characteristic-0-only checks.
struct ArrangementSpec {
    int genus = 0;
    std::int64_t degree = 1;  // e
    int num_sections = 3;     // d
    std::optional<std::int64_t> char_p;
    std::string label;
    std::vector<FiberData> fibers;

    int delta() const { return static_cast<int>(fibers.size()); }
};

// A choice of fibers removed from the extended arrangement. Fibers are
// 0-based indices into spec.fibers; each must be removable and
// epsilon <= delta - 2.
struct ExtensionChoice {
    std::vector<int> removed;  // sorted, unique
    int epsilon() const { return static_cast<int>(removed.size()); }

    static ExtensionChoice none() { return {}; }
    static ExtensionChoice of(std::vector<int> fibers);
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Nested contact clusters of one point: the root is the full section set at
// depth 1; a node at depth m is a maximal subset with pairwise contact >= m.
// Equal sets over consecutive depths are compressed into [depth_from, depth_to].
struct ClusterNode {
    std::vector<int> sections;
    std::int64_t depth_from = 1;
    std::int64_t depth_to = 1;
    std::vector<ClusterNode> children;
};

enum class ArrangementClass { SimpleCrossing, Transversal, General };

const char* to_string(ArrangementClass c);

ValidationReport validate(const ArrangementSpec& spec);

// throws std::invalid_argument listing every violation
void require_valid(const ArrangementSpec& spec);

void require_valid_choice(const ArrangementSpec& spec, const ExtensionChoice& choice);

ArrangementClass classify(const ArrangementSpec& spec);

ClusterNode cluster_tree(const ContactPoint& point);

// Sum over blow-up centers of (#sections through the center - 1); computed
// from the compressed cluster trees so that deep tangencies cost O(d^2), not
// O(contact order).
Int tau(const ArrangementSpec& spec);
Int tau_point(const ContactPoint& point);

// Number of blow-up centers of the minimal separating sequence.
Int num_blowups(const ArrangementSpec& spec);

struct FiberStats {
    int k_o;  // singular points on the fiber
    int k;    // distinct points of (arrangement ∩ fiber) + 1
};

FiberStats fiber_stats(const ArrangementSpec& spec, int fiber_index);

// A fiber may be dropped from the extended arrangement only if every one of
// its points has two sections crossing with distinct tangent directions,
// i.e. some pair of contact exactly 1.
bool is_removable(const ArrangementSpec& spec, int fiber_index);

// Composition with the r-th power of Frobenius: e and every contact order
// scale by p^r; the fiber/point structure is unchanged.
ArrangementSpec frobenius_pullback(const ArrangementSpec& spec, int r);

// Unramified degree-n base change: g -> n(g-1)+1, e -> n e, fibers duplicated
// n times. Requires g >= 1.
ArrangementSpec etale_pullback(const ArrangementSpec& spec, int n);

// Relabels sections by the permutation perm (1-based: section i becomes
// perm[i-1]); used by invariance tests.
ArrangementSpec relabel_sections(const ArrangementSpec& spec, const std::vector<int>& perm);

}  // namespace logchern
