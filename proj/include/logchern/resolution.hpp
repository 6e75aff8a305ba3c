#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logchern/arrangement.hpp"
#include "logchern/log_chern.hpp"
#include "logchern/numeric.hpp"

namespace logchern {

enum class ComponentKind { Section, ZeroSection, Fiber, Exceptional };

struct Component {
    ComponentKind kind;
    int index;        // section id (1..d), fiber index (0-based), or exceptional serial
    int fiber = -1;   // owning fiber for Fiber/Exceptional components
    Int self_int = 0;
    int genus = 0;
    bool in_divisor = true;  // false exactly for the transforms of removed fibers
    // For exceptionals: components through the blow-up center at creation time
    // (carrier first, then the sections). Drives total-transform multiplicities.
    std::vector<int> created_on;

    std::string name() const;
};

// Dual graph of the full separating resolution of the arrangement, with the
// divisor membership of each component recorded. For a partial extension the
// removed fibers' points are still blown up; only their fiber transforms
// leave the divisor.
struct ResolutionGraph {
    int d = 0;
    int genus = 0;
    Int degree = 0;
    std::vector<Component> components;
    // unordered component pair -> number of transverse crossings
    std::map<std::pair<int, int>, std::int64_t> adjacency;
    Int s = 0;  // blow-ups performed

    int zero_section_id() const { return d; }  // components[0..d-1] are the sections

    Int t2() const;  // nodes of the reduced divisor

    void add_crossing(int a, int b, std::int64_t count = 1);
};

ResolutionGraph build_resolution(const ArrangementSpec& spec, const ExtensionChoice& choice);

// Chern numbers of the blown-up ruled surface: (8(1-g) - s, 4(1-g) + s).
std::pair<Int, Int> chern_of_Y(const ResolutionGraph& graph);

// General log-surface formula over the divisor components:
//   c1^2(Y,D) = c1^2(Y) - sum Di^2 + 2 t2 + 4 sum (g(Di)-1)
//   c2(Y,D)   = c2(Y) + t2 + 2 sum (g(Di)-1)
LogChernPair log_chern_via_graph(const ResolutionGraph& graph);

std::string to_dot(const ResolutionGraph& graph);

}  // namespace logchern
