#include "logchern/resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace logchern {

std::string Component::name() const {
    std::ostringstream os;
    switch (kind) {
        case ComponentKind::Section: os << "S" << index; break;
        case ComponentKind::ZeroSection: os << "S" << index << "(C0)"; break;
        case ComponentKind::Fiber: os << "F" << index + 1; break;
        case ComponentKind::Exceptional: os << "E" << index; break;
    }
    return os.str();
}

Int ResolutionGraph::t2() const {
    Int t = 0;
    for (const auto& [pair, count] : adjacency)
        if (components[pair.first].in_divisor && components[pair.second].in_divisor) t += count;
    return t;
}

void ResolutionGraph::add_crossing(int a, int b, std::int64_t count) {
    if (a == b) throw std::logic_error("add_crossing: self pair");
    if (a > b) std::swap(a, b);
    adjacency[{a, b}] += count;
}

namespace {

struct Builder {
    ResolutionGraph& g;
    int exc_serial = 0;

    int new_exceptional(int fiber, int carrier, const std::vector<int>& section_comp_ids) {
        Component e;
        e.kind = ComponentKind::Exceptional;
        e.index = exc_serial++;
        e.fiber = fiber;
        e.self_int = -1;
        e.genus = 0;
        e.in_divisor = true;
        e.created_on.push_back(carrier);
        for (int s : section_comp_ids) e.created_on.push_back(s);
        g.components.push_back(std::move(e));
        const int id = static_cast<int>(g.components.size()) - 1;
        // the center sat on the carrier and on every section listed
        g.components[carrier].self_int -= 1;
        for (int s : section_comp_ids) g.components[s].self_int -= 1;
        g.add_crossing(id, carrier);
        g.s += 1;
        return id;
    }

    // Blows up the chain of centers of one cluster node and recurses into its
    // children. `carrier` holds the component carrying the first center.
    void resolve(const ClusterNode& node, int fiber, int carrier) {
        std::vector<int> secs;  // component ids; sections are components[0..d-1]
        for (int sid : node.sections) secs.push_back(sid - 1);
        for (Int depth = node.depth_from; depth <= node.depth_to; ++depth)
            carrier = new_exceptional(fiber, carrier, secs);
        for (const auto& child : node.children) {
            if (child.sections.size() >= 2) {
                resolve(child, fiber, carrier);
            } else {
                // singleton: the section leaves the tower crossing the last
                // exceptional of the parent chain
                g.add_crossing(child.sections[0] - 1, carrier);
            }
        }
    }
};

}  // namespace

ResolutionGraph build_resolution(const ArrangementSpec& spec, const ExtensionChoice& choice) {
    require_valid(spec);
    require_valid_choice(spec, choice);
    // one component per center; deep Frobenius-style contact towers would
    // materialize p^r exceptionals, so refuse anything past a sane cap
    if (num_blowups(spec) > 200000)
        throw std::invalid_argument("build_resolution: more than 2*10^5 blow-up centers; "
                                    "use the closed forms instead");

    ResolutionGraph g;
    g.d = spec.num_sections;
    g.genus = spec.genus;
    g.degree = spec.degree;

    // sections occupy ids 0..d-1, the zero-section id d, fibers d+1..d+delta
    for (int i = 1; i <= spec.num_sections; ++i) {
        Component c;
        c.kind = ComponentKind::Section;
        c.index = i;
        c.self_int = spec.degree;
        c.genus = spec.genus;
        g.components.push_back(std::move(c));
    }
    {
        Component c0;
        c0.kind = ComponentKind::ZeroSection;
        c0.index = spec.num_sections + 1;
        c0.self_int = -spec.degree;
        c0.genus = spec.genus;
        g.components.push_back(std::move(c0));
    }
    std::set<int> removed(choice.removed.begin(), choice.removed.end());
    std::vector<int> fiber_comp(spec.delta());
    for (int f = 0; f < spec.delta(); ++f) {
        Component c;
        c.kind = ComponentKind::Fiber;
        c.index = f;
        c.fiber = f;
        c.self_int = 0;
        c.genus = 0;
        c.in_divisor = removed.count(f) == 0;
        g.components.push_back(std::move(c));
        fiber_comp[f] = static_cast<int>(g.components.size()) - 1;
    }

    Builder b{g};
    for (int f = 0; f < spec.delta(); ++f) {
        const auto& fiber = spec.fibers[f];
        std::set<int> on_points;
        for (const auto& pt : fiber.points) {
            for (int sid : pt.sections) on_points.insert(sid);
            b.resolve(cluster_tree(pt), f, fiber_comp[f]);
        }
        // sections crossing the fiber away from the singular points
        for (int sid = 1; sid <= spec.num_sections; ++sid)
            if (!on_points.count(sid)) g.add_crossing(sid - 1, fiber_comp[f]);
        g.add_crossing(g.zero_section_id(), fiber_comp[f]);
    }
    return g;
}

std::pair<Int, Int> chern_of_Y(const ResolutionGraph& graph) {
    Int c1 = 8 * Int(1 - graph.genus) - graph.s;
    Int c2 = 4 * Int(1 - graph.genus) + graph.s;
    return {c1, c2};
}

LogChernPair log_chern_via_graph(const ResolutionGraph& graph) {
    auto [c1Y, c2Y] = chern_of_Y(graph);
    Int sum_self = 0, sum_genus = 0;
    for (const auto& c : graph.components)
        if (c.in_divisor) {
            sum_self += c.self_int;
            sum_genus += c.genus - 1;
        }
    const Int t2 = graph.t2();
    LogChernPair out;
    out.c1sq = c1Y - sum_self + 2 * t2 + 4 * sum_genus;
    out.c2 = c2Y + t2 + 2 * sum_genus;
    return out;
}

std::string to_dot(const ResolutionGraph& graph) {
    std::ostringstream os;
    os << "graph resolution {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < graph.components.size(); ++i) {
        const auto& c = graph.components[i];
        os << "  c" << i << " [label=\"" << c.name() << "\\nself=" << c.self_int
           << " g=" << c.genus << "\"" << (c.in_divisor ? "" : " style=dashed") << "];\n";
    }
    for (const auto& [pair, count] : graph.adjacency) {
        os << "  c" << pair.first << " -- c" << pair.second;
        if (count != 1) os << " [label=\"" << count << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace logchern
