#include "logchern/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace logchern {

std::int64_t ContactPoint::contact_between(int si, int sj) const {
    auto ia = std::find(sections.begin(), sections.end(), si);
    auto ib = std::find(sections.begin(), sections.end(), sj);
    if (ia == sections.end() || ib == sections.end())
        throw std::invalid_argument("contact_between: section not at this point");
    return contact_at(static_cast<int>(ia - sections.begin()),
                      static_cast<int>(ib - sections.begin()));
}

bool ContactPoint::contains(int section_id) const {
    return std::find(sections.begin(), sections.end(), section_id) != sections.end();
}

ContactPoint ContactPoint::ordinary(std::vector<int> section_ids) {
    std::sort(section_ids.begin(), section_ids.end());
    ContactPoint p;
    p.sections = std::move(section_ids);
    const std::size_t k = p.sections.size();
    p.contact_.assign(k * k, 1);
    for (std::size_t i = 0; i < k; ++i) p.contact_[i * k + i] = 0;
    return p;
}

ContactPoint ContactPoint::tangency(int si, int sj, std::int64_t order) {
    ContactPoint p = ordinary({si, sj});
    p.set_contact_at(0, 1, order);
    return p;
}

ExtensionChoice ExtensionChoice::of(std::vector<int> fibers) {
    std::sort(fibers.begin(), fibers.end());
    fibers.erase(std::unique(fibers.begin(), fibers.end()), fibers.end());
    ExtensionChoice c;
    c.removed = std::move(fibers);
    return c;
}

const char* to_string(ArrangementClass c) {
    switch (c) {
        case ArrangementClass::SimpleCrossing: return "simple_crossing";
        case ArrangementClass::Transversal: return "transversal";
        default: return "general";
    }
}

ValidationReport validate(const ArrangementSpec& spec) {
    ValidationReport rep;
    auto fail = [&](const std::string& m) { rep.violations.push_back(m); };

    const int d = spec.num_sections;
    if (d < 3) fail("d >= 3 required, got d=" + std::to_string(d));
    if (spec.degree < 1) fail("degree e >= 1 required");
    if (spec.genus < 0) fail("genus >= 0 required");
    if (spec.char_p && (*spec.char_p < 2 || !is_prime(static_cast<std::uint64_t>(*spec.char_p))))
        fail("char_p must be prime");

    const int delta = spec.delta();
    if (spec.genus == 0 && delta < 3)
        fail("delta >= 3 required for genus 0, got delta=" + std::to_string(delta));
    if (2 * (spec.genus - 1) + delta < 1)
        fail("2(g-1) + delta must be positive");

    // structural checks per fiber/point
    for (int f = 0; f < delta; ++f) {
        const auto& fiber = spec.fibers[f];
        if (fiber.points.empty()) {
            fail("fiber " + std::to_string(f + 1) + " has no singular points");
            continue;
        }
        std::set<int> seen;
        for (std::size_t pi = 0; pi < fiber.points.size(); ++pi) {
            const auto& pt = fiber.points[pi];
            std::string at = "fiber " + std::to_string(f + 1) + " point " + std::to_string(pi + 1);
            const int k = pt.size();
            if (k < 2) {
                fail(at + ": fewer than 2 sections");
                continue;
            }
            if (pt.contact_.size() != static_cast<std::size_t>(k) * k) {
                fail(at + ": contact matrix size mismatch");
                continue;
            }
            if (!std::is_sorted(pt.sections.begin(), pt.sections.end()) ||
                std::adjacent_find(pt.sections.begin(), pt.sections.end()) != pt.sections.end())
                fail(at + ": section list not strictly increasing");
            for (int s : pt.sections) {
                if (s < 1 || s > d) fail(at + ": section id " + std::to_string(s) + " out of range (the curve C0 is never listed)");
                if (!seen.insert(s).second)
                    fail(at + ": section " + std::to_string(s) + " appears twice on the fiber");
            }
            if (k == d) fail(at + ": point contains all " + std::to_string(d) + " sections");
            for (int a = 0; a < k; ++a) {
                if (pt.contact_at(a, a) != 0) fail(at + ": nonzero diagonal");
                for (int b = a + 1; b < k; ++b) {
                    std::int64_t c = pt.contact_at(a, b);
                    if (c != pt.contact_at(b, a)) fail(at + ": contact matrix not symmetric");
                    if (c < 1) fail(at + ": contact < 1");
                    if (c > spec.degree)
                        fail(at + ": contact " + std::to_string(c) + " exceeds e=" + std::to_string(spec.degree));
                }
            }
            // ultrametric: min of any triple attained at least twice
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int c = b + 1; c < k; ++c) {
                        std::int64_t x = pt.contact_at(a, b), y = pt.contact_at(a, c), z = pt.contact_at(b, c);
                        std::int64_t lo = std::min({x, y, z});
                        int hits = (x == lo) + (y == lo) + (z == lo);
                        if (hits < 2) {
                            std::ostringstream os;
                            os << at << ": ultrametric violation on sections {" << pt.sections[a]
                               << "," << pt.sections[b] << "," << pt.sections[c] << "}: contacts ("
                               << x << "," << y << "," << z << ")";
                            fail(os.str());
                        }
                    }
        }
    }

    // pair sums: every unordered pair of sections must total e over all points
    if (d >= 3) {
        std::map<std::pair<int, int>, std::int64_t> sums;
        for (const auto& fiber : spec.fibers)
            for (const auto& pt : fiber.points)
                for (int a = 0; a < pt.size(); ++a)
                    for (int b = a + 1; b < pt.size(); ++b)
                        sums[{pt.sections[a], pt.sections[b]}] += pt.contact_at(a, b);
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) {
                std::int64_t got = 0;
                if (auto it = sums.find({i, j}); it != sums.end()) got = it->second;
                if (got != spec.degree) {
                    std::ostringstream os;
                    os << "pair (" << i << "," << j << "): contact sum " << got
                       << " != e = " << spec.degree;
                    fail(os.str());
                }
            }
    }
    return rep;
}

void require_valid(const ArrangementSpec& spec) {
    auto rep = validate(spec);
    if (!rep.ok()) {
        std::ostringstream os;
        os << "invalid arrangement";
        if (!spec.label.empty()) os << " '" << spec.label << "'";
        os << ":";
        for (const auto& v : rep.violations) os << "\n  - " << v;
        throw std::invalid_argument(os.str());
    }
}

void require_valid_choice(const ArrangementSpec& spec, const ExtensionChoice& choice) {
    const int delta = spec.delta();
    if (choice.epsilon() > delta - 2)
        throw std::invalid_argument("extension choice: epsilon=" + std::to_string(choice.epsilon()) +
                                    " exceeds delta-2=" + std::to_string(delta - 2));
    int prev = -1;
    for (int f : choice.removed) {
        if (f < 0 || f >= delta)
            throw std::invalid_argument("extension choice: fiber index out of range");
        if (f == prev) throw std::invalid_argument("extension choice: duplicate fiber");
        prev = f;
        if (!is_removable(spec, f))
            throw std::invalid_argument("extension choice: fiber " + std::to_string(f + 1) +
                                        " is not removable (a point has no transversal pair)");
    }
}

ArrangementClass classify(const ArrangementSpec& spec) {
    require_valid(spec);
    bool simple = true;
    bool transversal = true;
    for (const auto& fiber : spec.fibers)
        for (const auto& pt : fiber.points) {
            const int k = pt.size();
            for (int a = 0; a < k && transversal; ++a)
                for (int b = a + 1; b < k; ++b) {
                    std::int64_t c = pt.contact_at(a, b);
                    if (c == 1) continue;
                    simple = false;
                    bool witness = false;
                    for (int w = 0; w < k && !witness; ++w)
                        if (w != a && w != b && pt.contact_at(a, w) == c - 1) witness = true;
                    if (!witness) {
                        transversal = false;
                        break;
                    }
                }
        }
    if (!transversal) return ArrangementClass::General;
    return simple ? ArrangementClass::SimpleCrossing : ArrangementClass::Transversal;
}

namespace {

// maximal sub-groups with pairwise contact >= level (union-find on positions)
std::vector<std::vector<int>> split_at(const ContactPoint& pt, const std::vector<int>& pos,
                                       std::int64_t level) {
    std::map<int, int> parent;
    for (int p : pos) parent[p] = p;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pt.contact_at(pos[i], pos[j]) >= level) parent[find(pos[i])] = find(pos[j]);
    std::map<int, std::vector<int>> groups;
    for (int p : pos) groups[find(p)].push_back(p);
    std::vector<std::vector<int>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
}

void build_cluster(const ContactPoint& pt, const std::vector<int>& pos, std::int64_t depth,
                   ClusterNode& node) {
    node.sections.clear();
    for (int p : pos) node.sections.push_back(pt.sections[p]);
    node.depth_from = depth;
    if (pos.size() < 2) {
        node.depth_to = depth;
        return;
    }
    std::int64_t m = pt.contact_at(pos[0], pos[1]);
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            m = std::min(m, pt.contact_at(pos[i], pos[j]));
    node.depth_to = m;  // the cluster persists through depths [depth, m]
    for (auto& g : split_at(pt, pos, m + 1)) {
        node.children.emplace_back();
        build_cluster(pt, g, m + 1, node.children.back());
    }
}

}  // namespace

ClusterNode cluster_tree(const ContactPoint& point) {
    std::vector<int> pos(point.sections.size());
    std::iota(pos.begin(), pos.end(), 0);
    ClusterNode root;
    build_cluster(point, pos, 1, root);
    return root;
}

namespace {

void tau_rec(const ClusterNode& n, Int& tau_acc, Int& centers_acc) {
    if (n.sections.size() >= 2) {
        Int span = n.depth_to - n.depth_from + 1;
        tau_acc += Int(n.sections.size() - 1) * span;
        centers_acc += span;
    }
    for (const auto& c : n.children) tau_rec(c, tau_acc, centers_acc);
}

}  // namespace

Int tau_point(const ContactPoint& point) {
    Int t = 0, s = 0;
    tau_rec(cluster_tree(point), t, s);
    return t;
}

Int tau(const ArrangementSpec& spec) {
    require_valid(spec);
    Int t = 0;
    for (const auto& fiber : spec.fibers)
        for (const auto& pt : fiber.points) t += tau_point(pt);
    return t;
}

Int num_blowups(const ArrangementSpec& spec) {
    require_valid(spec);
    Int s = 0;
    for (const auto& fiber : spec.fibers)
        for (const auto& pt : fiber.points) {
            Int t = 0, c = 0;
            tau_rec(cluster_tree(pt), t, c);
            s += c;
        }
    return s;
}

FiberStats fiber_stats(const ArrangementSpec& spec, int fiber_index) {
    if (fiber_index < 0 || fiber_index >= spec.delta())
        throw std::invalid_argument("fiber_stats: index out of range");
    const auto& fiber = spec.fibers[fiber_index];
    int absorbed = 0;
    for (const auto& pt : fiber.points) absorbed += pt.size() - 1;
    FiberStats st;
    st.k_o = static_cast<int>(fiber.points.size());
    st.k = spec.num_sections - absorbed + 1;
    if (st.k > spec.num_sections)
        throw std::logic_error("fiber_stats: k > d (fiber without singular contact)");
    return st;
}

bool is_removable(const ArrangementSpec& spec, int fiber_index) {
    if (fiber_index < 0 || fiber_index >= spec.delta())
        throw std::invalid_argument("is_removable: index out of range");
    for (const auto& pt : spec.fibers[fiber_index].points) {
        bool has_node_pair = false;
        for (int a = 0; a < pt.size() && !has_node_pair; ++a)
            for (int b = a + 1; b < pt.size(); ++b)
                if (pt.contact_at(a, b) == 1) {
                    has_node_pair = true;
                    break;
                }
        if (!has_node_pair) return false;
    }
    return true;
}

ArrangementSpec frobenius_pullback(const ArrangementSpec& spec, int r) {
    require_valid(spec);
    if (!spec.char_p) throw std::invalid_argument("frobenius_pullback: char_p not set");
    if (r < 0) throw std::invalid_argument("frobenius_pullback: r < 0");
    Int scale_big = 1;
    for (int i = 0; i < r; ++i) scale_big *= *spec.char_p;
    if (scale_big * spec.degree > Int(std::numeric_limits<std::int64_t>::max() / 4))
        throw std::overflow_error("frobenius_pullback: p^r e exceeds contact range");
    const std::int64_t scale = static_cast<std::int64_t>(scale_big);
    ArrangementSpec out = spec;
    out.degree *= scale;
    out.label = spec.label + "*F^" + std::to_string(r);
    for (auto& fiber : out.fibers)
        for (auto& pt : fiber.points)
            for (auto& c : pt.contact_) c *= scale;
    return out;
}

ArrangementSpec etale_pullback(const ArrangementSpec& spec, int n) {
    require_valid(spec);
    if (spec.genus < 1)
        throw std::invalid_argument("etale_pullback: genus 0 base has no unramified covers");
    if (n < 1) throw std::invalid_argument("etale_pullback: n < 1");
    ArrangementSpec out = spec;
    out.genus = n * (spec.genus - 1) + 1;
    out.degree = spec.degree * n;
    out.label = spec.label + "*et" + std::to_string(n);
    out.fibers.clear();
    for (int i = 0; i < n; ++i)
        for (const auto& f : spec.fibers) out.fibers.push_back(f);
    return out;
}

ArrangementSpec relabel_sections(const ArrangementSpec& spec, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(spec.num_sections))
        throw std::invalid_argument("relabel_sections: permutation size mismatch");
    ArrangementSpec out = spec;
    for (auto& fiber : out.fibers)
        for (auto& pt : fiber.points) {
            const int k = pt.size();
            std::vector<int> order(k);
            std::iota(order.begin(), order.end(), 0);
            std::vector<int> mapped(k);
            for (int i = 0; i < k; ++i) mapped[i] = perm[pt.sections[i] - 1];
            std::sort(order.begin(), order.end(), [&](int a, int b) { return mapped[a] < mapped[b]; });
            ContactPoint np;
            np.sections.resize(k);
            np.contact_.assign(static_cast<std::size_t>(k) * k, 0);
            for (int i = 0; i < k; ++i) np.sections[i] = mapped[order[i]];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j)
                        np.contact_[static_cast<std::size_t>(i) * k + j] = pt.contact_at(order[i], order[j]);
            pt = std::move(np);
        }
    return out;
}

}  // namespace logchern
