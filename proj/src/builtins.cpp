#include "logchern/builtins.hpp"

#include <algorithm>
#include <stdexcept>

namespace logchern {

namespace {

ArrangementSpec triangle() {
    ArrangementSpec s;
    s.genus = 0;
    s.degree = 1;
    s.num_sections = 3;
    s.label = "triangle";
    for (auto pr : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        FiberData f;
        f.points.push_back(ContactPoint::ordinary({pr.first, pr.second}));
        s.fibers.push_back(std::move(f));
    }
    return s;
}

ArrangementSpec generic_lines(int d) {
    if (d < 3) throw std::invalid_argument("generic_lines: d >= 3 required");
    ArrangementSpec s;
    s.genus = 0;
    s.degree = 1;
    s.num_sections = d;
    s.label = "generic_lines(" + std::to_string(d) + ")";
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            FiberData f;
            f.points.push_back(ContactPoint::ordinary({i, j}));
            s.fibers.push_back(std::move(f));
        }
    return s;
}

ArrangementSpec tangent_quad(std::int64_t e) {
    if (e < 1) throw std::invalid_argument("tangent_quad: e >= 1 required");
    ArrangementSpec s;
    s.genus = 0;
    s.degree = e;
    s.num_sections = 4;
    s.label = "tangent_quad(" + std::to_string(e) + ")";
    // the three pairings of {1,2,3,4}; every pair tangent of order e
    const int pairing[3][2][2] = {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
    for (auto& pr : pairing) {
        FiberData f;
        f.points.push_back(ContactPoint::tangency(pr[0][0], pr[0][1], e));
        f.points.push_back(ContactPoint::tangency(pr[1][0], pr[1][1], e));
        s.fibers.push_back(std::move(f));
    }
    return s;
}

// A point with nested contact clusters: `deep` lists groups whose internal
// pairwise contact is 2; every other pair at the point has contact 1.
ContactPoint point_with_tangent_groups(std::vector<int> sections,
                                       const std::vector<std::vector<int>>& deep) {
    ContactPoint pt = ContactPoint::ordinary(std::move(sections));
    for (const auto& grp : deep)
        for (std::size_t a = 0; a < grp.size(); ++a)
            for (std::size_t b = a + 1; b < grp.size(); ++b) {
                auto ia = std::find(pt.sections.begin(), pt.sections.end(), grp[a]) - pt.sections.begin();
                auto ib = std::find(pt.sections.begin(), pt.sections.end(), grp[b]) - pt.sections.begin();
                pt.set_contact_at(static_cast<int>(ia), static_cast<int>(ib), 2);
            }
    return pt;
}

// The arrangement induced by the conic through the five triple points
// p4, p9, p10, p11, p12 of the dual Hesse arrangement of nine lines
// (12 triple points in total). Sections 1..11 are the stable-fibration
// markings at the remaining points; the marking at p12 becomes the
// zero-section. Fiber dictionary, derived from that geometry:
//   F1..F3   fibers over p10, p11, p12: three ordinary triple points each
//   F4, F5   fibers over p4, p9: one 9-fold point with two tangent triples
//            and a tangent pair (the conic is tangent to a bisecant there)
//   F6       second crossing of the three-point line through p12: an
//            ordinary 8-fold point
//   F7, F8   second crossings of the four-point lines missing the conic's
//            points: ordinary 4-fold points
//   F9..F20  twelve plain nodes on the six bisecants of {p1..p8} that miss
//            the conic
// Every pair of sections has total contact 3 (= e) and tau = 69.
ArrangementSpec dual_hesse_conic() {
    ArrangementSpec s;
    s.genus = 0;
    s.degree = 3;
    s.num_sections = 11;
    s.label = "dual_hesse_conic";

    auto triple_fiber = [&](std::vector<int> a, std::vector<int> b, std::vector<int> c) {
        FiberData f;
        f.points.push_back(ContactPoint::ordinary(std::move(a)));
        f.points.push_back(ContactPoint::ordinary(std::move(b)));
        f.points.push_back(ContactPoint::ordinary(std::move(c)));
        s.fibers.push_back(std::move(f));
    };
    triple_fiber({3, 6, 9}, {2, 5, 8}, {1, 4, 7});  // F1
    triple_fiber({1, 5, 9}, {3, 4, 8}, {2, 6, 7});  // F2
    triple_fiber({7, 8, 9}, {4, 5, 6}, {1, 2, 3});  // F3

    {
        FiberData f4;  // over p4
        f4.points.push_back(point_with_tangent_groups({1, 2, 3, 4, 7, 8, 9, 10, 11},
                                                      {{3, 8, 11}, {1, 7, 10}, {2, 4}}));
        s.fibers.push_back(std::move(f4));
        FiberData f5;  // over p9
        f5.points.push_back(point_with_tangent_groups({1, 2, 3, 4, 5, 6, 9, 10, 11},
                                                      {{1, 5, 11}, {3, 6, 10}, {2, 9}}));
        s.fibers.push_back(std::move(f5));
    }
    {
        FiberData f6;
        f6.points.push_back(ContactPoint::ordinary({4, 5, 6, 7, 8, 9, 10, 11}));
        s.fibers.push_back(std::move(f6));
        FiberData f7;
        f7.points.push_back(ContactPoint::ordinary({2, 6, 7, 11}));
        s.fibers.push_back(std::move(f7));
        FiberData f8;
        f8.points.push_back(ContactPoint::ordinary({2, 5, 8, 10}));
        s.fibers.push_back(std::move(f8));
    }
    for (auto pr : {std::pair{3, 5}, std::pair{3, 5}, std::pair{3, 7}, std::pair{3, 7},
                    std::pair{5, 7}, std::pair{5, 7}, std::pair{1, 6}, std::pair{1, 6},
                    std::pair{1, 8}, std::pair{1, 8}, std::pair{6, 8}, std::pair{6, 8}}) {
        FiberData f;
        f.points.push_back(ContactPoint::ordinary({pr.first, pr.second}));
        s.fibers.push_back(std::move(f));
    }
    return s;
}

// "name(arg1,arg2)" -> {name, args}
struct ParsedName {
    std::string base;
    std::vector<std::int64_t> args;
};

ParsedName parse_name(const std::string& name) {
    ParsedName p;
    auto open = name.find('(');
    if (open == std::string::npos) {
        p.base = name;
        return p;
    }
    if (name.back() != ')') throw std::invalid_argument("malformed builtin name: " + name);
    p.base = name.substr(0, open);
    std::string args = name.substr(open + 1, name.size() - open - 2);
    std::size_t pos = 0;
    while (pos < args.size()) {
        auto comma = args.find(',', pos);
        if (comma == std::string::npos) comma = args.size();
        p.args.push_back(std::stoll(args.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return p;
}

}  // namespace

ArrangementSpec builtin(const std::string& name) {
    ParsedName p = parse_name(name);
    ArrangementSpec spec;
    if (p.base == "triangle" && p.args.empty()) {
        spec = triangle();
    } else if (p.base == "generic_lines" && p.args.size() == 1) {
        spec = generic_lines(static_cast<int>(p.args[0]));
    } else if (p.base == "dual_hesse_conic" && p.args.empty()) {
        spec = dual_hesse_conic();
    } else if (p.base == "tangent_quad" && p.args.size() == 1) {
        spec = tangent_quad(p.args[0]);
    } else if (p.base == "frobenius_triangle" && (p.args.size() == 1 || p.args.size() == 2)) {
        ArrangementSpec base = triangle();
        base.char_p = p.args[0];
        base.label = "triangle_char" + std::to_string(p.args[0]);
        int r = p.args.size() == 2 ? static_cast<int>(p.args[1]) : 1;
        spec = frobenius_pullback(base, r);
    } else {
        throw std::invalid_argument("unknown builtin '" + name + "'; known: triangle, "
                                    "generic_lines(d), dual_hesse_conic, tangent_quad(e), "
                                    "frobenius_triangle(p[,r])");
    }
    require_valid(spec);
    return spec;
}

std::vector<std::string> builtin_names() {
    return {"triangle", "generic_lines(d)", "dual_hesse_conic", "tangent_quad(e)",
            "frobenius_triangle(p[,r])"};
}

HeightResult height_check(const HeightInput& in) {
    if (in.g < 2) throw std::invalid_argument("height_check: fiber genus >= 2 required");
    if (in.delta < 0) throw std::invalid_argument("height_check: delta >= 0 required");
    HeightResult r;
    r.lhs = in.h_K;
    r.rhs = Rat(2 * in.g - 1) * (in.d_P + in.delta) - in.omega_sq;
    r.holds = r.lhs < r.rhs;
    r.inconsistent = r.rhs <= 0;
    return r;
}

DeBruijnErdosResult de_bruijn_erdos(const IncidenceStructure& inc) {
    const int s = inc.lines, r = inc.points;
    if (s < 1 || r < 1) throw std::invalid_argument("de_bruijn_erdos: empty structure");
    for (int pt = 0; pt < r; ++pt) {
        int on = 0;
        for (int l = 0; l < s; ++l) on += inc.incident(l, pt);
        if (on < 2)
            throw std::invalid_argument("de_bruijn_erdos: point " + std::to_string(pt + 1) +
                                        " lies on fewer than two lines");
    }
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) {
            int common = 0;
            for (int pt = 0; pt < r; ++pt) common += inc.incident(a, pt) && inc.incident(b, pt);
            if (common > 1)
                throw std::invalid_argument("de_bruijn_erdos: lines " + std::to_string(a + 1) +
                                            " and " + std::to_string(b + 1) +
                                            " share more than one point");
        }
    return {r >= s, r, s, r == s};
}

IncidenceStructure generic_lines_incidence(int d) {
    if (d < 3) throw std::invalid_argument("generic_lines_incidence: d >= 3");
    const int r = d * (d - 1) / 2;
    auto s = IncidenceStructure::make(d, r);
    int pt = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            s.set(a, pt);
            s.set(b, pt);
            ++pt;
        }
    return s;
}

IncidenceStructure fano_incidence() {
    auto s = IncidenceStructure::make(7, 7);
    // lines of PG(2,2), points 1..7
    const int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                             {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    for (int l = 0; l < 7; ++l)
        for (int k = 0; k < 3; ++k) s.set(l, lines[l][k] - 1);
    return s;
}

IncidenceStructure near_pencil_incidence(int sline) {
    if (sline < 3) throw std::invalid_argument("near_pencil_incidence: s >= 3");
    // lines 0..s-2 concurrent at point 0; line s-1 meets each of them apart
    auto s = IncidenceStructure::make(sline, sline);
    for (int l = 0; l < sline - 1; ++l) {
        s.set(l, 0);
        s.set(l, l + 1);
        s.set(sline - 1, l + 1);
    }
    return s;
}

}  // namespace logchern
