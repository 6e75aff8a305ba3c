#include "logchern/log_chern.hpp"

#include <algorithm>
#include <stdexcept>

#include "logchern/rng.hpp"

namespace logchern {

Rat LogChernPair::ratio() const {
    if (c2 == 0) throw std::logic_error("LogChernPair: c2 = 0, ratio undefined");
    return Rat(c1sq, c2);
}

LogChernPair log_chern_extended(const ArrangementSpec& spec) {
    require_valid(spec);
    const Int d1 = spec.num_sections - 1;
    const Int delta = spec.delta();
    const Int g1 = spec.genus - 1;
    LogChernPair out;
    out.c1sq = d1 * (2 * delta + 4 * g1 - spec.degree) + tau(spec);
    out.c2 = d1 * (2 * g1 + delta);
    return out;
}

LogChernPair log_chern_partial(const ArrangementSpec& spec, const ExtensionChoice& choice) {
    LogChernPair ext = log_chern_extended(spec);
    require_valid_choice(spec, choice);
    Int sum_k = 0, sum_ko = 0;
    for (int f : choice.removed) {
        FiberStats st = fiber_stats(spec, f);
        sum_k += st.k;
        sum_ko += st.k_o;
    }
    const Int eps = choice.epsilon();
    LogChernPair out;
    out.c2 = ext.c2 - sum_k + 2 * eps;
    out.c1sq = ext.c1sq - sum_ko - 2 * sum_k + 4 * eps;
    return out;
}

bool InequalityReport::all_applicable_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InequalityCheck& c) { return !c.applicable || c.holds; });
}

const InequalityCheck& InequalityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::invalid_argument("InequalityReport: no check named " + name);
}

InequalityReport check_inequalities(const ArrangementSpec& spec, const ExtensionChoice& choice) {
    InequalityReport rep;
    const bool char0 = !spec.char_p.has_value();
    const bool line_arr = spec.genus == 0 && spec.degree == 1;
    const Int d = spec.num_sections;
    const Int delta = spec.delta();
    const Int t = tau(spec);
    const LogChernPair ext = log_chern_extended(spec);
    const LogChernPair part = log_chern_partial(spec, choice);

    auto add = [&](std::string name, Rat lhs, Rat rhs, bool strict_greater, bool applicable) {
        rep.checks.push_back({std::move(name), strict_greater ? lhs > rhs : lhs >= rhs,
                              std::move(lhs), std::move(rhs), applicable});
    };

    // positivity / lower bounds for the extended arrangement
    add("c1sq_ext_ge_2d_minus_1", Rat(ext.c1sq), Rat(2 * d - 1), false, true);
    add("c2_ext_ge_d_minus_1", Rat(ext.c2), Rat(d - 1), false, true);
    add("ratio_ext_gt_2", ext.ratio(), 2, true, true);
    add("tau_gt_e_d_minus_1", Rat(t), Rat(spec.degree * (d - 1)), true, true);

    // strict log Miyaoka-Yau (characteristic 0 only); the tau form is the
    // same inequality rearranged, the non-strict variant is the version used
    // by the combinatorial counterexamples
    const Int tau_rhs = (d - 1) * (delta + 2 * (spec.genus - 1) + spec.degree);
    rep.checks.push_back({"log_my_strict_ext", ext.c1sq < 3 * ext.c2, Rat(ext.c1sq), Rat(3 * ext.c2), char0});
    rep.checks.push_back({"tau_my_strict", t < tau_rhs, Rat(t), Rat(tau_rhs), char0});
    rep.checks.push_back({"tau_my_nonstrict", t <= tau_rhs, Rat(t), Rat(tau_rhs), char0});

    // partially extended bounds
    add("c1sq_partial_ge_2", Rat(part.c1sq), 2, false, true);
    add("c2_partial_ge_1", Rat(part.c2), 1, false, true);
    rep.checks.push_back({"ratio_partial_gt_2", part.ratio() > 2, part.ratio(), 2,
                          choice.epsilon() == 0});
    rep.checks.push_back({"log_my_strict_partial", part.c1sq < 3 * part.c2, Rat(part.c1sq),
                          Rat(3 * part.c2), char0});

    // Hirzebruch-Sakai, sharp for line arrangements
    rep.checks.push_back({"hirzebruch_sakai_83", 3 * part.c1sq <= 8 * part.c2, part.ratio(),
                          Rat(8, 3), char0 && line_arr});
    return rep;
}

Rat frobenius_ratio(const ArrangementSpec& spec, int r) {
    if (!spec.char_p) throw std::invalid_argument("frobenius_ratio: char_p not set");
    if (r < 0) throw std::invalid_argument("frobenius_ratio: r < 0");
    Int scale = 1;
    for (int i = 0; i < r; ++i) scale *= *spec.char_p;
    return 2 + Rat(scale) * (log_chern_extended(spec).ratio() - 2);
}

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ScanResult ratio_scan(const ArrangementSpec& spec, std::span<const ExtensionChoice> choices) {
    if (choices.empty()) throw std::invalid_argument("ratio_scan: no choices");
    ScanResult res;
    bool have = false;
    for (const auto& ch : choices) {
        ScanEntry e{ch, log_chern_partial(spec, ch)};
        res.entries.push_back(e);
        ++res.explored;
        if (!have) {
            res.best = e;
            have = true;
            continue;
        }
        Rat r = e.pair.ratio(), rb = res.best.pair.ratio();
        if (r > rb || (r == rb && lex_less(e.choice.removed, res.best.choice.removed)))
            res.best = e;
    }
    return res;
}

ScanResult ratio_scan_random(const ArrangementSpec& spec, std::size_t budget, std::uint64_t seed) {
    require_valid(spec);
    std::vector<int> removable;
    for (int f = 0; f < spec.delta(); ++f)
        if (is_removable(spec, f)) removable.push_back(f);
    const int max_eps = spec.delta() - 2;

    std::vector<ExtensionChoice> choices;
    choices.push_back(ExtensionChoice::none());
    if (removable.size() < 63 && (1ULL << removable.size()) <= budget) {
        for (std::uint64_t mask = 1; mask < (1ULL << removable.size()); ++mask) {
            std::vector<int> sel;
            for (std::size_t i = 0; i < removable.size(); ++i)
                if (mask & (1ULL << i)) sel.push_back(removable[i]);
            if (static_cast<int>(sel.size()) <= max_eps)
                choices.push_back(ExtensionChoice::of(std::move(sel)));
        }
    } else {
        Rng rng(seed);
        for (std::size_t i = 0; i < budget; ++i) {
            std::vector<int> sel;
            for (int f : removable)
                if (rng.next() & 1) sel.push_back(f);
            while (static_cast<int>(sel.size()) > max_eps) {
                sel.erase(sel.begin() + static_cast<std::ptrdiff_t>(rng.below(sel.size())));
            }
            choices.push_back(ExtensionChoice::of(std::move(sel)));
        }
    }
    return ratio_scan(spec, choices);
}

}  // namespace logchern
