#include "logchern/spec_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "logchern/rng.hpp"

namespace logchern {

namespace {

using PairKey = std::pair<int, int>;

PairKey key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

ArrangementSpec try_random_spec(int d, std::int64_t e, int g, bool tangencies, Rng& rng) {
    std::map<PairKey, std::int64_t> remaining;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) remaining[key(i, j)] = e;
    auto open_pairs = [&] {
        std::vector<PairKey> out;
        for (auto& [k, v] : remaining)
            if (v > 0) out.push_back(k);
        return out;
    };

    ArrangementSpec spec;
    spec.genus = g;
    spec.degree = e;
    spec.num_sections = d;
    spec.label = "random";

    while (true) {
        auto open = open_pairs();
        if (open.empty()) break;
        FiberData fiber;
        std::set<int> used;
        // a few points per fiber, sections disjoint
        int attempts = static_cast<int>(rng.below(3)) + 1;
        for (int a = 0; a < attempts; ++a) {
            std::vector<PairKey> avail;
            for (auto& k : open)
                if (!used.count(k.first) && !used.count(k.second) && remaining[k] > 0)
                    avail.push_back(k);
            if (avail.empty()) break;
            auto [i, j] = avail[rng.below(avail.size())];
            const std::uint64_t shape = rng.below(4);
            if (shape == 0 || !tangencies) {
                // ordinary point, possibly grown beyond the pair
                std::vector<int> members{i, j};
                int grow = static_cast<int>(rng.below(3));
                for (int gi = 0; gi < grow; ++gi) {
                    std::vector<int> cands;
                    for (int k = 1; k <= d; ++k) {
                        if (used.count(k) || std::find(members.begin(), members.end(), k) != members.end())
                            continue;
                        if (static_cast<int>(members.size()) + 1 >= d) continue;
                        bool ok = true;
                        for (int m : members)
                            if (remaining[key(k, m)] < 1) ok = false;
                        if (ok) cands.push_back(k);
                    }
                    if (cands.empty()) break;
                    members.push_back(cands[rng.below(cands.size())]);
                }
                for (std::size_t x = 0; x < members.size(); ++x)
                    for (std::size_t y = x + 1; y < members.size(); ++y)
                        remaining[key(members[x], members[y])] -= 1;
                for (int m : members) used.insert(m);
                fiber.points.push_back(ContactPoint::ordinary(members));
            } else if (shape == 1 || shape == 2) {
                // plain tangency of random order
                std::int64_t c = 1 + static_cast<std::int64_t>(rng.below(
                                         static_cast<std::uint64_t>(remaining[key(i, j)])));
                remaining[key(i, j)] -= c;
                used.insert(i);
                used.insert(j);
                fiber.points.push_back(ContactPoint::tangency(i, j, c));
            } else {
                // nested: pair of contact c >= 2 with a transversal witness
                std::vector<int> cands;
                for (int k = 1; k <= d; ++k)
                    if (!used.count(k) && k != i && k != j && remaining[key(i, k)] >= 1 &&
                        remaining[key(j, k)] >= 1 && d > 3)
                        cands.push_back(k);
                if (remaining[key(i, j)] >= 2 && !cands.empty()) {
                    int w = cands[rng.below(cands.size())];
                    std::int64_t c = 2 + static_cast<std::int64_t>(rng.below(
                                             static_cast<std::uint64_t>(remaining[key(i, j)] - 1)));
                    ContactPoint pt = ContactPoint::ordinary({i, j, w});
                    auto pi = std::find(pt.sections.begin(), pt.sections.end(), i) - pt.sections.begin();
                    auto pj = std::find(pt.sections.begin(), pt.sections.end(), j) - pt.sections.begin();
                    pt.set_contact_at(static_cast<int>(pi), static_cast<int>(pj), c);
                    remaining[key(i, j)] -= c;
                    remaining[key(i, w)] -= 1;
                    remaining[key(j, w)] -= 1;
                    used.insert(i);
                    used.insert(j);
                    used.insert(w);
                    fiber.points.push_back(std::move(pt));
                } else {
                    remaining[key(i, j)] -= 1;
                    used.insert(i);
                    used.insert(j);
                    fiber.points.push_back(ContactPoint::ordinary({i, j}));
                }
            }
        }
        if (!fiber.points.empty()) spec.fibers.push_back(std::move(fiber));
    }
    return spec;
}

}  // namespace

ArrangementSpec gen_random_spec(const RandomSpecParams& params, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        const int d = params.d_min + static_cast<int>(rng.below(params.d_max - params.d_min + 1));
        const std::int64_t e =
            params.e_min + static_cast<std::int64_t>(rng.below(params.e_max - params.e_min + 1));
        const int g = params.g_min + static_cast<int>(rng.below(params.g_max - params.g_min + 1));
        ArrangementSpec spec = try_random_spec(d, e, g, params.allow_tangencies, rng);
        if (spec.delta() > params.max_delta) continue;
        if (validate(spec).ok()) return spec;
    }
    throw std::runtime_error("gen_random_spec: could not produce a valid spec within bounds");
}

ArrangementSpec gen_generic_spec(int d, std::int64_t e, int g, std::uint64_t seed) {
    if (d < 3 || e < 1 || g < 0) throw std::invalid_argument("gen_generic_spec: bad parameters");
    if (g == 0 && d == 4 && e == 1)
        throw std::invalid_argument("gen_generic_spec: (d,e,g)=(4,1,0) sits on the bound");
    Rng rng(seed);

    // one round-robin schedule per layer, sections relabeled at random
    std::vector<std::vector<std::vector<std::pair<int, int>>>> layers;  // layer -> round -> pairs
    for (std::int64_t layer = 0; layer < e; ++layer) {
        std::vector<int> lab(d);
        std::iota(lab.begin(), lab.end(), 1);
        for (int i = d - 1; i > 0; --i)
            std::swap(lab[i], lab[rng.below(static_cast<std::uint64_t>(i + 1))]);
        // circle method on m slots; slot m-1 is fixed (the bye when d is odd)
        const int m = d % 2 == 0 ? d : d + 1;
        std::vector<std::vector<std::pair<int, int>>> rounds;
        for (int r = 0; r < m - 1; ++r) {
            std::vector<std::pair<int, int>> pairs;
            if (m - 1 < d) pairs.push_back({lab[m - 1], lab[r]});
            for (int k = 1; k < m / 2; ++k) {
                int a = (r + k) % (m - 1);
                int b = (r - k + m - 1) % (m - 1);
                pairs.push_back({lab[a], lab[b]});
            }
            if (!pairs.empty()) rounds.push_back(std::move(pairs));
        }
        layers.push_back(std::move(rounds));
    }

    // materialize: fiber per round, contact-1 point per pair
    struct Pt {
        int a, b;
        std::int64_t c;
    };
    std::vector<std::vector<Pt>> fibers;
    std::map<PairKey, std::vector<std::pair<int, int>>> locations;  // pair -> (fiber, point idx)
    for (auto& rounds : layers)
        for (auto& pairs : rounds) {
            std::vector<Pt> fiber;
            for (auto [a, b] : pairs) {
                locations[key(a, b)].push_back({static_cast<int>(fibers.size()),
                                                static_cast<int>(fiber.size())});
                fiber.push_back({a, b, 1});
            }
            fibers.push_back(std::move(fiber));
        }

    // stacking: fuse two crossings of one pair into a deeper tangency while
    // the margin certificate stays strictly positive:
    //   tau = e C(d,2) (unchanged by stacking),
    //   bound = (d-1)(delta + 2(g-1) + e) shrinks only when a fiber empties.
    const Int tau_total = Int(e) * d * (d - 1) / 2;
    auto margin_ok = [&](int delta) {
        return Int(d - 1) * (delta + 2 * (g - 1) + e) > tau_total;
    };
    int delta = static_cast<int>(fibers.size());
    if (!margin_ok(delta)) throw std::logic_error("gen_generic_spec: base margin not positive");
    const std::uint64_t stack_tries = rng.below(static_cast<std::uint64_t>(2 * d * e)) ;
    std::vector<PairKey> all_pairs;
    for (auto& [k, v] : locations) all_pairs.push_back(k);
    for (std::uint64_t t = 0; t < stack_tries; ++t) {
        auto& locs = locations[all_pairs[rng.below(all_pairs.size())]];
        if (locs.size() < 2) continue;
        auto& [fa, pa] = locs[locs.size() - 2];
        auto [fb, pb] = locs.back();
        // count live points on the donor fiber
        int live = 0;
        for (auto& pt : fibers[fb]) live += pt.c > 0;
        if (live == 1 && !margin_ok(delta - 1)) continue;
        fibers[fa][pa].c += fibers[fb][pb].c;
        fibers[fb][pb].c = 0;
        locs.pop_back();
        if (live == 1) --delta;
    }

    ArrangementSpec spec;
    spec.genus = g;
    spec.degree = e;
    spec.num_sections = d;
    spec.label = "generic";
    for (auto& fpts : fibers) {
        FiberData fd;
        for (auto& pt : fpts)
            if (pt.c > 0) fd.points.push_back(ContactPoint::tangency(pt.a, pt.b, pt.c));
        if (!fd.points.empty()) spec.fibers.push_back(std::move(fd));
    }
    require_valid(spec);
    return spec;
}

}  // namespace logchern
