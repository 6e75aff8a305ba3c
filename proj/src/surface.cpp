#include "logchern/surface.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "logchern/log_chern.hpp"
#include "logchern/number_kernel.hpp"
#include "logchern/rng.hpp"

namespace logchern {

namespace {

void check_prime_input(const ArrangementSpec& spec, std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (spec.char_p && *spec.char_p == p)
        throw std::invalid_argument("p must differ from the ground-field characteristic");
}

// number of kept fibers
int kept_count(const ArrangementSpec& spec, const ExtensionChoice& choice) {
    return spec.delta() - choice.epsilon();
}

}  // namespace

Int count_solutions(const ArrangementSpec& spec, const ExtensionChoice& choice, std::int64_t p) {
    require_valid(spec);
    require_valid_choice(spec, choice);
    check_prime_input(spec, p);
    const long d = spec.num_sections;
    const long n = kept_count(spec, choice);
    const std::int64_t e = spec.degree;
    Int total = 0;
    // x-subtotal t runs over d <= t, e t <= p - n
    for (std::int64_t t = d; e * t <= p - n; ++t)
        total += binomial(Int(t - 1), d - 1) * binomial(Int(p - e * t - 1), n - 1);
    return total;
}

Rat count_solutions_estimate(const ArrangementSpec& spec, const ExtensionChoice& choice,
                             std::int64_t p) {
    const long d = spec.num_sections;
    const long n = kept_count(spec, choice);
    const long m = d + n - 1;
    Int pk = 1;
    for (long i = 0; i < m; ++i) pk *= p;
    Int ed = 1;
    for (long i = 0; i < d; ++i) ed *= spec.degree;
    return Rat(pk, factorial(m) * ed);
}

PartitionSolution sample_solution(const ArrangementSpec& spec, const ExtensionChoice& choice,
                                  std::int64_t p, std::uint64_t seed) {
    require_valid(spec);
    require_valid_choice(spec, choice);
    check_prime_input(spec, p);
    const long d = spec.num_sections;
    const long n = kept_count(spec, choice);
    const std::int64_t e = spec.degree;
    if (p < e * d + n)
        throw std::invalid_argument("no positive solution: p < e*d + (delta - eps) = " +
                                    std::to_string(e * d + n));

    // draw the section subtotal t with probability proportional to
    // C(t-1, d-1) C(p - e t - 1, n - 1)
    std::vector<Int> weights;
    std::vector<std::int64_t> ts;
    Int total = 0;
    for (std::int64_t t = d; e * t <= p - n; ++t) {
        Int w = binomial(Int(t - 1), d - 1) * binomial(Int(p - e * t - 1), n - 1);
        if (w > 0) {
            weights.push_back(w);
            ts.push_back(t);
            total += w;
        }
    }
    if (total == 0) throw std::invalid_argument("no positive solution exists");

    Rng rng(seed);
    Int pick = rng.below_big(total);
    std::size_t idx = 0;
    for (; idx < weights.size(); ++idx) {
        if (pick < weights[idx]) break;
        pick -= weights[idx];
    }
    const std::int64_t t = ts[idx];

    PartitionSolution sol;
    sol.p = p;
    // uniform composition of t into d positive parts, then p - e t into n
    auto composition = [&rng](std::int64_t sum, long parts) {
        std::vector<std::int64_t> cuts = rng.sorted_cuts(sum, parts - 1);
        std::vector<std::int64_t> out;
        std::int64_t prev = 0;
        for (auto c : cuts) {
            out.push_back(c - prev);
            prev = c;
        }
        out.push_back(sum - prev);
        return out;
    };
    sol.x = composition(t, d);
    sol.y = composition(p - e * t, n);
    std::int64_t sx = 0;
    for (auto v : sol.x) sx += v;
    sol.x_last = p - sx;
    if (sol.x_last <= 0 || sol.x_last >= p) throw std::logic_error("x_{d+1} out of (0,p)");
    return sol;
}

MultiplicityAssignment assign_multiplicities(const ResolutionGraph& graph,
                                             const PartitionSolution& solution) {
    if (static_cast<int>(solution.x.size()) != graph.d)
        throw std::invalid_argument("assign_multiplicities: solution does not match graph (d)");
    MultiplicityAssignment a;
    a.p = solution.p;
    a.nu.assign(graph.components.size(), Int(0));
    int kept_rank = 0;
    for (std::size_t i = 0; i < graph.components.size(); ++i) {
        const auto& c = graph.components[i];
        switch (c.kind) {
            case ComponentKind::Section:
                a.nu[i] = solution.x[c.index - 1];
                break;
            case ComponentKind::ZeroSection:
                a.nu[i] = solution.x_last;
                break;
            case ComponentKind::Fiber:
                if (c.in_divisor) {
                    if (kept_rank >= static_cast<int>(solution.y.size()))
                        throw std::invalid_argument("assign_multiplicities: fiber count mismatch");
                    a.nu[i] = solution.y[kept_rank++];
                }
                break;
            case ComponentKind::Exceptional: {
                Int v = 0;
                for (int src : c.created_on) v += a.nu[src];
                a.nu[i] = v;
                break;
            }
        }
        if (c.in_divisor && !(a.nu[i] > 0 && a.nu[i] < solution.p)) {
            std::ostringstream os;
            os << "multiplicity out of range: nu(" << c.name() << ") = " << a.nu[i]
               << " not in (0," << solution.p << "); the input lies outside the regime "
               << "where the root cover is defined";
            throw std::invalid_argument(os.str());
        }
    }
    if (kept_rank != static_cast<int>(solution.y.size()))
        throw std::invalid_argument("assign_multiplicities: fiber count mismatch");
    return a;
}

const char* to_string(NodeType t) {
    switch (t) {
        case NodeType::I: return "I";
        case NodeType::II: return "II";
        case NodeType::III: return "III";
        case NodeType::IV: return "IV";
        default: return "V";
    }
}

std::vector<NodeRecord> classify_nodes(const ResolutionGraph& graph,
                                       const MultiplicityAssignment& assignment) {
    std::vector<NodeRecord> out;
    const std::int64_t p = assignment.p;
    for (const auto& [pair, count] : graph.adjacency) {
        const auto& ca = graph.components[pair.first];
        const auto& cb = graph.components[pair.second];
        if (!ca.in_divisor || !cb.in_divisor) continue;
        NodeType type;
        using K = ComponentKind;
        auto is = [&](K x, K y) {
            return (ca.kind == x && cb.kind == y) || (ca.kind == y && cb.kind == x);
        };
        if (is(K::Section, K::Section)) type = NodeType::I;
        else if (is(K::Fiber, K::Section)) type = NodeType::II;
        else if (is(K::Fiber, K::ZeroSection)) type = NodeType::III;
        else if (is(K::Exceptional, K::Section)) type = NodeType::IV;
        else if (is(K::Exceptional, K::Exceptional) || is(K::Exceptional, K::Fiber)) type = NodeType::V;
        else {
            std::ostringstream os;
            os << "node between " << ca.name() << " and " << cb.name()
               << " matches no template (I-V)";
            throw std::logic_error(os.str());
        }
        NodeRecord rec;
        rec.comp_a = pair.first;
        rec.comp_b = pair.second;
        rec.nu_a = assignment.nu[pair.first];
        rec.nu_b = assignment.nu[pair.second];
        rec.type = type;
        rec.count = count;
        const std::int64_t na = static_cast<std::int64_t>(rec.nu_a % p);
        const std::int64_t nb = static_cast<std::int64_t>(rec.nu_b % p);
        const std::int64_t prod = static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(mod_inverse(na, p)) * nb) % p);
        std::int64_t residue = (p - prod) % p;
        if (residue == 0)
            throw std::logic_error("node residue 0; multiplicities not coprime to p");
        rec.residue = residue;
        out.push_back(std::move(rec));
    }
    return out;
}

std::pair<Rat, Int> ccf_lcf(const std::vector<NodeRecord>& nodes, std::int64_t p) {
    Rat ccf = 0;
    Int lcf = 0;
    std::map<std::int64_t, std::pair<Rat, std::int64_t>> memo;  // residue -> (c, l)
    for (const auto& n : nodes) {
        auto it = memo.find(n.residue);
        if (it == memo.end()) {
            Rat c = c_value(n.residue, p);
            std::int64_t l = hj_length(n.residue, p);
            it = memo.emplace(n.residue, std::make_pair(std::move(c), l)).first;
        }
        ccf += it->second.first * n.count;
        lcf += Int(it->second.second) * n.count;
    }
    return {ccf, lcf};
}

SurfaceInvariants chern_of_X(const ArrangementSpec& spec, const ExtensionChoice& choice,
                             const PartitionSolution& solution) {
    const std::int64_t p = solution.p;
    check_prime_input(spec, p);
    ResolutionGraph graph = build_resolution(spec, choice);
    auto assignment = assign_multiplicities(graph, solution);
    auto nodes = classify_nodes(graph, assignment);
    auto [ccf, lcf] = ccf_lcf(nodes, p);

    const LogChernPair bars = log_chern_partial(spec, choice);
    auto [c1Y, c2Y] = chern_of_Y(graph);

    Rat c1x = Rat(bars.c1sq) * p + 2 * Rat(c2Y - bars.c2) +
              Rat(c1Y - bars.c1sq + 2 * bars.c2 - 2 * c2Y, p) - ccf;
    Rat c2x = Rat(bars.c2) * p + Rat(c2Y - bars.c2) + Rat(lcf);

    if (!is_integer(c1x) || !is_integer(c2x)) {
        std::ostringstream os;
        os << "root-cover Chern numbers are not integral (c1^2 = " << rat_to_string(c1x)
           << ", c2 = " << rat_to_string(c2x) << "); implementation invariant broken";
        throw std::logic_error(os.str());
    }
    SurfaceInvariants inv;
    inv.p = p;
    inv.c1sq = rat_num(c1x);
    inv.c2 = rat_num(c2x);
    inv.ccf = ccf;
    inv.lcf = lcf;
    if ((inv.c1sq + inv.c2) % 12 != 0)
        throw std::logic_error("c1^2(X) + c2(X) not divisible by 12");
    if (inv.c2 <= 0) throw std::logic_error("c2(X) <= 0");

    inv.good = true;
    std::map<std::int64_t, bool> bad_memo;
    for (const auto& n : nodes) {
        auto it = bad_memo.find(n.residue);
        if (it == bad_memo.end()) it = bad_memo.emplace(n.residue, is_bad_residue(n.residue, p)).first;
        if (it->second) {
            inv.good = false;
            break;
        }
    }
    return inv;
}

std::vector<ConvergeRow> converge(const ArrangementSpec& spec, const ExtensionChoice& choice,
                                  const std::vector<std::int64_t>& primes, std::uint64_t seed,
                                  int retries, int workers) {
    require_valid(spec);
    require_valid_choice(spec, choice);
    if (retries < 1) throw std::invalid_argument("converge: retries < 1");
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] <= primes[i - 1]) throw std::invalid_argument("converge: primes not ascending");

    const Rat target = log_chern_partial(spec, choice).ratio();
    std::vector<ConvergeRow> rows(primes.size());

    auto run_one = [&](std::size_t i) {
        const std::int64_t p = primes[i];
        ConvergeRow row;
        row.p = p;
        row.good = false;
        row.attempts = 0;
        std::optional<SurfaceInvariants> best;
        Rat best_dev = 0;
        for (int attempt = 0; attempt < retries; ++attempt) {
            auto sol = sample_solution(spec, choice, p,
                                       derive_seed(seed, static_cast<std::uint64_t>(p),
                                                   static_cast<std::uint64_t>(attempt)));
            ++row.attempts;
            SurfaceInvariants inv = chern_of_X(spec, choice, sol);
            Rat dev = rat_abs(inv.ratio() - target);
            if (!best || dev < best_dev) {
                best = inv;
                best_dev = dev;
            }
            if (inv.good) {
                best = inv;
                row.good = true;
                break;
            }
        }
        row.invariants = *best;
        rows[i] = std::move(row);
    };

    if (workers <= 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
                run_one(i);
        };
        std::vector<std::thread> pool;
        const int nw = std::min<std::size_t>(workers, primes.size());
        for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

}  // namespace logchern
