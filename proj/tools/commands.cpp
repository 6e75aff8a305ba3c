#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "logchern/arrangement_json.hpp"
#include "logchern/builtins.hpp"
#include "logchern/log_chern.hpp"
#include "logchern/number_kernel.hpp"
#include "logchern/resolution.hpp"
#include "logchern/surface.hpp"

namespace logchern::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "dot") return Format::Dot;
    throw std::invalid_argument("unknown format '" + name + "' (table|json|csv|dot)");
}

ExtensionChoice parse_xi(const std::string& text, int delta) {
    if (text.empty() || text == "none" || text == "{}") return ExtensionChoice::none();
    std::vector<int> fibers;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        auto dash = tok.find('-');
        try {
            if (dash == std::string::npos) {
                fibers.push_back(std::stoi(tok));
            } else {
                int lo = std::stoi(tok.substr(0, dash));
                int hi = std::stoi(tok.substr(dash + 1));
                for (int f = lo; f <= hi; ++f) fibers.push_back(f);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --xi token '" + tok + "'");
        }
        pos = comma + 1;
    }
    for (int& f : fibers) {
        if (f < 1 || f > delta)
            throw std::invalid_argument("--xi fiber " + std::to_string(f) + " out of 1.." +
                                        std::to_string(delta));
        f -= 1;  // to 0-based
    }
    return ExtensionChoice::of(std::move(fibers));
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
    auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        std::vector<std::int64_t> out;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            std::int64_t p = std::stoll(text.substr(pos, comma - pos));
            if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);  // composites filtered
            pos = comma + 1;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    auto c2 = text.find(':', c1 + 1);
    std::int64_t lo = std::stoll(text.substr(0, c1));
    std::int64_t hi = std::stoll(text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                             : c2 - c1 - 1));
    auto all = primes_in_range(lo, hi);
    if (c2 == std::string::npos || all.empty()) return all;
    std::size_t want = static_cast<std::size_t>(std::stoll(text.substr(c2 + 1)));
    if (want >= all.size()) return all;
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < want; ++k)
        out.push_back(all[k * (all.size() - 1) / (want - 1 ? want - 1 : 1)]);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ArrangementSpec load_input(const std::string& input_path, const std::string& builtin_name) {
    if (!input_path.empty() && !builtin_name.empty())
        throw std::invalid_argument("give either --input or --builtin, not both");
    if (!input_path.empty()) return load_spec_file(input_path);
    if (!builtin_name.empty()) return builtin(builtin_name);
    throw std::invalid_argument("one of --input or --builtin is required");
}

namespace {

struct Decimal {
    std::string integer;
    std::string prefix;
    std::string period;  // empty when terminating
};

Decimal expand_decimal(const Rat& r, std::size_t max_digits = 64) {
    Int num = rat_num(r), den = rat_den(r);
    if (num < 0) throw std::invalid_argument("expand_decimal: negative ratio");
    Decimal d;
    {
        std::ostringstream os;
        os << num / den;
        d.integer = os.str();
    }
    Int rem = num % den;
    std::map<Int, std::size_t> seen;
    std::string digits;
    while (rem != 0 && digits.size() < max_digits) {
        auto it = seen.find(rem);
        if (it != seen.end()) {
            d.prefix = digits.substr(0, it->second);
            d.period = digits.substr(it->second);
            return d;
        }
        seen[rem] = digits.size();
        rem *= 10;
        digits += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    d.prefix = digits;  // terminated (or digit cap hit: treated as long period below)
    if (rem != 0) d.period = "...";
    return d;
}

}  // namespace

std::string render_ratio(const Rat& r) {
    Decimal d = expand_decimal(r);
    if (d.period.empty()) return d.prefix.empty() ? d.integer : d.integer + "." + d.prefix;
    if (d.period != "..." && d.period.size() <= 4 && d.prefix.size() <= 4)
        return d.integer + "." + d.prefix + "(" + d.period + ")";
    std::string expansion = d.prefix + (d.period == "..." ? "" : d.period + d.period);
    expansion.resize(4, '0');
    return d.integer + "." + expansion + "...";
}

namespace {

std::string xi_label(const ExtensionChoice& c) {
    if (c.removed.empty()) return "none";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < c.removed.size()) {
        std::size_t j = i;
        while (j + 1 < c.removed.size() && c.removed[j + 1] == c.removed[j] + 1) ++j;
        if (!first) os << ",";
        first = false;
        if (j == i)
            os << c.removed[i] + 1;
        else
            os << c.removed[i] + 1 << "-" << c.removed[j] + 1;
        i = j + 1;
    }
    return os.str();
}

json spec_summary_json(const ArrangementSpec& spec) {
    json j;
    j["label"] = spec.label;
    j["d"] = spec.num_sections;
    j["e"] = spec.degree;
    j["genus"] = spec.genus;
    j["delta"] = spec.delta();
    if (spec.char_p) j["char_p"] = *spec.char_p;
    j["class"] = to_string(classify(spec));
    j["tau"] = tau(spec).str();
    j["blowups"] = num_blowups(spec).str();
    json fibers = json::array();
    for (int f = 0; f < spec.delta(); ++f) {
        auto st = fiber_stats(spec, f);
        fibers.push_back({{"fiber", f + 1},
                          {"k_o", st.k_o},
                          {"k", st.k},
                          {"removable", is_removable(spec, f)}});
    }
    j["fibers"] = fibers;
    return j;
}

json inequalities_json(const InequalityReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.checks)
        arr.push_back({{"name", c.name},
                       {"holds", c.holds},
                       {"lhs", rat_to_string(c.lhs)},
                       {"rhs", rat_to_string(c.rhs)},
                       {"applicable", c.applicable}});
    return arr;
}

}  // namespace

std::string cmd_analyze(const ArrangementSpec& spec, const std::vector<ExtensionChoice>& choices_in,
                        Format format) {
    require_valid(spec);
    std::vector<ExtensionChoice> choices = choices_in;
    if (choices.empty()) choices.push_back(ExtensionChoice::none());

    std::vector<LogChernPair> pairs;
    for (const auto& c : choices) pairs.push_back(log_chern_partial(spec, c));
    auto best = ratio_scan(spec, choices);
    auto report = check_inequalities(spec, choices.front());

    if (format == Format::Json) {
        json j = spec_summary_json(spec);
        json cols = json::array();
        for (std::size_t i = 0; i < choices.size(); ++i) {
            cols.push_back({{"xi", xi_label(choices[i])},
                            {"epsilon", choices[i].epsilon()},
                            {"c1sq", pairs[i].c1sq.str()},
                            {"c2", pairs[i].c2.str()},
                            {"ratio", rat_to_string(pairs[i].ratio())},
                            {"ratio_decimal", render_ratio(pairs[i].ratio())}});
        }
        j["table"] = cols;
        j["best_xi"] = xi_label(best.best.choice);
        j["best_ratio"] = rat_to_string(best.best.pair.ratio());
        j["inequalities"] = inequalities_json(report);
        return j.dump(2);
    }

    // aligned text table, one column per choice
    std::ostringstream os;
    os << "arrangement: " << (spec.label.empty() ? "(unnamed)" : spec.label) << "\n";
    os << "  d=" << spec.num_sections << " e=" << spec.degree << " g=" << spec.genus
       << " delta=" << spec.delta();
    if (spec.char_p) os << " char_p=" << *spec.char_p;
    os << "  class=" << to_string(classify(spec)) << "  tau=" << tau(spec)
       << "  blowups=" << num_blowups(spec) << "\n";
    os << "  fibers (k_o,k,removable):";
    for (int f = 0; f < spec.delta(); ++f) {
        auto st = fiber_stats(spec, f);
        os << " F" << f + 1 << "=(" << st.k_o << "," << st.k << ","
           << (is_removable(spec, f) ? "y" : "n") << ")";
    }
    os << "\n\n";

    std::vector<std::string> labels, c1s, c2s, ratios;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        labels.push_back(xi_label(choices[i]));
        c1s.push_back(pairs[i].c1sq.str());
        c2s.push_back(pairs[i].c2.str());
        ratios.push_back(render_ratio(pairs[i].ratio()));
    }
    std::vector<std::size_t> width(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
        width[i] = std::max({labels[i].size(), c1s[i].size(), c2s[i].size(), ratios[i].size()});
    auto row = [&](const std::string& head, const std::vector<std::string>& vals) {
        os << "  " << std::left << std::setw(10) << head;
        for (std::size_t i = 0; i < vals.size(); ++i)
            os << " | " << std::right << std::setw(static_cast<int>(width[i])) << vals[i];
        os << "\n";
    };
    row("Xi", labels);
    row("c1bar^2", c1s);
    row("c2bar", c2s);
    row("ratio", ratios);
    os << "  best: Xi=" << xi_label(best.best.choice) << " ratio="
       << rat_to_string(best.best.pair.ratio()) << " = " << render_ratio(best.best.pair.ratio())
       << "\n\n";

    os << "  inequalities (for Xi=" << xi_label(choices.front()) << "):\n";
    for (const auto& c : report.checks) {
        os << "    " << std::left << std::setw(26) << c.name
           << (c.holds ? "holds " : "FAILS ") << rat_to_string(c.lhs)
           << (c.holds ? " vs " : " vs ") << rat_to_string(c.rhs)
           << (c.applicable ? "" : "   [not applicable]") << "\n";
    }
    return os.str();
}

namespace {

json invariants_json(const SurfaceInvariants& inv) {
    return {{"p", inv.p},
            {"c1sq", inv.c1sq.str()},
            {"c2", inv.c2.str()},
            {"ratio", rat_to_string(inv.ratio())},
            {"ratio_decimal", render_ratio(inv.ratio())},
            {"ccf", rat_to_string(inv.ccf)},
            {"lcf", inv.lcf.str()},
            {"good", inv.good}};
}

}  // namespace

std::string cmd_sample(const ArrangementSpec& spec, const ExtensionChoice& choice, std::int64_t p,
                       std::uint64_t seed, Format format) {
    auto sol = sample_solution(spec, choice, p, seed);
    auto inv = chern_of_X(spec, choice, sol);
    if (format == Format::Json) {
        json j = invariants_json(inv);
        j["seed"] = seed;
        j["xi"] = xi_label(choice);
        j["x"] = sol.x;
        j["x_last"] = sol.x_last;
        j["y"] = sol.y;
        return j.dump(2);
    }
    std::ostringstream os;
    os << "p,seed,good,c1sq,c2,ratio,ccf,lcf\n";
    os << p << "," << seed << "," << (inv.good ? 1 : 0) << "," << inv.c1sq << "," << inv.c2 << ","
       << rat_to_string(inv.ratio()) << "," << rat_to_string(inv.ccf) << "," << inv.lcf << "\n";
    return os.str();
}

std::string cmd_converge(const ArrangementSpec& spec, const ExtensionChoice& choice,
                         const std::vector<std::int64_t>& primes, std::uint64_t seed, int retries,
                         int workers, Format format) {
    auto rows = converge(spec, choice, primes, seed, retries, workers);
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = invariants_json(r.invariants);
            j["attempts"] = r.attempts;
            j["good"] = r.good;
            arr.push_back(j);
        }
        return arr.dump(2);
    }
    std::ostringstream os;
    os << "p,seed,good,c1sq,c2,ratio,ccf,lcf\n";
    for (const auto& r : rows)
        os << r.p << "," << seed << "," << (r.good ? 1 : 0) << "," << r.invariants.c1sq << ","
           << r.invariants.c2 << "," << rat_to_string(r.invariants.ratio()) << ","
           << rat_to_string(r.invariants.ccf) << "," << r.invariants.lcf << "\n";
    return os.str();
}

std::string cmd_badset(const std::vector<std::int64_t>& primes, int workers, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (auto p : primes) {
            BadSet f = bad_set(p);
            arr.push_back({{"p", p}, {"size", f.size()}, {"members", f.members}});
        }
        return arr.dump(2);
    }
    auto rows = bad_set_census(primes, workers);
    std::ostringstream os;
    os << "p,badset_size,bound,max_l,max_12s\n";
    for (const auto& r : rows) {
        const double bound = std::sqrt(static_cast<double>(r.p)) *
                             (std::log(static_cast<double>(r.p)) + 2 * std::log(2.0));
        os << r.p << "," << r.size << "," << std::fixed << std::setprecision(3) << bound << ","
           << r.max_l << "," << rat_to_decimal(r.max_12s, 2) << "\n";
        os.unsetf(std::ios::fixed);
    }
    return os.str();
}

std::string cmd_graph(const ArrangementSpec& spec, const ExtensionChoice& choice, Format format) {
    auto graph = build_resolution(spec, choice);
    if (format == Format::Dot) return to_dot(graph);
    json j;
    j["s"] = graph.s.str();
    j["t2"] = graph.t2().str();
    json comps = json::array();
    for (const auto& c : graph.components)
        comps.push_back({{"name", c.name()},
                         {"self_int", c.self_int.str()},
                         {"genus", c.genus},
                         {"in_divisor", c.in_divisor}});
    j["components"] = comps;
    return j.dump(2);
}

std::string cmd_export(const ArrangementSpec& spec) { return to_json(spec) + "\n"; }

}  // namespace logchern::cli
