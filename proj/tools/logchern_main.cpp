#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "logchern/builtins.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string builtin;
    std::vector<std::string> xi;
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 0;
    int workers = 0;
    int retries = 64;
};

void add_spec_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "arrangement JSON file");
    cmd->add_option("--builtin", o.builtin, "built-in arrangement name");
}

int resolve_workers(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("LOGCHERN_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace logchern;
    using namespace logchern::cli;

    CLI::App app{"log Chern invariants of arrangements of rational sections and their root covers"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* analyze = app.add_subcommand(
        "analyze", "validate, classify, and tabulate log Chern numbers per extension choice");
    add_spec_opts(analyze, o);
    analyze->add_option("--xi", o.xi,
                        "removed fibers, 1-based (e.g. 9-20 or 1,2,5); repeat per column; 'none' "
                        "for the extended arrangement");
    analyze->add_option("--format", o.format, "table|json");
    analyze->add_option("--out", o.out, "write output to file");

    auto* sample = app.add_subcommand("sample", "one root-cover Chern record at a single prime");
    add_spec_opts(sample, o);
    std::int64_t prime = 0;
    sample->add_option("--xi", o.xi, "removed fibers (at most one set)");
    sample->add_option("--prime", prime, "prime p of the root cover")->required();
    sample->add_option("--seed", o.seed, "RNG seed");
    sample->add_option("--format", o.format, "json|csv");
    sample->add_option("--out", o.out, "write output to file");

    auto* conv = app.add_subcommand("converge", "ratio sweep over a prime list");
    add_spec_opts(conv, o);
    std::string primes_text;
    conv->add_option("--xi", o.xi, "removed fibers (at most one set)");
    conv->add_option("--primes", primes_text,
                     "prime list '7,11,13' or range 'lo:hi' or sampled range 'lo:hi:count'")
        ->required();
    conv->add_option("--seed", o.seed, "RNG seed");
    conv->add_option("--retries", o.retries, "solution redraws per prime");
    conv->add_option("--workers", o.workers, "thread count (or LOGCHERN_WORKERS)");
    conv->add_option("--format", o.format, "csv|json");
    conv->add_option("--out", o.out, "write output to file");

    auto* badset = app.add_subcommand("badset", "bad-set census over primes");
    badset->add_option("--primes", primes_text, "'p' or 'lo:hi' or 'lo:hi:count'")->required();
    badset->add_option("--workers", o.workers, "thread count (or LOGCHERN_WORKERS)");
    badset->add_option("--format", o.format, "csv|json");
    badset->add_option("--out", o.out, "write output to file");

    auto* graph = app.add_subcommand("graph", "dual graph of the resolved arrangement");
    add_spec_opts(graph, o);
    graph->add_option("--xi", o.xi, "removed fibers (at most one set)");
    graph->add_option("--format", o.format, "dot|json");
    graph->add_option("--out", o.out, "write output to file");

    auto* exp = app.add_subcommand("export", "write an arrangement as JSON");
    add_spec_opts(exp, o);
    exp->add_option("--out", o.out, "write output to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(badset)) {
            Format f = o.format == "table" ? Format::Csv : parse_format(o.format);
            emit(cmd_badset(parse_primes(primes_text), resolve_workers(o.workers), f), o.out);
            return 0;
        }
        ArrangementSpec spec = load_input(o.input, o.builtin);
        if (app.got_subcommand(analyze)) {
            std::vector<ExtensionChoice> choices;
            for (const auto& x : o.xi) choices.push_back(parse_xi(x, spec.delta()));
            emit(cmd_analyze(spec, choices, parse_format(o.format)), o.out);
        } else if (app.got_subcommand(sample)) {
            if (o.xi.size() > 1) throw std::invalid_argument("sample takes at most one --xi");
            auto choice = o.xi.empty() ? ExtensionChoice::none() : parse_xi(o.xi[0], spec.delta());
            Format f = o.format == "table" ? Format::Json : parse_format(o.format);
            emit(cmd_sample(spec, choice, prime, o.seed, f), o.out);
        } else if (app.got_subcommand(conv)) {
            if (o.xi.size() > 1) throw std::invalid_argument("converge takes at most one --xi");
            auto choice = o.xi.empty() ? ExtensionChoice::none() : parse_xi(o.xi[0], spec.delta());
            Format f = o.format == "table" ? Format::Csv : parse_format(o.format);
            emit(cmd_converge(spec, choice, parse_primes(primes_text), o.seed, o.retries,
                              resolve_workers(o.workers), f),
                 o.out);
        } else if (app.got_subcommand(graph)) {
            if (o.xi.size() > 1) throw std::invalid_argument("graph takes at most one --xi");
            auto choice = o.xi.empty() ? ExtensionChoice::none() : parse_xi(o.xi[0], spec.delta());
            Format f = o.format == "table" ? Format::Dot : parse_format(o.format);
            emit(cmd_graph(spec, choice, f), o.out);
        } else if (app.got_subcommand(exp)) {
            emit(cmd_export(spec), o.out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
