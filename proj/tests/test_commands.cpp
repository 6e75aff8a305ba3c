#include <doctest.h>

#include "commands.hpp"
#include "logchern/arrangement_json.hpp"
#include "logchern/builtins.hpp"

using namespace logchern;
using namespace logchern::cli;

TEST_CASE("xi parsing") {
    auto c = parse_xi("9-20", 20);
    CHECK(c.removed.size() == 12);
    CHECK(c.removed.front() == 8);
    CHECK(c.removed.back() == 19);
    CHECK(parse_xi("none", 20).removed.empty());
    CHECK(parse_xi("1,3,5-6", 20).removed == std::vector<int>{0, 2, 4, 5});
    CHECK_THROWS_AS(parse_xi("0", 20), std::invalid_argument);
    CHECK_THROWS_AS(parse_xi("21", 20), std::invalid_argument);
    CHECK_THROWS_AS(parse_xi("x", 20), std::invalid_argument);
}

TEST_CASE("prime list parsing filters composites") {
    CHECK(parse_primes("7,8,9,11") == std::vector<std::int64_t>{7, 11});
    CHECK(parse_primes("10:30") == std::vector<std::int64_t>{11, 13, 17, 19, 23, 29});
    auto sampled = parse_primes("10:100:5");
    CHECK(sampled.size() == 5);
    CHECK(sampled.front() == 11);
    CHECK(sampled.back() == 97);
}

TEST_CASE("ratio rendering follows the table conventions") {
    CHECK(render_ratio(Rat(399, 180)) == "2.21(6)");
    CHECK(render_ratio(Rat(171, 72)) == "2.375");
    CHECK(render_ratio(Rat(134, 55)) == "2.4(36)");
    CHECK(render_ratio(Rat(319, 147)) == "2.1700...");
    CHECK(render_ratio(Rat(141, 58)) == "2.4310...");
    CHECK(render_ratio(Rat(124, 51)) == "2.4313...");
    CHECK(render_ratio(Rat(5, 2)) == "2.5");
    CHECK(render_ratio(Rat(2)) == "2");
}

TEST_CASE("analyze renders the six-column table") {
    auto dh = builtin("dual_hesse_conic");
    std::vector<ExtensionChoice> cols;
    for (const char* xi : {"1-8", "none", "9-20", "7-20", "4-20", "6-20"})
        cols.push_back(parse_xi(xi, 20));
    auto text = cmd_analyze(dh, cols, Format::Table);
    for (const char* frag :
         {"319", "399", "171", "141", "124", "134", "147", "180", "72", "58", "51", "55",
          "2.21(6)", "2.375", "2.4(36)", "2.1700...", "2.4310...", "2.4313...",
          "best: Xi=6-20"})
        CHECK(text.find(frag) != std::string::npos);
}

TEST_CASE("analyze json is well formed") {
    auto text = cmd_analyze(builtin("triangle"), {}, Format::Json);
    CHECK(text.find("\"tau\": \"3\"") != std::string::npos);
    CHECK(text.find("\"class\": \"simple_crossing\"") != std::string::npos);
}

TEST_CASE("sample is deterministic and rejects char p") {
    auto tri = builtin("triangle");
    auto a = cmd_sample(tri, ExtensionChoice::none(), 101, 7, Format::Csv);
    auto b = cmd_sample(tri, ExtensionChoice::none(), 101, 7, Format::Csv);
    CHECK(a == b);
    auto charp = builtin("frobenius_triangle(7,0)");
    CHECK_THROWS(cmd_sample(charp, ExtensionChoice::none(), 7, 0, Format::Csv));
}

TEST_CASE("converge csv has the documented header and is worker-independent") {
    auto tri = builtin("triangle");
    auto primes = parse_primes("1000:3000:3");
    auto a = cmd_converge(tri, ExtensionChoice::none(), primes, 3, 16, 1, Format::Csv);
    auto b = cmd_converge(tri, ExtensionChoice::none(), primes, 3, 16, 4, Format::Csv);
    CHECK(a == b);
    CHECK(a.rfind("p,seed,good,c1sq,c2,ratio,ccf,lcf\n", 0) == 0);
    // empty prime list: header only
    auto empty = cmd_converge(tri, ExtensionChoice::none(), {}, 0, 4, 1, Format::Csv);
    CHECK(empty == "p,seed,good,c1sq,c2,ratio,ccf,lcf\n");
}

TEST_CASE("badset csv") {
    auto text = cmd_badset({5, 101}, 2, Format::Csv);
    CHECK(text.rfind("p,badset_size,bound,max_l,max_12s\n", 0) == 0);
    CHECK(text.find("5,0,") != std::string::npos);
    CHECK(text.find("101,8,") != std::string::npos);
}

TEST_CASE("graph dot output") {
    auto dot = cmd_graph(builtin("triangle"), ExtensionChoice::none(), Format::Dot);
    CHECK(dot.find("graph resolution") != std::string::npos);
}

TEST_CASE("export emits loadable json") {
    auto text = cmd_export(builtin("dual_hesse_conic"));
    auto spec = spec_from_json(text);
    CHECK(spec.delta() == 20);
}
