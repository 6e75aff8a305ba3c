#include <doctest.h>

#include <numeric>

#include "logchern/builtins.hpp"
#include "logchern/log_chern.hpp"
#include "logchern/resolution.hpp"
#include "logchern/rng.hpp"
#include "logchern/spec_gen.hpp"

using namespace logchern;

TEST_CASE("extended log Chern numbers of the builtins") {
    auto tri = log_chern_extended(builtin("triangle"));
    CHECK(tri.c1sq == 5);
    CHECK(tri.c2 == 2);
    CHECK(tri.ratio() == Rat(5, 2));

    auto g4 = log_chern_extended(builtin("generic_lines(4)"));
    CHECK(g4.c1sq == 27);
    CHECK(g4.c2 == 12);

    auto dh = log_chern_extended(builtin("dual_hesse_conic"));
    CHECK(dh.c1sq == 399);
    CHECK(dh.c2 == 180);
}

TEST_CASE("partial log Chern numbers: the six-column table") {
    auto dh = builtin("dual_hesse_conic");
    auto col = [&](std::vector<int> xi_1based) {
        for (int& f : xi_1based) f -= 1;
        return log_chern_partial(dh, ExtensionChoice::of(xi_1based));
    };
    std::vector<int> f1to8, f9to20, f7to20, f4to20, f6to20;
    for (int f = 1; f <= 8; ++f) f1to8.push_back(f);
    for (int f = 9; f <= 20; ++f) f9to20.push_back(f);
    for (int f = 7; f <= 20; ++f) f7to20.push_back(f);
    for (int f = 4; f <= 20; ++f) f4to20.push_back(f);
    for (int f = 6; f <= 20; ++f) f6to20.push_back(f);

    CHECK(col(f1to8) == LogChernPair{319, 147});
    CHECK(col({}) == LogChernPair{399, 180});
    CHECK(col(f9to20) == LogChernPair{171, 72});
    CHECK(col(f7to20) == LogChernPair{141, 58});
    CHECK(col(f4to20) == LogChernPair{124, 51});
    CHECK(col(f6to20) == LogChernPair{134, 55});
}

TEST_CASE("epsilon = 0 partial equals extended") {
    for (const char* n : {"triangle", "generic_lines(5)", "dual_hesse_conic"}) {
        auto spec = builtin(n);
        CHECK(log_chern_partial(spec, ExtensionChoice::none()) == log_chern_extended(spec));
    }
}

TEST_CASE("generic 4 lines with all node fibers removed") {
    auto spec = builtin("generic_lines(4)");
    std::vector<int> xi{0, 1, 2, 3};  // any 4 = delta - 2 of the 6 node fibers
    auto pair = log_chern_partial(spec, ExtensionChoice::of(xi));
    CHECK(pair.c1sq == 7);
    CHECK(pair.c2 == 4);
    CHECK(pair.ratio() == Rat(2) - Rat(1, 4));
}

TEST_CASE("invalid choices are rejected") {
    auto spec = builtin("generic_lines(4)");
    std::vector<int> too_many{0, 1, 2, 3, 4};  // epsilon = 5 > delta - 2 = 4
    CHECK_THROWS_AS(log_chern_partial(spec, ExtensionChoice::of(too_many)), std::invalid_argument);
    auto quad = builtin("tangent_quad(2)");  // nothing removable
    CHECK_THROWS_AS(log_chern_partial(quad, ExtensionChoice::of({0})), std::invalid_argument);
}

TEST_CASE("inequality report on the extended dual Hesse conic") {
    auto rep = check_inequalities(builtin("dual_hesse_conic"), ExtensionChoice::none());
    CHECK(rep.find("log_my_strict_ext").holds);       // 399 < 540
    CHECK(rep.find("log_my_strict_ext").applicable);
    CHECK(rep.find("ratio_ext_gt_2").holds);
    CHECK(rep.find("c1sq_ext_ge_2d_minus_1").holds);  // 399 >= 21
    CHECK(rep.find("c2_ext_ge_d_minus_1").holds);     // 180 >= 10
    CHECK(rep.find("tau_gt_e_d_minus_1").holds);      // 69 > 30
    CHECK(rep.find("hirzebruch_sakai_83").applicable == false);  // e = 3
    CHECK(rep.all_applicable_hold());
}

TEST_CASE("partial ratio below 2 is reported as extended-only") {
    auto spec = builtin("generic_lines(4)");
    auto rep = check_inequalities(spec, ExtensionChoice::of({0, 1, 2, 3}));
    const auto& c = rep.find("ratio_partial_gt_2");
    CHECK(!c.holds);  // 7/4 < 2
    CHECK(!c.applicable);
    CHECK(rep.all_applicable_hold());
    CHECK(rep.find("hirzebruch_sakai_83").applicable);
    CHECK(rep.find("hirzebruch_sakai_83").holds);  // 7/4 <= 8/3
}

TEST_CASE("char-p Frobenius pullback flagged not-applicable") {
    auto base = builtin("triangle");
    base.char_p = 2;
    auto pulled = frobenius_pullback(base, 3);
    CHECK(tau(pulled) == 24);
    auto rep = check_inequalities(pulled, ExtensionChoice::none());
    const auto& my = rep.find("tau_my_strict");
    CHECK(!my.holds);        // 24 > 2*(3 - 2 + 8) = 18
    CHECK(!my.applicable);   // char p
    CHECK(my.rhs == Rat(18));
    CHECK(rep.all_applicable_hold());
}

TEST_CASE("tangent quad tau bound: e = 1 holds non-strictly, e >= 2 violates") {
    auto q1 = check_inequalities(builtin("tangent_quad(1)"), ExtensionChoice::none());
    CHECK(q1.find("tau_my_nonstrict").holds);   // 6 <= 6
    CHECK(!q1.find("tau_my_strict").holds);     // equality: the Fano configuration
    for (int e = 2; e <= 5; ++e) {
        auto rep = check_inequalities(builtin("tangent_quad(" + std::to_string(e) + ")"),
                                      ExtensionChoice::none());
        CHECK(!rep.find("tau_my_nonstrict").holds);  // 6e > 3(e+1)
        CHECK(rep.find("ratio_ext_gt_2").holds);
    }
}

TEST_CASE("frobenius ratio closed form") {
    auto spec = builtin("triangle");
    spec.char_p = 2;
    CHECK(frobenius_ratio(spec, 0) == Rat(5, 2));
    CHECK(frobenius_ratio(spec, 1) == Rat(3));
    CHECK(frobenius_ratio(spec, 2) == Rat(4));
    for (int r = 0; r <= 3; ++r)
        CHECK(frobenius_ratio(spec, r) == log_chern_extended(frobenius_pullback(spec, r)).ratio());
    CHECK_THROWS_AS(frobenius_ratio(builtin("triangle"), 1), std::invalid_argument);
}

TEST_CASE("frobenius pullback strictly increases the ratio, etale preserves it") {
    auto spec = builtin("triangle");
    spec.char_p = 5;
    Rat r0 = log_chern_extended(spec).ratio();
    CHECK(r0 > 2);
    CHECK(frobenius_ratio(spec, 1) > r0);

    auto g1 = builtin("triangle");
    g1.genus = 1;
    Rat before = log_chern_extended(g1).ratio();
    for (int n : {1, 2, 3})
        CHECK(log_chern_extended(etale_pullback(g1, n)).ratio() == before);
}

TEST_CASE("ratio scan over the table choices picks F6..F20") {
    auto dh = builtin("dual_hesse_conic");
    std::vector<ExtensionChoice> choices;
    choices.push_back(ExtensionChoice::none());
    auto mk = [&](int lo, int hi) {
        std::vector<int> xi;
        for (int f = lo; f <= hi; ++f) xi.push_back(f - 1);
        choices.push_back(ExtensionChoice::of(xi));
    };
    mk(1, 8);
    mk(9, 20);
    mk(7, 20);
    mk(4, 20);
    mk(6, 20);
    auto res = ratio_scan(dh, choices);
    CHECK(res.best.pair.ratio() == Rat(134, 55));
    CHECK(res.best.choice.removed.size() == 15);
    CHECK(res.explored == 6);
}

TEST_CASE("exhaustive random scan on generic 4 lines keeps the extended best") {
    auto res = ratio_scan_random(builtin("generic_lines(4)"), 1u << 6, 1);
    CHECK(res.best.choice.removed.empty());
    CHECK(res.best.pair.ratio() == Rat(27, 12));
    // zero budget explores only the extended arrangement
    auto only_ext = ratio_scan_random(builtin("generic_lines(4)"), 0, 1);
    CHECK(only_ext.explored == 1);
    CHECK(only_ext.best.choice.removed.empty());
}

TEST_CASE("scan tie-break picks the lexicographically smallest removed set") {
    // removing any single node fiber of the generic arrangement gives the
    // same pair, so all six singletons tie; {F1} must win
    auto spec = builtin("generic_lines(4)");
    std::vector<ExtensionChoice> choices;
    for (int f = 5; f >= 0; --f) choices.push_back(ExtensionChoice::of({f}));
    auto res = ratio_scan(spec, choices);
    CHECK(res.best.choice.removed == std::vector<int>{0});
}

TEST_CASE("oracle equality against the resolution graph on builtins") {
    for (const char* n : {"triangle", "generic_lines(4)", "generic_lines(5)", "dual_hesse_conic",
                          "tangent_quad(2)"}) {
        auto spec = builtin(n);
        auto graph = build_resolution(spec, ExtensionChoice::none());
        CHECK(log_chern_via_graph(graph) == log_chern_extended(spec));
    }
}

TEST_CASE("log Chern numbers are integers and invariant under relabeling") {
    Rng rng(4242);
    RandomSpecParams params;
    for (int trial = 0; trial < 50; ++trial) {
        auto spec = gen_random_spec(params, rng.next());
        auto pair = log_chern_extended(spec);
        std::vector<int> perm(spec.num_sections);
        std::iota(perm.begin(), perm.end(), 1);
        std::reverse(perm.begin(), perm.end());
        CHECK(log_chern_extended(relabel_sections(spec, perm)) == pair);
    }
}
