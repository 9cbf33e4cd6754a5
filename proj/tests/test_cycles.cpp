#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cpm/cycles.hpp"
#include "cpm/graph.hpp"

using namespace cpm;

TEST_CASE("two-path classification against hand-labelled examples") {
    Params p{3, 2, 5, 2};
    CpmGraph g = build_component(p);
    auto ix = [&](i64 lev, i64 a, i64 b) { return g.index_of(Vertex{lev, {a, b}}); };

    CHECK(classify_two_path(g, ix(0, 1, 2), ix(1, 0, 2), ix(2, 0, 4)) == TwoPathKind::NonAnchor);
    CHECK(classify_two_path(g, ix(1, 1, 3), ix(0, 2, 3), ix(1, 3, 3)) ==
          TwoPathKind::NegativeAnchor);
    CHECK(classify_two_path(g, ix(0, 0, 1), ix(1, 1, 1), ix(0, 2, 1)) ==
          TwoPathKind::PositiveAnchor);
    CHECK_THROWS_AS(classify_two_path(g, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("disbalancedness of reference traces") {
    CHECK(trace_disbalancedness("anananan") == 0);
    CHECK(trace_disbalancedness("aannnnnn") == 6);
    CHECK(trace_disbalancedness("nnnnnnnn") == 8);
    CHECK(trace_disbalancedness("aaaaaa") == 0);
    CHECK(trace_disbalancedness("nnnnnn") == 6);
}

TEST_CASE("disbalancedness does not depend on the representative") {
    // exhaustive over all codes of length <= 10
    for (int len = 3; len <= 10; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::string code;
            for (int i = 0; i < len; ++i) code += (mask >> i) & 1 ? 'a' : 'n';
            // traces of realizable cycles have an even number of anchors;
            // well-definedness of the disbalancedness needs exactly that
            int anchors = 0;
            for (char c : code) anchors += c == 'a';
            if (anchors % 2) continue;
            i64 expect = trace_disbalancedness(code);
            std::string rev(code.rbegin(), code.rend());
            for (int k = 0; k < len; ++k) {
                std::string rot = code.substr(static_cast<std::size_t>(k)) +
                                  code.substr(0, static_cast<std::size_t>(k));
                std::string rrot = rev.substr(static_cast<std::size_t>(k)) +
                                   rev.substr(0, static_cast<std::size_t>(k));
                CHECK(trace_disbalancedness(rot) == expect);
                CHECK(trace_disbalancedness(rrot) == expect);
            }
        }
    }
}

TEST_CASE("canonical codes") {
    CHECK(canonical_trace_code("nananana") == "anananan");
    CHECK(canonical_trace_code("nnnannna") == "annnannn");
    CHECK(make_trace("aannnnnn").canonical_code == "aannnnnn");
}

TEST_CASE("generic 8-cycle") {
    for (Params p : {Params{3, 2, 5, 2}, Params{3, 2, 7, 2}, Params{2, 2, 4, 1}}) {
        CAPTURE(p.str());
        CpmGraph g = build_component(p);
        auto cyc = generic_eight_cycle(g);
        CHECK(cyc.size() == 8);
        CHECK(std::set<int>(cyc.begin(), cyc.end()).size() == 8);
        Trace t = trace_of_cycle(g, cyc);
        CHECK(t.canonical_code == "anananan");
        CHECK(t.disbalancedness == 0);
    }
}

TEST_CASE("bounded cycle enumeration") {
    // the 4-cube has girth 4
    CpmGraph cube = build_component(Params{2, 2, 4, 1});
    auto cycles4 = enumerate_cycles(cube, 4);
    CHECK(!cycles4.empty());
    for (const auto& rec : cycles4) CHECK(rec.vertices.size() == 4);

    // no cycles shorter than 6 in CPM(3,2,7;2), and 6-cycle traces within the
    // allowed set
    CpmGraph g = build_component(Params{3, 2, 7, 2});
    auto cycles6 = enumerate_cycles(g, 6);
    std::set<std::string> allowed = {"aaaaaa", "annann", "nnnnnn"};
    for (const auto& rec : cycles6) {
        CHECK(rec.vertices.size() == 6);
        CHECK(allowed.count(rec.trace.canonical_code) == 1);
    }
    CHECK(enumerate_cycles(g, 5).empty());

    CHECK_THROWS_AS(enumerate_cycles(g, 11), std::invalid_argument);
}

TEST_CASE("enumeration finds the explicit 6-cycle of CPM(1,3,3;1)") {
    Params p{1, 3, 3, 1};
    CpmGraph g = build_component(p);
    // (<0;0>, <1;e0>, <2;e0+re1>, <0;e0+re1+r^2e2>, <1;re1+r^2e2>, <2;r^2e2>)
    std::vector<int> explicit_cycle = {
        g.index_of(Vertex{0, {0, 0, 0}}), g.index_of(Vertex{1, {1, 0, 0}}),
        g.index_of(Vertex{2, {1, 1, 0}}), g.index_of(Vertex{0, {1, 1, 1}}),
        g.index_of(Vertex{1, {0, 1, 1}}), g.index_of(Vertex{2, {0, 0, 1}})};
    Trace t = trace_of_cycle(g, explicit_cycle);
    CHECK(t.canonical_code == "nnnnnn");

    bool found = false;
    for (const auto& rec : enumerate_cycles(g, 6)) {
        std::set<int> a(rec.vertices.begin(), rec.vertices.end());
        std::set<int> b(explicit_cycle.begin(), explicit_cycle.end());
        if (a == b) found = true;
    }
    CHECK(found);
}

TEST_CASE("counting cycles through 2-paths: table values") {
    // every anchor lies on 2 generic 8-cycles, every non-anchor on 1
    CpmGraph g = build_component(Params{3, 2, 7, 2});
    Trace generic = make_trace("anananan");
    auto ix = [&](i64 lev, i64 a, i64 b) { return g.index_of(Vertex{lev, {a, b}}); };
    // positive anchor (<1;-e0>, <0;0>, <1;e0>)
    CHECK(count_cycles_through(g, ix(1, 6, 0), ix(0, 0, 0), ix(1, 1, 0), 8, generic) == 2);
    // non-anchor (<0;0>, <1;e0>, <2;e0+2e1>)
    CHECK(count_cycles_through(g, ix(0, 0, 0), ix(1, 1, 0), ix(2, 1, 2), 8, generic) == 1);
}

TEST_CASE("anchor alternation and label counts on every enumerated cycle") {
    // positive and negative anchors alternate once non-anchors are dropped;
    // each edge label occurs zero times or at least twice, and a label
    // occurring exactly twice is never on consecutive edges
    for (Params p : {Params{3, 2, 7, 2}, Params{1, 3, 3, 1}, Params{2, 2, 8, 1}}) {
        CAPTURE(p.str());
        CpmGraph g = build_component(p);
        i64 ms = p.m * p.s;
        for (const auto& rec : enumerate_cycles(g, 8)) {
            const auto& cyc = rec.vertices;
            std::size_t len = cyc.size();
            std::vector<int> anchor_signs;
            std::vector<i64> labels;
            for (std::size_t t = 0; t < len; ++t) {
                i64 prev = g.level(cyc[(t + len - 1) % len]);
                i64 cur = g.level(cyc[t]);
                i64 next = g.level(cyc[(t + 1) % len]);
                if (prev == next) {
                    // positive anchor: endpoints one level below the middle
                    anchor_signs.push_back(prev == mod_reduce(cur - 1, ms) ? 1 : -1);
                }
                // label of the edge cyc[t] -> cyc[t+1]
                i64 low = mod_reduce(cur + 1, ms) == next ? cur : next;
                labels.push_back(low % p.s);
            }
            CHECK(anchor_signs.size() % 2 == 0);
            for (std::size_t i = 0; i + 1 < anchor_signs.size(); ++i)
                CHECK(anchor_signs[i] != anchor_signs[i + 1]);
            if (anchor_signs.size() >= 2)
                CHECK(anchor_signs.front() != anchor_signs.back());
            for (i64 ell = 0; ell < p.s; ++ell) {
                long long cnt = 0;
                for (i64 lab : labels) cnt += lab == ell;
                CHECK((cnt == 0 || cnt >= 2));
                if (cnt == 2) {
                    for (std::size_t i = 0; i < len; ++i) {
                        if (labels[i] == ell && labels[(i + 1) % len] == ell) CHECK(false);
                    }
                }
            }
            // coiled cycles have disbalancedness divisible by ms
            CHECK(rec.trace.disbalancedness % ms == 0);
        }
    }
}

TEST_CASE("closed walk counts are even-length only on bipartite graphs") {
    CpmGraph g = build_component(Params{2, 2, 4, 1});
    auto walks = closed_walk_counts(g, 6);
    CHECK(walks[0] == 0);
    CHECK(walks[2] == 0);
    CHECK(walks[1] == 4ull * g.size());  // each vertex: out and back over 4 edges
}
