#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/test_support.hpp"
#include "wshom/bistructure.hpp"
#include "wshom/error.hpp"

using namespace wshom;
using testsupport::naive_loops;

TEST_CASE("dot-bracket parsing round-trips") {
    const SecondaryStructure s = parse_dot_bracket("((..))");
    CHECK(s.length == 6);
    REQUIRE(s.arcs.size() == 2);
    CHECK(s.arcs[0] == Arc{1, 6});
    CHECK(s.arcs[1] == Arc{2, 5});
    CHECK(render_dot_bracket(s) == "((..))");

    const SecondaryStructure open = parse_dot_bracket("......");
    CHECK(open.length == 6);
    CHECK(open.arcs.empty());

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const SecondaryStructure r =
            testsupport::random_structure(1 + static_cast<int>(rng() % 40), rng);
        check_structure(r);
        CHECK(parse_dot_bracket(render_dot_bracket(r)).arcs == r.arcs);
    }
}

TEST_CASE("parser errors carry positions") {
    auto message_of = [](const std::string& text) {
        try {
            parse_dot_bracket(text);
        } catch (const error& e) {
            CHECK(e.code() == errc::parse_error);
            return std::string(e.what());
        }
        FAIL("expected a parse error for ", text);
        return std::string();
    };
    CHECK(message_of("(.").find("position 1") != std::string::npos);
    CHECK(message_of(".)").find("position 2") != std::string::npos);
    CHECK(message_of("(x)").find("position 2") != std::string::npos);
    CHECK_THROWS_AS(parse_dot_bracket(""), error);
}

TEST_CASE("structure validation rejects crossings and shared endpoints") {
    SecondaryStructure s;
    s.length = 6;
    s.arcs = {{1, 4}, {2, 6}};
    CHECK_THROWS_AS(check_structure(s), error); // 1 < 2 < 4 < 6 interleaves
    s.arcs = {{1, 4}, {4, 6}};
    CHECK_THROWS_AS(check_structure(s), error); // endpoint 4 reused
    s.arcs = {{0, 4}};
    CHECK_THROWS_AS(check_structure(s), error); // off the backbone
    s.arcs = {{2, 5}, {1, 6}};
    check_structure(s); // nested is fine in any listed order
}

TEST_CASE("loops on hand-checked structures") {
    // ((..)) : the outer arc's loop is squeezed to its endpoints plus the
    // inner endpoints; the inner arc keeps its interior.
    const SecondaryStructure s = parse_dot_bracket("((..))");
    const auto ls = loops(s);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].exterior);
    CHECK(ls[0].arc == Arc{0, 7});
    CHECK(ls[0].vertices == std::vector<int>{1, 6});
    CHECK(ls[1].arc == Arc{1, 6});
    CHECK(ls[1].vertices == std::vector<int>{1, 2, 5, 6});
    CHECK(ls[2].arc == Arc{2, 5});
    CHECK(ls[2].vertices == std::vector<int>{2, 3, 4, 5});

    // unpaired backbone: one exterior loop holding everything
    const auto open = loops(parse_dot_bracket("...."));
    REQUIRE(open.size() == 1);
    CHECK(open[0].vertices == std::vector<int>{1, 2, 3, 4});

    // siblings: the outer loop sees the gap between them
    const auto sib = loops(parse_dot_bracket("(().())"));
    REQUIRE(sib.size() == 4);
    CHECK(sib[1].arc == Arc{1, 7});
    CHECK(sib[1].vertices == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(sib[2].arc == Arc{2, 3});
    CHECK(sib[2].vertices == std::vector<int>{2, 3});
    CHECK(sib[3].arc == Arc{5, 6});
    CHECK(sib[3].vertices == std::vector<int>{5, 6});
}

TEST_CASE("loops agree with the covering-scan oracle") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const SecondaryStructure s =
            testsupport::random_structure(1 + static_cast<int>(rng() % 40), rng);
        const auto got = loops(s);
        const auto want = naive_loops(s);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].arc == want[i].arc);
            CHECK(got[i].exterior == want[i].exterior);
            CHECK(got[i].vertices == want[i].vertices);
        }
    }
}

TEST_CASE("bi-structures validate both sides") {
    CHECK_THROWS_AS(BiStructure::make(parse_dot_bracket("(...)"), parse_dot_bracket("....")),
                    error);
    SecondaryStructure bad;
    bad.length = 5;
    bad.arcs = {{1, 3}, {2, 4}};
    CHECK_THROWS_AS(BiStructure::make(bad, parse_dot_bracket(".....")), error);
}

TEST_CASE("nerve of the worked pseudoknot example") {
    // S = ((..)), T = ...... over six positions
    const BiStructure b =
        BiStructure::make(parse_dot_bracket("((..))"), parse_dot_bracket("......"));
    const LoopNerve nerve = loop_complex(b);

    REQUIRE(nerve.s_loops.size() == 3);
    REQUIRE(nerve.t_loops.size() == 1);
    CHECK(nerve.loop_name(0) == "S0");
    CHECK(nerve.loop_name(3) == "T0");
    CHECK(nerve.loop(3).vertices == std::vector<int>{1, 2, 3, 4, 5, 6});

    const WeightedComplex& x = nerve.complex;
    CHECK(x.dim() == 2);
    CHECK(x.size(0) == 4);
    CHECK(x.size(1) == 5);  // all pairs except S0-S2 (disjoint)
    CHECK(x.size(2) == 2);
    // weights are intersection sizes
    CHECK(x.weight_of(Simplex{0, 3}) == 2); // S0 cap T0 = {1, 6}
    CHECK(x.weight_of(Simplex{1, 3}) == 4);
    CHECK(x.weight_of(Simplex{2, 3}) == 4);
    CHECK(x.weight_of(Simplex{0, 1}) == 2);
    CHECK(x.weight_of(Simplex{1, 2}) == 2);
    CHECK_FALSE(x.find(Simplex{0, 2}).has_value());
    CHECK(x.weight_of(Simplex{0, 1, 3}) == 2); // S0 cap S1 cap T0 = {1, 6}
    CHECK(x.weight_of(Simplex{1, 2, 3}) == 2);

    // not lean: a triangle of weight 2
    CHECK_FALSE(is_lean(x));
    CHECK(crossing_components(b).count == 0);
}

TEST_CASE("crossing components on hand-built bi-structures") {
    // S = (..(.)..), T has one arc crossing each of S's
    SecondaryStructure s = parse_dot_bracket("(..(.)..)");
    SecondaryStructure t;
    t.length = 9;
    t.arcs = {{2, 5}};
    const BiStructure b = BiStructure::make(s, t);
    const CrossingComponents cc = crossing_components(b);
    REQUIRE(cc.count == 1);
    REQUIRE(cc.components.size() == 1);
    // {2,5} crosses {4,6} but not {1,9}
    std::set<std::pair<char, int>> members;
    for (const auto& ref : cc.components[0]) members.insert({ref.owner, ref.arc.i});
    CHECK(members == std::set<std::pair<char, int>>{{'S', 4}, {'T', 2}});

    // two independent crossings give two components
    SecondaryStructure s2, t2;
    s2.length = 8;
    s2.arcs = {{1, 3}, {5, 7}};
    t2.length = 8;
    t2.arcs = {{2, 4}, {6, 8}};
    CHECK(crossing_components(BiStructure::make(s2, t2)).count == 2);
}

TEST_CASE("crossing chain through a shared middle arc") {
    SecondaryStructure s, t;
    s.length = 10;
    s.arcs = {{1, 4}, {5, 9}};
    t.length = 10;
    t.arcs = {{3, 6}, {8, 10}};
    // T{3,6} crosses S{1,4} (1<3<4<6) and S{5,9} (3<5<6<9); T{8,10} crosses S{5,9}
    const CrossingComponents cc = crossing_components(BiStructure::make(s, t));
    REQUIRE(cc.count == 1);
    CHECK(cc.components[0].size() == 4);
}

namespace {

// m interleaved blocks of S = "(.)." against T = ".(.)", plus trailing
// dots. Every S endpoint falls strictly inside or strictly outside the
// T arc of its block (and vice versa), so no triangle collects two
// common points and no position is an endpoint on both sides: the nerve
// is lean by construction, with one crossing per block.
BiStructure interleaved_ladder(int m, int tail) {
    std::string s, t;
    for (int i = 0; i < m; ++i) {
        s += "(.).";
        t += ".(.)";
    }
    s.append(static_cast<size_t>(tail), '.');
    t.append(static_cast<size_t>(tail), '.');
    return BiStructure::make(parse_dot_bracket(s), parse_dot_bracket(t));
}

} // namespace

TEST_CASE("lean formulas hold on crossing-rich random bi-structures") {
    std::mt19937_64 rng(31);
    int lean_seen = 0, crossing_seen = 0;
    const auto exercise = [&](const BiStructure& b) {
        const LeanCheck lc = verify_lean_formulas(b);
        CHECK(lc.rank2_matches_crossings);
        if (lc.applicable) {
            ++lean_seen;
            CHECK(lc.all_match());
            for (int d = 0; d < 3; ++d) CHECK(lc.computed[d] == lc.predicted[d]);
        }
        if (lc.crossing_count > 0) ++crossing_seen;
    };
    // fully random pairs land in the non-lean regime almost always: some
    // top-level arc has both endpoints outside the other side's arcs,
    // which already makes a weight-2 triangle
    for (int trial = 0; trial < 80; ++trial)
        exercise(testsupport::random_bistructure(2 + static_cast<int>(rng() % 30), rng));
    // the ladders keep the closed forms honest in the lean regime
    for (int trial = 0; trial < 15; ++trial)
        exercise(interleaved_ladder(1 + static_cast<int>(rng() % 6),
                                    static_cast<int>(rng() % 4)));
    CHECK(lean_seen >= 10);
    CHECK(crossing_seen >= 10);
}

TEST_CASE("crossing-free bi-structures have contractible-looking nerves") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const SecondaryStructure s =
            testsupport::random_structure(2 + static_cast<int>(rng() % 20), rng);
        const SecondaryStructure t = parse_dot_bracket(std::string(static_cast<size_t>(s.length), '.'));
        const LeanCheck lc = verify_lean_formulas(BiStructure::make(s, t));
        CHECK(lc.crossing_count == 0);
        CHECK(lc.computed[2].is_zero_module());
        CHECK(lc.computed[0].rank == 1);
    }
}

TEST_CASE("the pinned crossing nerve") {
    // An 18-simplex loop complex with one crossing component, kept as a
    // fixture. It is not lean (one triangle of weight 2), yet its top
    // homology still has rank equal to the crossing count.
    const WeightedComplex x = testsupport::load_fixture("loop_complex_crossing.json");
    CHECK(x.total_size() == 18);
    CHECK(x.size(0) == 5);
    CHECK(x.size(1) == 8);
    CHECK(x.size(2) == 5);
    CHECK_FALSE(is_lean(x));

    ModuleInvariants h2 = homology_direct(x, 2);
    CHECK(h2.rank == 1);
    CHECK(h2.torsion.empty());

    ModuleInvariants h1 = homology_direct(x, 1);
    CHECK(h1.rank == 0);
    CHECK(h1.torsion == std::vector<unsigned>{1, 1, 2});

    ModuleInvariants h0 = homology_direct(x, 0);
    CHECK(h0.rank == 1);
    CHECK(h0.torsion == std::vector<unsigned>{2, 2, 4});
}

TEST_CASE("nerves match the naive loop intersections") {
    // independent nerve check: every simplex of the loop complex is a set
    // of loops with common vertices, weighted by how many
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const BiStructure b =
            testsupport::random_bistructure(2 + static_cast<int>(rng() % 25), rng);
        const LoopNerve nerve = loop_complex(b);
        std::vector<Loop> all = naive_loops(b.s);
        const auto t_loops = naive_loops(b.t);
        all.insert(all.end(), t_loops.begin(), t_loops.end());
        REQUIRE(nerve.complex.size(0) == static_cast<int>(all.size()));

        const WeightedComplex& x = nerve.complex;
        for (int d = 0; d <= x.dim(); ++d)
            for (int i = 0; i < x.size(d); ++i) {
                std::vector<int> common = all[static_cast<size_t>(x.simplex(d, i).verts[0])].vertices;
                for (int v : x.simplex(d, i).verts) {
                    std::vector<int> next;
                    const auto& lv = all[static_cast<size_t>(v)].vertices;
                    std::set_intersection(common.begin(), common.end(), lv.begin(), lv.end(),
                                          std::back_inserter(next));
                    common = std::move(next);
                }
                CHECK(x.weight(d, i) == static_cast<int>(common.size()));
                CHECK(!common.empty());
            }

        // and conversely: every pair with common vertices is an edge
        for (size_t a = 0; a < all.size(); ++a)
            for (size_t c = a + 1; c < all.size(); ++c) {
                std::vector<int> both;
                std::set_intersection(all[a].vertices.begin(), all[a].vertices.end(),
                                      all[c].vertices.begin(), all[c].vertices.end(),
                                      std::back_inserter(both));
                const bool edge =
                    x.find(Simplex{static_cast<int>(a), static_cast<int>(c)}).has_value();
                CHECK(edge == !both.empty());
            }
    }
}
