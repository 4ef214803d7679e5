#include <doctest.h>

#include "slink/graphspace.hpp"

using namespace slink;

namespace {

ResolvedGraph graph_of(const std::string& text, std::uint32_t cr) {
    return resolve(make_context(closure(parse_braid(text))), cr);
}

}  // namespace

TEST_CASE("deg_singular three cases") {
    ResolvedGraph g = graph_of("B2: 1", 1);  // wide edge with two loops
    CHECK(deg_singular(g, 0, Coloring{1, 2}) == 1);
    CHECK(deg_singular(g, 0, Coloring{2, 1}) == -1);
    ResolvedGraph d = graph_of("B2: 1 1", 3);  // digon has swap states
    bool saw_zero = false;
    for (const Coloring& st : enumerate_states(d, 2)) {
        int dg = deg_singular(d, 0, st);
        CHECK(dg >= -1);
        CHECK(dg <= 1);
        saw_zero |= (dg == 0);
    }
    CHECK(saw_zero);
}

TEST_CASE("deg_singular matches the weight exponent") {
    for (const char* text : {"B2: 1 1", "B3: 1 2", "B3: 1 -2 1"}) {
        auto ctx = make_context(closure(parse_braid(text)));
        for (std::uint32_t cr = 0; cr < (1u << ctx->crossings()); ++cr) {
            ResolvedGraph g = resolve(ctx, cr);
            for (const Coloring& st : enumerate_states(g, 3))
                for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
                    CHECK(deg_singular(g, v, st) == weight_exponent(g, v, st));
        }
    }
}

TEST_CASE("grade on the zero-crossing unknot") {
    ResolvedGraph g = graph_of("B1:", 0);
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a <= n; ++a)
            CHECK(grade(g, Coloring{static_cast<std::uint8_t>(a)}, n) == 2 * a - n - 1);
}

TEST_CASE("grade of the parallel resolution of the positive kink") {
    ResolvedGraph g = graph_of("B2: 1", 0);
    // N0+ - N1- - wr n + 0 + circle terms = 1 - 0 - n + (2a-n-1) + (2b-n-1)
    CHECK(grade(g, Coloring{1, 1}, 2) == -3);
    CHECK(grade(g, Coloring{1, 2}, 2) == -1);
    CHECK(grade(g, Coloring{2, 2}, 2) == 1);
}

TEST_CASE("grade of the singular resolution of the positive kink") {
    ResolvedGraph g = graph_of("B2: 1", 1);
    CHECK(grade(g, Coloring{1, 2}, 2) == -1);  // -2 + deg(+1) + 0
    CHECK(grade(g, Coloring{2, 1}, 2) == -3);
}

TEST_CASE("module basis and gradings") {
    GradedStateModule m = make_state_module(graph_of("B2: 1", 1), 2);
    REQUIRE(m.dim() == 2);
    CHECK(m.basis[0] == Coloring{1, 2});
    CHECK(m.index_of(Coloring{2, 1}) == 1);
    CHECK(m.index_of(Coloring{1, 1}) == -1);
    CHECK(m.graded_degree(0) == -1);
    GradedStateModule shifted = m;
    shifted.shift = 3;
    CHECK(shifted.graded_degree(0) == 2);
    CHECK(graded_dimension(shifted) == graded_dimension(m).shifted(3));
}

TEST_CASE("graded dimension of the unknot is the centered quantum integer") {
    for (int n = 2; n <= 4; ++n) {
        GradedStateModule m = make_state_module(graph_of("B1:", 0), n);
        CHECK(graded_dimension(m) == Laurent::quantum_integer(n));
    }
    CHECK(make_state_module(graph_of("B2: 1", 1), 1).dim() == 0);
}

TEST_CASE("graded dimension equals the shifted graph bracket everywhere") {
    for (const char* text :
         {"B1:", "B2: 1", "B2: -1", "B2: 1 1", "B2: 1 -1", "B3: 1 2", "B3: 1 -2",
          "B3: 1 2 1", "B2: 1 1 1", "B3: -1 -2"}) {
        auto ctx = make_context(closure(parse_braid(text)));
        int wr = ctx->diagram.writhe;
        for (std::uint32_t cr = 0; cr < (1u << ctx->crossings()); ++cr) {
            ResolvedGraph g = resolve(ctx, cr);
            for (int n = 1; n <= 3; ++n) {
                GradedStateModule m = make_state_module(g, n);
                Laurent expected =
                    graph_bracket(g, n).shifted(g.n0p - g.n1m - n * wr);
                CHECK(graded_dimension(m) == expected);
            }
        }
    }
}

TEST_CASE("digon module splits as two shifted copies of the wide edge") {
    for (int n = 2; n <= 3; ++n) {
        GradedStateModule digon = make_state_module(graph_of("B2: 1 1", 3), n);
        GradedStateModule wide = make_state_module(graph_of("B2: 1", 1), n);
        // wr differs between the host diagrams; compare bracket-level shifts
        Laurent lhs = graded_dimension(digon).shifted(2 * n);   // undo -wr*n, wr = 2
        Laurent rhs = graded_dimension(wide).shifted(n);        // wr = 1
        CHECK(lhs == (Laurent::quantum_integer(2) * rhs));
    }
}
