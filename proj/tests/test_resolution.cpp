#include <doctest.h>

#include "slink/resolution.hpp"
#include "slink/statesum.hpp"

using namespace slink;

namespace {

ResolvedGraph graph_of(const std::string& text, std::uint32_t cr) {
    return resolve(make_context(closure(parse_braid(text))), cr);
}

}  // namespace

TEST_CASE("zero-crossing unknot resolves to one circle") {
    ResolvedGraph g = graph_of("B1:", 0);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].closed);
    CHECK(g.edges[0].arc_count == 1);
    CHECK(g.nodes.empty());
}

TEST_CASE("resolutions of a single positive crossing") {
    ResolvedGraph par = graph_of("B2: 1", 0);
    CHECK(par.nodes.empty());
    CHECK(par.parallel.size() == 1);
    CHECK(par.n0p == 1);
    CHECK(par.edges.size() == 2);

    ResolvedGraph sing = graph_of("B2: 1", 1);
    REQUIRE(sing.nodes.size() == 1);
    CHECK(sing.n1p == 1);
    CHECK(sing.edges.size() == 2);
    // both edges are loops: leg and head of the same slot agree
    const SingularNode& nd = sing.nodes[0];
    CHECK(nd.leg_edge[0] == nd.head_edge[0]);
    CHECK(nd.leg_edge[1] == nd.head_edge[1]);
    CHECK(nd.leg_edge[0] != nd.leg_edge[1]);
}

TEST_CASE("negative crossing is singular at the 0-resolution") {
    ResolvedGraph g0 = graph_of("B2: -1", 0);
    CHECK(g0.nodes.size() == 1);
    CHECK(g0.n0m == 1);
    ResolvedGraph g1 = graph_of("B2: -1", 1);
    CHECK(g1.nodes.empty());
    CHECK(g1.n1m == 1);
}

TEST_CASE("singular edges plus parallel pairs count the crossings") {
    auto ctx = make_context(closure(parse_braid("B3: 1 -2 1 2")));
    for (std::uint32_t cr = 0; cr < 16; ++cr) {
        ResolvedGraph g = resolve(ctx, cr);
        CHECK(g.nodes.size() + g.parallel.size() == 4);
        CHECK(g.n0p + g.n1p == 3);
        CHECK(g.n0m + g.n1m == 1);
        // every open edge has one start and one end through the node structure
        for (const auto& nd : g.nodes) {
            for (int s = 0; s < 2; ++s) {
                CHECK(nd.leg_edge[s] >= 0);
                CHECK(nd.head_edge[s] >= 0);
            }
        }
    }
}

TEST_CASE("resolution count and enumeration order") {
    auto ctx = make_context(closure(parse_braid("B2: 1 1")));
    std::vector<std::uint32_t> seen;
    for (std::uint32_t cr = 0; cr < 4; ++cr) {
        resolve(ctx, cr);
        seen.push_back(cr);
    }
    CHECK(seen == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(resolve(ctx, 4), std::domain_error);
}

TEST_CASE("crossing subset helper validates ids") {
    LinkDiagram d = closure(parse_braid("B2: 1 1"));
    CHECK(crossing_subset_mask(d, {0, 1}) == 3);
    CHECK(crossing_subset_mask(d, {}) == 0);
    CHECK_THROWS_AS(crossing_subset_mask(d, {2}), std::domain_error);
}

TEST_CASE("crossed reconnection yields closed curves; one winds twice") {
    // deleting the singular edges of the digon and reconnecting legs to heads
    // the other planar way gives a single curve through both closure arcs
    ResolvedGraph g = graph_of("B2: 1 1", 3);
    REQUIRE(g.nodes.size() == 2);
    const SingularNode& e0 = g.nodes[0];
    const SingularNode& e1 = g.nodes[1];
    // crossed at both nodes: leg L -> head R throughout
    std::vector<int> curve = {e0.head_edge[0], e1.head_edge[1], e0.head_edge[1],
                              e1.head_edge[0]};
    // consecutive edges share their node, so the curve closes up
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const NormalEdge& a = g.edges[curve[i]];
        const NormalEdge& b = g.edges[curve[(i + 1) % curve.size()]];
        CHECK(a.to_node == b.from_node);
    }
    CHECK(rotation_by_turning(g, curve) == 2);
}

TEST_CASE("turning-number oracle agrees with arc counting") {
    // every colored circle of every resolution of a small zoo of diagrams
    for (const char* text : {"B1:", "B2: 1", "B2: -1", "B2: 1 1", "B2: 1 -1", "B3: 1 2",
                             "B3: 1 -2", "B3: 1 2 1", "B3: -1 2 -1", "B2: 1 1 1"}) {
        auto ctx = make_context(closure(parse_braid(text)));
        int m = ctx->crossings();
        for (std::uint32_t cr = 0; cr < (1u << m); ++cr) {
            ResolvedGraph g = resolve(ctx, cr);
            for (const Coloring& st : enumerate_states(g, 2)) {
                for (const ColoredCircle& c : collapse(g, st)) {
                    CHECK(rotation_by_turning(g, c.edges) == c.rot);
                }
            }
        }
    }
}
