#include "slink/statesum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace slink {

namespace {

struct NodeColors {
    int a, b, c, d;  // left leg, right leg, left head, right head
};

NodeColors node_colors(const ResolvedGraph& g, int node, const Coloring& col) {
    const SingularNode& nd = g.nodes[node];
    return {col[nd.leg_edge[0]], col[nd.leg_edge[1]], col[nd.head_edge[0]],
            col[nd.head_edge[1]]};
}

bool node_valid(const NodeColors& x) {
    if (x.a == x.b || x.c == x.d) return false;
    return (x.a == x.c && x.b == x.d) || (x.a == x.d && x.b == x.c);
}

}  // namespace

bool state_valid(const ResolvedGraph& g, const Coloring& c) {
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
        if (!node_valid(node_colors(g, v, c))) return false;
    return true;
}

std::vector<Coloring> enumerate_states(const ResolvedGraph& g, int n) {
    const int ne = static_cast<int>(g.edges.size());
    std::vector<Coloring> out;
    Coloring col(ne, 0);

    // Partial consistency at a node; forces the fourth color when three are set.
    // Returns false on contradiction, sets *changed when a color is forced.
    auto check_node = [&](int v, bool* changed) -> bool {
        const SingularNode& nd = g.nodes[v];
        int e[4] = {nd.leg_edge[0], nd.leg_edge[1], nd.head_edge[0], nd.head_edge[1]};
        int x[4];
        int unknown = -1, cnt = 0;
        for (int i = 0; i < 4; ++i) {
            x[i] = col[e[i]];
            if (x[i] == 0) {
                unknown = i;
                ++cnt;
            }
        }
        if (x[0] && x[1] && x[0] == x[1]) return false;
        if (x[2] && x[3] && x[2] == x[3]) return false;
        // a head must appear among assigned legs when both legs are known, etc.
        if (x[0] && x[1]) {
            for (int i = 2; i < 4; ++i)
                if (x[i] && x[i] != x[0] && x[i] != x[1]) return false;
        }
        if (x[2] && x[3]) {
            for (int i = 0; i < 2; ++i)
                if (x[i] && x[i] != x[2] && x[i] != x[3]) return false;
        }
        if (cnt == 1) {
            int forced = 0;
            if (unknown >= 2) {
                // legs known, one head known
                int other = (unknown == 2) ? x[3] : x[2];
                forced = (other == x[0]) ? x[1] : x[0];
            } else {
                int other = (unknown == 0) ? x[1] : x[0];
                forced = (other == x[2]) ? x[3] : x[2];
            }
            col[e[unknown]] = static_cast<std::uint8_t>(forced);
            *changed = true;
        }
        if (cnt == 0) {
            NodeColors nc{x[0], x[1], x[2], x[3]};
            if (!node_valid(nc)) return false;
        }
        return true;
    };

    auto propagate = [&]() -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
                if (!check_node(v, &changed)) return false;
        }
        return true;
    };

    // depth-first over unassigned edges with snapshot backtracking
    std::vector<Coloring> stack;
    if (propagate()) stack.push_back(col);
    while (!stack.empty()) {
        col = stack.back();
        stack.pop_back();
        int next = -1;
        for (int e = 0; e < ne; ++e)
            if (col[e] == 0) {
                next = e;
                break;
            }
        if (next < 0) {
            out.push_back(col);
            continue;
        }
        Coloring base = col;
        for (int c = n; c >= 1; --c) {
            col = base;
            col[next] = static_cast<std::uint8_t>(c);
            if (propagate()) stack.push_back(col);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int weight_exponent(const ResolvedGraph& g, int node, const Coloring& c) {
    NodeColors x = node_colors(g, node, c);
    if (!node_valid(x)) throw std::domain_error("statesum: state violates singular edge");
    if (x.a == x.c && x.b == x.d) return x.a < x.b ? 1 : -1;
    return 0;
}

Laurent edge_weight(const ResolvedGraph& g, int node, const Coloring& c) {
    return Laurent::monomial(1, weight_exponent(g, node, c));
}

std::vector<ColoredCircle> collapse(const ResolvedGraph& g, const Coloring& c) {
    std::vector<ColoredCircle> circles;
    std::vector<char> used(g.edges.size(), 0);
    for (int e0 = 0; e0 < static_cast<int>(g.edges.size()); ++e0) {
        if (used[e0]) continue;
        ColoredCircle circ;
        circ.color = c[e0];
        int e = e0;
        do {
            used[e] = 1;
            circ.edges.push_back(e);
            circ.rot += g.edges[e].arc_count;
            const NormalEdge& edge = g.edges[e];
            if (edge.closed) break;
            const SingularNode& nd = g.nodes[edge.to_node];
            int h0 = nd.head_edge[0], h1 = nd.head_edge[1];
            assert(c[h0] != c[h1]);
            e = (c[h0] == c[e]) ? h0 : h1;
        } while (e != e0);
        circles.push_back(std::move(circ));
    }
    return circles;
}

int rotation_term(const ResolvedGraph& g, const Coloring& c, int n) {
    int total = 0;
    for (const ColoredCircle& circ : collapse(g, c))
        total += (2 * circ.color - n - 1) * circ.rot;
    return total;
}

Laurent graph_bracket(const ResolvedGraph& g, int n) {
    Laurent sum;
    for (const Coloring& c : enumerate_states(g, n)) {
        int expo = rotation_term(g, c, n);
        for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
            expo += weight_exponent(g, v, c);
        sum.add_term(expo, 1);
    }
    return sum;
}

Laurent diagram_bracket(const std::shared_ptr<const DiagramContext>& ctx, int n) {
    if (n < 1) throw std::domain_error("statesum: n must be positive");
    const int m = ctx->crossings();
    Laurent sum;
    for (std::uint32_t cr = 0; cr < (1u << m); ++cr) {
        ResolvedGraph g = resolve(ctx, cr);
        int nsing = g.n1p + g.n0m;
        Laurent term = graph_bracket(g, n).shifted(g.n0p - g.n1m);
        if (nsing % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return sum.shifted(-n * ctx->diagram.writhe);
}

Laurent diagram_bracket(const LinkDiagram& d, int n) {
    return diagram_bracket(make_context(d), n);
}

}  // namespace slink
