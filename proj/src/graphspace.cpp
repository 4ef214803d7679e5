#include "slink/graphspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace slink {

int deg_singular(const ResolvedGraph& g, int node, const Coloring& c) {
    const SingularNode& nd = g.nodes[node];
    int a = c[nd.leg_edge[0]], b = c[nd.leg_edge[1]];
    int x = c[nd.head_edge[0]], y = c[nd.head_edge[1]];
    if (a == x && b == y && a != b) return a < b ? 1 : -1;
    if (a == y && b == x && a != b) return 0;
    throw std::domain_error("graphspace: state violates singular edge");
}

int grade(const ResolvedGraph& g, const Coloring& c, int n) {
    int total = g.n0p - g.n1m - g.ctx->diagram.writhe * n;
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
        total += deg_singular(g, v, c);
    total += rotation_term(g, c, n);
    return total;
}

int GradedStateModule::index_of(const Coloring& c) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), c);
    if (it == basis.end() || *it != c) return -1;
    return static_cast<int>(it - basis.begin());
}

GradedStateModule make_state_module(const ResolvedGraph& g, int n) {
    GradedStateModule m;
    m.graph = g;
    m.n = n;
    m.basis = enumerate_states(g, n);
    m.grading.reserve(m.basis.size());
    for (const Coloring& c : m.basis) m.grading.push_back(grade(g, c, n));
    return m;
}

Laurent graded_dimension(const GradedStateModule& m) {
    Laurent p;
    for (int i = 0; i < m.dim(); ++i) p.add_term(m.graded_degree(i), 1);
    return p;
}

}  // namespace slink
