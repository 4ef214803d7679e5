#include "slink/morphisms.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace slink {

void FormalSum::add(int index, std::int64_t coeff) {
    if (coeff != 0) terms.push_back({index, coeff});
}

void FormalSum::normalize() {
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<int, std::int64_t>> out;
    for (auto& [i, c] : terms) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.push_back({i, c});
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    terms = std::move(out);
}

namespace {

// Working graph for the structure morphisms. For the parallel-to-singular
// direction the two strands through the site are cut there and a pseudo node
// stands in for the future singular edge.
struct AugNode {
    int real = -1;  // index into ResolvedGraph::nodes, -1 for the pseudo node
    int leg[2] = {-1, -1};
    int head[2] = {-1, -1};
};

struct AugEdge {
    std::vector<int> pieces;
    int arc_count = 0;
    bool closed = false;
    int from_node = -1, from_slot = -1;
    int to_node = -1, to_slot = -1;
};

struct AugGraph {
    const ResolvedGraph* g = nullptr;
    int anchor = -1;
    bool anchor_pseudo = false;
    std::vector<AugNode> nodes;
    std::vector<AugEdge> edges;
    std::vector<int> color;  // per aug edge
};

AugGraph build_aug(const ResolvedGraph& g, int site, const Coloring& state) {
    AugGraph a;
    a.g = &g;
    a.nodes.resize(g.nodes.size());
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
        a.nodes[v].real = v;
        for (int s = 0; s < 2; ++s) {
            a.nodes[v].leg[s] = g.nodes[v].leg_edge[s];
            a.nodes[v].head[s] = g.nodes[v].head_edge[s];
        }
    }

    if (g.site_singular(site)) {
        a.anchor = g.node_of_site[site];
        a.anchor_pseudo = false;
        a.edges.resize(g.edges.size());
        a.color.resize(g.edges.size());
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            const NormalEdge& ne = g.edges[e];
            AugEdge& ae = a.edges[e];
            ae.pieces = ne.pieces;
            ae.arc_count = ne.arc_count;
            ae.closed = ne.closed;
            ae.from_node = ne.from_node;
            ae.from_slot = ne.from_slot;
            ae.to_node = ne.to_node;
            ae.to_slot = ne.to_slot;
            a.color[e] = state[e];
        }
        return a;
    }

    // pseudo node for the parallel site, slot edges cut at the site
    const DiagramContext& ctx = *g.ctx;
    int pseudo = static_cast<int>(a.nodes.size());
    a.nodes.push_back(AugNode{});
    a.anchor = pseudo;
    a.anchor_pseudo = true;

    const Crossing& c = ctx.diagram.crossings[site];
    int cut_edge[2] = {-1, -1};
    int leave_piece[2] = {-1, -1};
    for (int s = 0; s < 2; ++s) {
        int k = c.col + s;
        const auto& sites = ctx.col_sites[k];
        int pos = -1;
        for (int i = 0; i < static_cast<int>(sites.size()); ++i)
            if (sites[i] == site) pos = i;
        assert(pos >= 0);
        leave_piece[s] = ctx.col_pieces[k][pos];
        cut_edge[s] = g.edge_of_piece[leave_piece[s]];
    }

    auto push_edge = [&](AugEdge e, int col) {
        int id = static_cast<int>(a.edges.size());
        a.edges.push_back(std::move(e));
        a.color.push_back(col);
        return id;
    };

    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const NormalEdge& ne = g.edges[e];
        int slot = (e == cut_edge[0]) ? 0 : (e == cut_edge[1]) ? 1 : -1;
        if (slot < 0) {
            AugEdge ae;
            ae.pieces = ne.pieces;
            ae.arc_count = ne.arc_count;
            ae.closed = ne.closed;
            ae.from_node = ne.from_node;
            ae.from_slot = ne.from_slot;
            ae.to_node = ne.to_node;
            ae.to_slot = ne.to_slot;
            int id = push_edge(std::move(ae), state[e]);
            if (!ne.closed) {
                a.nodes[ne.from_node].head[ne.from_slot] = id;
                a.nodes[ne.to_node].leg[ne.to_slot] = id;
            }
            continue;
        }
        int idx = -1;
        for (int i = 0; i < static_cast<int>(ne.pieces.size()); ++i)
            if (ne.pieces[i] == leave_piece[slot]) idx = i;
        assert(idx >= 0);
        if (ne.closed) {
            AugEdge loop;
            for (int i = 0; i < static_cast<int>(ne.pieces.size()); ++i) {
                int p = ne.pieces[(idx + i) % ne.pieces.size()];
                loop.pieces.push_back(p);
                if (ctx.pieces[p].has_arc) loop.arc_count++;
            }
            loop.from_node = pseudo;
            loop.from_slot = slot;
            loop.to_node = pseudo;
            loop.to_slot = slot;
            int id = push_edge(std::move(loop), state[e]);
            a.nodes[pseudo].head[slot] = id;
            a.nodes[pseudo].leg[slot] = id;
        } else {
            assert(idx >= 1);
            AugEdge lower, upper;
            for (int i = 0; i < idx; ++i) {
                lower.pieces.push_back(ne.pieces[i]);
                if (ctx.pieces[ne.pieces[i]].has_arc) lower.arc_count++;
            }
            for (int i = idx; i < static_cast<int>(ne.pieces.size()); ++i) {
                upper.pieces.push_back(ne.pieces[i]);
                if (ctx.pieces[ne.pieces[i]].has_arc) upper.arc_count++;
            }
            lower.from_node = ne.from_node;
            lower.from_slot = ne.from_slot;
            lower.to_node = pseudo;
            lower.to_slot = slot;
            upper.from_node = pseudo;
            upper.from_slot = slot;
            upper.to_node = ne.to_node;
            upper.to_slot = ne.to_slot;
            int lo = push_edge(std::move(lower), state[e]);
            int up = push_edge(std::move(upper), state[e]);
            a.nodes[ne.from_node].head[ne.from_slot] = lo;
            a.nodes[pseudo].leg[slot] = lo;
            a.nodes[pseudo].head[slot] = up;
            a.nodes[ne.to_node].leg[ne.to_slot] = up;
        }
    }
    return a;
}

/// Degree of a real node under a per-edge color vector; nullopt when invalid.
std::optional<int> node_deg(const AugGraph& a, int v, const std::vector<int>& col) {
    const AugNode& nd = a.nodes[v];
    int x = col[nd.leg[0]], y = col[nd.leg[1]];
    int p = col[nd.head[0]], q = col[nd.head[1]];
    if (x == y || p == q) return std::nullopt;
    if (x == p && y == q) return x < y ? 1 : -1;
    if (x == q && y == p) return 0;
    return std::nullopt;
}

struct Walk {
    std::vector<int> edges;
    std::vector<std::pair<int, int>> arrivals;  // (node, slot) after each edge
};

Walk trace(const AugGraph& a, int start_node, int head_slot) {
    Walk w;
    int start = a.nodes[start_node].head[head_slot];
    int e = start;
    while (true) {
        w.edges.push_back(e);
        const AugEdge& ae = a.edges[e];
        w.arrivals.push_back({ae.to_node, ae.to_slot});
        const AugNode& nd = a.nodes[ae.to_node];
        int next;
        if (nd.real < 0) {
            next = nd.head[ae.to_slot];
        } else {
            int h0 = nd.head[0], h1 = nd.head[1];
            next = (a.color[h0] == a.color[e]) ? h0 : h1;
        }
        if (next == start) break;
        e = next;
    }
    return w;
}

struct PathPair {
    int s = -1, t = -1;              // source and target node
    std::vector<int> e1, e2;         // edge ids of the two paths
    std::vector<int> interior1, interior2;  // interior arrival nodes
    int arcs1 = 0, arcs2 = 0;
};

/// Cut a walk at its first arrival at node t.
bool prefix_to(const AugGraph& a, const Walk& w, int t, std::vector<int>& edges,
               std::vector<int>& interior, int& arcs) {
    edges.clear();
    interior.clear();
    arcs = 0;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        edges.push_back(w.edges[i]);
        arcs += a.edges[w.edges[i]].arc_count;
        if (w.arrivals[i].first == t) return true;
        interior.push_back(w.arrivals[i].first);
    }
    return false;
}

/// Builder for one morphism column. Emits +1 terms after the uniform
/// validity and grading filters.
struct TermSink {
    const GradedStateModule* dst;
    const ResolvedGraph* gdst;
    int n = 0;
    int src_grade = 0;
    FormalSum sum;

    void emit(const std::vector<int>& piece_color) {
        Coloring out(gdst->edges.size(), 0);
        for (int e = 0; e < static_cast<int>(gdst->edges.size()); ++e) {
            int col = -1;
            for (int p : gdst->edges[e].pieces) {
                int pc = piece_color[p];
                if (col < 0) col = pc;
                if (pc != col) return;  // mixed strand: not replaceable
            }
            out[e] = static_cast<std::uint8_t>(col);
        }
        if (!state_valid(*gdst, out)) return;
        if (grade(*gdst, out, n) != src_grade) return;
        int idx = dst->index_of(out);
        assert(idx >= 0);
        sum.add(idx, 1);
    }
};

std::vector<int> piece_colors_of(const AugGraph& a, const std::vector<int>& edge_color) {
    std::vector<int> pc(a.g->ctx->pieces.size(), 0);
    for (int e = 0; e < static_cast<int>(a.edges.size()); ++e)
        for (int p : a.edges[e].pieces) pc[p] = edge_color[e];
    return pc;
}

enum class Mode { Chi1Pos, Chi1Zero, Chi0 };

/// Enumerate distinguished path pairs through the anchor and emit the
/// exchanged-and-replaced terms that pass the admissibility conditions.
void exchange_terms(const AugGraph& a, Mode mode, TermSink& sink) {
    const int nn = static_cast<int>(a.nodes.size());
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    for (int s = 0; s < nn; ++s) {
        bool s_real = a.nodes[s].real >= 0;
        int c1 = a.color[a.nodes[s].head[0]];
        int c2 = a.color[a.nodes[s].head[1]];
        if (c1 == c2) continue;  // the two paths must carry distinct colors
        Walk w1 = trace(a, s, 0);
        Walk w2 = trace(a, s, 1);

        std::set<int> targets;
        for (auto& [node, slot] : w1.arrivals) targets.insert(node);
        for (int t : targets) {
            PathPair pp;
            pp.s = s;
            pp.t = t;
            if (!prefix_to(a, w1, t, pp.e1, pp.interior1, pp.arcs1)) continue;
            if (!prefix_to(a, w2, t, pp.e2, pp.interior2, pp.arcs2)) continue;

            {
                std::vector<int> k1 = pp.e1, k2 = pp.e2;
                std::sort(k1.begin(), k1.end());
                std::sort(k2.begin(), k2.end());
                if (k2 < k1) std::swap(k1, k2);
                if (!seen.insert({k1, k2}).second) continue;
            }

            bool t_real = a.nodes[t].real >= 0;
            bool anchor_on_path = false;
            for (int v : pp.interior1) anchor_on_path |= (v == a.anchor);
            for (int v : pp.interior2) anchor_on_path |= (v == a.anchor);

            // role of the anchor per case
            if (mode == Mode::Chi1Pos) {
                if (!anchor_on_path) continue;
                if (s == a.anchor || t == a.anchor) continue;
            } else if (mode == Mode::Chi1Zero) {
                if (s != a.anchor && t != a.anchor) continue;
            } else {
                if (!anchor_on_path && s != a.anchor && t != a.anchor) continue;
                // a wrapping pair never re-enters the site it is rebuilt at
                if (s != t && pp.arcs1 >= 1 && pp.arcs2 >= 1) continue;
            }

            // endpoints must not be positive type
            auto nonpositive = [&](int v) {
                if (a.nodes[v].real < 0) return true;
                auto d = node_deg(a, v, a.color);
                return d.has_value() && *d != 1;
            };
            if (mode == Mode::Chi1Zero) {
                int other = (s == a.anchor) ? t : s;
                if (other != a.anchor && !nonpositive(other)) continue;
            } else {
                if (!nonpositive(s) || !nonpositive(t)) continue;
            }

            // exchanged colors
            std::vector<int> col2 = a.color;
            for (int e : pp.e1) col2[e] = c2;
            for (int e : pp.e2) col2[e] = c1;

            // interior nodes: single-passed, degree zero, degree unchanged
            bool ok = true;
            std::set<int> both;
            for (int v : pp.interior1) both.insert(v);
            for (int v : pp.interior2)
                if (both.count(v) && a.nodes[v].real >= 0 && v != a.anchor) {
                    auto d = node_deg(a, v, a.color);
                    if (d && *d == 0) ok = false;  // the two paths cross here
                }
            if (!ok) continue;
            auto interior_fixed = [&](const std::vector<int>& interior) {
                for (int v : interior) {
                    if (v == a.anchor || v == s || v == t) continue;
                    if (a.nodes[v].real < 0) continue;
                    auto before = node_deg(a, v, a.color);
                    auto after = node_deg(a, v, col2);
                    if (!before || !after || *before != *after) return false;
                    if (*before != 0) return false;  // traversing path, nonzero type
                }
                return true;
            };
            if (!interior_fixed(pp.interior1) || !interior_fixed(pp.interior2)) continue;

            // endpoint degree shifts
            auto shift_of = [&](int v) -> std::optional<int> {
                auto before = node_deg(a, v, a.color);
                auto after = node_deg(a, v, col2);
                if (!before || !after) return std::nullopt;
                return *after - *before;
            };
            if (mode == Mode::Chi1Pos) {
                if (s == t) {
                    auto d = shift_of(s);
                    if (!d || *d != 2) continue;
                } else {
                    auto ds = shift_of(s), dt = shift_of(t);
                    if (!ds || !dt || *ds != 1 || *dt != 1) continue;
                }
            } else if (mode == Mode::Chi1Zero) {
                int other = (s == a.anchor) ? t : s;
                if (other != a.anchor && a.nodes[other].real >= 0) {
                    auto d = shift_of(other);
                    if (!d || *d != 1) continue;
                }
            } else {
                // no shift requirement; validity at endpoints still needed
                if (s_real && !node_deg(a, s, col2)) continue;
                if (t_real && !node_deg(a, t, col2)) continue;
            }

            sink.emit(piece_colors_of(a, col2));
        }
    }
}

/// Replace-and-recolor terms for simple loops at the anchor site.
void loop_terms(const AugGraph& a, int n, TermSink& sink) {
    for (int slot = 0; slot < 2; ++slot) {
        int fh = a.nodes[a.anchor].head[slot];
        int fl = a.nodes[a.anchor].leg[slot];
        std::vector<int> loop_edges;
        if (fh == fl) {
            loop_edges = {fh};  // loop at the anchor itself
        } else if (a.anchor_pseudo) {
            // the two halves of the strand form a loop at another node
            const AugEdge& up = a.edges[fh];
            const AugEdge& lo = a.edges[fl];
            if (up.to_node == lo.from_node && up.to_node != a.anchor)
                loop_edges = {fh, fl};
            else
                continue;
        } else {
            continue;
        }
        int cur = a.color[loop_edges[0]];
        for (int cc = 1; cc <= n; ++cc) {
            if (cc == cur) continue;
            std::vector<int> col2 = a.color;
            for (int e : loop_edges) col2[e] = cc;
            if (loop_edges.size() == 2) {
                // the loop closes through a real node; it must stay valid
                int x = a.edges[loop_edges[0]].to_node;
                if (!node_deg(a, x, col2)) continue;
            }
            sink.emit(piece_colors_of(a, col2));
        }
    }
}

}  // namespace

FormalSum chi_of_state(const GradedStateModule& src, const GradedStateModule& dst,
                       int site, int src_index) {
    const ResolvedGraph& g = src.graph;
    if ((g.cr >> site) & 1u)
        throw std::domain_error("chi: site already 1-resolved in the source");
    if (dst.graph.cr != (g.cr | (1u << site)))
        throw std::domain_error("chi: target module does not match site");

    const Coloring& state = src.basis[src_index];
    AugGraph aug = build_aug(g, site, state);

    TermSink sink;
    sink.dst = &dst;
    sink.gdst = &dst.graph;
    sink.n = src.n;
    sink.src_grade = src.grading[src_index];

    if (g.site_singular(site)) {
        int d = deg_singular(g, g.node_of_site[site], state);
        if (d == -1) {
            sink.emit(piece_colors_of(aug, aug.color));
        } else if (d == 1) {
            exchange_terms(aug, Mode::Chi1Pos, sink);
            loop_terms(aug, src.n, sink);
        } else {
            exchange_terms(aug, Mode::Chi1Zero, sink);
        }
    } else {
        int i = aug.color[aug.nodes[aug.anchor].leg[0]];
        int j = aug.color[aug.nodes[aug.anchor].leg[1]];
        if (i < j) {
            sink.emit(piece_colors_of(aug, aug.color));
        } else {
            exchange_terms(aug, Mode::Chi0, sink);
            loop_terms(aug, src.n, sink);
        }
    }
    sink.sum.normalize();
    return sink.sum;
}

SparseMat chi_matrix(const GradedStateModule& src, const GradedStateModule& dst, int site) {
    SparseMat m;
    m.rows = dst.dim();
    m.cols = src.dim();
    for (int c = 0; c < src.dim(); ++c) {
        FormalSum f = chi_of_state(src, dst, site, c);
        for (auto& [r, v] : f.terms) m.add(r, c, v);
    }
    m.normalize();
    return m;
}

int placement_degree(const DiagramContext& ctx, std::uint32_t mask) {
    int d = 0;
    for (const Crossing& c : ctx.diagram.crossings) {
        bool one = (mask >> c.id) & 1u;
        if (c.sign > 0 && one) ++d;
        if (c.sign < 0 && !one) --d;
    }
    return d;
}

LinkCube build_link_cube(const std::shared_ptr<const DiagramContext>& ctx, int n) {
    const int m = ctx->crossings();
    LinkCube lc;
    lc.ctx = ctx;
    lc.n = n;
    lc.modules.reserve(1u << m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        lc.modules.push_back(make_state_module(resolve(ctx, mask), n));

    lc.cube.bits = m;
    lc.cube.vertex.resize(1u << m);
    lc.cube.edges.resize((1u << m) * std::max(m, 1));
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        lc.cube.vertex[mask].dim = lc.modules[mask].dim();
        lc.cube.vertex[mask].grading.resize(lc.modules[mask].dim());
        for (int i = 0; i < lc.modules[mask].dim(); ++i)
            lc.cube.vertex[mask].grading[i] = lc.modules[mask].graded_degree(i);
    }
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        for (int a = 0; a < m; ++a)
            if (!(mask & (1u << a)))
                lc.cube.edge(mask, a) =
                    chi_matrix(lc.modules[mask], lc.modules[mask | (1u << a)], a);
    return lc;
}

std::optional<std::string> find_commutation_defect(const LinkCube& lc) {
    auto w = find_noncommuting_face(lc.cube);
    if (!w) return std::nullopt;
    std::string msg = "face does not commute: cr=" + std::to_string(w->mask) +
                      " a=" + std::to_string(w->a) + " b=" + std::to_string(w->b) +
                      " state=[";
    const Coloring& c = lc.modules[w->mask].basis[w->col];
    for (std::size_t i = 0; i < c.size(); ++i)
        msg += (i ? "," : "") + std::to_string(static_cast<int>(c[i]));
    msg += "]";
    return msg;
}

ChainComplex link_complex(const LinkCube& lc) {
    Cube skew = skew_twist(lc.cube);
    const DiagramContext& ctx = *lc.ctx;
    return total_complex(skew,
                         [&ctx](std::uint32_t mask) { return placement_degree(ctx, mask); });
}

}  // namespace slink
