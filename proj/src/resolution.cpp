#include "slink/resolution.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace slink {

namespace {

constexpr long long kColGap = 10;
constexpr long long kSiteGap = 20;

long long col_x(int col) { return kColGap * col; }
long long entry_y(int site) { return kSiteGap * site + 5; }
long long exit_y(int site) { return kSiteGap * site + 15; }

}  // namespace

std::shared_ptr<const DiagramContext> make_context(const LinkDiagram& d) {
    auto ctx = std::make_shared<DiagramContext>();
    ctx->diagram = d;
    ctx->strands = d.source.strands;
    const int s = ctx->strands;
    const int m = static_cast<int>(d.crossings.size());
    const long long y_top = kSiteGap * m + 5;

    ctx->col_sites.assign(s + 1, {});
    for (const Crossing& c : d.crossings) {
        ctx->col_sites[c.col].push_back(c.id);
        ctx->col_sites[c.col + 1].push_back(c.id);
    }

    ctx->col_pieces.assign(s + 1, {});
    for (int k = 1; k <= s; ++k) {
        const auto& sites = ctx->col_sites[k];
        const long long x = col_x(k);
        if (sites.empty()) {
            Piece p;
            p.column = k;
            p.has_arc = true;
            p.poly = {{x, 0},
                      {x, y_top + kColGap * k},
                      {-x, y_top + kColGap * k},
                      {-x, -kColGap * k},
                      {x, -kColGap * k},
                      {x, 0}};
            ctx->col_pieces[k].push_back(static_cast<int>(ctx->pieces.size()));
            ctx->pieces.push_back(std::move(p));
            continue;
        }
        const int r = static_cast<int>(sites.size());
        for (int i = 0; i < r; ++i) {
            Piece p;
            p.column = k;
            if (i + 1 < r) {
                p.has_arc = false;
                p.poly = {{x, exit_y(sites[i])}, {x, entry_y(sites[i + 1])}};
            } else {
                p.has_arc = true;
                p.poly = {{x, exit_y(sites[i])},
                          {x, y_top + kColGap * k},
                          {-x, y_top + kColGap * k},
                          {-x, -kColGap * k},
                          {x, -kColGap * k},
                          {x, entry_y(sites[0])}};
            }
            ctx->col_pieces[k].push_back(static_cast<int>(ctx->pieces.size()));
            ctx->pieces.push_back(std::move(p));
        }
    }
    return ctx;
}

std::uint32_t crossing_subset_mask(const LinkDiagram& d, const std::vector<int>& ids) {
    std::uint32_t mask = 0;
    for (int id : ids) {
        if (id < 0 || id >= static_cast<int>(d.crossings.size()))
            throw std::domain_error("resolution: unknown crossing id " + std::to_string(id));
        mask |= (1u << id);
    }
    return mask;
}

ResolvedGraph resolve(const std::shared_ptr<const DiagramContext>& ctx, std::uint32_t cr) {
    const LinkDiagram& d = ctx->diagram;
    const int m = static_cast<int>(d.crossings.size());
    if (m > 0 && (cr >> m) != 0)
        throw std::domain_error("resolution: crossing subset out of range");
    if (m == 0 && cr != 0)
        throw std::domain_error("resolution: crossing subset out of range");

    ResolvedGraph g;
    g.ctx = ctx;
    g.cr = cr;
    g.node_of_site.assign(m, -1);
    g.edge_of_piece.assign(ctx->pieces.size(), -1);

    for (const Crossing& c : d.crossings) {
        const bool one = (cr >> c.id) & 1u;
        const bool sing = (c.sign > 0) ? one : !one;
        if (c.sign > 0)
            (one ? g.n1p : g.n0p)++;
        else
            (one ? g.n1m : g.n0m)++;
        if (sing) {
            SingularNode node;
            node.site = c.id;
            node.col = c.col;
            node.sign = c.sign;
            g.node_of_site[c.id] = static_cast<int>(g.nodes.size());
            g.nodes.push_back(node);
        } else {
            ParallelSite p;
            p.site = c.id;
            p.sign = c.sign;
            g.parallel.push_back(p);
        }
    }

    auto slot_of = [&](int site, int col) { return col == d.crossings[site].col ? 0 : 1; };

    for (int k = 1; k <= ctx->strands; ++k) {
        const auto& sites = ctx->col_sites[k];
        const auto& pieces = ctx->col_pieces[k];
        const int r = static_cast<int>(sites.size());

        std::vector<int> sing_pos;
        for (int i = 0; i < r; ++i)
            if (g.site_singular(sites[i])) sing_pos.push_back(i);

        if (sing_pos.empty()) {
            NormalEdge e;
            e.id = static_cast<int>(g.edges.size());
            e.closed = true;
            for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
                e.pieces.push_back(pieces[i]);
                g.edge_of_piece[pieces[i]] = e.id;
                if (ctx->pieces[pieces[i]].has_arc) e.arc_count++;
            }
            g.edges.push_back(std::move(e));
            continue;
        }

        for (int start : sing_pos) {
            NormalEdge e;
            e.id = static_cast<int>(g.edges.size());
            e.from_node = g.node_of_site[sites[start]];
            e.from_slot = slot_of(sites[start], k);
            int q = start;
            while (true) {
                int piece = pieces[q];
                e.pieces.push_back(piece);
                g.edge_of_piece[piece] = e.id;
                if (ctx->pieces[piece].has_arc) e.arc_count++;
                q = (q + 1) % r;
                if (g.site_singular(sites[q])) break;
            }
            e.to_node = g.node_of_site[sites[q]];
            e.to_slot = slot_of(sites[q], k);
            g.nodes[e.from_node].head_edge[e.from_slot] = e.id;
            g.nodes[e.to_node].leg_edge[e.to_slot] = e.id;
            g.edges.push_back(std::move(e));
        }
    }

    for (ParallelSite& p : g.parallel) {
        const Crossing& c = d.crossings[p.site];
        // the piece leaving the site identifies the through edge in each slot
        for (int s = 0; s < 2; ++s) {
            int k = c.col + s;
            const auto& sites = ctx->col_sites[k];
            int pos = -1;
            for (int i = 0; i < static_cast<int>(sites.size()); ++i)
                if (sites[i] == p.site) pos = i;
            assert(pos >= 0);
            int eid = g.edge_of_piece[ctx->col_pieces[k][pos]];
            (s == 0 ? p.left_edge : p.right_edge) = eid;
        }
    }
    return g;
}

namespace {

int octant(long long dx, long long dy) {
    int sx = (dx > 0) - (dx < 0), sy = (dy > 0) - (dy < 0);
    static const int table[3][3] = {
        // sy = -1, 0, 1 for sx = -1, 0, 1
        {5, 4, 3},  // sx = -1
        {6, -1, 2}, // sx = 0
        {7, 0, 1},  // sx = 1
    };
    int o = table[sx + 1][sy + 1];
    if (o < 0) throw std::logic_error("turning: zero-length segment");
    return o;
}

void append_polyline(std::vector<Pt>& path, const std::vector<Pt>& poly) {
    for (const Pt& p : poly) {
        if (!path.empty() && path.back().x == p.x && path.back().y == p.y) continue;
        path.push_back(p);
    }
}

}  // namespace

int rotation_by_turning(const ResolvedGraph& g, const std::vector<int>& circle_edges) {
    const DiagramContext& ctx = *g.ctx;
    std::vector<Pt> path;
    for (std::size_t i = 0; i < circle_edges.size(); ++i) {
        const NormalEdge& e = g.edges[circle_edges[i]];
        for (int piece : e.pieces) append_polyline(path, ctx.pieces[piece].poly);
        if (!e.closed) {
            const NormalEdge& next = g.edges[circle_edges[(i + 1) % circle_edges.size()]];
            assert(e.to_node == next.from_node);
            // the connector across the node: entry port -> exit port
            const SingularNode& node = g.nodes[e.to_node];
            const Crossing& c = ctx.diagram.crossings[node.site];
            Pt out{col_x(c.col + next.from_slot), exit_y(node.site)};
            append_polyline(path, {out});
        }
    }
    if (path.size() >= 2 && path.front().x == path.back().x && path.front().y == path.back().y)
        path.pop_back();
    if (path.size() < 3) throw std::logic_error("turning: degenerate circle");

    int total = 0;
    const int n = static_cast<int>(path.size());
    for (int i = 0; i < n; ++i) {
        const Pt& a = path[i];
        const Pt& b = path[(i + 1) % n];
        const Pt& c = path[(i + 2) % n];
        int d1 = octant(b.x - a.x, b.y - a.y);
        int d2 = octant(c.x - b.x, c.y - b.y);
        int turn = ((d2 - d1 + 4) % 8 + 8) % 8 - 4;
        if (turn == -4) throw std::logic_error("turning: 180-degree reversal");
        total += turn;
    }
    if (total % 8 != 0) throw std::logic_error("turning: non-integral rotation");
    return total / 8;
}

}  // namespace slink
