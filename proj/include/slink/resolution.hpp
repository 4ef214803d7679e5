#ifndef SLINK_RESOLUTION_HPP
#define SLINK_RESOLUTION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "slink/braid.hpp"

namespace slink {

struct Pt {
    long long x = 0, y = 0;
};

/// Atomic arc of a column cycle, delimited by the sites touching the column
/// (all sites, regardless of how they are resolved). Wrap pieces carry the
/// closure arc of their column.
struct Piece {
    int column = 0;
    bool has_arc = false;
    std::vector<Pt> poly;  // waypoints in flow direction
};

/// Diagram-global combinatorics shared by all resolutions.
struct DiagramContext {
    LinkDiagram diagram;
    int strands = 1;
    std::vector<std::vector<int>> col_sites;   // [col] -> site ids by height
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> col_pieces;  // [col][i] -> piece after col_sites[col][i]
                                               // (r==0: single circle piece)
    int crossings() const { return static_cast<int>(diagram.crossings.size()); }
};

std::shared_ptr<const DiagramContext> make_context(const LinkDiagram& d);

struct NormalEdge {
    int id = -1;
    std::vector<int> pieces;
    int arc_count = 0;
    bool closed = false;
    // valid when !closed; slot 0 = left column of the site, 1 = right
    int from_node = -1, from_slot = -1;
    int to_node = -1, to_slot = -1;
};

struct SingularNode {
    int site = -1;  // crossing id
    int col = 0;
    int sign = 0;
    int leg_edge[2] = {-1, -1};   // edges entering from below (left, right)
    int head_edge[2] = {-1, -1};  // edges leaving above (left, right)
};

struct ParallelSite {
    int site = -1;
    int sign = 0;
    int left_edge = -1, right_edge = -1;  // normal edges through the two slots
};

/// Trivalent graph of one resolution of the diagram.
struct ResolvedGraph {
    std::shared_ptr<const DiagramContext> ctx;
    std::uint32_t cr = 0;
    std::vector<NormalEdge> edges;
    std::vector<SingularNode> nodes;
    std::vector<ParallelSite> parallel;
    std::vector<int> node_of_site;   // -1 when site is a parallel pair
    std::vector<int> edge_of_piece;  // piece id -> normal edge id
    int n0p = 0, n1p = 0, n0m = 0, n1m = 0;

    bool site_singular(int site) const { return node_of_site[site] >= 0; }
};

/// 1-resolve the crossings in cr, 0-resolve the rest.
ResolvedGraph resolve(const std::shared_ptr<const DiagramContext>& ctx, std::uint32_t cr);

/// Validating subset-of-crossing-ids -> bitmask conversion.
std::uint32_t crossing_subset_mask(const LinkDiagram& d, const std::vector<int>& ids);

/// Whitney turning number of the closed curve obtained by traversing the
/// given normal edges in order, joined through the singular nodes they meet.
/// Exact; every vertex turn is a multiple of 45 degrees.
int rotation_by_turning(const ResolvedGraph& g, const std::vector<int>& circle_edges);

}  // namespace slink

#endif
