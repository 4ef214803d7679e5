#ifndef SLINK_STATESUM_HPP
#define SLINK_STATESUM_HPP

#include <cstdint>
#include <vector>

#include "slink/laurent.hpp"
#include "slink/resolution.hpp"

namespace slink {

/// Color assignment, one color in 1..n per normal edge (indexed by edge id).
using Coloring = std::vector<std::uint8_t>;

struct ColoredCircle {
    int color = 0;
    int rot = 0;
    std::vector<int> edges;  // member normal edges in traversal order
};

bool state_valid(const ResolvedGraph& g, const Coloring& c);

/// All valid states in lexicographic order of the color vector.
std::vector<Coloring> enumerate_states(const ResolvedGraph& g, int n);

/// Exponent of the (monomial) weight of a singular edge: +1, 0 or -1.
int weight_exponent(const ResolvedGraph& g, int node, const Coloring& c);

/// Weight of a singular edge: q, 1 or q^{-1}. Throws std::domain_error if the
/// state violates the edge constraints.
Laurent edge_weight(const ResolvedGraph& g, int node, const Coloring& c);

/// Delete singular edges, reconnecting each leg to the head of the same color.
std::vector<ColoredCircle> collapse(const ResolvedGraph& g, const Coloring& c);

/// sum over circles of (2*color - n - 1) * rot.
int rotation_term(const ResolvedGraph& g, const Coloring& c, int n);

Laurent graph_bracket(const ResolvedGraph& g, int n);

/// The quantum invariant of the closed diagram: a shifted alternating sum of
/// graph brackets over all resolutions. The resolution sign is
/// (-1)^{#singular edges} = (-1)^{N1+ + N0-}, which is the convention under
/// which the sum is invariant under the Reidemeister moves.
Laurent diagram_bracket(const std::shared_ptr<const DiagramContext>& ctx, int n);
Laurent diagram_bracket(const LinkDiagram& d, int n);

}  // namespace slink

#endif
