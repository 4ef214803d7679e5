#ifndef SLINK_GRAPHSPACE_HPP
#define SLINK_GRAPHSPACE_HPP

#include <vector>

#include "slink/laurent.hpp"
#include "slink/statesum.hpp"

namespace slink {

/// Grade of a state around a singular edge: +1, 0 or -1 by the order of the
/// two colors passing through it.
int deg_singular(const ResolvedGraph& g, int node, const Coloring& c);

/// Quantum grading of a state of a resolved diagram:
///   N0+ - N1- - wr*n + sum_E deg(E) + sum_C (2 color - n - 1) rot(C).
int grade(const ResolvedGraph& g, const Coloring& c, int n);

/// Free graded Z-module on the valid states of one resolution.
struct GradedStateModule {
    ResolvedGraph graph;
    int n = 0;
    std::vector<Coloring> basis;  // lexicographically sorted
    std::vector<int> grading;     // grade per basis element
    int shift = 0;                // additional {k} offset, composes additively

    int dim() const { return static_cast<int>(basis.size()); }
    int graded_degree(int i) const { return grading[i] + shift; }

    /// Index of a state in the basis, -1 when absent.
    int index_of(const Coloring& c) const;
};

GradedStateModule make_state_module(const ResolvedGraph& g, int n);

Laurent graded_dimension(const GradedStateModule& m);

}  // namespace slink

#endif
