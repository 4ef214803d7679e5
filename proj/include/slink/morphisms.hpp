#ifndef SLINK_MORPHISMS_HPP
#define SLINK_MORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slink/cube.hpp"
#include "slink/graphspace.hpp"

namespace slink {

/// Integer combination of basis states of a graded state module.
struct FormalSum {
    std::vector<std::pair<int, std::int64_t>> terms;  // (basis index, coefficient)

    void add(int index, std::int64_t coeff);
    void normalize();
};

/// Structure morphism at one crossing site. src is the module of D(cr) and
/// dst the module of D(cr | 1<<site); the map is the parallel-to-singular
/// morphism at a positive crossing and the singular-to-parallel morphism at a
/// negative one. Throws std::domain_error when the site is resolved the wrong
/// way in src.
FormalSum chi_of_state(const GradedStateModule& src, const GradedStateModule& dst,
                       int site, int src_index);

/// Full edge map as a matrix (rows = dst basis, cols = src basis).
SparseMat chi_matrix(const GradedStateModule& src, const GradedStateModule& dst, int site);

/// Cohomological placement of a resolution: N1+ - N0-.
int placement_degree(const DiagramContext& ctx, std::uint32_t mask);

struct LinkCube {
    std::shared_ptr<const DiagramContext> ctx;
    int n = 0;
    std::vector<GradedStateModule> modules;  // indexed by resolution mask
    Cube cube;                               // commutative cube of the modules
};

LinkCube build_link_cube(const std::shared_ptr<const DiagramContext>& ctx, int n);

/// Human-readable witness for the first failing face, if any.
std::optional<std::string> find_commutation_defect(const LinkCube& lc);

/// Skew twist + total complex at the cohomological placement.
ChainComplex link_complex(const LinkCube& lc);

}  // namespace slink

#endif
