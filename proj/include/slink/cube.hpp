#ifndef SLINK_CUBE_HPP
#define SLINK_CUBE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slink {

/// Sparse integer matrix as (row, col, value) triplets.
struct SparseMat {
    int rows = 0, cols = 0;
    struct Entry {
        int row, col;
        std::int64_t val;
    };
    std::vector<Entry> entries;

    void add(int r, int c, std::int64_t v) {
        if (v != 0) entries.push_back({r, c, v});
    }
    void normalize();
    bool is_zero() const;
    SparseMat scaled(std::int64_t s) const;
};

SparseMat multiply(const SparseMat& a, const SparseMat& b);
SparseMat subtract(const SparseMat& a, const SparseMat& b);
bool equal(const SparseMat& a, const SparseMat& b);

struct CubeVertex {
    int dim = 0;
    std::vector<int> grading;  // quantum degree per basis element
};

struct FaceWitness {
    std::uint32_t mask = 0;
    int a = -1, b = -1;
    int row = -1, col = -1;  // an entry where the two compositions differ
    std::string describe() const;
};

/// Cube of free graded modules over the index set {0..bits-1}. Edge maps go
/// from V(mask) to V(mask | 1<<a) for a not in mask.
struct Cube {
    int bits = 0;
    std::vector<CubeVertex> vertex;  // size 2^bits
    std::vector<SparseMat> edges;    // index mask * bits + a

    std::uint32_t size() const { return 1u << bits; }
    SparseMat& edge(std::uint32_t mask, int a) { return edges[mask * bits + a]; }
    const SparseMat& edge(std::uint32_t mask, int a) const { return edges[mask * bits + a]; }
};

/// First face (if any) where chi_b(Xa) chi_a(X) != chi_a(Xb) chi_b(X).
std::optional<FaceWitness> find_noncommuting_face(const Cube& c);

/// First edge entry (if any) connecting basis elements of different grading.
std::optional<FaceWitness> find_grading_violation(const Cube& c);

/// Multiply edge maps by (-1)^{#{b in mask : b < a}}. Verifies commutativity
/// first and throws std::runtime_error naming the violating square.
Cube skew_twist(const Cube& c);

/// Verify that every square of a (skew-)cube anticommutes.
std::optional<FaceWitness> find_nonanticommuting_face(const Cube& c);

struct ChainComplex {
    int min_deg = 0;  // cohomological degree of level 0
    struct Level {
        std::vector<std::pair<std::uint32_t, int>> origin;  // (vertex mask, local index)
        std::vector<int> grading;
        SparseMat d;  // map to the next level; empty cols at the top level
    };
    std::vector<Level> levels;

    int degree_of_level(int i) const { return min_deg + i; }
};

/// Assemble the total complex of a skew cube with a per-vertex cohomological
/// placement. degree_of must increase by exactly 1 along every edge; violations
/// throw std::runtime_error.
ChainComplex total_complex(const Cube& skew,
                           const std::function<int(std::uint32_t)>& degree_of);

struct D2Witness {
    int level = 0;
    int row = -1, col = -1;
    std::int64_t value = 0;
};

/// First nonzero entry of d.d, if any.
std::optional<D2Witness> find_d2_violation(const ChainComplex& c);

}  // namespace slink

#endif
