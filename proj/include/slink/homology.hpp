#ifndef SLINK_HOMOLOGY_HPP
#define SLINK_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "slink/cube.hpp"
#include "slink/laurent.hpp"

namespace slink {

using BigInt = boost::multiprecision::cpp_int;

struct SnfResult {
    std::vector<BigInt> factors;  // nonzero invariant factors, d1 | d2 | ...
    int rank = 0;                 // rank over Q
};

/// Smith normal form by unimodular row/column operations; pivots chosen by
/// least absolute value. Exact at all sizes.
SnfResult smith_normal_form(std::vector<std::vector<BigInt>> m);

SnfResult smith_normal_form(const SparseMat& m);

struct HomologyGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility-sorted

    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

/// (cohomological degree, quantum degree) -> group. Trivial groups absent.
struct BigradedHomology {
    std::map<std::pair<int, int>, HomologyGroup> groups;

    bool operator==(const BigradedHomology& o) const { return groups == o.groups; }
};

/// Integer homology of the complex, split by quantum degree. Throws
/// std::runtime_error carrying a witness if d.d != 0.
BigradedHomology homology_of(const ChainComplex& c);

Laurent graded_euler(const BigradedHomology& h);

struct BigradedDiff {
    bool equal = true;
    std::vector<std::string> mismatches;
};

BigradedDiff equal_bigraded(const BigradedHomology& a, const BigradedHomology& b);

/// JSON object keyed "i,j" with {"rank": r, "torsion": [...]}, keys sorted.
std::string to_json(const BigradedHomology& h);

}  // namespace slink

#endif
