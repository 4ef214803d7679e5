#ifndef SLINK_BRAID_HPP
#define SLINK_BRAID_HPP

#include <string>
#include <vector>

namespace slink {

/// Braid group element: signed generator letters on a fixed strand count.
/// Letter k (1 <= |k| < strands) is the generator between strand columns
/// |k| and |k|+1, sign giving the crossing sign.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
};

/// Grammar: "B<strands>: i1 i2 ...". Throws std::invalid_argument naming the
/// offending token on malformed input.
BraidWord parse_braid(const std::string& text);

/// Canonical printer; parse_braid(print_braid(b)) == b.
std::string print_braid(const BraidWord& b);

struct Crossing {
    int id = 0;      // position in LinkDiagram::crossings
    int sign = 0;    // +1 or -1
    int height = 0;  // letter index in the word, bottom to top
    int col = 0;     // occupies columns (col, col+1)
};

/// Closure of a braid word: one crossing per letter, ordered bottom to top.
/// Closure arcs run down the left of the braid.
struct LinkDiagram {
    BraidWord source;
    std::vector<Crossing> crossings;
    int writhe = 0;
};

LinkDiagram closure(const BraidWord& b);

/// Markov-move variants: cyclic rotations, conjugates g b g^{-1} over all
/// generators g of both signs, and both stabilizations on strands+1 strands.
std::vector<BraidWord> markov_variants(const BraidWord& b);

/// Words obtained by rewriting one braid-relation pattern in place
/// (s_i s_j s_i = s_j s_i s_j for |i-j| = 1, including inverse and mixed forms).
std::vector<BraidWord> braid_relation_variants(const BraidWord& b);

/// Diagram of the same link with every component orientation reversed:
/// reversed word with columns mirrored, signs kept.
BraidWord orientation_reversed(const BraidWord& b);

/// Mirror image: closure of the inverse word (reversed, signs flipped).
BraidWord mirror_word(const BraidWord& b);

}  // namespace slink

#endif
