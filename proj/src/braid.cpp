#include "slink/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace slink {

namespace {

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    long v = std::strtol(tok.c_str(), nullptr, 10);
    out = static_cast<int>(v);
    return true;
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != 'B')
        throw std::invalid_argument("braid: expected 'B<strands>:' header in \"" + text + "\"");
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i)
        throw std::invalid_argument("braid: missing strand count after 'B'");
    int strands = std::atoi(text.substr(i, j - i).c_str());
    if (strands < 1)
        throw std::invalid_argument("braid: strand count must be positive, got " +
                                    text.substr(i, j - i));
    if (j >= text.size() || text[j] != ':')
        throw std::invalid_argument("braid: expected ':' after strand count");
    BraidWord b;
    b.strands = strands;
    std::istringstream rest(text.substr(j + 1));
    std::string tok;
    while (rest >> tok) {
        int k;
        if (!parse_int(tok, k) || k == 0)
            throw std::invalid_argument("braid: bad generator token \"" + tok + "\"");
        if (std::abs(k) >= strands)
            throw std::invalid_argument("braid: generator " + tok + " out of range for " +
                                        std::to_string(strands) + " strands");
        b.letters.push_back(k);
    }
    return b;
}

std::string print_braid(const BraidWord& b) {
    std::string s = "B" + std::to_string(b.strands) + ":";
    for (int k : b.letters) s += " " + std::to_string(k);
    return s;
}

LinkDiagram closure(const BraidWord& b) {
    LinkDiagram d;
    d.source = b;
    d.crossings.reserve(b.letters.size());
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        Crossing c;
        c.id = static_cast<int>(i);
        c.sign = b.letters[i] > 0 ? 1 : -1;
        c.height = static_cast<int>(i);
        c.col = std::abs(b.letters[i]);
        d.crossings.push_back(c);
        d.writhe += c.sign;
    }
    return d;
}

std::vector<BraidWord> markov_variants(const BraidWord& b) {
    std::vector<BraidWord> out;
    const int m = static_cast<int>(b.letters.size());
    for (int r = 1; r < m; ++r) {
        BraidWord v;
        v.strands = b.strands;
        v.letters.reserve(m);
        for (int i = 0; i < m; ++i) v.letters.push_back(b.letters[(i + r) % m]);
        out.push_back(std::move(v));
    }
    for (int g = 1; g < b.strands; ++g) {
        for (int sgn : {1, -1}) {
            BraidWord v;
            v.strands = b.strands;
            v.letters.push_back(sgn * g);
            v.letters.insert(v.letters.end(), b.letters.begin(), b.letters.end());
            v.letters.push_back(-sgn * g);
            out.push_back(std::move(v));
        }
    }
    for (int sgn : {1, -1}) {
        BraidWord v;
        v.strands = b.strands + 1;
        v.letters = b.letters;
        v.letters.push_back(sgn * b.strands);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BraidWord> braid_relation_variants(const BraidWord& b) {
    std::vector<BraidWord> out;
    const int m = static_cast<int>(b.letters.size());
    auto emit = [&](int pos, int x, int y, int z) {
        BraidWord v = b;
        v.letters[pos] = x;
        v.letters[pos + 1] = y;
        v.letters[pos + 2] = z;
        out.push_back(std::move(v));
    };
    for (int p = 0; p + 2 < m; ++p) {
        int a = b.letters[p], c = b.letters[p + 1], e = b.letters[p + 2];
        int ia = std::abs(a), ic = std::abs(c), ie = std::abs(e);
        if (ia != ie || std::abs(ia - ic) != 1) continue;
        // s_i s_j s_i = s_j s_i s_j and the sign variants derived from it
        if (a == e && a > 0 && c > 0) emit(p, c, a, c);
        if (a == e && a < 0 && c < 0) emit(p, c, a, c);
        if (a > 0 && c > 0 && e == -a) emit(p, -c, a, c);      // i j -i -> -j i j
        if (a < 0 && c > 0 && e == -a) emit(p, c, e, -c);       // -i j i -> j i -j
        if (a > 0 && c < 0 && e == -a) emit(p, -c, e, c);       // i -j -i -> j -i -j
        if (a < 0 && c < 0 && e == -a) emit(p, c, e, -c);       // -i -j i -> -j -i j
    }
    return out;
}

BraidWord orientation_reversed(const BraidWord& b) {
    BraidWord v;
    v.strands = b.strands;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        int k = *it;
        int col = b.strands - std::abs(k);
        v.letters.push_back(k > 0 ? col : -col);
    }
    return v;
}

BraidWord mirror_word(const BraidWord& b) {
    BraidWord v;
    v.strands = b.strands;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        v.letters.push_back(-*it);
    return v;
}

}  // namespace slink
