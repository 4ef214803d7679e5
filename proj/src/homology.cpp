#include "slink/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slink {

SnfResult smith_normal_form(std::vector<std::vector<BigInt>> m) {
    SnfResult out;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int k = 0;
    while (k < rows && k < cols) {
        // least-absolute-value pivot in the remaining submatrix
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                BigInt q = m[i][k] / m[k][k];
                for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) {
                    std::swap(m[k], m[i]);  // remainder is smaller; repeat
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                BigInt q = m[k][j] / m[k][k];
                for (int i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: every remaining entry must be a multiple of the pivot
            for (int i = k + 1; i < rows && clean; ++i)
                for (int j = k + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        for (int t = k; t < cols; ++t) m[k][t] += m[i][t];
                        clean = false;
                    }
        }
        ++k;
    }
    for (int i = 0; i < k; ++i) out.factors.push_back(abs(m[i][i]));
    out.rank = k;
    return out;
}

SnfResult smith_normal_form(const SparseMat& s) {
    std::vector<std::vector<BigInt>> m(s.rows, std::vector<BigInt>(s.cols, 0));
    for (const auto& e : s.entries) m[e.row][e.col] += e.val;
    return smith_normal_form(std::move(m));
}

BigradedHomology homology_of(const ChainComplex& c) {
    if (auto w = find_d2_violation(c))
        throw std::runtime_error("homology: d.d != 0 at degree " + std::to_string(w->level) +
                                 " entry (" + std::to_string(w->row) + "," +
                                 std::to_string(w->col) + ") = " + std::to_string(w->value));

    const int L = static_cast<int>(c.levels.size());

    // quantum degrees split the complex; collect per-level j-blocks
    struct Block {
        std::vector<int> idx;  // level-local indices with this j
    };
    std::vector<std::map<int, Block>> blocks(L);
    for (int l = 0; l < L; ++l)
        for (int i = 0; i < static_cast<int>(c.levels[l].grading.size()); ++i)
            blocks[l][c.levels[l].grading[i]].idx.push_back(i);

    // restriction of d^l to one j-block
    auto block_matrix = [&](int l, int j) -> SparseMat {
        SparseMat m;
        if (l + 1 >= L) {
            auto f = blocks[l].find(j);
            m.cols = f == blocks[l].end() ? 0 : static_cast<int>(f->second.idx.size());
            m.rows = 0;
            return m;
        }
        auto fs = blocks[l].find(j);
        auto fd = blocks[l + 1].find(j);
        int nc = fs == blocks[l].end() ? 0 : static_cast<int>(fs->second.idx.size());
        int nr = fd == blocks[l + 1].end() ? 0 : static_cast<int>(fd->second.idx.size());
        m.cols = nc;
        m.rows = nr;
        if (nc == 0 || nr == 0) return m;
        std::vector<int> col_pos(c.levels[l].grading.size(), -1);
        std::vector<int> row_pos(c.levels[l + 1].grading.size(), -1);
        for (int i = 0; i < nc; ++i) col_pos[fs->second.idx[i]] = i;
        for (int i = 0; i < nr; ++i) row_pos[fd->second.idx[i]] = i;
        for (const auto& e : c.levels[l].d.entries)
            if (col_pos[e.col] >= 0) {
                if (row_pos[e.row] < 0)
                    throw std::logic_error("homology: differential does not preserve grading");
                m.add(row_pos[e.row], col_pos[e.col], e.val);
            }
        m.normalize();
        return m;
    };

    BigradedHomology h;
    for (int l = 0; l < L; ++l) {
        for (const auto& [j, blk] : blocks[l]) {
            int dim = static_cast<int>(blk.idx.size());
            SnfResult out = smith_normal_form(block_matrix(l, j));
            SnfResult in = (l == 0) ? SnfResult{} : smith_normal_form(block_matrix(l - 1, j));
            HomologyGroup grp;
            grp.rank = dim - out.rank - in.rank;
            for (const BigInt& f : in.factors)
                if (f > 1) grp.torsion.push_back(f);
            if (grp.rank != 0 || !grp.torsion.empty())
                h.groups[{c.min_deg + l, j}] = std::move(grp);
        }
    }
    return h;
}

Laurent graded_euler(const BigradedHomology& h) {
    Laurent p;
    for (const auto& [ij, grp] : h.groups) {
        auto [i, j] = ij;
        p.add_term(j, (i % 2 != 0) ? -static_cast<std::int64_t>(grp.rank) : grp.rank);
    }
    return p;
}

BigradedDiff equal_bigraded(const BigradedHomology& a, const BigradedHomology& b) {
    BigradedDiff d;
    auto describe = [](const std::pair<int, int>& ij, const HomologyGroup* x,
                       const HomologyGroup* y) {
        std::ostringstream os;
        os << "(" << ij.first << "," << ij.second << "): ";
        auto one = [&](const HomologyGroup* g) {
            if (!g) {
                os << "absent";
                return;
            }
            os << "rank " << g->rank << " torsion [";
            for (std::size_t i = 0; i < g->torsion.size(); ++i)
                os << (i ? "," : "") << g->torsion[i];
            os << "]";
        };
        one(x);
        os << " vs ";
        one(y);
        return os.str();
    };
    for (const auto& [ij, grp] : a.groups) {
        auto it = b.groups.find(ij);
        if (it == b.groups.end())
            d.mismatches.push_back(describe(ij, &grp, nullptr));
        else if (!(it->second == grp))
            d.mismatches.push_back(describe(ij, &grp, &it->second));
    }
    for (const auto& [ij, grp] : b.groups)
        if (!a.groups.count(ij)) d.mismatches.push_back(describe(ij, nullptr, &grp));
    d.equal = d.mismatches.empty();
    return d;
}

std::string to_json(const BigradedHomology& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [ij, grp] : h.groups) {
        if (!first) os << ",";
        first = false;
        os << "\"" << ij.first << "," << ij.second << "\":{\"rank\":" << grp.rank
           << ",\"torsion\":[";
        for (std::size_t i = 0; i < grp.torsion.size(); ++i)
            os << (i ? "," : "") << grp.torsion[i];
        os << "]}";
    }
    os << "}";
    return os.str();
}

}  // namespace slink
