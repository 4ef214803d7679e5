#include "slink/cube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace slink {

void SparseMat::normalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return x.col != y.col ? x.col < y.col : x.row < y.row;
    });
    std::vector<Entry> out;
    for (const Entry& e : entries) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
            out.back().val += e.val;
        } else {
            out.push_back(e);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Entry& e) { return e.val == 0; }),
              out.end());
    entries = std::move(out);
}

bool SparseMat::is_zero() const {
    for (const Entry& e : entries)
        if (e.val != 0) return false;
    return true;
}

SparseMat SparseMat::scaled(std::int64_t s) const {
    SparseMat m = *this;
    for (Entry& e : m.entries) e.val *= s;
    return m;
}

SparseMat multiply(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw std::logic_error("SparseMat: dimension mismatch");
    SparseMat out;
    out.rows = a.rows;
    out.cols = b.cols;
    std::vector<std::vector<std::pair<int, std::int64_t>>> a_by_col(a.cols);
    for (const auto& e : a.entries) a_by_col[e.col].push_back({e.row, e.val});
    for (const auto& eb : b.entries)
        for (const auto& [r, v] : a_by_col[eb.row]) out.add(r, eb.col, v * eb.val);
    out.normalize();
    return out;
}

SparseMat subtract(const SparseMat& a, const SparseMat& b) {
    SparseMat out;
    out.rows = a.rows;
    out.cols = a.cols;
    out.entries = a.entries;
    for (const auto& e : b.entries) out.add(e.row, e.col, -e.val);
    out.normalize();
    return out;
}

bool equal(const SparseMat& a, const SparseMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    return subtract(a, b).is_zero();
}

std::string FaceWitness::describe() const {
    return "square (mask=" + std::to_string(mask) + ", a=" + std::to_string(a) +
           ", b=" + std::to_string(b) + ") at entry (" + std::to_string(row) + "," +
           std::to_string(col) + ")";
}

namespace {

std::optional<FaceWitness> face_defect(const Cube& c, bool skew) {
    for (std::uint32_t mask = 0; mask < c.size(); ++mask) {
        for (int a = 0; a < c.bits; ++a) {
            if (mask & (1u << a)) continue;
            for (int b = a + 1; b < c.bits; ++b) {
                if (mask & (1u << b)) continue;
                SparseMat p1 = multiply(c.edge(mask | (1u << a), b), c.edge(mask, a));
                SparseMat p2 = multiply(c.edge(mask | (1u << b), a), c.edge(mask, b));
                SparseMat diff =
                    skew ? subtract(p1, p2.scaled(-1)) : subtract(p1, p2);
                if (!diff.is_zero()) {
                    FaceWitness w;
                    w.mask = mask;
                    w.a = a;
                    w.b = b;
                    w.row = diff.entries.front().row;
                    w.col = diff.entries.front().col;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<FaceWitness> find_noncommuting_face(const Cube& c) {
    return face_defect(c, false);
}

std::optional<FaceWitness> find_nonanticommuting_face(const Cube& c) {
    return face_defect(c, true);
}

std::optional<FaceWitness> find_grading_violation(const Cube& c) {
    for (std::uint32_t mask = 0; mask < c.size(); ++mask) {
        for (int a = 0; a < c.bits; ++a) {
            if (mask & (1u << a)) continue;
            const SparseMat& m = c.edge(mask, a);
            const auto& src = c.vertex[mask].grading;
            const auto& dst = c.vertex[mask | (1u << a)].grading;
            for (const auto& e : m.entries) {
                if (dst[e.row] != src[e.col]) {
                    FaceWitness w;
                    w.mask = mask;
                    w.a = a;
                    w.row = e.row;
                    w.col = e.col;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

Cube skew_twist(const Cube& c) {
    if (auto w = find_noncommuting_face(c))
        throw std::runtime_error("skew_twist: cube does not commute at " + w->describe());
    Cube out = c;
    for (std::uint32_t mask = 0; mask < c.size(); ++mask) {
        for (int a = 0; a < c.bits; ++a) {
            if (mask & (1u << a)) continue;
            int smaller = std::popcount(mask & ((1u << a) - 1u));
            if (smaller % 2 == 1) out.edge(mask, a) = c.edge(mask, a).scaled(-1);
        }
    }
    return out;
}

ChainComplex total_complex(const Cube& skew,
                           const std::function<int(std::uint32_t)>& degree_of) {
    for (std::uint32_t mask = 0; mask < skew.size(); ++mask)
        for (int a = 0; a < skew.bits; ++a)
            if (!(mask & (1u << a)) &&
                degree_of(mask | (1u << a)) != degree_of(mask) + 1)
                throw std::runtime_error(
                    "total_complex: degree map is not +1 along edge (mask=" +
                    std::to_string(mask) + ", a=" + std::to_string(a) + ")");

    int lo = degree_of(0), hi = degree_of(0);
    for (std::uint32_t mask = 0; mask < skew.size(); ++mask) {
        lo = std::min(lo, degree_of(mask));
        hi = std::max(hi, degree_of(mask));
    }

    ChainComplex cx;
    cx.min_deg = lo;
    cx.levels.resize(hi - lo + 1);

    // deterministic offsets: vertices in mask order within each level
    std::vector<int> offset(skew.size(), 0);
    for (std::uint32_t mask = 0; mask < skew.size(); ++mask) {
        auto& lv = cx.levels[degree_of(mask) - lo];
        offset[mask] = static_cast<int>(lv.origin.size());
        for (int i = 0; i < skew.vertex[mask].dim; ++i) {
            lv.origin.push_back({mask, i});
            lv.grading.push_back(skew.vertex[mask].grading[i]);
        }
    }
    for (int l = 0; l < static_cast<int>(cx.levels.size()); ++l) {
        auto& lv = cx.levels[l];
        lv.d.rows = l + 1 < static_cast<int>(cx.levels.size())
                        ? static_cast<int>(cx.levels[l + 1].origin.size())
                        : 0;
        lv.d.cols = static_cast<int>(lv.origin.size());
    }
    for (std::uint32_t mask = 0; mask < skew.size(); ++mask) {
        int l = degree_of(mask) - lo;
        if (l + 1 >= static_cast<int>(cx.levels.size())) continue;
        for (int a = 0; a < skew.bits; ++a) {
            if (mask & (1u << a)) continue;
            std::uint32_t to = mask | (1u << a);
            for (const auto& e : skew.edge(mask, a).entries)
                cx.levels[l].d.add(offset[to] + e.row, offset[mask] + e.col, e.val);
        }
    }
    for (auto& lv : cx.levels) lv.d.normalize();
    return cx;
}

std::optional<D2Witness> find_d2_violation(const ChainComplex& c) {
    for (int l = 0; l + 1 < static_cast<int>(c.levels.size()); ++l) {
        SparseMat p = multiply(c.levels[l + 1].d, c.levels[l].d);
        if (!p.is_zero()) {
            D2Witness w;
            w.level = c.min_deg + l;
            w.row = p.entries.front().row;
            w.col = p.entries.front().col;
            w.value = p.entries.front().val;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace slink
