#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "hschur/jt_box.hpp"
#include "hschur/lr.hpp"
#include "hschur/polynomial.hpp"

namespace oracle {

using namespace hschur;

class SchurTable {
public:
    const Polynomial &operator()(const Partition &p)
    {
        auto it = cache_.find(p);
        if (it == cache_.end()) {
            it = cache_.emplace(p, jt_determinant(p.parts(), JTFamily::plain(), 0, Mode::Specialized)).first;
        }
        return it->second;
    }

private:
    std::map<Partition, Polynomial> cache_;
};

inline Partition monomial_shape(const Monomial &m)
{
    std::vector<int> parts;
    for (const auto &s : m.symbols()) {
        parts.push_back(s.k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

/// Writes a specialized h-polynomial in the Schur basis. s_ν = h_ν + terms
/// h_κ with κ dominating ν, so the lexicographically smallest h-monomial
/// always belongs to a Schur function that occurs; peel it off and repeat.
inline ShapeMultiset schur_expand(Polynomial p, SchurTable &s)
{
    ShapeMultiset out;
    while (!p.is_zero()) {
        const Polynomial::Term *smallest = nullptr;
        Partition best;
        for (const auto &t : p.terms()) {
            Partition shape = monomial_shape(t.first);
            if (smallest == nullptr || shape < best) {
                smallest = &t;
                best = shape;
            }
        }
        const Coefficient c = smallest->second;
        out[best] += static_cast<std::int64_t>(c);
        p -= Polynomial(c) * s(best);
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

inline ShapeMultiset lr_by_determinants(const Partition &a, const Partition &b, SchurTable &s)
{
    return schur_expand(s(a) * s(b), s);
}

/// Counts semistandard fillings by trying every filling of the cells.
inline std::size_t count_ssyt(const Partition &shape, int max_entry)
{
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.at(r); ++c) {
            cells.emplace_back(r, c);
        }
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    for (int r = 0; r < shape.length(); ++r) {
        rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.at(r)), 1);
    }
    std::size_t count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == cells.size()) {
            Tableau t{shape, rows};
            count += t.semistandard();
            return;
        }
        for (int v = 1; v <= max_entry; ++v) {
            rows[static_cast<std::size_t>(cells[i].first)][static_cast<std::size_t>(cells[i].second)] = v;
            fill(i + 1);
        }
    };
    fill(0);
    return count;
}

} // namespace oracle
