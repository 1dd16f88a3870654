#pragma once

// Quadratic Plücker relations among the maximal minors of an n x 2n
// row system.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hschur/errors.hpp"
#include "hschur/jt_box.hpp"
#include "hschur/sym_matrix.hpp"

namespace hschur {

namespace detail {

// Parity of the permutation sorting `rows` (bubble count); 0 for a repeat.
inline int sort_parity(std::vector<RowLabel> rows)
{
    int s = 1;
    for (std::size_t x = 0; x < rows.size(); ++x) {
        for (std::size_t y = 0; y + 1 < rows.size() - x; ++y) {
            if (rows[y + 1] < rows[y]) {
                std::swap(rows[y], rows[y + 1]);
                s = -s;
            } else if (rows[y + 1] == rows[y]) {
                return 0;
            }
        }
    }
    return s;
}

} // namespace detail

/// [left][right] as written; sign is the parity of sorting both lists, so
/// value = sign * [sorted left][sorted right].
struct PluckerTerm {
    std::vector<RowLabel> left;
    std::vector<RowLabel> right;
    int sign = 1;

    static PluckerTerm make(std::vector<RowLabel> l, std::vector<RowLabel> r)
    {
        PluckerTerm t{std::move(l), std::move(r), 1};
        t.sign = detail::sort_parity(t.left) * detail::sort_parity(t.right);
        return t;
    }

    std::vector<RowLabel> left_sorted() const
    {
        auto v = left;
        std::sort(v.begin(), v.end());
        return v;
    }
    std::vector<RowLabel> right_sorted() const
    {
        auto v = right;
        std::sort(v.begin(), v.end());
        return v;
    }

    /// "[5634][1278]"; with `canonical`, the sorted form with its sign.
    std::string str(bool canonical = false) const
    {
        if (!canonical) {
            return labels_str(left) + labels_str(right);
        }
        auto l = left_sorted();
        auto r = right_sorted();
        return std::string(sign < 0 ? "-" : "+") + labels_str(l) + labels_str(r);
    }

    bool operator==(const PluckerTerm &) const = default;
};

/// Swaps two positions in one of the lists; the recorded sign flips and the
/// value is unchanged.
inline PluckerTerm transpose_rows(PluckerTerm t, bool right_side, std::size_t a, std::size_t b)
{
    auto &v = right_side ? t.right : t.left;
    if (a >= v.size() || b >= v.size() || a == b) {
        throw InvalidArgument("bad transposition positions");
    }
    std::swap(v[a], v[b]);
    t.sign = detail::sort_parity(t.left) * detail::sort_parity(t.right);
    return t;
}

/// lhs = sum of rhs, all with coefficient +1 as written.
struct PluckerRelation {
    int n = 0;
    std::vector<int> swap; // 1-based positions of the first list
    PluckerTerm lhs;
    std::vector<PluckerTerm> rhs;

    bool operator==(const PluckerRelation &) const = default;
};

/// [x_1..x_n][y_1..y_n] = sum over s_1<..<s_k of the terms obtained by
/// exchanging x_{r_a} with y_{s_a}, positions kept.
inline PluckerRelation generate(const std::vector<RowLabel> &x, const std::vector<RowLabel> &y, std::vector<int> swap)
{
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(y.size()) != n) {
        throw InvalidArgument("both minors need the same number of rows");
    }
    if (swap.empty()) {
        throw InvalidArgument("swap set must be nonempty");
    }
    std::sort(swap.begin(), swap.end());
    if (std::adjacent_find(swap.begin(), swap.end()) != swap.end() || swap.front() < 1 || swap.back() > n) {
        throw InvalidArgument("swap positions must be distinct and within 1.." + std::to_string(n));
    }
    PluckerRelation rel{n, swap, PluckerTerm::make(x, y), {}};
    const int k = static_cast<int>(swap.size());
    std::vector<int> s(static_cast<std::size_t>(k));
    auto rec = [&](auto &&self, int idx, int from) -> void {
        if (idx == k) {
            auto l = x;
            auto r = y;
            for (int a = 0; a < k; ++a) {
                const auto xi = static_cast<std::size_t>(swap[static_cast<std::size_t>(a)] - 1);
                const auto yi = static_cast<std::size_t>(s[static_cast<std::size_t>(a)] - 1);
                std::swap(l[xi], r[yi]);
            }
            rel.rhs.push_back(PluckerTerm::make(std::move(l), std::move(r)));
            return;
        }
        for (int v = from; v <= n - (k - idx - 1); ++v) {
            s[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return rel;
}

/// Rows 1..n against n+1..2n.
inline PluckerRelation generate(int n, std::vector<int> swap)
{
    if (n < 1) {
        throw InvalidArgument("n must be positive");
    }
    std::vector<RowLabel> x;
    std::vector<RowLabel> y;
    for (int i = 1; i <= n; ++i) {
        x.push_back(RowLabel::row(i));
        y.push_back(RowLabel::row(n + i));
    }
    return generate(x, y, std::move(swap));
}

struct PluckerCheck {
    bool ok = false;
    Polynomial lhs;
    std::vector<Polynomial> rhs;
    Polynomial residual; // lhs - sum(rhs)
};

/// Caches canonical minors of one matrix.
class MinorCache {
public:
    explicit MinorCache(const SymMatrix &m) : m_(m) {}

    const Polynomial &minor(const std::vector<RowLabel> &sorted)
    {
        auto it = cache_.find(sorted);
        if (it == cache_.end()) {
            it = cache_.emplace(sorted, determinant(m_, sorted)).first;
        }
        return it->second;
    }

    Polynomial value(const PluckerTerm &t)
    {
        if (t.sign == 0) {
            return {};
        }
        const Polynomial &a = minor(t.left_sorted());
        if (a.is_zero()) {
            return {};
        }
        Polynomial v = a * minor(t.right_sorted());
        return t.sign < 0 ? -v : v;
    }

private:
    const SymMatrix &m_;
    std::map<std::vector<RowLabel>, Polynomial> cache_;
};

inline PluckerCheck verify(const PluckerRelation &rel, const SymMatrix &m)
{
    if (static_cast<int>(m.cols()) != rel.n) {
        throw InvalidArgument("matrix has " + std::to_string(m.cols()) + " columns, relation needs " + std::to_string(rel.n));
    }
    for (const auto &l : rel.lhs.left) {
        (void)m.index_of(l);
    }
    for (const auto &l : rel.lhs.right) {
        (void)m.index_of(l);
    }
    MinorCache cache(m);
    PluckerCheck out;
    out.lhs = cache.value(rel.lhs);
    Polynomial sum;
    for (const auto &t : rel.rhs) {
        out.rhs.push_back(cache.value(t));
        sum += out.rhs.back();
    }
    out.residual = out.lhs - sum;
    out.ok = out.residual.is_zero();
    return out;
}

/// A Plücker term read as ± s_α^{(u+a)} s_β^{(u+b)}.
struct SchurForm {
    int coeff = 0; // 0 for a term that vanishes identically
    MinorReading left;
    MinorReading right;
};

/// The Plücker relation on M_{λ-ω_ℓ} □ M_{λ+ω_ℓ} fixing rows 1'..ℓ'; the
/// first minor starts as [L 1'..m'] and the second as [R 1..m].
struct BoxRelation {
    Partition lambda;
    int ell = 0;
    BoxMatrix box;
    PluckerRelation relation;
    SchurForm lhs;
    std::vector<SchurForm> rhs;
    std::size_t square_index = 0; // the [R 1'..ℓ' (ℓ+1)..m][L 1..ℓ (ℓ+1)'..m'] term
};

inline SchurForm schur_form(const SymMatrix &m, const PluckerTerm &t)
{
    SchurForm f;
    f.left = read_minor(m, t.left);
    f.right = read_minor(m, t.right);
    if (f.left.degenerate || f.right.degenerate) {
        return f;
    }
    f.coeff = f.left.sign * f.right.sign;
    return f;
}

inline BoxRelation box_relation(const Partition &lam, int ell, const JTFamily &family, int offset = 0)
{
    BoxRelation out{lam, ell, box_for_column(lam, ell, family, offset), {}, {}, {}, 0};
    const int m = lam.length();
    std::vector<RowLabel> x = out.box.b_anchor();
    std::vector<RowLabel> y = out.box.a_anchor();
    std::vector<int> swap{1};
    for (int p = ell + 2; p <= m + 1; ++p) {
        swap.push_back(p);
    }
    out.relation = generate(x, y, swap);
    out.lhs = schur_form(out.box.matrix, out.relation.lhs);

    std::vector<RowLabel> sq_left{RowLabel::right()};
    std::vector<RowLabel> sq_right{RowLabel::left()};
    for (int i = 1; i <= m; ++i) {
        sq_left.push_back(i <= ell ? RowLabel::primed(i) : RowLabel::row(i));
        sq_right.push_back(i <= ell ? RowLabel::row(i) : RowLabel::primed(i));
    }
    std::sort(sq_left.begin(), sq_left.end());
    std::sort(sq_right.begin(), sq_right.end());
    for (std::size_t t = 0; t < out.relation.rhs.size(); ++t) {
        const auto &term = out.relation.rhs[t];
        out.rhs.push_back(schur_form(out.box.matrix, term));
        if (term.left_sorted() == sq_left && term.right_sorted() == sq_right) {
            out.square_index = t;
        }
    }
    return out;
}

} // namespace hschur
