#pragma once

// Littlewood-Richardson products through column words acting on Young
// diagrams, the two-case rectangle bijection, and the shape-level check of
// the inclusion-exclusion conjecture.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hschur/errors.hpp"
#include "hschur/hirota.hpp"
#include "hschur/partition.hpp"

namespace hschur {

/// Semi-standard tableau: rows weakly increase, columns strictly increase.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    static Tableau from_rows(std::vector<std::vector<int>> rows)
    {
        std::vector<int> lens;
        for (const auto &r : rows) {
            lens.push_back(static_cast<int>(r.size()));
        }
        Tableau t{Partition(lens), std::move(rows)};
        while (!t.rows.empty() && t.rows.back().empty()) {
            t.rows.pop_back();
        }
        if (!t.semistandard()) {
            throw IllegalTableau("rows must weakly increase and columns strictly increase");
        }
        return t;
    }

    bool semistandard() const
    {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (rows[r][c] < 1) {
                    return false;
                }
                if (c > 0 && rows[r][c - 1] > rows[r][c]) {
                    return false;
                }
                if (r > 0 && rows[r - 1][c] >= rows[r][c]) {
                    return false;
                }
            }
        }
        return true;
    }

    int at(int r, int c) const { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    /// Column c, top to bottom.
    std::vector<int> column(int c) const
    {
        std::vector<int> out;
        for (const auto &row : rows) {
            if (static_cast<int>(row.size()) > c) {
                out.push_back(row[static_cast<std::size_t>(c)]);
            }
        }
        return out;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) {
                out += '/';
            }
            for (int v : rows[r]) {
                out += std::to_string(v) + (v > 9 ? "," : "");
            }
        }
        return out.empty() ? "()" : out;
    }

    auto operator<=>(const Tableau &) const = default;
};

/// Columns from right to left, each read top to bottom.
inline std::vector<int> column_word(const Tableau &t)
{
    std::vector<int> w;
    for (int c = t.shape.at(0) - 1; c >= 0; --c) {
        for (int v : t.column(c)) {
            w.push_back(v);
        }
    }
    return w;
}

inline std::string word_str(const std::vector<int> &w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && (w[i] > 9 || w[i - 1] > 9)) {
            out += ' ';
        }
        out += std::to_string(w[i]);
    }
    return out;
}

/// All SSYT of the shape with entries in 1..max_entry, filled row by row
/// with smaller entries first.
inline std::vector<Tableau> enumerate_ssyt(const Partition &shape, int max_entry)
{
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r) {
        rows.emplace_back(static_cast<std::size_t>(shape.at(r)), 0);
    }
    const int cells = shape.size();
    auto rec = [&](auto &&self, int r, int c) -> void {
        if (r == shape.length()) {
            out.push_back({shape, rows});
            return;
        }
        if (c == shape.at(r)) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) {
            lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        }
        if (r > 0) {
            lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        }
        // Room below in this column.
        int below = 0;
        while (r + 1 + below < shape.length() && shape.at(r + 1 + below) > c) {
            ++below;
        }
        for (int v = lo; v <= max_entry - below; ++v) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, r, c + 1);
        }
    };
    if (cells == 0) {
        out.push_back({shape, {}});
        return out;
    }
    rec(rec, 0, 0);
    return out;
}

/// Letters applied left to right; letter k adds a box to row k when
/// k = 1 or row k is shorter than row k-1.
struct ActionTrace {
    Partition start;
    std::vector<int> word;
    std::vector<Partition> shapes; // after each legal step
    std::optional<Partition> final_shape;
    int illegal_step = -1; // 0-based index of the first illegal letter

    bool legal() const noexcept { return final_shape.has_value(); }
};

namespace detail {

inline bool act_letter(std::vector<int> &rows, int k)
{
    if (k < 1) {
        return false;
    }
    if (static_cast<int>(rows.size()) < k) {
        rows.resize(static_cast<std::size_t>(k), 0);
    }
    const auto i = static_cast<std::size_t>(k - 1);
    if (k > 1 && rows[i] >= rows[i - 1]) {
        return false;
    }
    ++rows[i];
    return true;
}

} // namespace detail

inline ActionTrace act(const Partition &y, const std::vector<int> &word)
{
    ActionTrace t{y, word, {}, std::nullopt, -1};
    std::vector<int> rows = y.parts();
    for (std::size_t s = 0; s < word.size(); ++s) {
        if (!detail::act_letter(rows, word[s])) {
            t.illegal_step = static_cast<int>(s);
            return t;
        }
        t.shapes.emplace_back(rows);
    }
    t.final_shape = Partition(rows);
    return t;
}

using ShapeMultiset = std::map<Partition, std::int64_t>;

inline std::string multiset_str(const ShapeMultiset &s)
{
    std::string out = "{";
    bool first = true;
    for (const auto &[p, c] : s) {
        if (c == 0) {
            continue;
        }
        out += (first ? "" : ", ") + std::string("(") + p.str() + ")";
        if (c != 1) {
            out += "x" + std::to_string(c);
        }
        first = false;
    }
    return out + "}";
}

inline int default_max_entry(const Partition &lam, const Partition &mu) { return lam.length() + mu.length(); }

/// Final shapes of Y(λ) under cw(T) over all T in SSYT(μ) acting legally.
/// Cells are filled in column-word order so each illegal prefix is cut.
/// max_entry <= 0 selects rows(λ) + rows(μ).
inline ShapeMultiset lr_multiply(const Partition &lam, const Partition &mu, int max_entry = 0)
{
    if (max_entry <= 0) {
        max_entry = default_max_entry(lam, mu);
    }
    ShapeMultiset out;
    std::vector<std::pair<int, int>> cells; // (row, col) in reading order
    for (int c = mu.at(0) - 1; c >= 0; --c) {
        for (int r = 0; r < mu.length() && mu.at(r) > c; ++r) {
            cells.emplace_back(r, c);
        }
    }
    std::vector<std::vector<int>> t;
    for (int r = 0; r < mu.length(); ++r) {
        t.emplace_back(static_cast<std::size_t>(mu.at(r)), 0);
    }
    std::vector<int> shape = lam.parts();
    shape.resize(static_cast<std::size_t>(lam.length() + mu.length() + max_entry + 1), 0);
    auto rec = [&](auto &&self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++out[Partition(shape)];
            return;
        }
        const auto [r, c] = cells[idx];
        const auto rr = static_cast<std::size_t>(r);
        const auto cc = static_cast<std::size_t>(c);
        int lo = r + 1;
        if (r > 0) {
            lo = std::max(lo, t[rr - 1][cc] + 1);
        }
        int hi = max_entry;
        if (c + 1 < mu.at(r)) {
            hi = std::min(hi, t[rr][cc + 1]);
        }
        for (int v = lo; v <= hi; ++v) {
            const auto k = static_cast<std::size_t>(v - 1);
            if (v > 1 && shape[k] >= shape[k - 1]) {
                continue;
            }
            t[rr][cc] = v;
            ++shape[k];
            self(self, idx + 1);
            --shape[k];
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Rectangles

enum class RectangleCase { A, B };

/// Case A: the leftmost column is 1..ℓ and is stripped, giving a tableau of
/// shape (m-1)^ℓ acting on Y((m+1)^ℓ). Case B: the entry ℓ+1 is deleted from
/// every column and the rest pushed up, giving shape m^{ℓ-1} acting on
/// Y(m^{ℓ+1}). Both preserve the final diagram.
struct RectangleImage {
    RectangleCase which = RectangleCase::A;
    Tableau image;
    Partition start;       // the diagram the image acts on
    Partition final_shape; // shared by T and its image
};

inline Partition rectangle(int m, int ell) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(ell, 0)), m)); }

inline RectangleImage rectangle_bijection(int m, int ell, const Tableau &t)
{
    if (m < 1 || ell < 1 || t.shape != rectangle(m, ell)) {
        throw IllegalTableau("tableau shape is not " + std::to_string(m) + "^" + std::to_string(ell));
    }
    const auto trace = act(rectangle(m, ell), column_word(t));
    if (!trace.legal()) {
        throw IllegalTableau("tableau does not act legally on its own rectangle");
    }
    RectangleImage out;
    out.final_shape = *trace.final_shape;
    bool first_is_identity = true;
    for (int r = 0; r < ell; ++r) {
        first_is_identity = first_is_identity && t.at(r, 0) == r + 1;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(ell));
    if (first_is_identity) {
        out.which = RectangleCase::A;
        for (int r = 0; r < ell; ++r) {
            rows[static_cast<std::size_t>(r)].assign(t.rows[static_cast<std::size_t>(r)].begin() + 1,
                                                     t.rows[static_cast<std::size_t>(r)].end());
        }
        out.start = rectangle(m + 1, ell);
    } else {
        out.which = RectangleCase::B;
        rows.resize(static_cast<std::size_t>(ell - 1));
        for (int c = 0; c < m; ++c) {
            auto col = t.column(c);
            auto it = std::find(col.begin(), col.end(), ell + 1);
            if (it == col.end()) {
                throw IllegalTableau("column " + std::to_string(c + 1) + " has no entry " + std::to_string(ell + 1));
            }
            col.erase(it);
            for (int r = 0; r < ell - 1; ++r) {
                rows[static_cast<std::size_t>(r)].push_back(col[static_cast<std::size_t>(r)]);
            }
        }
        out.start = rectangle(m, ell + 1);
    }
    out.image = Tableau::from_rows(std::move(rows));
    return out;
}

struct RectangleCheck {
    int m = 0;
    int ell = 0;
    std::size_t legal = 0;  // SSYT(m^ℓ) acting legally on Y(m^ℓ)
    std::size_t case_a = 0;
    std::size_t case_b = 0;
    bool injective = false;
    bool surjective = false;
    bool shape_preserving = false;

    bool ok() const noexcept { return injective && surjective && shape_preserving; }
};

/// Runs both case maps over every legal tableau and compares the images
/// with the legal tableaux of the two target products.
inline RectangleCheck check_rectangle_bijection(int m, int ell)
{
    RectangleCheck out{m, ell};
    const Partition rect = rectangle(m, ell);
    std::map<Tableau, Partition> images_a;
    std::map<Tableau, Partition> images_b;
    out.injective = true;
    out.shape_preserving = true;
    for (const auto &t : enumerate_ssyt(rect, default_max_entry(rect, rect))) {
        const auto tr = act(rect, column_word(t));
        if (!tr.legal()) {
            continue;
        }
        ++out.legal;
        const auto img = rectangle_bijection(m, ell, t);
        auto &bucket = img.which == RectangleCase::A ? images_a : images_b;
        ++(img.which == RectangleCase::A ? out.case_a : out.case_b);
        const auto tr2 = act(img.start, column_word(img.image));
        if (!tr2.legal() || *tr2.final_shape != img.final_shape) {
            out.shape_preserving = false;
        }
        if (!bucket.emplace(img.image, img.final_shape).second) {
            out.injective = false;
        }
    }
    auto legal_set = [](const Partition &acting, const Partition &start) {
        std::map<Tableau, Partition> s;
        for (const auto &t : enumerate_ssyt(acting, default_max_entry(start, acting))) {
            const auto tr = act(start, column_word(t));
            if (tr.legal()) {
                s.emplace(t, *tr.final_shape);
            }
        }
        return s;
    };
    out.surjective = images_a == legal_set(rectangle(m - 1, ell), rectangle(m + 1, ell))
                     && images_b == legal_set(rectangle(m, ell - 1), rectangle(m, ell + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture, shape level

struct ConjectureTerm {
    std::optional<IntervalChain> chain; // empty for the λ-ω_ℓ on λ+ω_ℓ term
    Partition acting;                   // shape of the tableaux
    Partition start;                    // diagram acted on
    int sign = 1;
    ShapeMultiset shapes;

    bool operator==(const ConjectureTerm &) const = default;
};

struct ConjectureReport {
    Partition lambda;
    int k = 0;
    int ell = 0;
    ShapeMultiset whole;              // SSYT(λ) legal on Y(λ)
    std::vector<ConjectureTerm> terms;
    ShapeMultiset difference;         // whole - signed sum, nonzero entries only
    bool holds = false;

    bool operator==(const ConjectureReport &) const = default;
};

/// Compares SSYT(λ) on Y(λ) with SSYT(λ-ω_ℓ) on Y(λ+ω_ℓ) plus the signed
/// chain terms SSYT(μ_chain(λ)) on Y(π_chain(λ)), diagram by diagram.
inline ConjectureReport conjecture_check(const Partition &lam, int k, int max_entry = 0)
{
    const HirotaIdentity id = main_identity(lam, k);
    ConjectureReport rep;
    rep.lambda = lam;
    rep.k = k;
    rep.ell = id.ell;
    auto product = [&](const Partition &acting, const Partition &start) {
        return lr_multiply(start, acting, max_entry > 0 ? max_entry : default_max_entry(start, acting));
    };
    rep.whole = product(lam, lam);
    ShapeMultiset diff = rep.whole;
    for (const auto &t : id.rhs) {
        ConjectureTerm ct;
        ct.chain = t.chain;
        ct.acting = t.beta.shape;
        ct.start = t.alpha.shape;
        ct.sign = t.sign;
        ct.shapes = product(ct.acting, ct.start);
        for (const auto &[p, c] : ct.shapes) {
            diff[p] -= ct.sign * c;
        }
        rep.terms.push_back(std::move(ct));
    }
    for (const auto &[p, c] : diff) {
        if (c != 0) {
            rep.difference.emplace(p, c);
        }
    }
    rep.holds = rep.difference.empty();
    return rep;
}

/// Tableaux of the given shape whose column word takes `start` to `target`.
inline std::vector<Tableau> witnesses(const Partition &acting, const Partition &start, const Partition &target, int max_entry = 0)
{
    if (max_entry <= 0) {
        max_entry = default_max_entry(start, acting);
    }
    std::vector<Tableau> out;
    for (auto &t : enumerate_ssyt(acting, max_entry)) {
        auto tr = act(start, column_word(t));
        if (tr.legal() && *tr.final_shape == target) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace hschur
