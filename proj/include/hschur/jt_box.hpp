#pragma once

// Jacobi-Trudi style matrix families and the A□B construction.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hschur/errors.hpp"
#include "hschur/partition.hpp"
#include "hschur/polynomial.hpp"
#include "hschur/sym_matrix.hpp"

namespace hschur {

enum class Flavor { Plain, Formal, Skew, Quantum };

inline std::string flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::Plain: return "plain";
    case Flavor::Formal: return "formal";
    case Flavor::Skew: return "skew";
    case Flavor::Quantum: return "quantum";
    }
    return "?";
}

inline Flavor parse_flavor(const std::string &s)
{
    if (s == "plain") {
        return Flavor::Plain;
    }
    if (s == "formal") {
        return Flavor::Formal;
    }
    if (s == "skew") {
        return Flavor::Skew;
    }
    if (s == "quantum") {
        return Flavor::Quantum;
    }
    throw InvalidArgument("unknown family '" + s + "'");
}

/// One of the four matrix families: M_λ with specialized or formal h_k,
/// skew M_{λ/μ}, and T_λ(u+c).
struct JTFamily {
    Flavor flavor = Flavor::Plain;
    Partition inner; // Skew only

    static JTFamily plain() { return {Flavor::Plain, {}}; }
    static JTFamily formal() { return {Flavor::Formal, {}}; }
    static JTFamily skew(Partition mu) { return {Flavor::Skew, std::move(mu)}; }
    static JTFamily quantum() { return {Flavor::Quantum, {}}; }

    bool uses_t() const noexcept { return flavor == Flavor::Quantum; }
    /// Formal keeps h_0 and h_{<0} symbolic; every other family evaluates
    /// specialized unless asked otherwise.
    Mode default_mode() const noexcept { return flavor == Flavor::Formal ? Mode::Formal : Mode::Specialized; }

    bool operator==(const JTFamily &) const = default;
};

namespace detail {

// Row with first entry h_a (or t_a(u+b)) whose consecutive subscripts step
// by 1 + gaps[j]; gaps are the differences μ_j - μ_{j+1} of a skew class.
inline std::vector<Polynomial> family_row(bool use_t, int a, int b, const std::vector<int> &gaps, std::size_t width)
{
    std::vector<Polynomial> out;
    out.reserve(width);
    int idx = a;
    for (std::size_t j = 0; j < width; ++j) {
        if (j > 0) {
            idx += 1 + (j - 1 < gaps.size() ? gaps[j - 1] : 0);
        }
        out.push_back(use_t ? Polynomial::t(idx, b + static_cast<int>(j)) : Polynomial::h(idx));
    }
    return out;
}

inline std::vector<int> gaps_of(const std::vector<int> &inner)
{
    std::vector<int> g;
    for (std::size_t j = 0; j + 1 < inner.size(); ++j) {
        g.push_back(inner[j] - inner[j + 1]);
    }
    return g;
}

// Entries of the m x m family matrix for an arbitrary integer vector.
inline std::vector<std::vector<Polynomial>> jt_rows(const std::vector<int> &parts, const JTFamily &family, int shift)
{
    const int m = static_cast<int>(parts.size());
    std::vector<int> inner = family.flavor == Flavor::Skew ? family.inner.padded(std::max(m, family.inner.length()))
                                                           : std::vector<int>(static_cast<std::size_t>(m), 0);
    inner.resize(static_cast<std::size_t>(m));
    const auto gaps = gaps_of(inner);
    std::vector<std::vector<Polynomial>> rows;
    for (int i = 1; i <= m; ++i) {
        const int lam = parts[static_cast<std::size_t>(i - 1)];
        // Entry (i, 1): h_{λ_i - μ_1 - i + 1} or t_{λ_i - i + 1}(u + c + λ_1 - λ_i + i - m).
        const int a = lam - (m > 0 ? inner[0] : 0) - i + 1;
        const int b = shift + parts[0] - lam + i - m;
        rows.push_back(family_row(family.uses_t(), a, b, gaps, static_cast<std::size_t>(m)));
    }
    return rows;
}

} // namespace detail

/// The m x m family matrix of λ padded with zeros to m parts; rows are
/// labelled 1..m. Quantum matrices are T_λ(u + shift).
inline SymMatrix jt_matrix(const std::vector<int> &parts, const JTFamily &family, int shift = 0)
{
    const Partition lam(parts); // validates monotonicity
    const int m = static_cast<int>(parts.size());
    if (family.flavor == Flavor::Skew) {
        if (family.inner.length() > m || !lam.contains(family.inner)) {
            throw InvalidArgument("inner shape " + family.inner.str() + " is not contained in " + lam.str());
        }
    }
    SymMatrix out(static_cast<std::size_t>(m));
    auto rows = detail::jt_rows(parts, family, shift);
    for (int i = 1; i <= m; ++i) {
        out.add_row(RowLabel::row(i), std::move(rows[static_cast<std::size_t>(i - 1)]));
    }
    return out;
}

inline SymMatrix jt_matrix(const Partition &lam, int m, const JTFamily &family, int shift = 0)
{
    return jt_matrix(lam.padded(m), family, shift);
}

/// det of the family matrix, evaluated in the given mode.
inline Polynomial jt_determinant(const std::vector<int> &parts, const JTFamily &family, int shift, Mode mode)
{
    auto m = jt_matrix(parts, family, shift).specialized(mode);
    return determinant(m.rows());
}

/// A family member: parts padded to the matrix size, a spectral shift for
/// quantum matrices.
struct JtSpec {
    std::vector<int> parts;
    int shift = 0;
    bool operator==(const JtSpec &) const = default;
};

/// (m+1) x (2m+2) matrix with rows L, R, 1..m, 1'..m'.
struct BoxMatrix {
    SymMatrix matrix;
    JtSpec a;
    JtSpec b;
    JTFamily family;     // for skew, the inner shape belongs to A
    Partition inner_b;   // skew inner shape of B
    int m = 0;

    std::vector<RowLabel> a_anchor() const
    {
        std::vector<RowLabel> r{RowLabel::right()};
        for (int i = 1; i <= m; ++i) {
            r.push_back(RowLabel::row(i));
        }
        return r;
    }
    std::vector<RowLabel> b_anchor() const
    {
        std::vector<RowLabel> r{RowLabel::left()};
        for (int i = 1; i <= m; ++i) {
            r.push_back(RowLabel::primed(i));
        }
        return r;
    }
};

/// Shift for B that makes T_B compatible with T_A(u + a.shift).
inline int compatible_quantum_shift(const std::vector<int> &a_parts, int a_shift, const std::vector<int> &b_parts)
{
    const int a1 = a_parts.empty() ? 0 : a_parts[0];
    const int b1 = b_parts.empty() ? 0 : b_parts[0];
    return a_shift + a1 - b1 + 2;
}

/// A□B. For skew families, inner_b is the inner shape of B.
inline BoxMatrix box(const JtSpec &a, const JtSpec &b, const JTFamily &family, const Partition &inner_b = {})
{
    const int m = static_cast<int>(a.parts.size());
    if (static_cast<int>(b.parts.size()) != m) {
        throw Incompatible("A and B must have the same size");
    }
    (void)Partition(a.parts);
    (void)Partition(b.parts);
    const bool use_t = family.uses_t();
    std::vector<int> gaps_c(static_cast<std::size_t>(m), 0); // class of the lifted rows
    std::vector<int> inner_a(static_cast<std::size_t>(m), 0);
    std::vector<int> inner_bv(static_cast<std::size_t>(m), 0);

    if (family.flavor == Flavor::Quantum) {
        if (b.shift != compatible_quantum_shift(a.parts, a.shift, b.parts)) {
            throw Incompatible("quantum classes of A and B do not glue: B needs shift "
                               + std::to_string(compatible_quantum_shift(a.parts, a.shift, b.parts)));
        }
    } else if (family.flavor == Flavor::Skew) {
        if (family.inner.length() > m || inner_b.length() > m || !Partition(a.parts).contains(family.inner)
            || !Partition(b.parts).contains(inner_b)) {
            throw Incompatible("skew inner shapes must fit inside A and B");
        }
        if (m < 2) {
            throw Incompatible("the lifted skew class is not unique for 1 x 1 matrices");
        }
        inner_a = family.inner.padded(m);
        inner_bv = inner_b.padded(m);
        const auto ga = detail::gaps_of(inner_a);
        const auto gb = detail::gaps_of(inner_bv);
        for (int j = 0; j + 1 < m - 1; ++j) {
            if (ga[static_cast<std::size_t>(j + 1)] != gb[static_cast<std::size_t>(j)]) {
                throw Incompatible("skew classes of A and B do not glue");
            }
        }
        for (int j = 0; j < m - 1; ++j) {
            gaps_c[static_cast<std::size_t>(j)] = ga[static_cast<std::size_t>(j)];
        }
        gaps_c[static_cast<std::size_t>(m - 1)] = gb[static_cast<std::size_t>(m - 2)];
    }

    BoxMatrix out{SymMatrix(static_cast<std::size_t>(m + 1)), a, b, family, inner_b, m};
    std::vector<Polynomial> lrow(static_cast<std::size_t>(m + 1), Polynomial());
    lrow[0] = Polynomial(1);
    std::vector<Polynomial> rrow(static_cast<std::size_t>(m + 1), Polynomial());
    rrow[static_cast<std::size_t>(m)] = Polynomial(m % 2 == 0 ? 1 : -1);
    out.matrix.add_row(RowLabel::left(), std::move(lrow));
    out.matrix.add_row(RowLabel::right(), std::move(rrow));

    const int a1 = m > 0 ? a.parts[0] : 0;
    const int b1 = m > 0 ? b.parts[0] : 0;
    // Rows i extend A's rows to the right; rows i' extend B's rows to the left.
    for (int i = 1; i <= m; ++i) {
        const int lam = a.parts[static_cast<std::size_t>(i - 1)];
        const int first = lam - inner_a[0] - i + 1;
        const int arg = a.shift + a1 - lam + i - m;
        out.matrix.add_row(RowLabel::row(i), detail::family_row(use_t, first, arg, gaps_c, static_cast<std::size_t>(m + 1)));
    }
    for (int i = 1; i <= m; ++i) {
        const int nu = b.parts[static_cast<std::size_t>(i - 1)];
        const int first = nu - inner_bv[0] - i + 1 - 1 - gaps_c[0];
        const int arg = b.shift + b1 - nu + i - m - 1;
        out.matrix.add_row(RowLabel::primed(i), detail::family_row(use_t, first, arg, gaps_c, static_cast<std::size_t>(m + 1)));
    }
    return out;
}

/// M_{λ-ω_ℓ} □ M_{λ+ω_ℓ} with λ padded to its length m; quantum matrices
/// both sit at u + offset, which puts every lifted row in one class.
inline BoxMatrix box_for_column(const Partition &lam, int ell, const JTFamily &family, int offset = 0)
{
    if (family.flavor == Flavor::Skew) {
        throw InvalidArgument("the column box is defined for plain, formal and quantum families");
    }
    const int m = lam.length();
    auto minus = remove_column(lam.padded(m), ell);
    auto plus = add_column(lam.padded(m), ell);
    return box({minus, offset}, {plus, offset}, family);
}

/// Coinciding rows of M_{λ-ω_ℓ} □ M_{λ+ω_ℓ}: row i equals row (i+1)' when
/// λ_i = λ_{i+1} with i < ℓ, and row i+1 equals row i' when λ_i = λ_{i+1}
/// with i > ℓ.
inline std::vector<std::pair<RowLabel, RowLabel>> duplicate_rows(const BoxMatrix &bm)
{
    if (bm.family.flavor == Flavor::Skew || bm.a.shift != bm.b.shift) {
        throw InvalidArgument("duplicate_rows expects a box built from λ-ω_ℓ and λ+ω_ℓ");
    }
    const int m = bm.m;
    int ell = 0;
    std::vector<int> lam(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int d = bm.b.parts[static_cast<std::size_t>(i)] - bm.a.parts[static_cast<std::size_t>(i)];
        if (d == 2 && ell == i) {
            ++ell;
        } else if (d != 0) {
            throw InvalidArgument("duplicate_rows expects a box built from λ-ω_ℓ and λ+ω_ℓ");
        }
        lam[static_cast<std::size_t>(i)] = bm.a.parts[static_cast<std::size_t>(i)] + (d == 2 ? 1 : 0);
    }
    if (ell == 0) {
        throw InvalidArgument("duplicate_rows expects a box built from λ-ω_ℓ and λ+ω_ℓ");
    }
    std::vector<std::pair<RowLabel, RowLabel>> out;
    for (int i = 1; i < m; ++i) {
        if (lam[static_cast<std::size_t>(i - 1)] != lam[static_cast<std::size_t>(i)]) {
            continue;
        }
        if (i < ell) {
            out.emplace_back(RowLabel::row(i), RowLabel::primed(i + 1));
        } else if (i > ell) {
            out.emplace_back(RowLabel::row(i + 1), RowLabel::primed(i));
        }
    }
    return out;
}

/// A minor read back as a family determinant: det(rows) = sign * det of the
/// family matrix of `parts` (padded, shift for quantum, inner for skew).
struct MinorReading {
    bool degenerate = false; // repeated row: the minor vanishes identically
    int sign = 1;
    std::vector<int> parts;
    int shift = 0;
    std::vector<int> inner;
    Flavor flavor = Flavor::Plain;
    bool is_partition = false; // parts weakly decreasing, nonnegative, inner fits
    bool matches = false;      // sorted rows equal the family matrix entrywise

    PaddedPartition partition() const { return PaddedPartition::from_parts(parts); }
};

inline MinorReading read_minor(const SymMatrix &mat, std::span<const RowLabel> rows)
{
    if (rows.size() != mat.cols()) {
        throw NonSquareMinor("minor with " + std::to_string(rows.size()) + " rows of a matrix with "
                             + std::to_string(mat.cols()) + " columns");
    }
    MinorReading out;
    std::vector<RowLabel> rest(rows.begin(), rows.end());
    for (std::size_t x = 0; x < rest.size(); ++x) {
        for (std::size_t y = x + 1; y < rest.size(); ++y) {
            if (rest[x] == rest[y] || mat.row(rest[x]) == mat.row(rest[y])) {
                out.degenerate = true;
                out.sign = 0;
                return out;
            }
        }
    }
    std::size_t col_lo = 0;
    std::size_t col_hi = mat.cols();
    // Laplace along the unit rows L (first column) and R (last column).
    for (auto kind : {RowLabel::Kind::L, RowLabel::Kind::R}) {
        auto it = std::find_if(rest.begin(), rest.end(), [&](const RowLabel &l) { return l.kind == kind; });
        if (it == rest.end()) {
            continue;
        }
        const std::size_t pos = static_cast<std::size_t>(it - rest.begin());
        const std::size_t col = kind == RowLabel::Kind::L ? col_lo : col_hi - 1;
        const Coefficient e = mat.row(*it)[col].constant_value();
        const std::size_t cofactor_col = col - col_lo;
        const bool odd = ((pos + cofactor_col) % 2) == 1;
        out.sign *= (e < 0 ? -1 : 1) * (odd ? -1 : 1);
        rest.erase(it);
        if (kind == RowLabel::Kind::L) {
            ++col_lo;
        } else {
            --col_hi;
        }
    }
    const std::size_t p = rest.size();
    if (p == 0) {
        out.is_partition = true;
        out.matches = true;
        return out;
    }

    struct Entry {
        int a;
        int b;
        std::size_t slot;
    };
    std::vector<Entry> firsts;
    std::vector<int> gaps;
    bool use_t = false;
    for (std::size_t r = 0; r < p; ++r) {
        const auto &row = mat.row(rest[r]);
        const auto &e = row[col_lo];
        if (e.size() != 1 || e.leading().second != 1 || e.leading().first.degree() != 1) {
            throw InvalidArgument("row " + rest[r].str() + " is not a family row");
        }
        const Symbol s = Symbol::decode(e.leading().first.codes()[0]);
        use_t = s.kind == SymbolKind::T;
        firsts.push_back({s.k, s.shift, r});
        if (r == 0) {
            int prev = s.k;
            for (std::size_t c = col_lo + 1; c < col_hi; ++c) {
                const auto &f = row[c];
                if (f.size() != 1) {
                    throw InvalidArgument("row " + rest[r].str() + " is not a family row");
                }
                const int k = Symbol::decode(f.leading().first.codes()[0]).k;
                gaps.push_back(k - prev - 1);
                prev = k;
            }
        }
    }
    // Sort by descending first subscript, counting transpositions.
    std::vector<Entry> sorted = firsts;
    int swaps = 0;
    for (std::size_t x = 0; x < sorted.size(); ++x) {
        for (std::size_t y = 0; y + 1 < sorted.size() - x; ++y) {
            if (sorted[y].a < sorted[y + 1].a) {
                std::swap(sorted[y], sorted[y + 1]);
                ++swaps;
            }
        }
    }
    if (swaps % 2) {
        out.sign = -out.sign;
    }
    // Inner shape from the gaps, normalized so its last part is 0.
    out.inner.assign(p, 0);
    for (std::size_t j = p - 1; j > 0; --j) {
        out.inner[j - 1] = out.inner[j] + gaps[j - 1];
    }
    bool skew = std::any_of(out.inner.begin(), out.inner.end(), [](int v) { return v != 0; });
    out.flavor = use_t ? Flavor::Quantum : (skew ? Flavor::Skew : Flavor::Plain);
    out.parts.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        out.parts[i] = sorted[i].a + out.inner[0] + static_cast<int>(i);
    }
    if (use_t) {
        out.shift = sorted[0].b - 1 + static_cast<int>(p);
    }
    out.is_partition = out.parts.back() >= 0;
    for (std::size_t i = 0; i + 1 < p; ++i) {
        if (out.parts[i] < out.parts[i + 1]) {
            out.is_partition = false;
        }
    }
    for (std::size_t i = 0; out.is_partition && i < p; ++i) {
        if (out.inner[i] < 0 || out.inner[i] > out.parts[i]) {
            out.is_partition = false;
        }
    }
    // Compare against the family matrix built from the reading.
    std::vector<std::vector<Polynomial>> expect;
    if (skew) {
        const auto g = detail::gaps_of(out.inner);
        for (std::size_t i = 0; i < p; ++i) {
            expect.push_back(detail::family_row(false, out.parts[i] - out.inner[0] - static_cast<int>(i), 0, g, p));
        }
    } else {
        expect = detail::jt_rows(out.parts, use_t ? JTFamily::quantum() : JTFamily::plain(), out.shift);
    }
    out.matches = true;
    for (std::size_t i = 0; i < p && out.matches; ++i) {
        const auto &row = mat.row(rest[sorted[i].slot]);
        for (std::size_t c = 0; c < p; ++c) {
            if (!(row[col_lo + c] == expect[i][c])) {
                out.matches = false;
                break;
            }
        }
    }
    return out;
}

inline MinorReading read_minor(const SymMatrix &mat, std::initializer_list<RowLabel> rows)
{
    return read_minor(mat, std::span<const RowLabel>(rows.begin(), rows.size()));
}

} // namespace hschur
