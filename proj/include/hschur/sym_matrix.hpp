#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hschur/errors.hpp"
#include "hschur/polynomial.hpp"

namespace hschur {

/// Row labels of a box matrix: L, R, 1..m and 1'..m'. Generic n x 2n
/// Plücker systems use only the numbered labels.
struct RowLabel {
    enum class Kind : std::uint8_t { L, R, Unprimed, Primed };
    Kind kind = Kind::Unprimed;
    int index = 0;

    static constexpr RowLabel left() noexcept { return {Kind::L, 0}; }
    static constexpr RowLabel right() noexcept { return {Kind::R, 0}; }
    static constexpr RowLabel row(int i) noexcept { return {Kind::Unprimed, i}; }
    static constexpr RowLabel primed(int i) noexcept { return {Kind::Primed, i}; }

    auto operator<=>(const RowLabel &) const = default;

    std::string str() const
    {
        switch (kind) {
        case Kind::L: return "L";
        case Kind::R: return "R";
        case Kind::Unprimed: return std::to_string(index);
        case Kind::Primed: return std::to_string(index) + "'";
        }
        return "?";
    }

    static RowLabel parse(const std::string &s)
    {
        if (s == "L") {
            return left();
        }
        if (s == "R") {
            return right();
        }
        bool primed_label = !s.empty() && s.back() == '\'';
        std::string digits = primed_label ? s.substr(0, s.size() - 1) : s;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("bad row label '" + s + "'");
        }
        int i = std::stoi(digits);
        return primed_label ? primed(i) : row(i);
    }
};

inline std::string labels_str(std::span<const RowLabel> rows)
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += rows[i].str();
    }
    return out + "]";
}

/// Rectangular matrix of polynomials with distinct row labels.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t cols = 0) : cols_(cols) {}

    void add_row(RowLabel label, std::vector<Polynomial> entries)
    {
        if (entries.size() != cols_) {
            throw InvalidArgument("row " + label.str() + " has " + std::to_string(entries.size()) + " entries, expected "
                                  + std::to_string(cols_));
        }
        for (const auto &l : labels_) {
            if (l == label) {
                throw InvalidArgument("duplicate row label " + label.str());
            }
        }
        labels_.push_back(label);
        rows_.push_back(std::move(entries));
    }

    std::size_t cols() const noexcept { return cols_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<RowLabel> &labels() const noexcept { return labels_; }
    const std::vector<std::vector<Polynomial>> &rows() const noexcept { return rows_; }

    std::size_t index_of(const RowLabel &label) const
    {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) {
                return i;
            }
        }
        throw UnknownRow("no row labelled " + label.str());
    }

    bool has_row(const RowLabel &label) const
    {
        for (const auto &l : labels_) {
            if (l == label) {
                return true;
            }
        }
        return false;
    }

    const std::vector<Polynomial> &row(const RowLabel &label) const { return rows_[index_of(label)]; }
    const Polynomial &entry(const RowLabel &label, std::size_t col) const { return row(label).at(col); }

    SymMatrix specialized(Mode mode) const
    {
        SymMatrix out(cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::vector<Polynomial> entries;
            entries.reserve(cols_);
            for (const auto &e : rows_[r]) {
                entries.push_back(specialize(e, mode));
            }
            out.add_row(labels_[r], std::move(entries));
        }
        return out;
    }

    bool operator==(const SymMatrix &) const = default;

private:
    std::size_t cols_;
    std::vector<RowLabel> labels_;
    std::vector<std::vector<Polynomial>> rows_;
};

namespace detail {

// Laplace expansion down the columns, memoized on the set of rows already
// used. The memo lives for one call only.
inline Polynomial determinant_rows(const std::vector<const std::vector<Polynomial> *> &rows)
{
    const std::size_t n = rows.size();
    if (n == 0) {
        return Polynomial(1);
    }
    if (n > 62) {
        throw InvalidArgument("determinant too large");
    }
    static const Polynomial one(1);
    std::unordered_map<std::uint64_t, Polynomial> memo;
    auto rec = [&](auto &&self, std::uint64_t used) -> const Polynomial & {
        const std::size_t col = static_cast<std::size_t>(std::popcount(used));
        if (col == n) {
            return one;
        }
        if (auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        Polynomial acc;
        int position = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (used & (std::uint64_t{1} << r)) {
                continue;
            }
            const Polynomial &e = (*rows[r])[col];
            if (!e.is_zero()) {
                const Polynomial &sub = self(self, used | (std::uint64_t{1} << r));
                if (!sub.is_zero()) {
                    Polynomial term = e * sub;
                    if (position % 2 == 0) {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            ++position;
        }
        return memo.emplace(used, std::move(acc)).first->second;
    };
    return rec(rec, 0);
}

} // namespace detail

/// Determinant of a square matrix given as rows.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>> &square)
{
    std::vector<const std::vector<Polynomial> *> rows;
    for (const auto &r : square) {
        if (r.size() != square.size()) {
            throw NonSquareMinor("matrix is not square");
        }
        rows.push_back(&r);
    }
    return detail::determinant_rows(rows);
}

/// [r_1 r_2 ... r_k]: the minor on the listed rows, in the listed order.
inline Polynomial determinant(const SymMatrix &m, std::span<const RowLabel> rows)
{
    if (rows.size() != m.cols()) {
        throw NonSquareMinor("minor with " + std::to_string(rows.size()) + " rows of a matrix with "
                             + std::to_string(m.cols()) + " columns");
    }
    std::vector<const std::vector<Polynomial> *> ptrs;
    ptrs.reserve(rows.size());
    for (const auto &l : rows) {
        ptrs.push_back(&m.row(l));
    }
    return detail::determinant_rows(ptrs);
}

inline Polynomial determinant(const SymMatrix &m, std::initializer_list<RowLabel> rows)
{
    return determinant(m, std::span<const RowLabel>(rows.begin(), rows.size()));
}

} // namespace hschur
