#pragma once

// Partitions, Young-diagram corner coordinates, column operations and the
// border-strip operators used by the Hirota identities.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hschur/errors.hpp"

namespace hschur {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction, so two partitions compare equal exactly when
/// their Young diagrams coincide.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) {
                throw InvalidPartition("negative part in partition");
            }
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
                throw InvalidPartition("partition parts must be weakly decreasing");
            }
        }
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "3,2,1"; "0" and "" denote the empty partition.
    static Partition parse(std::string_view text)
    {
        std::vector<int> parts;
        std::string token;
        std::string s(text);
        std::stringstream ss(s);
        bool any = false;
        while (std::getline(ss, token, ',')) {
            any = true;
            auto b = token.find_first_not_of(" \t");
            auto e = token.find_last_not_of(" \t");
            if (b == std::string::npos) {
                throw InvalidPartition("empty part in '" + s + "'");
            }
            token = token.substr(b, e - b + 1);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception &) {
                throw InvalidPartition("not an integer: '" + token + "'");
            }
            if (used != token.size()) {
                throw InvalidPartition("not an integer: '" + token + "'");
            }
            parts.push_back(v);
        }
        if (!any) {
            return Partition();
        }
        return Partition(std::move(parts));
    }

    const std::vector<int> &parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    int size() const noexcept
    {
        int n = 0;
        for (int p : parts_) {
            n += p;
        }
        return n;
    }

    /// Part i (0-based); zero beyond the length.
    int at(int i) const noexcept
    {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    std::vector<int> padded(int m) const
    {
        if (m < length()) {
            throw InvalidPartition("cannot pad " + str() + " to " + std::to_string(m) + " parts");
        }
        std::vector<int> out = parts_;
        out.resize(static_cast<std::size_t>(m), 0);
        return out;
    }

    Partition conjugate() const
    {
        std::vector<int> out;
        if (!empty()) {
            for (int c = 1; c <= parts_.front(); ++c) {
                int h = 0;
                while (h < length() && parts_[static_cast<std::size_t>(h)] >= c) {
                    ++h;
                }
                out.push_back(h);
            }
        }
        return Partition(std::move(out));
    }

    bool contains(const Partition &inner) const noexcept
    {
        if (inner.length() > length()) {
            return false;
        }
        for (int i = 0; i < inner.length(); ++i) {
            if (inner.at(i) > at(i)) {
                return false;
            }
        }
        return true;
    }

    /// "3,2,1"; the empty partition renders as "0".
    std::string str() const
    {
        if (parts_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    auto operator<=>(const Partition &) const = default;

private:
    std::vector<int> parts_;
};

/// A partition together with an explicit number of trailing zero parts.
/// The zeros never change the canonical shape but matter wherever a
/// determinant is taken in a ring where h_0 (or t_0) is not specialized.
struct PaddedPartition {
    Partition shape;
    int zeros = 0;

    static PaddedPartition from_parts(const std::vector<int> &parts)
    {
        int z = 0;
        while (z < static_cast<int>(parts.size()) && parts[parts.size() - 1 - static_cast<std::size_t>(z)] == 0) {
            ++z;
        }
        return {Partition(parts), z};
    }

    int length() const noexcept { return shape.length() + zeros; }
    int first() const noexcept { return shape.at(0); }
    std::vector<int> parts() const { return shape.padded(length()); }

    std::string str() const
    {
        if (length() == 0) {
            return "";
        }
        std::string out;
        auto p = parts();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(p[i]);
        }
        return out;
    }

    auto operator<=>(const PaddedPartition &) const = default;
};

struct Corner {
    int x; // column count
    int y; // row count
    auto operator<=>(const Corner &) const = default;
};

/// Outside-corner coordinates (x_1, y_1), ..., (x_n, y_n). Coordinates
/// produced by border-strip operators may be degenerate (equal neighbours);
/// they are only required to be monotone.
struct CornerCoords {
    std::vector<Corner> corners;

    int count() const noexcept { return static_cast<int>(corners.size()); }
    Corner &operator[](int i) { return corners.at(static_cast<std::size_t>(i - 1)); }
    const Corner &operator[](int i) const { return corners.at(static_cast<std::size_t>(i - 1)); }

    /// Inside corner i (0..n) sits at (x_{i+1}, y_i) with y_0 = x_{n+1} = 0.
    Corner inside(int i) const
    {
        int x = (i + 1 <= count()) ? (*this)[i + 1].x : 0;
        int y = (i >= 1) ? (*this)[i].y : 0;
        return {x, y};
    }

    bool strict() const noexcept
    {
        for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
            if (!(corners[i].x > corners[i + 1].x && corners[i].y < corners[i + 1].y)) {
                return false;
            }
        }
        return corners.empty() || (corners.back().x >= 1 && corners.front().y >= 1);
    }

    auto operator<=>(const CornerCoords &) const = default;
};

inline CornerCoords to_corners(const Partition &p)
{
    CornerCoords c;
    for (int i = 0; i < p.length(); ++i) {
        if (i + 1 == p.length() || p.at(i) != p.at(i + 1)) {
            c.corners.push_back({p.at(i), i + 1});
        }
    }
    return c;
}

/// Rebuilds (x_1^{y_1}, x_2^{y_2 - y_1}, ...). The result has exactly y_n
/// parts, so zero parts created by a pull show up as padding.
inline PaddedPartition from_corners(const CornerCoords &c)
{
    std::vector<int> parts;
    int prev_y = 0;
    for (std::size_t i = 0; i < c.corners.size(); ++i) {
        const Corner &k = c.corners[i];
        if (k.x < 0 || k.y < prev_y || (i > 0 && k.x > c.corners[i - 1].x)) {
            throw InvalidCorners("corner coordinates are not monotone");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(k.y - prev_y), k.x);
        prev_y = k.y;
    }
    return PaddedPartition::from_parts(parts);
}

inline int corner_count(const Partition &p) { return to_corners(p).count(); }

inline bool has_column_of_height(const Partition &p, int ell)
{
    return ell >= 1 && ell <= p.length() && p.at(ell - 1) > p.at(ell);
}

/// Parts over a fixed length m with a column of height ell added.
inline std::vector<int> add_column(std::vector<int> parts, int ell)
{
    if (ell < 1) {
        throw InvalidArgument("column height must be positive");
    }
    if (static_cast<int>(parts.size()) < ell) {
        parts.resize(static_cast<std::size_t>(ell), 0);
    }
    for (int i = 0; i < ell; ++i) {
        ++parts[static_cast<std::size_t>(i)];
    }
    return parts;
}

inline Partition add_column(const Partition &p, int ell) { return Partition(add_column(p.parts(), ell)); }

inline std::vector<int> remove_column(std::vector<int> parts, int ell)
{
    if (ell < 1) {
        throw InvalidArgument("column height must be positive");
    }
    auto at = [&](int i) { return i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0; };
    if (ell > static_cast<int>(parts.size()) || at(ell - 1) == at(ell)) {
        throw NoSuchColumn("no column of height " + std::to_string(ell));
    }
    for (int i = 0; i < ell; ++i) {
        --parts[static_cast<std::size_t>(i)];
    }
    return parts;
}

inline Partition remove_column(const Partition &p, int ell) { return Partition(remove_column(p.parts(), ell)); }

struct Interval {
    int i;
    int j;
    auto operator<=>(const Interval &) const = default;
};

/// Properly nested intervals [i_1, j_1] > ... > [i_r, j_r], all containing
/// the pivot corner k.
struct IntervalChain {
    int k = 0;
    std::vector<Interval> intervals;

    int length() const noexcept { return static_cast<int>(intervals.size()); }
    int sign() const noexcept { return (length() % 2 == 1) ? 1 : -1; }
    int outer_end() const { return intervals.front().j; }

    bool nested() const noexcept
    {
        for (std::size_t s = 0; s < intervals.size(); ++s) {
            const auto &iv = intervals[s];
            if (!(iv.i <= k && k <= iv.j)) {
                return false;
            }
            if (s > 0 && !(intervals[s - 1].i < iv.i && iv.j < intervals[s - 1].j)) {
                return false;
            }
        }
        return !intervals.empty();
    }

    std::string str() const
    {
        std::string out = "{";
        for (std::size_t s = 0; s < intervals.size(); ++s) {
            if (s) {
                out += "⊃";
            }
            out += "[" + std::to_string(intervals[s].i) + "," + std::to_string(intervals[s].j) + "]";
        }
        return out + "}";
    }

    auto operator<=>(const IntervalChain &) const = default;
};

namespace detail {

inline void check_strip(const CornerCoords &c, int i, int j)
{
    if (!(1 <= i && i <= j && j <= c.count())) {
        throw InvalidArgument("border strip [" + std::to_string(i) + "," + std::to_string(j) + "] out of range for "
                              + std::to_string(c.count()) + " corners");
    }
}

inline CornerCoords shift_strip(CornerCoords c, int i, int j, int delta)
{
    check_strip(c, i, j);
    for (int t = i + 1; t <= j; ++t) {
        c[t].x += delta;
    }
    for (int t = i; t <= j; ++t) {
        c[t].y += delta;
    }
    return c;
}

} // namespace detail

/// Adds the border strip from outside corner i to inside corner j.
inline CornerCoords push(const CornerCoords &c, int i, int j) { return detail::shift_strip(c, i, j, +1); }
/// Removes the border strip from outside corner i to inside corner j.
inline CornerCoords pull(const CornerCoords &c, int i, int j) { return detail::shift_strip(c, i, j, -1); }

inline PaddedPartition push(const Partition &p, int i, int j) { return from_corners(push(to_corners(p), i, j)); }
inline PaddedPartition pull(const Partition &p, int i, int j) { return from_corners(pull(to_corners(p), i, j)); }

// Chains act on coordinates only; visible corners merging midway is ignored.
inline CornerCoords push(CornerCoords c, const IntervalChain &chain)
{
    for (const auto &iv : chain.intervals) {
        c = push(c, iv.i, iv.j);
    }
    return c;
}

inline CornerCoords pull(CornerCoords c, const IntervalChain &chain)
{
    for (const auto &iv : chain.intervals) {
        c = pull(c, iv.i, iv.j);
    }
    return c;
}

inline PaddedPartition push(const Partition &p, const IntervalChain &chain) { return from_corners(push(to_corners(p), chain)); }
inline PaddedPartition pull(const Partition &p, const IntervalChain &chain) { return from_corners(pull(to_corners(p), chain)); }

/// Every chain of properly nested intervals in [1, n] through k. Ordered by
/// chain length, then level by level with the right end ascending and the
/// left end descending; for n = 3, k = 2 this gives [2,2], [1,2], [2,3],
/// [1,3], [1,3]⊃[2,2].
inline std::vector<IntervalChain> enumerate_chains(int n, int k)
{
    if (!(1 <= k && k <= n)) {
        throw InvalidArgument("pivot corner " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
    std::vector<IntervalChain> out;
    const int rmax = std::min(k, n - k + 1);
    for (int r = 1; r <= rmax; ++r) {
        std::vector<IntervalChain> level;
        IntervalChain cur{k, {}};
        // Level s picks (j_s ascending, i_s descending) inside the previous interval.
        auto rec = [&](auto &&self, int lo_i, int hi_j) -> void {
            if (cur.length() == r) {
                level.push_back(cur);
                return;
            }
            const int remaining = r - cur.length() - 1;
            for (int j = k + remaining; j <= hi_j; ++j) {
                for (int i = k - remaining; i >= lo_i; --i) {
                    cur.intervals.push_back({i, j});
                    self(self, i + 1, j - 1);
                    cur.intervals.pop_back();
                }
            }
        };
        rec(rec, 1, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<IntervalChain> enumerate_chains(const Partition &p, int k) { return enumerate_chains(corner_count(p), k); }

/// Partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int s = 0; s <= n; ++s) {
        auto ps = partitions_of(s);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// Column-height profile: entry h-1 counts the columns of height h.
inline std::vector<int> column_multiplicities(const Partition &p)
{
    std::vector<int> out(static_cast<std::size_t>(p.length()), 0);
    for (int h = 1; h <= p.length(); ++h) {
        out[static_cast<std::size_t>(h - 1)] = p.at(h - 1) - p.at(h);
    }
    return out;
}

inline bool distinct_column_heights(const Partition &p)
{
    for (int m : column_multiplicities(p)) {
        if (m > 1) {
            return false;
        }
    }
    return true;
}

} // namespace hschur
