#pragma once

// The multi-time Hirota identities for Schur functions, their spectral
// shifts, and the recurrence they define.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hschur/errors.hpp"
#include "hschur/jt_box.hpp"
#include "hschur/partition.hpp"
#include "hschur/plucker.hpp"
#include "hschur/polynomial.hpp"

namespace hschur {

enum class TermKind { Square, Fundamental, Chain };

inline std::string kind_name(TermKind k)
{
    switch (k) {
    case TermKind::Square: return "square";
    case TermKind::Fundamental: return "fundamental";
    case TermKind::Chain: return "chain";
    }
    return "?";
}

inline TermKind parse_kind(const std::string &s)
{
    if (s == "square") {
        return TermKind::Square;
    }
    if (s == "fundamental") {
        return TermKind::Fundamental;
    }
    if (s == "chain") {
        return TermKind::Chain;
    }
    throw InvalidArgument("unknown term kind '" + s + "'");
}

/// sign * s_α^{(u+shift_left)} * s_β^{(u+shift_right)}.
struct HirotaTerm {
    TermKind kind = TermKind::Chain;
    std::optional<IntervalChain> chain;
    PaddedPartition alpha;
    PaddedPartition beta;
    int sign = 1;
    int shift_left = 0;
    int shift_right = 0;

    bool operator==(const HirotaTerm &) const = default;
};

/// lhs = sum of rhs.
struct HirotaIdentity {
    Partition lambda;
    int k = 0;
    int ell = 0;
    bool quantum = false;
    bool normalized = false; // zero parts folded into the shifts
    HirotaTerm lhs;
    std::vector<HirotaTerm> rhs;

    bool operator==(const HirotaIdentity &) const = default;
};

/// s_λ s_λ = s_{λ+ω_ℓ} s_{λ-ω_ℓ} + Σ (-1)^{r-1} s_{π(λ)} s_{μ(λ)} over nested
/// chains through corner k, with ℓ = y_k.
inline HirotaIdentity main_identity(const Partition &lam, int k)
{
    const CornerCoords c = to_corners(lam);
    if (!(1 <= k && k <= c.count())) {
        throw InvalidArgument("corner index " + std::to_string(k) + " out of range 1.." + std::to_string(c.count()));
    }
    HirotaIdentity id;
    id.lambda = lam;
    id.k = k;
    id.ell = c[k].y;
    const int m = lam.length();
    const PaddedPartition self{lam, 0};
    id.lhs = {TermKind::Square, std::nullopt, self, self, 1, 0, 0};
    id.rhs.push_back({TermKind::Fundamental, std::nullopt, PaddedPartition::from_parts(add_column(lam.padded(m), id.ell)),
                      PaddedPartition::from_parts(remove_column(lam.padded(m), id.ell)), 1, 0, 0});
    for (const auto &ch : enumerate_chains(c.count(), k)) {
        id.rhs.push_back({TermKind::Chain, ch, from_corners(push(c, ch)), from_corners(pull(c, ch)), ch.sign(), 0, 0});
    }
    return id;
}

/// The spectral version: s_λ^{(u-1)} s_λ^{(u+1)} on the left, the
/// fundamental term at (u, u), and chain terms shifted (0, λ_1-β_1) when the
/// outer interval reaches the last corner and (-1, λ_1-β_1+1) otherwise.
inline HirotaIdentity quantum_identity(const Partition &lam, int k)
{
    HirotaIdentity id = main_identity(lam, k);
    id.quantum = true;
    id.lhs.shift_left = -1;
    id.lhs.shift_right = 1;
    const int n = corner_count(lam);
    const int l1 = lam.at(0);
    for (auto &t : id.rhs) {
        if (t.kind != TermKind::Chain) {
            continue;
        }
        const int b1 = t.beta.first();
        if (t.chain->outer_end() == n) {
            t.shift_left = 0;
            t.shift_right = l1 - b1;
        } else {
            t.shift_left = -1;
            t.shift_right = l1 - b1 + 1;
        }
    }
    return id;
}

/// s_{(…,0)}^{(u)} = s_{(…)}^{(u-1)}: drops zero parts, valid once t_0 = 1.
inline HirotaTerm normalize_zero_parts(HirotaTerm t)
{
    t.shift_left -= t.alpha.zeros;
    t.alpha.zeros = 0;
    t.shift_right -= t.beta.zeros;
    t.beta.zeros = 0;
    return t;
}

inline HirotaIdentity normalize_zero_parts(HirotaIdentity id)
{
    if (!id.quantum) {
        id.lhs.alpha.zeros = id.lhs.beta.zeros = 0;
        for (auto &t : id.rhs) {
            t.alpha.zeros = t.beta.zeros = 0;
        }
    } else {
        id.lhs = normalize_zero_parts(id.lhs);
        for (auto &t : id.rhs) {
            t = normalize_zero_parts(t);
        }
    }
    id.normalized = true;
    return id;
}

/// Drops the spectral data; the result is the plain identity.
inline HirotaIdentity forget_shifts(HirotaIdentity id)
{
    id.quantum = false;
    id.lhs.shift_left = id.lhs.shift_right = 0;
    for (auto &t : id.rhs) {
        t.shift_left = t.shift_right = 0;
    }
    return id;
}

/// Cached Jacobi-Trudi values. Not thread safe; use one per thread.
class SchurEvaluator {
public:
    SchurEvaluator(bool quantum, Mode mode) : quantum_(quantum), mode_(mode) {}

    bool quantum() const noexcept { return quantum_; }
    Mode mode() const noexcept { return mode_; }

    /// s_parts^{(u+shift)}; parts may carry zero padding, which only matters
    /// in formal mode.
    Polynomial schur(const std::vector<int> &parts, int shift = 0)
    {
        std::vector<int> key = parts;
        if (mode_ == Mode::Specialized) {
            // s_{(…,0)}^{(u)} = s_{(…)}^{(u-1)} once t_0 = 1.
            while (!key.empty() && key.back() == 0) {
                key.pop_back();
                --shift;
            }
        }
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            const JTFamily fam = quantum_ ? JTFamily::quantum() : JTFamily::formal();
            it = cache_.emplace(key, jt_determinant(key, fam, 0, mode_)).first;
        }
        return quantum_ ? shift_spectral(it->second, shift) : it->second;
    }

    Polynomial schur(const PaddedPartition &p, int shift = 0) { return schur(p.parts(), shift); }

    Polynomial value(const HirotaTerm &t)
    {
        Polynomial a = schur(t.alpha, t.shift_left);
        if (a.is_zero()) {
            return {};
        }
        Polynomial v = a * schur(t.beta, t.shift_right);
        return t.sign < 0 ? -v : v;
    }

    std::size_t cached() const noexcept { return cache_.size(); }

private:
    bool quantum_;
    Mode mode_;
    std::map<std::vector<int>, Polynomial> cache_;
};

struct IdentityCheck {
    bool ok = false;
    bool zero = false;          // lhs - rhs expands to 0
    bool plucker_match = false; // same terms as the box Plücker relation
    Polynomial lhs;
    Polynomial rhs;
    Polynomial residual;
    std::vector<Polynomial> values;
    std::string detail;
};

/// Reads the box Plücker relation of λ and ℓ as a Hirota identity: the
/// s_λ s_λ term is isolated and every other surviving term moves across.
inline std::vector<HirotaTerm> plucker_terms(const BoxRelation &br)
{
    std::vector<HirotaTerm> out;
    auto term = [](const SchurForm &f, int coeff) {
        return HirotaTerm{TermKind::Chain, std::nullopt, f.left.partition(), f.right.partition(), coeff, f.left.shift, f.right.shift};
    };
    HirotaTerm fund = term(br.lhs, br.lhs.coeff);
    fund.kind = TermKind::Fundamental;
    const int sq = br.rhs[br.square_index].coeff;
    out.push_back(fund);
    for (std::size_t t = 0; t < br.rhs.size(); ++t) {
        if (t == br.square_index || br.rhs[t].coeff == 0) {
            continue;
        }
        HirotaTerm h = term(br.rhs[t], -br.rhs[t].coeff);
        out.push_back(h);
    }
    if (sq != 1) {
        for (auto &h : out) {
            h.sign *= sq;
        }
    }
    return out;
}

/// Expands both sides exactly and compares the term list with the box
/// Plücker relation.
inline IdentityCheck verify_identity(const HirotaIdentity &id, Mode mode, SchurEvaluator *evaluator = nullptr,
                                     bool cross_check = true)
{
    if (id.normalized && mode == Mode::Formal) {
        throw InvalidArgument("zero-part normalized identities only hold after specialization");
    }
    std::optional<SchurEvaluator> local;
    if (evaluator == nullptr || evaluator->quantum() != id.quantum || evaluator->mode() != mode) {
        local.emplace(id.quantum, mode);
        evaluator = &*local;
    }
    IdentityCheck out;
    out.lhs = evaluator->value(id.lhs);
    for (const auto &t : id.rhs) {
        out.values.push_back(evaluator->value(t));
        out.rhs += out.values.back();
    }
    out.residual = out.lhs - out.rhs;
    out.zero = out.residual.is_zero();
    if (!out.zero) {
        out.detail = "lhs - rhs = " + out.residual.str();
    }

    out.plucker_match = true;
    // A factor with no rows is the constant 1 whatever its shift.
    auto same_shift = [](const PaddedPartition &p, int a, int b) { return a == b || p.length() == 0; };
    if (cross_check) {
        const auto br = box_relation(id.lambda, id.ell, id.quantum ? JTFamily::quantum() : JTFamily::formal());
        auto from_box = plucker_terms(br);
        const bool square_ok = br.rhs[br.square_index].coeff == 1 && br.rhs[br.square_index].left.shift == -(id.quantum ? 1 : 0)
                               && br.rhs[br.square_index].right.shift == (id.quantum ? 1 : 0);
        auto expected = id.rhs;
        if (id.normalized) {
            for (auto &t : from_box) {
                t = id.quantum ? normalize_zero_parts(t) : HirotaTerm{t.kind, t.chain, {t.alpha.shape, 0}, {t.beta.shape, 0}, t.sign, 0, 0};
            }
        }
        std::vector<bool> used(from_box.size(), false);
        bool all = square_ok && from_box.size() == expected.size();
        for (const auto &e : expected) {
            bool found = false;
            for (std::size_t j = 0; j < from_box.size() && !found; ++j) {
                const auto &b = from_box[j];
                if (!used[j] && b.alpha == e.alpha && b.beta == e.beta && b.sign == e.sign
                    && same_shift(b.alpha, b.shift_left, e.shift_left) && same_shift(b.beta, b.shift_right, e.shift_right)) {
                    used[j] = true;
                    found = true;
                }
            }
            if (!found) {
                all = false;
                if (out.detail.empty()) {
                    out.detail = "no Plücker term for s[" + e.alpha.str() + "]*s[" + e.beta.str() + "]";
                }
            }
        }
        out.plucker_match = all;
        if (!all && out.detail.empty()) {
            out.detail = "Plücker relation has a different term list";
        }
    }
    out.ok = out.zero && out.plucker_match;
    return out;
}

// ---------------------------------------------------------------------------
// Recurrence

enum class Provenance { Seed, Evolved };

/// A value of the recurrence at a lattice point (the column profile of a
/// partition). `ell` is the column height of the step that produced it.
struct QState {
    Partition shape;
    Polynomial value;
    Provenance provenance = Provenance::Seed;
    int ell = 0;
};

/// Which repeated column height to peel when several are available.
enum class StepPolicy { Shortest, Tallest };

/// Solves s_{λ+ω_ℓ} = (s_λ² - Σ ± s_π s_μ) / s_{λ-ω_ℓ} from seeds on
/// partitions with distinct column heights. Values live in the specialized
/// ring (h_k, or t_k(u) at spectral parameter u). Single-threaded.
class Evolver {
public:
    using SeedFn = std::function<Polynomial(const Partition &)>;

    explicit Evolver(std::map<Partition, Polynomial> seeds, bool quantum = false, StepPolicy policy = StepPolicy::Shortest)
        : quantum_(quantum), policy_(policy)
    {
        for (auto &[p, v] : seeds) {
            memo_.emplace(p, QState{p, std::move(v), Provenance::Seed, 0});
        }
    }

    /// Seeds produced on demand; chain terms can reach partitions with more
    /// rows than the target, so a fixed table needs generous bounds.
    explicit Evolver(SeedFn seed, bool quantum = false, StepPolicy policy = StepPolicy::Shortest)
        : quantum_(quantum), policy_(policy), seed_(std::move(seed))
    {
    }

    const QState &state(const Partition &target)
    {
        if (auto it = memo_.find(target); it != memo_.end()) {
            return it->second;
        }
        if (target.empty()) {
            return memo_.emplace(target, QState{target, Polynomial(1), Provenance::Seed, 0}).first->second;
        }
        const auto mult = column_multiplicities(target);
        int ell = 0;
        for (int h = 1; h <= static_cast<int>(mult.size()); ++h) {
            if (mult[static_cast<std::size_t>(h - 1)] >= 2 && (ell == 0 || policy_ == StepPolicy::Tallest)) {
                ell = h;
            }
        }
        if (ell == 0) {
            if (!seed_) {
                throw MissingSeed("no seed for s[" + target.str() + "]");
            }
            return memo_.emplace(target, QState{target, seed_(target), Provenance::Seed, 0}).first->second;
        }
        const Partition lam = remove_column(target, ell);
        const CornerCoords c = to_corners(lam);
        int k = 0;
        for (int i = 1; i <= c.count(); ++i) {
            if (c[i].y == ell) {
                k = i;
            }
        }
        HirotaIdentity id = quantum_ ? normalize_zero_parts(quantum_identity(lam, k)) : main_identity(lam, k);
        Polynomial num = at(id.lhs.alpha.shape, id.lhs.shift_left) * at(id.lhs.beta.shape, id.lhs.shift_right);
        const HirotaTerm *fund = nullptr;
        for (const auto &t : id.rhs) {
            if (t.kind == TermKind::Fundamental) {
                fund = &t;
                continue;
            }
            Polynomial v = at(t.alpha.shape, t.shift_left) * at(t.beta.shape, t.shift_right);
            num = t.sign > 0 ? num - v : num + v;
        }
        // The fundamental term is s_target^{(u)} s_{λ-ω}^{(u)}.
        Polynomial den = at(fund->beta.shape, fund->shift_right);
        Polynomial value = exact_divide(num, den);
        ++steps_;
        return memo_.emplace(target, QState{target, std::move(value), Provenance::Evolved, ell}).first->second;
    }

    const Polynomial &evolve(const Partition &target) { return state(target).value; }

    std::size_t steps() const noexcept { return steps_; }

private:
    Polynomial at(const Partition &p, int shift)
    {
        Polynomial v = state(p).value;
        return quantum_ ? shift_spectral(v, shift) : v;
    }

    bool quantum_;
    StepPolicy policy_;
    std::size_t steps_ = 0;
    SeedFn seed_;
    std::map<Partition, QState> memo_;
};

/// Free function form.
inline QState evolve(const std::map<Partition, Polynomial> &seeds, const Partition &target, bool quantum = false)
{
    Evolver e(seeds, quantum);
    return e.state(target);
}

/// s_κ from single-column Schur functions e_k = s_{(1^k)} by the dual
/// Jacobi-Trudi determinant det(e_{κ'_i - i + j}).
class SingleColumnSeeds {
public:
    Polynomial operator()(const Partition &p)
    {
        const auto conj = p.conjugate().parts();
        const std::size_t w = conj.size();
        std::vector<std::vector<Polynomial>> rows(w);
        for (std::size_t i = 0; i < w; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                rows[i].push_back(e(conj[i] - static_cast<int>(i) + static_cast<int>(j)));
            }
        }
        return determinant(rows);
    }

    Polynomial e(int k)
    {
        if (k < 0) {
            return {};
        }
        while (static_cast<int>(cols_.size()) <= k) {
            const int n = static_cast<int>(cols_.size());
            cols_.push_back(n == 0 ? Polynomial(1)
                                   : jt_determinant(std::vector<int>(static_cast<std::size_t>(n), 1), JTFamily::plain(), 0,
                                                    Mode::Specialized));
        }
        return cols_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<Polynomial> cols_;
};

/// Table form: every distinct-column-height partition with at most
/// max_cols columns and max_rows rows.
inline std::map<Partition, Polynomial> single_column_seeds(int max_cols, int max_rows)
{
    SingleColumnSeeds gen;
    std::map<Partition, Polynomial> seeds;
    // Column heights listed strictly decreasing.
    std::vector<int> desc;
    auto rec = [&](auto &&self, int cap) -> void {
        Partition cols(desc);
        seeds.emplace(cols.conjugate(), Polynomial());
        if (static_cast<int>(desc.size()) == max_cols) {
            return;
        }
        for (int h = cap; h >= 1; --h) {
            desc.push_back(h);
            self(self, h - 1);
            desc.pop_back();
        }
    };
    rec(rec, max_rows);
    for (auto &[p, v] : seeds) {
        v = gen(p);
    }
    return seeds;
}

/// Seeds taken straight from the family determinants (plain or t-ring).
inline std::map<Partition, Polynomial> determinant_seeds(int max_boxes, bool quantum)
{
    std::map<Partition, Polynomial> seeds;
    for (const auto &p : partitions_up_to(max_boxes)) {
        if (distinct_column_heights(p)) {
            seeds.emplace(p, jt_determinant(p.parts(), quantum ? JTFamily::quantum() : JTFamily::plain(), 0, Mode::Specialized));
        }
    }
    return seeds;
}

/// Rectangular ladder Q_{m+1}^ℓ(u) = (Q_m^ℓ(u-1) Q_m^ℓ(u+1) - Q_m^{ℓ-1}(u)
/// Q_m^{ℓ+1}(u)) / Q_{m-1}^ℓ(u) with Q_0^ℓ = Q_m^0 = 1 and Q_1^ℓ = s_{(1^ℓ)}^{(u)}.
/// Entry [m][ℓ] for 0 <= m <= max_m, 0 <= ℓ <= max_ell.
inline std::vector<std::vector<Polynomial>> q_system(int max_m, int max_ell)
{
    const int top = max_ell + std::max(max_m, 1);
    std::vector<std::vector<Polynomial>> q(static_cast<std::size_t>(max_m + 1),
                                           std::vector<Polynomial>(static_cast<std::size_t>(top + 1)));
    for (int l = 0; l <= top; ++l) {
        q[0][static_cast<std::size_t>(l)] = Polynomial(1);
    }
    for (int m = 1; m <= max_m; ++m) {
        q[static_cast<std::size_t>(m)][0] = Polynomial(1);
    }
    if (max_m >= 1) {
        for (int l = 1; l <= top; ++l) {
            q[1][static_cast<std::size_t>(l)] =
                jt_determinant(std::vector<int>(static_cast<std::size_t>(l), 1), JTFamily::quantum(), 0, Mode::Specialized);
        }
    }
    for (int m = 1; m < max_m; ++m) {
        const auto mm = static_cast<std::size_t>(m);
        for (int l = 1; l + m <= top; ++l) {
            const auto ll = static_cast<std::size_t>(l);
            Polynomial num = shift_spectral(q[mm][ll], -1) * shift_spectral(q[mm][ll], 1) - q[mm][ll - 1] * q[mm][ll + 1];
            q[mm + 1][ll] = exact_divide(num, q[mm - 1][ll]);
        }
    }
    for (auto &row : q) {
        row.resize(static_cast<std::size_t>(max_ell + 1));
    }
    return q;
}

} // namespace hschur
