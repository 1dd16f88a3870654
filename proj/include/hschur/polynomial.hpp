#pragma once

// Sparse polynomials with exact integer coefficients over the formal
// symbols h_k and t_k(u+c).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hschur/errors.hpp"

namespace hschur {

using Coefficient = boost::multiprecision::cpp_int;

enum class SymbolKind : std::uint8_t { H = 0, T = 1 };

/// h_k, or t_k(u + shift).
struct Symbol {
    SymbolKind kind = SymbolKind::H;
    int k = 0;
    int shift = 0;

    static constexpr Symbol h(int k) noexcept { return {SymbolKind::H, k, 0}; }
    static constexpr Symbol t(int k, int shift) noexcept { return {SymbolKind::T, k, shift}; }

    auto operator<=>(const Symbol &) const = default;

    std::string str() const
    {
        std::string sub = k < 0 ? "{" + std::to_string(k) + "}" : std::to_string(k);
        if (kind == SymbolKind::H) {
            return "h" + sub;
        }
        std::string arg = "u";
        if (shift > 0) {
            arg += "+" + std::to_string(shift);
        } else if (shift < 0) {
            arg += std::to_string(shift);
        }
        return "t" + sub + "(" + arg + ")";
    }

    // Packed form: the integer order of codes equals the (kind, k, shift) order.
    static constexpr int k_bias = 1 << 14;
    static constexpr int shift_bias = 1 << 15;

    std::uint32_t code() const
    {
        if (k < -k_bias || k >= k_bias || shift < -shift_bias || shift >= shift_bias) {
            throw InvalidArgument("symbol subscript or shift out of range");
        }
        return (static_cast<std::uint32_t>(kind) << 31) | (static_cast<std::uint32_t>(k + k_bias) << 16)
               | static_cast<std::uint32_t>(shift + shift_bias);
    }

    static constexpr Symbol decode(std::uint32_t c) noexcept
    {
        return {static_cast<SymbolKind>(c >> 31), static_cast<int>((c >> 16) & 0x7fffu) - k_bias,
                static_cast<int>(c & 0xffffu) - shift_bias};
    }
};

/// Sorted multiset of symbols. Ordered by degree, then lexicographically on
/// the sorted factor codes; the order is multiplicative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> codes) : codes_(std::move(codes)) { std::sort(codes_.begin(), codes_.end()); }
    explicit Monomial(const Symbol &s) : codes_{s.code()} {}

    static Monomial from_symbols(const std::vector<Symbol> &syms)
    {
        std::vector<std::uint32_t> c;
        c.reserve(syms.size());
        for (const auto &s : syms) {
            c.push_back(s.code());
        }
        return Monomial(std::move(c));
    }

    std::size_t degree() const noexcept { return codes_.size(); }
    bool is_one() const noexcept { return codes_.empty(); }
    const std::vector<std::uint32_t> &codes() const noexcept { return codes_; }

    std::vector<Symbol> symbols() const
    {
        std::vector<Symbol> out;
        out.reserve(codes_.size());
        for (auto c : codes_) {
            out.push_back(Symbol::decode(c));
        }
        return out;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        out.codes_.resize(a.codes_.size() + b.codes_.size());
        std::merge(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end(), out.codes_.begin());
        return out;
    }

    bool divides(const Monomial &other) const
    {
        return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
    }

    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial &other) const
    {
        Monomial out;
        std::set_difference(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end(),
                            std::back_inserter(out.codes_));
        return out;
    }

    std::strong_ordering operator<=>(const Monomial &o) const
    {
        if (auto c = codes_.size() <=> o.codes_.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(codes_.begin(), codes_.end(), o.codes_.begin(), o.codes_.end());
    }
    bool operator==(const Monomial &) const = default;

    struct Hash {
        std::size_t operator()(const Monomial &m) const noexcept
        {
            std::uint64_t h = 1469598103934665603ull;
            for (auto c : m.codes_) {
                h ^= c;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };

    /// Factors in descending order with exponents, e.g. "h3*h1^2".
    std::string str() const
    {
        if (codes_.empty()) {
            return "1";
        }
        std::string out;
        for (std::size_t i = codes_.size(); i > 0;) {
            std::size_t j = i;
            while (j > 0 && codes_[j - 1] == codes_[i - 1]) {
                --j;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += Symbol::decode(codes_[i - 1]).str();
            if (i - j > 1) {
                out += "^" + std::to_string(i - j);
            }
            i = j;
        }
        return out;
    }

private:
    std::vector<std::uint32_t> codes_;
};

enum class Mode { Formal, Specialized };

class Polynomial {
public:
    using Term = std::pair<Monomial, Coefficient>;

    Polynomial() = default;
    Polynomial(long long c) // NOLINT(google-explicit-constructor)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial(), Coefficient(c));
        }
    }
    explicit Polynomial(const Coefficient &c)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial(), c);
        }
    }
    explicit Polynomial(const Symbol &s) { terms_.emplace_back(Monomial(s), Coefficient(1)); }
    Polynomial(const Monomial &m, const Coefficient &c)
    {
        if (c != 0) {
            terms_.emplace_back(m, c);
        }
    }

    static Polynomial h(int k) { return Polynomial(Symbol::h(k)); }
    static Polynomial t(int k, int shift) { return Polynomial(Symbol::t(k, shift)); }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    static Polynomial from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.first > b.first; });
        Polynomial out;
        for (auto &t : terms) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first) {
                out.terms_.back().second += t.second;
            } else {
                out.terms_.push_back(std::move(t));
            }
        }
        std::erase_if(out.terms_, [](const Term &t) { return t.second == 0; });
        return out;
    }

    /// Terms in descending monomial order; the first is the leading term.
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Term &leading() const { return terms_.front(); }

    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Coefficient constant_value() const { return terms_.empty() ? Coefficient(0) : terms_.back().first.is_one() ? terms_.back().second : Coefficient(0); }

    bool operator==(const Polynomial &) const = default;

    Polynomial operator-() const
    {
        Polynomial out = *this;
        for (auto &t : out.terms_) {
            t.second = -t.second;
        }
        return out;
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b) { return merge(a, b, true); }
    Polynomial &operator+=(const Polynomial &b) { return *this = merge(*this, b, false); }
    Polynomial &operator-=(const Polynomial &b) { return *this = merge(*this, b, true); }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.size() == 1) {
            return b.times_term(a.terms_[0]);
        }
        if (b.size() == 1) {
            return a.times_term(b.terms_[0]);
        }
        std::unordered_map<Monomial, Coefficient, Monomial::Hash> acc;
        acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                acc[ma * mb] += ca * cb;
            }
        }
        Polynomial out;
        out.terms_.reserve(acc.size());
        for (auto &kv : acc) {
            if (kv.second != 0) {
                out.terms_.emplace_back(kv.first, std::move(kv.second));
            }
        }
        std::sort(out.terms_.begin(), out.terms_.end(), [](const Term &x, const Term &y) { return x.first > y.first; });
        return out;
    }
    Polynomial &operator*=(const Polynomial &b) { return *this = *this * b; }

    friend Polynomial operator*(const Coefficient &c, const Polynomial &p)
    {
        if (c == 0) {
            return {};
        }
        Polynomial out = p;
        for (auto &t : out.terms_) {
            t.second *= c;
        }
        return out;
    }

    /// Multiplying by a single term preserves the monomial order.
    Polynomial times_term(const Term &t) const
    {
        Polynomial out;
        out.terms_.reserve(terms_.size());
        for (const auto &[m, c] : terms_) {
            out.terms_.emplace_back(m * t.first, c * t.second);
        }
        return out;
    }

    /// Applies f to every monomial; f returns a coefficient factor (0 kills
    /// the term) and the replacement monomial.
    template <typename F>
    Polynomial map_monomials(F &&f) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &[m, c] : terms_) {
            auto [factor, nm] = f(m);
            if (factor != 0) {
                out.emplace_back(std::move(nm), c * factor);
            }
        }
        return from_terms(std::move(out));
    }

    /// "h3*h1 - h4"; terms in descending order.
    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            Coefficient a = c < 0 ? Coefficient(-c) : c;
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += a.str();
            } else {
                if (a != 1) {
                    out += a.str() + "*";
                }
                out += m.str();
            }
        }
        return out;
    }

private:
    static Polynomial merge(const Polynomial &a, const Polynomial &b, bool subtract)
    {
        Polynomial out;
        out.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first > i->first) {
                out.terms_.emplace_back(j->first, subtract ? Coefficient(-j->second) : j->second);
                ++j;
            } else {
                Coefficient c = subtract ? Coefficient(i->second - j->second) : Coefficient(i->second + j->second);
                if (c != 0) {
                    out.terms_.emplace_back(i->first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// Specialized: h_0 = t_0(*) = 1 and h_k = t_k(*) = 0 for k < 0.
inline Polynomial specialize(const Polynomial &p, Mode mode)
{
    if (mode == Mode::Formal) {
        return p;
    }
    return p.map_monomials([](const Monomial &m) {
        std::vector<std::uint32_t> kept;
        kept.reserve(m.degree());
        for (auto c : m.codes()) {
            Symbol s = Symbol::decode(c);
            if (s.k < 0) {
                return std::pair{Coefficient(0), Monomial()};
            }
            if (s.k > 0) {
                kept.push_back(c);
            }
        }
        return std::pair{Coefficient(1), Monomial(std::move(kept))};
    });
}

/// t_k(u+c) -> h_k.
inline Polynomial forget_shift(const Polynomial &p)
{
    return p.map_monomials([](const Monomial &m) {
        std::vector<std::uint32_t> codes;
        codes.reserve(m.degree());
        for (auto c : m.codes()) {
            Symbol s = Symbol::decode(c);
            codes.push_back(Symbol::h(s.k).code());
        }
        return std::pair{Coefficient(1), Monomial(std::move(codes))};
    });
}

/// u -> u + delta in every t symbol.
inline Polynomial shift_spectral(const Polynomial &p, int delta)
{
    if (delta == 0) {
        return p;
    }
    return p.map_monomials([delta](const Monomial &m) {
        std::vector<std::uint32_t> codes;
        codes.reserve(m.degree());
        for (auto c : m.codes()) {
            Symbol s = Symbol::decode(c);
            if (s.kind == SymbolKind::T) {
                s.shift += delta;
            }
            codes.push_back(s.code());
        }
        return std::pair{Coefficient(1), Monomial(std::move(codes))};
    });
}

using Assignment = std::map<Symbol, Coefficient>;

inline Coefficient eval_numeric(const Polynomial &p, const Assignment &values)
{
    Coefficient total = 0;
    for (const auto &[m, c] : p.terms()) {
        Coefficient v = c;
        for (auto code : m.codes()) {
            Symbol s = Symbol::decode(code);
            auto it = values.find(s);
            if (it == values.end()) {
                throw MissingSymbol("no value assigned to " + s.str());
            }
            v *= it->second;
        }
        total += v;
    }
    return total;
}

/// Exact quotient num / den by repeated leading-term elimination.
inline Polynomial exact_divide(const Polynomial &num, const Polynomial &den)
{
    if (den.is_zero()) {
        throw InexactDivision("division by the zero polynomial");
    }
    const auto &[dm, dc] = den.leading();
    std::vector<Polynomial::Term> quotient;
    Polynomial rest = num;
    while (!rest.is_zero()) {
        const auto &[rm, rc] = rest.leading();
        if (!dm.divides(rm) || rc % dc != 0) {
            throw InexactDivision("leading term " + Polynomial(rm, rc).str() + " is not divisible by "
                                  + Polynomial(dm, dc).str());
        }
        Polynomial::Term q{dm.quotient_of(rm), Coefficient(rc / dc)};
        rest -= den.times_term(q);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(std::move(quotient));
}

} // namespace hschur
