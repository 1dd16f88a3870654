#pragma once

// Text and JSON renderings, with parsers for the JSON forms.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hschur/hirota.hpp"
#include "hschur/jt_box.hpp"
#include "hschur/lr.hpp"
#include "hschur/partition.hpp"
#include "hschur/plucker.hpp"
#include "hschur/polynomial.hpp"

namespace hschur::report {

using nlohmann::json;

inline constexpr const char *schema = "hirota-schur/1";

inline json envelope(const std::string &type)
{
    return json{{"schema", schema}, {"type", type}};
}

// ---------------------------------------------------------------------------
// Polynomials

inline json to_json(const Polynomial &p)
{
    json out = json::array();
    for (const auto &[m, c] : p.terms()) {
        json factors = json::array();
        for (const auto &s : m.symbols()) {
            factors.push_back({{"kind", s.kind == SymbolKind::H ? "h" : "t"}, {"k", s.k}, {"shift", s.shift}});
        }
        out.push_back({{"coeff", c.str()}, {"factors", factors}});
    }
    return out;
}

inline Polynomial polynomial_from_json(const json &j)
{
    std::vector<Polynomial::Term> terms;
    for (const auto &t : j) {
        std::vector<Symbol> syms;
        for (const auto &f : t.at("factors")) {
            const auto kind = f.at("kind").get<std::string>();
            if (kind != "h" && kind != "t") {
                throw InvalidArgument("unknown symbol kind '" + kind + "'");
            }
            syms.push_back({kind == "h" ? SymbolKind::H : SymbolKind::T, f.at("k").get<int>(), f.at("shift").get<int>()});
        }
        terms.emplace_back(Monomial::from_symbols(syms), Coefficient(t.at("coeff").get<std::string>()));
    }
    return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Partitions and chains

inline json to_json(const Partition &p) { return p.parts(); }
inline json to_json(const PaddedPartition &p) { return p.parts(); }
inline Partition partition_from_json(const json &j) { return Partition(j.get<std::vector<int>>()); }
inline PaddedPartition padded_from_json(const json &j) { return PaddedPartition::from_parts(j.get<std::vector<int>>()); }

inline json to_json(const IntervalChain &c)
{
    json iv = json::array();
    for (const auto &i : c.intervals) {
        iv.push_back({i.i, i.j});
    }
    return {{"k", c.k}, {"intervals", iv}};
}

inline IntervalChain chain_from_json(const json &j)
{
    IntervalChain c{j.at("k").get<int>(), {}};
    for (const auto &iv : j.at("intervals")) {
        c.intervals.push_back({iv.at(0).get<int>(), iv.at(1).get<int>()});
    }
    return c;
}

// ---------------------------------------------------------------------------
// Hirota identities

inline json to_json(const HirotaTerm &t)
{
    return {{"kind", kind_name(t.kind)},
            {"chain", t.chain ? to_json(*t.chain) : json(nullptr)},
            {"alpha", to_json(t.alpha)},
            {"beta", to_json(t.beta)},
            {"sign", t.sign},
            {"shift_left", t.shift_left},
            {"shift_right", t.shift_right}};
}

inline HirotaTerm term_from_json(const json &j)
{
    HirotaTerm t;
    t.kind = parse_kind(j.at("kind").get<std::string>());
    if (!j.at("chain").is_null()) {
        t.chain = chain_from_json(j.at("chain"));
    }
    t.alpha = padded_from_json(j.at("alpha"));
    t.beta = padded_from_json(j.at("beta"));
    t.sign = j.at("sign").get<int>();
    t.shift_left = j.at("shift_left").get<int>();
    t.shift_right = j.at("shift_right").get<int>();
    return t;
}

inline json to_json(const HirotaIdentity &id)
{
    json out = envelope("hirota-identity");
    out["lambda"] = to_json(id.lambda);
    out["k"] = id.k;
    out["ell"] = id.ell;
    out["quantum"] = id.quantum;
    out["normalized"] = id.normalized;
    out["lhs"] = to_json(id.lhs);
    out["rhs"] = json::array();
    for (const auto &t : id.rhs) {
        out["rhs"].push_back(to_json(t));
    }
    return out;
}

inline HirotaIdentity identity_from_json(const json &j)
{
    HirotaIdentity id;
    id.lambda = partition_from_json(j.at("lambda"));
    id.k = j.at("k").get<int>();
    id.ell = j.at("ell").get<int>();
    id.quantum = j.at("quantum").get<bool>();
    id.normalized = j.at("normalized").get<bool>();
    id.lhs = term_from_json(j.at("lhs"));
    for (const auto &t : j.at("rhs")) {
        id.rhs.push_back(term_from_json(t));
    }
    return id;
}

inline std::string shift_str(int s)
{
    if (s == 0) {
        return "(u)";
    }
    return "(u" + std::string(s > 0 ? "+" : "") + std::to_string(s) + ")";
}

/// "s[3,2,1]" for plain identities (zero parts dropped), "s[3,0]^(u)" with
/// padding for spectral ones.
inline std::string schur_str(const PaddedPartition &p, bool quantum, int shift)
{
    if (!quantum) {
        return "s[" + (p.shape.empty() ? std::string() : p.shape.str()) + "]";
    }
    return "s[" + p.str() + "]^" + shift_str(shift);
}

inline std::string product_str(const HirotaTerm &t, bool quantum)
{
    const std::string a = schur_str(t.alpha, quantum, t.shift_left);
    const std::string b = schur_str(t.beta, quantum, t.shift_right);
    return quantum ? a + " * " + b : a + "*" + b;
}

inline std::string to_text(const HirotaIdentity &id)
{
    std::string out = product_str(id.lhs, id.quantum) + " =\n";
    for (const auto &t : id.rhs) {
        out += std::string(t.sign < 0 ? "- " : "+ ") + product_str(t, id.quantum) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plücker relations

inline json labels_json(const std::vector<RowLabel> &rows)
{
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back(r.str());
    }
    return out;
}

inline std::vector<RowLabel> labels_from_json(const json &j)
{
    std::vector<RowLabel> out;
    for (const auto &s : j) {
        out.push_back(RowLabel::parse(s.get<std::string>()));
    }
    return out;
}

inline json to_json(const MinorReading &r)
{
    json out{{"parts", r.parts}, {"sign", r.sign}, {"family", flavor_name(r.flavor)}};
    if (r.flavor == Flavor::Quantum) {
        out["shift"] = r.shift;
    }
    if (r.flavor == Flavor::Skew) {
        out["inner"] = r.inner;
    }
    return out;
}

inline json to_json(const SchurForm &f)
{
    if (f.coeff == 0) {
        return {{"coeff", 0}};
    }
    return {{"coeff", f.coeff}, {"left", to_json(f.left)}, {"right", to_json(f.right)}};
}

inline json to_json(const PluckerTerm &t, const SchurForm *form = nullptr)
{
    json out{{"rows_left", labels_json(t.left)}, {"rows_right", labels_json(t.right)}, {"sign", t.sign}};
    if (form != nullptr) {
        out["schur_form"] = to_json(*form);
    }
    return out;
}

inline PluckerTerm plucker_term_from_json(const json &j)
{
    auto t = PluckerTerm::make(labels_from_json(j.at("rows_left")), labels_from_json(j.at("rows_right")));
    if (t.sign != j.at("sign").get<int>()) {
        throw InvalidArgument("recorded sign disagrees with the row order");
    }
    return t;
}

inline json to_json(const PluckerRelation &rel, const BoxRelation *box = nullptr)
{
    json out = envelope("plucker-relation");
    out["n"] = rel.n;
    out["swap"] = rel.swap;
    out["lhs"] = to_json(rel.lhs, box ? &box->lhs : nullptr);
    out["rhs"] = json::array();
    for (std::size_t t = 0; t < rel.rhs.size(); ++t) {
        out["rhs"].push_back(to_json(rel.rhs[t], box ? &box->rhs[t] : nullptr));
    }
    return out;
}

inline PluckerRelation relation_from_json(const json &j)
{
    PluckerRelation rel;
    rel.n = j.at("n").get<int>();
    rel.swap = j.at("swap").get<std::vector<int>>();
    rel.lhs = plucker_term_from_json(j.at("lhs"));
    for (const auto &t : j.at("rhs")) {
        rel.rhs.push_back(plucker_term_from_json(t));
    }
    return rel;
}

inline std::string reading_str(const MinorReading &r)
{
    std::string s = "s[" + PaddedPartition::from_parts(r.parts).str() + "]";
    if (r.flavor == Flavor::Quantum) {
        s += "^" + shift_str(r.shift);
    }
    return s;
}

inline std::string to_text(const PluckerRelation &rel, const BoxRelation *box = nullptr)
{
    std::string out = rel.lhs.str();
    if (box) {
        out += "    " + reading_str(box->lhs.left) + " * " + reading_str(box->lhs.right);
    }
    out += "\n=\n";
    for (std::size_t t = 0; t < rel.rhs.size(); ++t) {
        out += "+ " + rel.rhs[t].str();
        if (box) {
            const auto &f = box->rhs[t];
            out += "    ";
            if (f.coeff == 0) {
                out += "0";
            } else {
                out += std::string(f.coeff < 0 ? "- " : "+ ") + reading_str(f.left) + " * " + reading_str(f.right);
            }
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrices

inline json to_json(const SymMatrix &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        json entries = json::array();
        for (const auto &e : m.rows()[r]) {
            entries.push_back(to_json(e));
        }
        rows.push_back({{"label", m.labels()[r].str()}, {"entries", entries}});
    }
    return {{"cols", m.cols()}, {"rows", rows}};
}

inline json to_json(const BoxMatrix &b)
{
    json out = envelope("box-matrix");
    out["family"] = flavor_name(b.family.flavor);
    out["a"] = {{"parts", b.a.parts}, {"shift", b.a.shift}};
    out["b"] = {{"parts", b.b.parts}, {"shift", b.b.shift}};
    if (b.family.flavor == Flavor::Skew) {
        out["a"]["inner"] = to_json(b.family.inner);
        out["b"]["inner"] = to_json(b.inner_b);
    }
    out["matrix"] = to_json(b.matrix);
    return out;
}

inline std::string to_text(const SymMatrix &m)
{
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(m.cols(), 0);
    std::size_t label_w = 0;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        label_w = std::max(label_w, m.labels()[r].str().size());
        cells.emplace_back();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells.back().push_back(m.rows()[r][c].str());
            width[c] = std::max(width[c], cells.back().back().size());
        }
    }
    std::string out;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::string label = m.labels()[r].str();
        out += std::string(label_w - label.size(), ' ') + label + " |";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += " " + cells[r][c] + std::string(width[c] - cells[r][c].size(), ' ');
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multisets

inline json to_json(const ShapeMultiset &s)
{
    json out = json::array();
    for (const auto &[p, c] : s) {
        if (c != 0) {
            out.push_back({{"shape", to_json(p)}, {"multiplicity", c}});
        }
    }
    return out;
}

inline ShapeMultiset multiset_from_json(const json &j)
{
    ShapeMultiset out;
    for (const auto &e : j) {
        out[partition_from_json(e.at("shape"))] += e.at("multiplicity").get<std::int64_t>();
    }
    return out;
}

inline std::string to_text(const ShapeMultiset &s)
{
    std::string out;
    for (const auto &[p, c] : s) {
        if (c != 0) {
            out += std::to_string(c) + " x s[" + (p.empty() ? std::string() : p.str()) + "]\n";
        }
    }
    return out;
}

inline json to_json(const ConjectureReport &r)
{
    json out = envelope("conjecture");
    out["lambda"] = to_json(r.lambda);
    out["k"] = r.k;
    out["ell"] = r.ell;
    out["whole"] = to_json(r.whole);
    out["terms"] = json::array();
    for (const auto &t : r.terms) {
        out["terms"].push_back({{"chain", t.chain ? to_json(*t.chain) : json(nullptr)},
                                {"acting", to_json(t.acting)},
                                {"start", to_json(t.start)},
                                {"sign", t.sign},
                                {"shapes", to_json(t.shapes)}});
    }
    out["difference"] = to_json(r.difference);
    out["holds"] = r.holds;
    return out;
}

inline ConjectureReport conjecture_from_json(const json &j)
{
    ConjectureReport r;
    r.lambda = partition_from_json(j.at("lambda"));
    r.k = j.at("k").get<int>();
    r.ell = j.at("ell").get<int>();
    r.whole = multiset_from_json(j.at("whole"));
    for (const auto &t : j.at("terms")) {
        ConjectureTerm ct;
        if (!t.at("chain").is_null()) {
            ct.chain = chain_from_json(t.at("chain"));
        }
        ct.acting = partition_from_json(t.at("acting"));
        ct.start = partition_from_json(t.at("start"));
        ct.sign = t.at("sign").get<int>();
        ct.shapes = multiset_from_json(t.at("shapes"));
        r.terms.push_back(std::move(ct));
    }
    r.difference = multiset_from_json(j.at("difference"));
    r.holds = j.at("holds").get<bool>();
    return r;
}

inline std::string to_text(const ConjectureReport &r)
{
    std::string out = "SSYT(" + r.lambda.str() + ") on Y(" + r.lambda.str() + "): " + multiset_str(r.whole) + "\n";
    for (const auto &t : r.terms) {
        out += std::string(t.sign < 0 ? "- " : "+ ") + "SSYT(" + t.acting.str() + ") on Y(" + t.start.str() + ")";
        out += t.chain ? " " + t.chain->str() : std::string();
        out += ": " + multiset_str(t.shapes) + "\n";
    }
    out += r.holds ? "holds\n" : "fails, difference " + multiset_str(r.difference) + "\n";
    return out;
}

} // namespace hschur::report
