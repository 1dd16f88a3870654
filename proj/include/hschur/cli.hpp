#pragma once

// Command-line front end. dispatch() parses, runs and renders; exit codes
// are 0 on success, 1 when a verification fails, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hschur/errors.hpp"
#include "hschur/hirota.hpp"
#include "hschur/jt_box.hpp"
#include "hschur/lr.hpp"
#include "hschur/partition.hpp"
#include "hschur/plucker.hpp"
#include "hschur/report.hpp"
#include "hschur/sweep.hpp"

namespace hschur::cli {

using nlohmann::json;

enum Exit { Ok = 0, Failed = 1, Usage = 2 };

struct Output {
    std::string format = "text";
    std::string path;
};

namespace detail {

inline std::vector<int> parse_ints(const std::string &s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception &) {
            throw InvalidArgument("not an integer list: '" + s + "'");
        }
    }
    return out;
}

inline std::pair<int, int> parse_pair(const std::string &s)
{
    auto v = parse_ints(s);
    if (v.size() != 2) {
        throw InvalidArgument("expected i,j but got '" + s + "'");
    }
    return {v[0], v[1]};
}

/// Corner index from --k or --ell (a column height); --ell must name an
/// existing column height.
inline int resolve_pivot(const Partition &lam, std::optional<int> k, std::optional<int> ell)
{
    const auto c = to_corners(lam);
    if (!k && !ell) {
        throw InvalidArgument("one of --k or --ell is required");
    }
    int from_ell = 0;
    if (ell) {
        if (!has_column_of_height(lam, *ell)) {
            throw NoSuchColumn("(" + lam.str() + ") has no column of height " + std::to_string(*ell));
        }
        for (int i = 1; i <= c.count(); ++i) {
            if (c[i].y == *ell) {
                from_ell = i;
            }
        }
    }
    if (k) {
        if (*k < 1 || *k > c.count()) {
            throw InvalidArgument("--k " + std::to_string(*k) + " is out of range 1.." + std::to_string(c.count()));
        }
        if (ell && *k != from_ell) {
            throw InvalidArgument("--k and --ell name different corners");
        }
        return *k;
    }
    return from_ell;
}

inline Mode parse_mode(const std::string &s)
{
    if (s == "formal") {
        return Mode::Formal;
    }
    if (s == "specialized") {
        return Mode::Specialized;
    }
    throw InvalidArgument("unknown mode '" + s + "'");
}

inline void add_output(CLI::App *app, Output &o)
{
    app->add_option("--format,--report", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--output,-o", o.path, "write the report to this file");
}

inline std::string error_name(const std::exception &e)
{
    if (dynamic_cast<const NoSuchColumn *>(&e)) {
        return "NoSuchColumn";
    }
    if (dynamic_cast<const InvalidCorners *>(&e)) {
        return "InvalidCorners";
    }
    if (dynamic_cast<const Incompatible *>(&e)) {
        return "Incompatible";
    }
    if (dynamic_cast<const InexactDivision *>(&e)) {
        return "InexactDivision";
    }
    if (dynamic_cast<const MissingSeed *>(&e)) {
        return "MissingSeed";
    }
    if (dynamic_cast<const MissingSymbol *>(&e)) {
        return "MissingSymbol";
    }
    if (dynamic_cast<const IllegalTableau *>(&e)) {
        return "IllegalTableau";
    }
    if (dynamic_cast<const InvalidPartition *>(&e)) {
        return "InvalidPartition";
    }
    if (dynamic_cast<const NonSquareMinor *>(&e)) {
        return "NonSquareMinor";
    }
    if (dynamic_cast<const UnknownRow *>(&e)) {
        return "UnknownRow";
    }
    return "InvalidArgument";
}

struct WriteFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace detail

/// Runs one command line (without the program name).
inline int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Schur function identities from Plücker relations", "hirota-schur"};
    app.require_subcommand(1);
    Output o;
    int status = Ok;
    std::string text;
    json doc;
    bool as_json = false;

    auto emit = [&](const json &j, const std::string &t) {
        doc = j;
        text = t;
    };

    // partition -------------------------------------------------------------
    auto *part = app.add_subcommand("partition", "corners, chains and strip operators");
    std::string p_lambda, p_push, p_pull;
    part->add_option("--lambda", p_lambda, "partition, e.g. 3,2,1")->required();
    part->add_option("--push", p_push, "add the border strip i,j");
    part->add_option("--pull", p_pull, "remove the border strip i,j");
    detail::add_output(part, o);
    part->callback([&] {
        const auto lam = Partition::parse(p_lambda);
        const auto c = to_corners(lam);
        json j = report::envelope("partition");
        j["lambda"] = report::to_json(lam);
        json corners = json::array();
        std::string t = "partition " + lam.str() + "\ncorners";
        for (const auto &k : c.corners) {
            corners.push_back({k.x, k.y});
            t += " (" + std::to_string(k.x) + "," + std::to_string(k.y) + ")";
        }
        t += "\n";
        j["corners"] = corners;
        j["conjugate"] = report::to_json(lam.conjugate());
        json chains = json::array();
        for (int k = 1; k <= c.count(); ++k) {
            json per = json::array();
            t += "k=" + std::to_string(k) + " (column height " + std::to_string(c[k].y) + "):";
            for (const auto &ch : enumerate_chains(c.count(), k)) {
                per.push_back(report::to_json(ch));
                t += " " + ch.str();
            }
            t += "\n";
            chains.push_back(per);
        }
        j["chains"] = chains;
        if (!p_push.empty()) {
            const auto [i, jj] = detail::parse_pair(p_push);
            const auto r = push(lam, i, jj);
            j["push"] = report::to_json(r);
            t += "push " + p_push + " -> (" + r.str() + ")\n";
        }
        if (!p_pull.empty()) {
            const auto [i, jj] = detail::parse_pair(p_pull);
            const auto r = pull(lam, i, jj);
            j["pull"] = report::to_json(r);
            t += "pull " + p_pull + " -> (" + r.str() + ")\n";
        }
        emit(j, t);
    });

    // box -------------------------------------------------------------------
    auto *boxc = app.add_subcommand("box", "build A□B");
    std::string b_lambda, b_a, b_b, b_family = "plain", b_inner_a, b_inner_b;
    std::optional<int> b_ell, b_shift_b;
    int b_offset = 0, b_shift_a = 0;
    boxc->add_option("--lambda", b_lambda, "build M_{λ-ω} □ M_{λ+ω}");
    boxc->add_option("--ell", b_ell, "column height for --lambda");
    boxc->add_option("--a", b_a, "parts of A");
    boxc->add_option("--b", b_b, "parts of B");
    boxc->add_option("--family", b_family)->check(CLI::IsMember({"plain", "formal", "skew", "quantum"}));
    boxc->add_option("--offset", b_offset, "spectral offset for --lambda");
    boxc->add_option("--shift-a", b_shift_a);
    boxc->add_option("--shift-b", b_shift_b, "defaults to the compatible shift");
    boxc->add_option("--inner-a", b_inner_a, "skew inner shape of A");
    boxc->add_option("--inner-b", b_inner_b, "skew inner shape of B");
    detail::add_output(boxc, o);
    boxc->callback([&] {
        const Flavor fl = parse_flavor(b_family);
        BoxMatrix bm;
        if (!b_lambda.empty()) {
            if (!b_ell) {
                throw InvalidArgument("--ell is required with --lambda");
            }
            bm = box_for_column(Partition::parse(b_lambda), *b_ell,
                                fl == Flavor::Quantum ? JTFamily::quantum() : JTFamily{fl, {}}, b_offset);
        } else {
            if (b_a.empty() || b_b.empty()) {
                throw InvalidArgument("give --lambda and --ell, or --a and --b");
            }
            auto a = detail::parse_ints(b_a);
            auto b = detail::parse_ints(b_b);
            JTFamily fam{fl, fl == Flavor::Skew ? Partition::parse(b_inner_a) : Partition()};
            int sb = b_shift_b ? *b_shift_b : (fl == Flavor::Quantum ? compatible_quantum_shift(a, b_shift_a, b) : 0);
            bm = box({a, b_shift_a}, {b, sb}, fam, fl == Flavor::Skew ? Partition::parse(b_inner_b) : Partition());
        }
        json j = report::to_json(bm);
        std::string t = report::to_text(bm.matrix);
        const auto ra = read_minor(bm.matrix, bm.a_anchor());
        const auto rb = read_minor(bm.matrix, bm.b_anchor());
        t += labels_str(bm.a_anchor()) + " = " + report::reading_str(ra) + "\n";
        t += labels_str(bm.b_anchor()) + " = " + report::reading_str(rb) + "\n";
        if (fl != Flavor::Skew && !b_lambda.empty()) {
            json dups = json::array();
            for (const auto &[x, y] : duplicate_rows(bm)) {
                dups.push_back({x.str(), y.str()});
                t += "row " + x.str() + " = row " + y.str() + "\n";
            }
            j["duplicate_rows"] = dups;
        }
        emit(j, t);
    });

    // plucker ---------------------------------------------------------------
    auto *pl = app.add_subcommand("plucker", "Plücker relations");
    pl->require_subcommand(1);
    auto *gen = pl->add_subcommand("generate", "list the terms of a relation");
    int g_n = 0;
    std::string g_swap;
    gen->add_option("--n", g_n)->required();
    gen->add_option("--swap", g_swap, "positions, e.g. 1,2")->required();
    detail::add_output(gen, o);
    gen->callback([&] {
        const auto rel = generate(g_n, detail::parse_ints(g_swap));
        emit(report::to_json(rel), report::to_text(rel));
    });

    auto *ver = pl->add_subcommand("verify", "expand a relation exactly");
    std::string v_box, v_family = "plain", v_mode, v_swap;
    std::optional<int> v_k, v_ell;
    int v_n = 0, v_trials = 50;
    std::uint64_t v_seed = 1;
    ver->add_option("--box", v_box, "λ for the relation on M_{λ-ω} □ M_{λ+ω}");
    ver->add_option("--k", v_k, "corner index");
    ver->add_option("--ell", v_ell, "column height");
    ver->add_option("--family", v_family)->check(CLI::IsMember({"plain", "formal", "quantum"}));
    ver->add_option("--mode", v_mode, "formal or specialized")->check(CLI::IsMember({"formal", "specialized"}));
    ver->add_option("--n", v_n, "size for random integer matrices");
    ver->add_option("--swap", v_swap);
    ver->add_option("--trials", v_trials);
    ver->add_option("--seed", v_seed);
    detail::add_output(ver, o);
    ver->callback([&] {
        if (!v_box.empty()) {
            const auto lam = Partition::parse(v_box);
            const int k = detail::resolve_pivot(lam, v_k, v_ell);
            const int ell = to_corners(lam)[k].y;
            const Flavor fl = parse_flavor(v_family);
            const JTFamily fam = fl == Flavor::Quantum ? JTFamily::quantum() : JTFamily{fl, {}};
            const Mode mode = v_mode.empty() ? fam.default_mode() : detail::parse_mode(v_mode);
            const auto br = box_relation(lam, ell, fam);
            const auto chk = verify(br.relation, br.box.matrix.specialized(mode));
            json j = report::to_json(br.relation, &br);
            j["lambda"] = report::to_json(lam);
            j["ell"] = ell;
            j["family"] = v_family;
            j["check"] = {{"ok", chk.ok}, {"residual", report::to_json(chk.residual)}};
            std::string t = report::to_text(br.relation, &br);
            t += chk.ok ? "verified: lhs - rhs = 0\n" : "FAILED: lhs - rhs = " + chk.residual.str() + "\n";
            status = chk.ok ? Ok : Failed;
            emit(j, t);
            return;
        }
        if (v_n < 1 || v_swap.empty()) {
            throw InvalidArgument("give --box, or --n with --swap");
        }
        const auto rel = generate(v_n, detail::parse_ints(v_swap));
        std::mt19937_64 rng(v_seed);
        int failed = -1;
        for (int trial = 0; trial < v_trials && failed < 0; ++trial) {
            if (!verify(rel, random_matrix(v_n, rng)).ok) {
                failed = trial;
            }
        }
        json j = report::to_json(rel);
        j["check"] = {{"ok", failed < 0}, {"trials", v_trials}, {"seed", v_seed}};
        std::string t = report::to_text(rel);
        t += failed < 0 ? "verified on " + std::to_string(v_trials) + " random integer matrices\n"
                        : "FAILED on trial " + std::to_string(failed) + "\n";
        status = failed < 0 ? Ok : Failed;
        emit(j, t);
    });

    // hirota ----------------------------------------------------------------
    auto *hi = app.add_subcommand("hirota", "Hirota identities and the recurrence");
    hi->require_subcommand(1);
    auto *ident = hi->add_subcommand("identity", "the identity for λ and a corner");
    std::string h_lambda, h_mode;
    std::optional<int> h_k, h_ell;
    bool h_quantum = false, h_verify = false, h_normalize = false;
    ident->add_option("--lambda", h_lambda)->required();
    ident->add_option("--k", h_k, "corner index");
    ident->add_option("--ell", h_ell, "column height");
    ident->add_flag("--quantum", h_quantum, "spectral parameters");
    ident->add_flag("--normalize", h_normalize, "drop zero parts into the shifts");
    ident->add_flag("--verify", h_verify, "expand and check");
    ident->add_option("--mode", h_mode)->check(CLI::IsMember({"formal", "specialized"}));
    detail::add_output(ident, o);
    ident->callback([&] {
        const auto lam = Partition::parse(h_lambda);
        const int k = detail::resolve_pivot(lam, h_k, h_ell);
        HirotaIdentity id = h_quantum ? quantum_identity(lam, k) : main_identity(lam, k);
        if (h_normalize) {
            id = normalize_zero_parts(id);
        }
        json j = report::to_json(id);
        std::string t = report::to_text(id);
        if (h_verify) {
            Mode mode = h_mode.empty() ? (h_normalize ? Mode::Specialized : (h_quantum ? Mode::Formal : Mode::Specialized))
                                       : detail::parse_mode(h_mode);
            const auto chk = verify_identity(id, mode);
            j["check"] = {{"ok", chk.ok},
                          {"zero", chk.zero},
                          {"plucker_match", chk.plucker_match},
                          {"mode", mode == Mode::Formal ? "formal" : "specialized"},
                          {"residual", report::to_json(chk.residual)}};
            t += chk.ok ? "verified: lhs - rhs = 0, terms match the Plücker relation\n" : "FAILED: " + chk.detail + "\n";
            status = chk.ok ? Ok : Failed;
        }
        emit(j, t);
    });

    auto *evo = hi->add_subcommand("evolve", "solve the recurrence up to a target");
    std::string e_target;
    bool e_quantum = false;
    evo->add_option("--target", e_target)->required();
    evo->add_flag("--quantum", e_quantum, "evolve s^{(u)} in the t-ring");
    detail::add_output(evo, o);
    evo->callback([&] {
        const auto target = Partition::parse(e_target);
        const JTFamily fam = e_quantum ? JTFamily::quantum() : JTFamily::plain();
        Evolver ev = e_quantum ? Evolver([&](const Partition &p) { return jt_determinant(p.parts(), fam, 0, Mode::Specialized); },
                                         true)
                               : Evolver(SingleColumnSeeds{});
        const auto st = ev.state(target);
        const auto direct = jt_determinant(target.parts(), fam, 0, Mode::Specialized);
        const bool same = st.value == direct;
        json j = report::envelope("evolve");
        j["target"] = report::to_json(target);
        j["quantum"] = e_quantum;
        j["provenance"] = st.provenance == Provenance::Seed ? "seed" : "evolved";
        j["steps"] = ev.steps();
        j["value"] = report::to_json(st.value);
        j["matches_determinant"] = same;
        std::string t = "s[" + target.str() + "]" + (e_quantum ? "^(u)" : "") + " = " + st.value.str() + "\n";
        t += std::string(st.provenance == Provenance::Seed ? "seed" : "evolved") + " in " + std::to_string(ev.steps())
             + " steps; " + (same ? "matches" : "DIFFERS FROM") + " the Jacobi-Trudi determinant\n";
        status = same ? Ok : Failed;
        emit(j, t);
    });

    // lr --------------------------------------------------------------------
    auto *lr = app.add_subcommand("lr", "Littlewood-Richardson products by column words");
    lr->require_subcommand(1);
    auto *mul = lr->add_subcommand("multiply", "s_λ s_μ as a multiset of shapes");
    std::string l_lambda, l_mu;
    int l_max = 0;
    mul->add_option("--lambda", l_lambda)->required();
    mul->add_option("--mu", l_mu)->required();
    mul->add_option("--max-entry", l_max, "largest tableau entry");
    detail::add_output(mul, o);
    mul->callback([&] {
        const auto a = Partition::parse(l_lambda);
        const auto b = Partition::parse(l_mu);
        const auto s = lr_multiply(a, b, l_max);
        json j = report::envelope("lr-product");
        j["lambda"] = report::to_json(a);
        j["mu"] = report::to_json(b);
        j["shapes"] = report::to_json(s);
        emit(j, report::to_text(s));
    });

    auto *conj = lr->add_subcommand("conjecture", "shape-level inclusion-exclusion check");
    std::string c_lambda;
    std::optional<int> c_k, c_ell;
    conj->add_option("--lambda", c_lambda)->required();
    conj->add_option("--k", c_k);
    conj->add_option("--ell", c_ell);
    detail::add_output(conj, o);
    conj->callback([&] {
        const auto lam = Partition::parse(c_lambda);
        const auto r = conjecture_check(lam, detail::resolve_pivot(lam, c_k, c_ell));
        status = r.holds ? Ok : Failed;
        emit(report::to_json(r), report::to_text(r));
    });

    auto *rect = lr->add_subcommand("rectangle", "check the two-case rectangle bijection");
    int r_m = 0, r_ell = 0;
    rect->add_option("--m", r_m)->required();
    rect->add_option("--ell", r_ell)->required();
    detail::add_output(rect, o);
    rect->callback([&] {
        if (r_m < 1 || r_ell < 1) {
            throw InvalidArgument("--m and --ell must be positive");
        }
        const auto r = check_rectangle_bijection(r_m, r_ell);
        json j = report::envelope("rectangle-bijection");
        j["m"] = r_m;
        j["ell"] = r_ell;
        j["legal"] = r.legal;
        j["case_a"] = r.case_a;
        j["case_b"] = r.case_b;
        j["injective"] = r.injective;
        j["surjective"] = r.surjective;
        j["shape_preserving"] = r.shape_preserving;
        std::string t = std::to_string(r.legal) + " legal tableaux: " + std::to_string(r.case_a) + " in case A, "
                        + std::to_string(r.case_b) + " in case B\n";
        t += std::string("injective ") + (r.injective ? "yes" : "no") + ", surjective " + (r.surjective ? "yes" : "no")
             + ", shape preserving " + (r.shape_preserving ? "yes" : "no") + "\n";
        status = r.ok() ? Ok : Failed;
        emit(j, t);
    });

    // sweep -----------------------------------------------------------------
    auto *sw = app.add_subcommand("sweep", "exhaustive verification");
    std::string s_what = "main-identity";
    SweepBounds bounds;
    bool max_boxes_set = false;
    sw->add_option("--what", s_what)->check(CLI::IsMember(sweep_kinds()));
    sw->add_option("--max-boxes", bounds.max_boxes)->each([&](const std::string &) { max_boxes_set = true; });
    sw->add_option("--max-corners", bounds.max_corners);
    sw->add_option("--max-size", bounds.max_size, "Plücker n, rectangle m and ℓ");
    sw->add_option("--trials", bounds.trials);
    sw->add_option("--seed", bounds.seed);
    detail::add_output(sw, o);
    sw->callback([&] {
        if (!max_boxes_set) {
            if (s_what == "quantum-identity") {
                bounds.max_boxes = 6;
            } else if (s_what == "evolve" || s_what == "main-identity") {
                bounds.max_boxes = s_what == "evolve" ? 10 : 12;
            } else if (s_what == "conjecture") {
                bounds.max_boxes = 9;
            } else if (s_what == "lr") {
                bounds.max_boxes = 6;
            }
        }
        if (s_what == "rectangle" && sw->count("--max-size") == 0) {
            bounds.max_size = 3;
        }
        const auto r = run_sweep(s_what, bounds);
        json j = report::envelope("sweep");
        j["what"] = r.what;
        j["max_boxes"] = bounds.max_boxes;
        j["cases"] = r.cases;
        j["failures"] = r.failures;
        j["ok"] = r.ok();
        std::string t = r.what + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failures\n";
        for (const auto &f : r.failures) {
            t += "  " + f + "\n";
        }
        status = r.ok() ? Ok : Failed;
        emit(j, t);
    });

    std::vector<std::string> argv_store{"hirota-schur"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    } catch (const InexactDivision &e) {
        err << "error: InexactDivision: " << e.what() << "\n";
        return Failed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << detail::error_name(e) << ": " << e.what() << "\n";
        return Usage;
    } catch (const std::domain_error &e) {
        err << "error: " << detail::error_name(e) << ": " << e.what() << "\n";
        return Usage;
    }
    as_json = o.format == "json";
    const std::string rendered = as_json ? doc.dump(2) + "\n" : text;
    if (!o.path.empty()) {
        std::ofstream f(o.path, std::ios::binary);
        if (!f || !(f << rendered) || !f.flush()) {
            err << "error: cannot write " << o.path << "\n";
            return Usage;
        }
    } else {
        out << rendered;
    }
    if (status == Failed) {
        err << "verification failed\n";
    }
    return status;
}

} // namespace hschur::cli
