#pragma once

// Exhaustive verification sweeps, fanned out over worker threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hschur/hirota.hpp"
#include "hschur/lr.hpp"
#include "hschur/partition.hpp"
#include "hschur/plucker.hpp"

namespace hschur {

/// Worker count: HIROTA_SWEEP_JOBS if set and positive, else the hardware
/// concurrency.
inline unsigned sweep_jobs()
{
    if (const char *env = std::getenv("HIROTA_SWEEP_JOBS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct SweepBounds {
    int max_boxes = 12;
    int max_corners = 4;
    int max_size = 5;  // Plücker n, rectangle m and ℓ
    int trials = 50;   // random matrices per relation
    std::uint64_t seed = 20240607;
};

struct SweepReport {
    std::string what;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const noexcept { return failures.empty(); }
};

/// Runs task(i, worker) for i in [0, n) on `jobs` threads. Each task writes
/// its own slot, so the merged result is ordered by case.
template <typename Worker, typename Task>
void parallel_cases(std::size_t n, unsigned jobs, std::function<Worker()> make_worker, Task task)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        Worker w = make_worker();
        for (std::size_t i = next++; i < n; i = next++) {
            task(i, w);
        }
    };
    if (jobs == 1) {
        run();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(run);
    }
    for (auto &t : pool) {
        t.join();
    }
}

namespace detail {

struct Case {
    Partition lambda;
    int k;
};

inline std::vector<Case> identity_cases(int max_boxes, int max_corners)
{
    std::vector<Case> out;
    for (const auto &p : partitions_up_to(max_boxes)) {
        const int n = corner_count(p);
        if (n == 0 || n > max_corners) {
            continue;
        }
        for (int k = 1; k <= n; ++k) {
            out.push_back({p, k});
        }
    }
    return out;
}

inline SweepReport finish(std::string what, std::size_t cases, std::vector<std::string> slots,
                          std::chrono::steady_clock::time_point t0)
{
    SweepReport r{std::move(what), cases, {}, 0};
    for (auto &s : slots) {
        if (!s.empty()) {
            r.failures.push_back(std::move(s));
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

/// Plain identity for every λ and pivot, expanded in the specialized ring
/// and matched against the box Plücker relation.
inline SweepReport sweep_main_identity(const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto cases = detail::identity_cases(b.max_boxes, b.max_corners);
    std::vector<std::string> slots(cases.size());
    parallel_cases<SchurEvaluator>(
        cases.size(), jobs, [] { return SchurEvaluator(false, Mode::Specialized); },
        [&](std::size_t i, SchurEvaluator &ev) {
            const auto &c = cases[i];
            const auto chk = verify_identity(main_identity(c.lambda, c.k), Mode::Specialized, &ev);
            if (!chk.ok) {
                slots[i] = "(" + c.lambda.str() + ") k=" + std::to_string(c.k) + ": " + chk.detail;
            }
        });
    return detail::finish("main-identity", cases.size(), std::move(slots), t0);
}

/// Spectral identity: padded form in the unspecialized t-ring, and the
/// zero-part normalized form after specialization.
inline SweepReport sweep_quantum_identity(const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto cases = detail::identity_cases(b.max_boxes, b.max_corners);
    std::vector<std::string> slots(cases.size());
    struct Pair {
        SchurEvaluator formal{true, Mode::Formal};
        SchurEvaluator special{true, Mode::Specialized};
    };
    parallel_cases<Pair>(
        cases.size(), jobs, [] { return Pair{}; },
        [&](std::size_t i, Pair &ev) {
            const auto &c = cases[i];
            const auto id = quantum_identity(c.lambda, c.k);
            const auto a = verify_identity(id, Mode::Formal, &ev.formal);
            const auto n = verify_identity(normalize_zero_parts(id), Mode::Specialized, &ev.special, false);
            if (!a.ok || !n.ok) {
                slots[i] = "(" + c.lambda.str() + ") k=" + std::to_string(c.k) + ": " + (a.ok ? n.detail : a.detail);
            }
        });
    return detail::finish("quantum-identity", cases.size(), std::move(slots), t0);
}

/// Random integer matrix with labelled rows 1..2n and n columns.
inline SymMatrix random_matrix(int n, std::mt19937_64 &rng, int bound = 9)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    SymMatrix m(static_cast<std::size_t>(n));
    for (int i = 1; i <= 2 * n; ++i) {
        std::vector<Polynomial> row;
        for (int j = 0; j < n; ++j) {
            row.emplace_back(static_cast<long long>(d(rng)));
        }
        m.add_row(RowLabel::row(i), std::move(row));
    }
    return m;
}

/// Every swap set {1..s} for n <= max_size against random integer matrices.
inline SweepReport sweep_plucker(const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        int n;
        int s;
    };
    std::vector<Case> cases;
    for (int n = 2; n <= b.max_size; ++n) {
        for (int s = 1; s <= n; ++s) {
            cases.push_back({n, s});
        }
    }
    std::vector<std::string> slots(cases.size());
    parallel_cases<int>(
        cases.size(), jobs, [] { return 0; },
        [&](std::size_t i, int &) {
            const auto [n, s] = cases[i];
            std::vector<int> swap;
            for (int r = 1; r <= s; ++r) {
                swap.push_back(r);
            }
            const auto rel = generate(n, swap);
            std::mt19937_64 rng(b.seed + 1000003ull * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(s));
            for (int trial = 0; trial < b.trials; ++trial) {
                if (!verify(rel, random_matrix(n, rng)).ok) {
                    slots[i] = "n=" + std::to_string(n) + " swap size " + std::to_string(s) + " trial " + std::to_string(trial);
                    return;
                }
            }
        });
    return detail::finish("plucker", cases.size(), std::move(slots), t0);
}

/// Evolved values against direct determinants, both step policies.
inline SweepReport sweep_evolve(const SweepBounds &b)
{
    const auto t0 = std::chrono::steady_clock::now();
    Evolver shortest{SingleColumnSeeds{}, false, StepPolicy::Shortest};
    Evolver tallest{SingleColumnSeeds{}, false, StepPolicy::Tallest};
    const auto ps = partitions_up_to(b.max_boxes);
    std::vector<std::string> slots(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        try {
            const auto &v = shortest.evolve(ps[i]);
            const auto direct = jt_determinant(ps[i].parts(), JTFamily::plain(), 0, Mode::Specialized);
            if (!(v == direct) || !(v == tallest.evolve(ps[i]))) {
                slots[i] = "(" + ps[i].str() + "): evolved value differs";
            }
        } catch (const std::exception &e) {
            slots[i] = "(" + ps[i].str() + "): " + e.what();
        }
    }
    return detail::finish("evolve", ps.size(), std::move(slots), t0);
}

/// Symmetry and alphabet stabilization of the column-word product.
inline SweepReport sweep_lr(const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto ps = partitions_up_to(b.max_boxes);
    std::vector<std::pair<std::size_t, std::size_t>> cases;
    for (std::size_t x = 0; x < ps.size(); ++x) {
        for (std::size_t y = x; y < ps.size(); ++y) {
            cases.emplace_back(x, y);
        }
    }
    std::vector<std::string> slots(cases.size());
    parallel_cases<int>(
        cases.size(), jobs, [] { return 0; },
        [&](std::size_t i, int &) {
            const auto &l = ps[cases[i].first];
            const auto &m = ps[cases[i].second];
            const auto a = lr_multiply(l, m);
            if (a != lr_multiply(m, l) || a != lr_multiply(l, m, default_max_entry(l, m) + 1)) {
                slots[i] = "(" + l.str() + ") x (" + m.str() + ")";
            }
        });
    return detail::finish("lr", cases.size(), std::move(slots), t0);
}

inline SweepReport sweep_conjecture(const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto cases = detail::identity_cases(b.max_boxes, b.max_corners);
    std::vector<std::string> slots(cases.size());
    parallel_cases<int>(
        cases.size(), jobs, [] { return 0; },
        [&](std::size_t i, int &) {
            const auto r = conjecture_check(cases[i].lambda, cases[i].k);
            if (!r.holds) {
                slots[i] = "(" + cases[i].lambda.str() + ") k=" + std::to_string(cases[i].k) + ": " + multiset_str(r.difference);
            }
        });
    return detail::finish("conjecture", cases.size(), std::move(slots), t0);
}

inline SweepReport sweep_rectangle(const SweepBounds &b)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> slots;
    for (int m = 1; m <= b.max_size; ++m) {
        for (int l = 1; l <= b.max_size; ++l) {
            const auto r = check_rectangle_bijection(m, l);
            slots.push_back(r.ok() ? std::string() : std::to_string(m) + "^" + std::to_string(l));
        }
    }
    const std::size_t n = slots.size();
    return detail::finish("rectangle", n, std::move(slots), t0);
}

inline const std::vector<std::string> &sweep_kinds()
{
    static const std::vector<std::string> kinds{"main-identity", "quantum-identity", "plucker", "evolve",
                                                "lr",            "conjecture",       "rectangle"};
    return kinds;
}

inline SweepReport run_sweep(const std::string &what, const SweepBounds &b, unsigned jobs = sweep_jobs())
{
    if (what == "main-identity") {
        return sweep_main_identity(b, jobs);
    }
    if (what == "quantum-identity") {
        return sweep_quantum_identity(b, jobs);
    }
    if (what == "plucker") {
        return sweep_plucker(b, jobs);
    }
    if (what == "evolve") {
        return sweep_evolve(b);
    }
    if (what == "lr") {
        return sweep_lr(b, jobs);
    }
    if (what == "conjecture") {
        return sweep_conjecture(b, jobs);
    }
    if (what == "rectangle") {
        return sweep_rectangle(b);
    }
    throw InvalidArgument("unknown sweep '" + what + "'");
}

} // namespace hschur
