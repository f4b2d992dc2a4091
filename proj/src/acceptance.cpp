#include "curvlab/acceptance.hpp"

#include "curvlab/builtin.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/deadend.hpp"
#include "curvlab/heisenberg.hpp"
#include "curvlab/houghton.hpp"
#include "curvlab/lamplighter.hpp"
#include "curvlab/transport.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace curvlab {

Tier parse_tier(const std::string& text) {
    if (text == "fast") return Tier::Fast;
    if (text == "full") return Tier::Full;
    throw ParseError(text, "tier fast or full");
}

std::string to_string(Tier tier) { return tier == Tier::Fast ? "fast" : "full"; }

namespace {

/// Collects failures; the first few are kept verbatim for the report line.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) messages_.push_back(what);
    }
    [[nodiscard]] bool passed() const { return failures_ == 0; }
    [[nodiscard]] long checks() const { return checks_; }
    [[nodiscard]] std::string failures() const {
        std::string out = std::to_string(failures_) + " failed:";
        for (const auto& m : messages_) out += " [" + m + "]";
        return out;
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> messages_;
};

CriterionResult finish(Check& check, std::string summary) {
    CriterionResult out;
    out.passed = check.passed();
    out.detail = check.passed() ? std::move(summary) : check.failures() + "; " + summary;
    return out;
}

// 1. Closed lamplighter length against breadth-first search.
CriterionResult lamplighter_oracle(const AcceptanceOptions&) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    auto sweep = [&](const WreathGroup& group, int horizon) {
        const BfsOnly<WreathGroup> blind(group);
        const auto table = bfs_metric(blind, horizon);
        std::size_t n = 0;
        for (int r = 0; r <= horizon; ++r)
            for (const auto& entry : table.layer(r)) {
                ++n;
                check.expect(ll_length(entry.element) == r, group.format(entry.element) + " formula != BFS " +
                                                                std::to_string(r));
            }
        return n;
    };
    const auto l2 = sweep(make_lamplighter(), 8);
    const auto w3 = sweep(make_cyclic_wreath(3), 6);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < 60.0, "sweep exceeded 60 s");
    return finish(check, "L2 B_8: " + std::to_string(l2) + " elements, Z_3 wr Z B_6: " + std::to_string(w3) +
                             " elements, all equal");
}

// 2. The d_3 dossier.
CriterionResult d3_dossier(const AcceptanceOptions&) {
    Check check;
    const auto group = make_lamplighter();
    const BfsOnly<WreathGroup> blind(group);
    const auto table = bfs_metric(blind, 20);
    const Metric<BfsOnly<WreathGroup>> bfs(blind, &table);
    const auto d3 = ll_make_dm(3);
    check.expect(bfs.length(d3) == 19, "BFS |d_3| != 19");
    check.expect(ll_length(d3) == 19, "formula |d_3| != 19");

    const int profile[] = {19, 18, 17, 16, 17, 18, 19, 20};
    std::string seen;
    for (int i = 0; i <= 7; ++i) {
        const int len = bfs.length(group.compose(d3, group.power_of_t(i)));
        seen += (i ? "," : "") + std::to_string(len);
        check.expect(len == profile[i], "escape profile at t^" + std::to_string(i));
    }

    const Metric<WreathGroup> closed(group);
    std::string depths;
    for (int m = 1; m <= 4; ++m) {
        const auto dm = ll_make_dm(m);
        const auto descent = descent_depth(closed, dm, m + 1);
        check.expect(descent.depth && *descent.depth == m, "descent depth(d_" + std::to_string(m) + ") != m");
        const auto path = depth(closed, dm, 2 * m + 2);
        check.expect(path.depth && *path.depth == 2 * m + 1, "path depth(d_" + std::to_string(m) + ") != 2m+1");
        check.expect(path.depth && closed.longer_than(group.compose(dm, evaluate(group, path.witness)), 6 * m + 1),
                     "path witness does not escape");
        depths += (m > 1 ? "," : "") + (descent.depth ? std::to_string(*descent.depth) : std::string("none")) + "/" +
                  (path.depth ? std::to_string(*path.depth) : std::string("none"));
    }
    return finish(check, "|d_3|=19 (BFS), escape profile " + seen + ", descent/path depth of d_1..d_4 = " + depths);
}

// 3. Positive curvature of d_m t^k.
CriterionResult lamplighter_positive(const AcceptanceOptions&) {
    Check check;
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 3);
    const Metric<WreathGroup> metric(group, &table);
    struct Case {
        int m, k, r;
    };
    std::vector<Case> cases;
    for (int r = 1; r <= 3; ++r) cases.push_back({5, 1, r});
    for (int r = 1; r <= 2; ++r) cases.push_back({5, 2, r});
    for (int r = 1; r <= 2; ++r) cases.push_back({4, 1, r});

    int sphere_pos = 0, ball_pos = 0;
    for (const auto& c : cases) {
        const auto g = group.compose(ll_make_dm(c.m), group.power_of_t(c.k));
        const std::string tag = "d_" + std::to_string(c.m) + " t^" + std::to_string(c.k) + " r=" + std::to_string(c.r);
        const auto sph = kappa(metric, g, c.r, Mode::Sphere);
        check.expect(sign(sph.kappa) > 0, "sphere kappa of " + tag + " = " + to_string(sph.kappa));
        sphere_pos += sign(sph.kappa) > 0;
        if (c.r < c.m - c.k) {
            const auto bl = kappa(metric, g, c.r, Mode::Ball);
            check.expect(sign(bl.kappa) > 0, "ball kappa of " + tag + " = " + to_string(bl.kappa));
            ball_pos += sign(bl.kappa) > 0;
        }
    }

    // Radius-1 breakdown for d_3 t measured purely by BFS.
    const BfsOnly<WreathGroup> blind(group);
    const auto deep = bfs_metric(blind, 18);
    const Metric<BfsOnly<WreathGroup>> bfs(blind, &deep);
    const auto g = group.compose(ll_make_dm(3), group.power_of_t(1));
    const auto report = kappa(bfs, g, 1, Mode::Sphere);
    check.expect(report.base_length == 18, "|d_3 t| != 18");
    check.expect(report.comparison_distance == make_rational(52, 3), "comparison distance " +
                                                                          to_string(report.comparison_distance));
    check.expect(report.kappa == make_rational(1, 27), "kappa_1(d_3 t) = " + to_string(report.kappa));
    int a_conjugate = -1;
    for (const auto& term : report.breakdown)
        if (group.encode(term.conjugator) == group.encode(group.generators()[0].element)) a_conjugate = term.length;
    check.expect(a_conjugate == 6 * 3 - 1 - 1, "|a^-1 g a| != 6m - k - 1");

    return finish(check, std::to_string(sphere_pos) + "/7 sphere and " + std::to_string(ball_pos) +
                             "/7 ball values positive; kappa_1(d_3 t) = " + to_string(report.kappa) +
                             " from BFS lengths, |a^-1 g a| = " + std::to_string(a_conjugate) + " = 6m-k-1");
}

// 4. The two t-conjugation lemmas.
CriterionResult lamplighter_lemmas(const AcceptanceOptions&) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    const auto group = make_lamplighter();
    auto t = [&](std::int64_t k) { return group.power_of_t(k); };
    long translation = 0, general = 0;
    for (int m = 1; m <= 6; ++m) {
        const auto dm = ll_make_dm(m);
        for (int k = 1; k < m; ++k)
            for (int r = 1; k + r < m; ++r) {
                const int base = ll_length(group.compose(dm, t(k)));
                const int left = ll_length(group.compose(group.compose(t(-r), dm), t(k + r)));
                const int right = ll_length(group.compose(group.compose(t(r), dm), t(k - r)));
                check.expect(left == base && right == base,
                             "translation lemma at m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                 " r=" + std::to_string(r));
                ++translation;
            }
        // Lamps at +-m lit, any subset strictly inside, position k, |k| + |r| < m.
        const int interior = 2 * m - 1;
        for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
            LampConfig w;
            w.lamps[-m] = 1;
            w.lamps[m] = 1;
            for (int i = 0; i < interior; ++i)
                if (mask & (1u << i)) w.lamps[i - m + 1] = 1;
            for (int k = -(m - 1); k <= m - 1; ++k) {
                w.pos = k;
                const int base = ll_length(w);
                const int span = m - 1 - std::abs(k);
                for (int r = -span; r <= span; ++r) {
                    const auto conj = group.compose(group.compose(t(r), w), t(-r));
                    check.expect(ll_length(conj) == base, "conjugation lemma for " + group.format(w) +
                                                              " r=" + std::to_string(r));
                    ++general;
                }
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < 30.0, "lemma sweep exceeded 30 s");
    return finish(check, std::to_string(translation) + " translation and " + std::to_string(general) +
                             " conjugation instances, m <= 6");
}

// 5. Houghton's group at desk scale.
CriterionResult houghton(const AcceptanceOptions& options) {
    Check check;
    const HoughtonGroup group;
    const int horizon = options.tier == Tier::Full ? 16 : 13;
    const auto table = bfs_metric(group, horizon);
    const Metric<HoughtonGroup> metric(group, &table);

    const auto u2 = evaluate(group, h2_u(2, Orientation::NegFirst));
    check.expect(h2_u(2, Orientation::NegFirst).size() == 11, "u_2 spelling length");
    check.expect(metric.length(u2) == 11, "|u_2| != 11");
    check.expect(u2 == evaluate(group, h2_u(2, Orientation::PosFirst)), "orientations disagree");
    check.expect(u2 == h2_h(2, 2), "u_2 != h_{2,2}");

    const auto g2 = h2_g(2);
    const int g2_length = metric.length(g2);
    check.expect(is_dead_end(metric, g2), "g_2 is not a dead end");

    const auto h22 = h2_h(2, 2);
    const auto k1 = kappa(metric, h22, 1, Mode::Sphere);
    check.expect(sign(k1.kappa) > 0, "kappa_1(h_{2,2}) = " + to_string(k1.kappa));
    for (const auto& term : k1.breakdown) check.expect(term.length <= k1.base_length, "conjugate of h_{2,2} grew");
    std::string extra;
    if (horizon >= metric.length(h22) + 4) {
        const auto k2 = kappa(metric, h22, 2, Mode::Sphere);
        check.expect(sign(k2.kappa) > 0, "kappa_2(h_{2,2}) = " + to_string(k2.kappa));
        extra = ", kappa_2 = " + to_string(k2.kappa);
    }

    std::size_t swept = 0;
    for (int r = 0; r <= horizon; ++r)
        for (const auto& entry : table.layer(r)) {
            ++swept;
            check.expect(h2_min_length_bound(entry.element) <= r, "moved-point bound fails for " +
                                                                      group.format(entry.element));
        }
    return finish(check, "horizon " + std::to_string(horizon) + ", |u_2| = 11, |g_2| = " +
                             std::to_string(g2_length) + " dead end, kappa_1(h_{2,2}) = " + to_string(k1.kappa) +
                             extra + ", moved-point bound on " + std::to_string(swept) + " elements");
}

// 6. Heisenberg length formula and ceiling cases.
CriterionResult heisenberg_formula(const AcceptanceOptions& options) {
    Check check;
    const HeisenbergGroup group;
    const auto table = bfs_metric(group, 10);
    std::size_t sector = 0, domain = 0;
    for (int r = 0; r <= 10; ++r)
        for (const auto& entry : table.layer(r)) {
            const auto& g = entry.element;
            if (!heis_in_formula_domain(g)) continue;
            ++domain;
            sector += g.c > 0;
            check.expect(heis_length(g) == r, group.format(g) + " formula " + std::to_string(heis_length(g)) +
                                                  " != BFS " + std::to_string(r));
        }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> pick(2, 2000);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t A = pick(rng);
        const std::int64_t B = std::uniform_int_distribution<std::int64_t>(1, A - 1)(rng);
        const std::int64_t C = A * A - A * B;
        const auto low = 2 * ceil_div(C, A) + A + B;
        const auto high = 2 * ceil_two_sqrt(C + A * B) - A - B;
        check.expect(low == high, "branches differ at A=" + std::to_string(A) + " B=" + std::to_string(B));
    }

    long ceilings = 0;
    for (std::int64_t A = 2; A <= 50; ++A)
        for (std::int64_t B = 1; B < A; ++B)
            for (std::int64_t t = 1; t <= 3 && B * t <= A; ++t)
                for (std::int64_t k = 0; k <= 2; ++k)
                    for (std::int64_t s = 1; s < A; ++s) {
                        const auto jump = heis_ceil_jump(A, B, k * A + s, t);
                        check.expect(jump.up == jump.up_case && jump.down == jump.down_case,
                                     "ceiling case at A=" + std::to_string(A) + " B=" + std::to_string(B) +
                                         " s=" + std::to_string(s) + " t=" + std::to_string(t));
                        ++ceilings;
                    }
    return finish(check, std::to_string(sector) + " sector elements (" + std::to_string(domain) +
                             " with C >= 0) of length <= 10 match BFS; 100 branch boundaries agree; " +
                             std::to_string(ceilings) + " ceiling cases agree");
}

// 7. Heisenberg signs and remainder densities.
CriterionResult heisenberg_density(const AcceptanceOptions&) {
    Check check;
    std::string summary;
    for (int r : {1, 2})
        for (int k : {40, 80}) {
            const auto report = heis_density_experiment(k, r);
            const std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k);
            for (int s = 0; s < 3; ++s)
                check.expect(report.sign_counts[static_cast<std::size_t>(s)] > 0, tag + " misses a sign");
            check.expect(report.prediction_mismatches == 0,
                         tag + " has " + std::to_string(report.prediction_mismatches) + " prediction mismatches");
            std::size_t weak = 0;
            for (const auto& band : report.bands) {
                const std::int64_t possible = band.A - 1;
                const bool closed_ok = 5 * r * band.closed_x >= possible && 5 * r * band.closed_y >= possible &&
                                       5 * r * band.closed_z >= possible;
                const bool exact_ok = 5 * r * band.exact_x >= band.A && 5 * r * band.exact_y >= band.A &&
                                      5 * r * band.exact_z >= band.A;
                weak += !(closed_ok && exact_ok);
            }
            check.expect(weak == 0, tag + ": " + std::to_string(weak) + " bands below 1/(5r)");
            summary += (summary.empty() ? "" : "; ") + tag + " n=" + std::to_string(report.elements) + " (+" +
                       std::to_string(report.sign_counts[0]) + " 0:" + std::to_string(report.sign_counts[1]) +
                       " -" + std::to_string(report.sign_counts[2]) + ", " + std::to_string(report.bands.size()) +
                       " bands)";
        }
    return finish(check, summary);
}

std::int64_t brute_force_minimum(const CostMatrix& cost, std::set<Permutation>& optima) {
    Permutation p(cost.size());
    std::iota(p.begin(), p.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        const auto c = cost.cost_of(p);
        if (c < best) {
            best = c;
            optima.clear();
        }
        if (c == best) optima.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

template <GroupOracle G>
void sample_kappa_star(Check& check, const G& group, int horizon, int count, std::mt19937_64& rng, long& total) {
    const auto table = bfs_metric(group, horizon);
    const Metric<G> metric(group, &table);
    std::vector<typename G::Element> pool;
    for (int r = 1; r <= std::min(3, horizon); ++r)
        for (const auto& entry : table.layer(r)) pool.push_back(entry.element);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < count; ++i) {
        const auto& g = pool[pick(rng)];
        const int r = 1 + static_cast<int>(rng() % 2);
        const Mode mode = rng() % 2 ? Mode::Sphere : Mode::Ball;
        const MeasureSpec<G> spec{group.identity(), g, mode, r};
        const auto star = kappa_star(metric, spec);
        const auto comparison = kappa(metric, g, r, mode).kappa;
        check.expect(star >= comparison, group.id() + " " + group.format(g) + " kappa* " + to_string(star) +
                                             " < kappa " + to_string(comparison));
        ++total;
    }
}

// 8. Exact transport.
CriterionResult transport(const AcceptanceOptions& options) {
    Check check;
    std::mt19937_64 rng(options.seed);

    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 8;
        CostMatrix cost(n);
        std::uniform_int_distribution<std::int64_t> value(0, trial % 2 ? 4 : 50);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cost(i, j) = value(rng);
        std::set<Permutation> brute;
        const auto best = brute_force_minimum(cost, brute);
        const auto solved = solve_assignment(cost);
        check.expect(solved.cost == best, "solver optimum differs on trial " + std::to_string(trial));
        const auto all = enumerate_optimal_assignments(cost, solved, 100000);
        check.expect(std::set<Permutation>(all.permutations.begin(), all.permutations.end()) == brute,
                     "optimal set differs on trial " + std::to_string(trial));
    }

    const auto s3 = make_s3();
    const auto s3_table = bfs_metric(s3, 3);
    const Metric<FiniteGroup> s3_metric(s3, &s3_table);
    const auto s = s3.parse("s");
    const auto sts = s3.parse("s t s");
    check.expect(gencon(s3_metric, s) == 2, "GenCon(s,e) != 2");
    const MeasureSpec<FiniteGroup> se{s, s3.identity(), Mode::Sphere, 1};
    const auto se_result = transport_distance(s3_metric, se);
    check.expect(se_result.t1 == 1, "T1(s,e) = " + to_string(se_result.t1));
    check.expect(kappa_star(s3_metric, se) == 0, "kappa*(s,e) != 0");
    check.expect(!se_result.identity_optimal, "identity plan optimal for (s,e)");
    check.expect(std::find(se_result.optimal_permutations.begin(), se_result.optimal_permutations.end(),
                           Permutation{1, 0}) != se_result.optimal_permutations.end(),
                 "swap plan not optimal for (s,e)");
    const auto sts_result = transport_distance(s3_metric, MeasureSpec<FiniteGroup>{sts, s3.identity(), Mode::Sphere, 1});
    check.expect(sts_result.identity_optimal, "identity plan not optimal for (sts,e)");

    long agree = 0;
    const auto z2 = make_zn(2);
    const auto z2_table = bfs_metric(z2, 1);
    const Metric<AbelianGroup> z2_metric(z2, &z2_table);
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    while (agree < 500) {
        const AbelianGroup::Element x{coord(rng), coord(rng)};
        const AbelianGroup::Element y{coord(rng), coord(rng)};
        if (x == y) continue;
        const auto star = kappa_star(z2_metric, MeasureSpec<AbelianGroup>{x, y, Mode::Sphere, 1});
        const auto comparison = kappa(z2_metric, z2.compose(z2.invert(x), y), 1, Mode::Sphere).kappa;
        check.expect(star == comparison, "Z2 pair " + z2.format(x) + " " + z2.format(y));
        ++agree;
    }
    const auto f2 = make_free(2);
    const auto f2_table = bfs_metric(f2, 4);
    const Metric<FreeGroup> f2_metric(f2, &f2_table);
    for (int r = 1; r <= 4; ++r)
        for (const auto& entry : f2_table.layer(r)) {
            const auto star = kappa_star(f2_metric, MeasureSpec<FreeGroup>{f2.identity(), entry.element, Mode::Sphere, 1});
            check.expect(star == kappa(f2_metric, entry.element, 1, Mode::Sphere).kappa,
                         "F2 element " + f2.format(entry.element));
            ++agree;
        }

    long bounded = 0;
    sample_kappa_star(check, make_zn(2), 2, 111, rng, bounded);
    sample_kappa_star(check, make_zn(3), 2, 111, rng, bounded);
    sample_kappa_star(check, make_free(2), 3, 111, rng, bounded);
    sample_kappa_star(check, make_free(3), 3, 111, rng, bounded);
    sample_kappa_star(check, make_s3(), 3, 111, rng, bounded);
    sample_kappa_star(check, make_lamplighter(), 3, 111, rng, bounded);
    sample_kappa_star(check, make_cyclic_wreath(3), 3, 111, rng, bounded);
    sample_kappa_star(check, HoughtonGroup(), 7, 111, rng, bounded);
    sample_kappa_star(check, HeisenbergGroup(), 7, 112, rng, bounded);

    return finish(check, "200 random matrices match brute force; S_3: GenCon(s,e)=2, T1=1, kappa*=0, "
                         "identity optimal only for sts; kappa* = kappa on " +
                             std::to_string(agree) + " abelian/free instances; kappa* >= kappa on " +
                             std::to_string(bounded) + " sampled instances");
}

// 9. Strict depth implies nonnegative curvature below it.
CriterionResult strict_depth_proposition(const AcceptanceOptions& options) {
    Check check;
    const auto group = make_lamplighter();
    struct Tally {
        long strict = 0;
        long instances = 0;
        int max_depth = 0;
    };
    auto sweep = [&](int radius) {
        const auto table = bfs_metric(group, radius);
        const Metric<WreathGroup> metric(group, &table);
        Tally tally;
        for (int l = 1; l <= radius; ++l)
            for (const auto& entry : table.layer(l)) {
                const int k = strict_depth(metric, entry.element);
                if (k == 0) continue;
                ++tally.strict;
                tally.max_depth = std::max(tally.max_depth, k);
                for (int r = 1; r < k; ++r) {
                    ++tally.instances;
                    check.expect(sign(kappa(metric, entry.element, r, Mode::Sphere).kappa) >= 0,
                                 group.format(entry.element) + " r=" + std::to_string(r));
                }
            }
        return tally;
    };
    const auto b7 = sweep(7);
    const int wide = options.tier == Tier::Full ? 15 : 13;
    const auto bw = sweep(wide);

    // The d_m family, beyond both balls.
    const auto table = bfs_metric(group, 5);
    const Metric<WreathGroup> metric(group, &table);
    long family = 0;
    std::string depths;
    for (int m = 1; m <= 5; ++m) {
        const int k = strict_depth(metric, ll_make_dm(m));
        depths += (m > 1 ? "," : "") + std::to_string(k);
        for (int r = 1; r < k; ++r) {
            ++family;
            check.expect(sign(kappa(metric, ll_make_dm(m), r, Mode::Sphere).kappa) >= 0,
                         "d_" + std::to_string(m) + " r=" + std::to_string(r));
        }
    }
    auto describe = [](const std::string& name, const Tally& t) {
        return name + ": " + std::to_string(t.strict) + " strict dead ends, max strict depth " +
               std::to_string(t.max_depth) + ", " + std::to_string(t.instances) + " (g,r) checks";
    };
    return finish(check, describe("B_7", b7) + "; " + describe("B_" + std::to_string(wide), bw) +
                             "; d_1..d_5 strict depths " + depths + ", " + std::to_string(family) + " checks");
}

struct Entry {
    const char* title;
    CriterionResult (*run)(const AcceptanceOptions&);
};

constexpr Entry kCriteria[kCriterionCount] = {
    {"lamplighter length formula vs BFS", lamplighter_oracle},
    {"d_3 dossier", d3_dossier},
    {"lamplighter positive curvature", lamplighter_positive},
    {"lamplighter conjugation lemmas", lamplighter_lemmas},
    {"Houghton H_2", houghton},
    {"Heisenberg length formula", heisenberg_formula},
    {"Heisenberg signs and density", heisenberg_density},
    {"exact transport", transport},
    {"strict depth proposition", strict_depth_proposition},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in 1.." + std::to_string(kCriterionCount));
    const auto& entry = kCriteria[id - 1];
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
        result = entry.run(options);
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.id = id;
    result.title = entry.title;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, options));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_line(const CriterionResult& result) {
    std::ostringstream line;
    line << (result.passed ? "PASS" : "FAIL") << "  " << result.id << "  " << result.title << "  (" << std::fixed
         << std::setprecision(2) << result.seconds << " s)  " << result.detail;
    return line.str();
}

}  // namespace curvlab
