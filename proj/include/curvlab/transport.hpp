#pragma once

#include "curvlab/assignment.hpp"
#include "curvlab/curvature.hpp"

#include <optional>
#include <vector>

namespace curvlab {

inline constexpr std::size_t kDefaultOptimaCap = 1000;

/// Uniform measures on the sphere (or ball) of radius r around x and y.
template <GroupOracle G>
struct MeasureSpec {
    typename G::Element x;
    typename G::Element y;
    Mode support = Mode::Sphere;
    int radius = 1;
};

template <GroupOracle G>
struct TransportResult {
    std::vector<typename G::Element> support;  ///< offsets u; row i is x*u_i, column j is y*u_j
    CostMatrix cost;
    std::int64_t optimum = 0;                  ///< minimum total cost over permutations
    Rational t1;                               ///< optimum / |support|
    std::vector<Permutation> optimal_permutations;
    bool truncated = false;
    bool identity_optimal = false;             ///< the comparison (GenCon) plan is optimal
    std::int64_t identity_cost = 0;
};

/// Exact L1 transportation distance between the two uniform measures. An
/// optimal plan is always a permutation of equal-size uniform supports, so
/// the problem reduces to an integer assignment.
template <GroupOracle G>
TransportResult<G> transport_distance(const Metric<G>& metric, const MeasureSpec<G>& spec,
                                      std::size_t cap = kDefaultOptimaCap) {
    const auto& group = metric.group();
    TransportResult<G> out;
    out.support = comparison_set(metric, spec.radius, spec.support);
    const std::size_t n = out.support.size();
    const int base = metric.distance(spec.x, spec.y);
    const int suggested = base + 2 * spec.radius;
    const auto delta = group.compose(group.invert(spec.x), spec.y);

    std::vector<typename G::Element> inverses;
    inverses.reserve(n);
    for (const auto& u : out.support) inverses.push_back(group.invert(u));
    out.cost = CostMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto left = group.compose(inverses[i], delta);
        for (std::size_t j = 0; j < n; ++j)
            out.cost(i, j) = metric.length(group.compose(left, out.support[j]), suggested);
    }

    const auto solved = solve_assignment(out.cost);
    out.optimum = solved.cost;
    out.t1 = make_rational(solved.cost, static_cast<long long>(n));
    auto optima = enumerate_optimal_assignments(out.cost, solved, cap);
    out.optimal_permutations = std::move(optima.permutations);
    out.truncated = optima.truncated;
    for (std::size_t i = 0; i < n; ++i) out.identity_cost += out.cost(i, i);
    out.identity_optimal = out.identity_cost == out.optimum;
    return out;
}

/// Ollivier curvature 1 - T1(m_x, m_y) / d(x, y) for uniform sphere or ball measures.
template <GroupOracle G>
Rational kappa_star(const Metric<G>& metric, const MeasureSpec<G>& spec) {
    const auto& group = metric.group();
    if (group.encode(spec.x) == group.encode(spec.y)) throw DomainError("kappa* needs two distinct points");
    const auto result = transport_distance(metric, spec, 1);
    return Rational(1) - result.t1 / metric.distance(spec.x, spec.y);
}

/// Optimal transport permutations between the measures at e and g: the
/// values of psi^r (sphere) or phi^r (ball) at g.
template <GroupOracle G>
TransportResult<G> optimal_permutations(const Metric<G>& metric, const typename G::Element& g, int r, Mode mode,
                                        std::size_t cap = kDefaultOptimaCap) {
    if (metric.group().encode(g) == metric.group().encode(metric.group().identity())) throw IdentityElement();
    return transport_distance(metric, MeasureSpec<G>{metric.group().identity(), g, mode, r}, cap);
}

template <GroupOracle G>
struct ProbeEntry {
    typename G::Element element;
    bool sphere_identity_optimal = false;   ///< psi^r(g) may be taken trivial
    bool ball_identity_optimal = false;     ///< phi^r(g) may be taken trivial
    bool sphere_preserving = false;         ///< some enumerated ball optimum fixes every S_l, l <= r
    bool cartesian = false;                 ///< ball optimum == sum of per-sphere optima
    std::size_t sphere_optima = 0;
    std::size_t ball_optima = 0;
    bool truncated = false;
};

template <GroupOracle G>
struct ProbeReport {
    int radius = 0;
    std::vector<ProbeEntry<G>> entries;
    bool identity_always_optimal_sphere = true;
    bool identity_always_optimal_ball = true;
    bool sphere_preserving_always = true;
    bool cartesian_always = true;
    std::optional<typename G::Element> sphere_witness;  ///< first g whose identity plan is not optimal
};

/// Empirical answers to the closing questions about phi^r and psi^r over a
/// sample of non-identity elements.
template <GroupOracle G>
ProbeReport<G> question_probe(const Metric<G>& metric, const std::vector<typename G::Element>& sample, int r,
                              std::size_t cap = kDefaultOptimaCap) {
    const auto& group = metric.group();
    ProbeReport<G> report;
    report.radius = r;
    const auto e_key = group.encode(group.identity());

    // Layer of every ball index, for the sphere-preservation test.
    std::vector<int> layer_of;
    for (int l = 0; l <= r; ++l)
        for (std::size_t i = 0; i < metric.table()->layer(l).size(); ++i) layer_of.push_back(l);

    for (const auto& g : sample) {
        if (group.encode(g) == e_key) continue;
        ProbeEntry<G> entry;
        entry.element = g;
        const auto sphere_result = optimal_permutations(metric, g, r, Mode::Sphere, cap);
        const auto ball_result = optimal_permutations(metric, g, r, Mode::Ball, cap);
        entry.sphere_identity_optimal = sphere_result.identity_optimal;
        entry.ball_identity_optimal = ball_result.identity_optimal;
        entry.sphere_optima = sphere_result.optimal_permutations.size();
        entry.ball_optima = ball_result.optimal_permutations.size();
        entry.truncated = sphere_result.truncated || ball_result.truncated;
        for (const auto& perm : ball_result.optimal_permutations) {
            bool keeps = true;
            for (std::size_t i = 0; i < perm.size() && keeps; ++i)
                keeps = layer_of[i] == layer_of[static_cast<std::size_t>(perm[i])];
            if (keeps) {
                entry.sphere_preserving = true;
                break;
            }
        }
        std::int64_t layered = metric.length(g);
        for (int l = 1; l <= r; ++l) layered += optimal_permutations(metric, g, l, Mode::Sphere, 1).optimum;
        entry.cartesian = layered == ball_result.optimum;

        report.identity_always_optimal_sphere &= entry.sphere_identity_optimal;
        report.identity_always_optimal_ball &= entry.ball_identity_optimal;
        report.sphere_preserving_always &= entry.sphere_preserving;
        report.cartesian_always &= entry.cartesian;
        if (!entry.sphere_identity_optimal && !report.sphere_witness) report.sphere_witness = g;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace curvlab
