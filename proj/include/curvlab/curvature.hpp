#pragma once

#include "curvlab/metric.hpp"
#include "curvlab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace curvlab {

enum class Mode { Sphere, Ball };

inline std::string to_string(Mode mode) { return mode == Mode::Sphere ? "sphere" : "ball"; }

template <GroupOracle G>
struct CurvatureReport {
    using Element = typename G::Element;
    struct Term {
        Element conjugator;
        int length;  ///< |w^-1 g w|
    };

    Element element;
    int radius = 0;
    Mode mode = Mode::Sphere;
    int base_length = 0;
    Rational comparison_distance;
    Rational kappa;
    std::vector<Term> breakdown;
};

/// Conjugators w in S_r (sphere) or B_r (ball), in layer order, each layer in
/// key order.
template <GroupOracle G>
std::vector<typename G::Element> comparison_set(const Metric<G>& metric, int r, Mode mode) {
    if (!metric.table()) throw OutOfHorizon("enumerating spheres needs a metric table", r);
    metric.table()->check_radius(r);
    return mode == Mode::Sphere ? sphere(*metric.table(), r) : ball(*metric.table(), r);
}

/// Lengths |w^-1 g w| over the comparison set, in comparison_set order.
template <GroupOracle G>
std::vector<typename CurvatureReport<G>::Term> conjugate_lengths(const Metric<G>& metric,
                                                                 const typename G::Element& g, int r, Mode mode) {
    const auto& group = metric.group();
    if (group.encode(g) == group.encode(group.identity())) throw IdentityElement();
    if (r < 1) throw DomainError("comparison radius must be at least 1");
    const int base = metric.length(g);
    std::vector<typename CurvatureReport<G>::Term> terms;
    for (auto& w : comparison_set(metric, r, mode)) {
        const int len = metric.length(conjugate(group, g, w), base + 2 * r);
        terms.push_back({std::move(w), len});
    }
    return terms;
}

/// Exact mean of |w^-1 g w| over S_r or B_r.
template <GroupOracle G>
Rational comparison_distance(const Metric<G>& metric, const typename G::Element& g, int r, Mode mode) {
    const auto terms = conjugate_lengths(metric, g, r, mode);
    long long sum = 0;
    for (const auto& term : terms) sum += term.length;
    return make_rational(sum, static_cast<long long>(terms.size()));
}

template <GroupOracle G>
CurvatureReport<G> kappa(const Metric<G>& metric, const typename G::Element& g, int r, Mode mode) {
    CurvatureReport<G> report;
    report.element = g;
    report.radius = r;
    report.mode = mode;
    report.breakdown = conjugate_lengths(metric, g, r, mode);
    report.base_length = metric.length(g);
    long long sum = 0;
    for (const auto& term : report.breakdown) sum += term.length;
    report.comparison_distance = make_rational(sum, static_cast<long long>(report.breakdown.size()));
    report.kappa = (Rational(report.base_length) - report.comparison_distance) / report.base_length;
    return report;
}

/// Sign of kappa_r without building rationals: compares the conjugate-length
/// sum against |comparison set| * |g|.
template <GroupOracle G>
int kappa_sign(const Metric<G>& metric, const typename G::Element& g, int r, Mode mode) {
    const auto terms = conjugate_lengths(metric, g, r, mode);
    long long sum = 0;
    for (const auto& term : terms) sum += term.length;
    const long long base = static_cast<long long>(terms.size()) * metric.length(g);
    return (base > sum) - (base < sum);
}

/// Average length of generator conjugates: the radius-1 sphere comparison distance.
template <GroupOracle G>
Rational gencon(const Metric<G>& metric, const typename G::Element& g) {
    return comparison_distance(metric, g, 1, Mode::Sphere);
}

}  // namespace curvlab
