#pragma once

#include "curvlab/metric.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

namespace curvlab {

template <GroupOracle G>
struct DeadEndReport {
    typename G::Element element;
    int length = 0;
    bool is_dead_end = false;
    std::optional<int> depth;  ///< empty when no escape was found within max_depth
    std::optional<int> descent_depth;
    int strict_depth = 0;
    Word witness;              ///< escape path realizing depth
};

/// True iff no generator lengthens g.
template <GroupOracle G>
bool is_dead_end(const Metric<G>& metric, const typename G::Element& g) {
    const int base = metric.length(g);
    for (const auto& gen : metric.group().generators())
        if (metric.longer_than(metric.group().compose(g, gen.element), base)) return false;
    return true;
}

struct DepthResult {
    std::optional<int> depth;
    Word witness;
};

/// Shortest generator path from g to an element strictly longer than g.
/// Non-dead-ends have depth 1.
template <GroupOracle G>
DepthResult depth(const Metric<G>& metric, const typename G::Element& g, int max_depth) {
    const auto& group = metric.group();
    const int base = metric.length(g);
    struct Node {
        typename G::Element element;
        int parent;
        int letter;
    };
    std::vector<Node> nodes{{g, -1, -1}};
    std::unordered_map<Key, int> seen{{group.encode(g), 0}};
    std::size_t begin = 0;
    for (int step = 1; step <= max_depth; ++step) {
        const std::size_t end = nodes.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t a = 0; a < group.generators().size(); ++a) {
                auto y = group.compose(nodes[i].element, group.generators()[a].element);
                auto key = group.encode(y);
                if (seen.count(key)) continue;
                seen.emplace(std::move(key), static_cast<int>(nodes.size()));
                const bool escaped = metric.longer_than(y, base);
                nodes.push_back({std::move(y), static_cast<int>(i), static_cast<int>(a)});
                if (escaped) {
                    Word path;
                    for (int n = static_cast<int>(nodes.size()) - 1; nodes[static_cast<std::size_t>(n)].parent >= 0;
                         n = nodes[static_cast<std::size_t>(n)].parent)
                        path.push_back(nodes[static_cast<std::size_t>(n)].letter);
                    return {step, Word(path.rbegin(), path.rend())};
                }
            }
        }
        begin = end;
    }
    return {};
}

/// Least drop d such that some path from g reaches an element longer than g
/// while never passing below length |g| - d. The witness is a shortest such
/// path. Non-dead-ends have descent depth 0.
template <GroupOracle G>
DepthResult descent_depth(const Metric<G>& metric, const typename G::Element& g, int max_descent) {
    const auto& group = metric.group();
    const int base = metric.length(g);
    for (int drop = 0; drop <= std::min(max_descent, base); ++drop) {
        struct Node {
            typename G::Element element;
            int parent;
            int letter;
        };
        std::vector<Node> nodes{{g, -1, -1}};
        std::unordered_map<Key, int> seen{{group.encode(g), 0}};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t a = 0; a < group.generators().size(); ++a) {
                auto y = group.compose(nodes[i].element, group.generators()[a].element);
                auto key = group.encode(y);
                if (seen.count(key)) continue;
                const bool escaped = metric.longer_than(y, base);
                if (!escaped && metric.length(y) < base - drop) continue;
                seen.emplace(std::move(key), static_cast<int>(nodes.size()));
                nodes.push_back({std::move(y), static_cast<int>(i), static_cast<int>(a)});
                if (escaped) {
                    Word path;
                    for (int n = static_cast<int>(nodes.size()) - 1; nodes[static_cast<std::size_t>(n)].parent >= 0;
                         n = nodes[static_cast<std::size_t>(n)].parent)
                        path.push_back(nodes[static_cast<std::size_t>(n)].letter);
                    return {drop, Word(path.rbegin(), path.rend())};
                }
            }
        }
    }
    return {};
}

/// Largest k such that |g w| <= |g| - r for every r <= k and every w in S_r.
/// This is the uniform-decrease form of strict depth: the literal
/// "every path strictly decreases" reading is unsatisfiable past k = 1 for a
/// symmetric generating set (a2 = a1^-1 undoes the first step).
template <GroupOracle G>
int strict_depth(const Metric<G>& metric, const typename G::Element& g) {
    const auto& group = metric.group();
    const int base = metric.length(g);
    int k = 0;
    while (k < base) {
        const int r = k + 1;
        if (!metric.table() || metric.table()->horizon() < r)
            throw OutOfHorizon("strict depth needs the sphere of radius " + std::to_string(r), r);
        bool holds = true;
        for (const auto& entry : metric.table()->layer(r)) {
            if (metric.longer_than(group.compose(g, entry.element), base - r)) {
                holds = false;
                break;
            }
        }
        if (!holds) break;
        k = r;
    }
    return k;
}

/// All g w' with 1 <= |w'| < depth(g) and |g w'| <= |g|, in key order of w'.
template <GroupOracle G>
std::vector<typename G::Element> backtrack_elements(const Metric<G>& metric, const typename G::Element& g, int bound) {
    if (!is_dead_end(metric, g)) throw DomainError("backtrack elements are defined for dead ends only");
    const auto d = depth(metric, g, bound);
    if (!d.depth) throw OutOfHorizon("dead-end depth exceeds the search bound " + std::to_string(bound), bound + 1);
    const int k = *d.depth;
    if (!metric.table() || metric.table()->horizon() < k - 1)
        throw OutOfHorizon("backtrack enumeration needs the ball of radius " + std::to_string(k - 1), k - 1);
    const int base = metric.length(g);
    std::vector<typename G::Element> out;
    for (int r = 1; r < k; ++r)
        for (const auto& entry : metric.table()->layer(r)) {
            auto w = metric.group().compose(g, entry.element);
            if (!metric.longer_than(w, base)) out.push_back(std::move(w));
        }
    return out;
}

template <GroupOracle G>
DeadEndReport<G> analyze_dead_end(const Metric<G>& metric, const typename G::Element& g, int max_depth) {
    DeadEndReport<G> report;
    report.element = g;
    report.length = metric.length(g);
    report.is_dead_end = is_dead_end(metric, g);
    auto d = depth(metric, g, max_depth);
    report.depth = d.depth;
    report.witness = std::move(d.witness);
    report.descent_depth = descent_depth(metric, g, max_depth).depth;
    report.strict_depth = strict_depth(metric, g);
    return report;
}

}  // namespace curvlab
