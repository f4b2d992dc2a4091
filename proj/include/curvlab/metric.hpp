#pragma once

#include "curvlab/errors.hpp"
#include "curvlab/group.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curvlab {

inline constexpr std::size_t kDefaultElementBudget = 50'000'000;

/// Exact word metric on the ball of radius `horizon`, layer by layer.
///
/// Layer i holds the sphere S_i sorted by canonical key. Immutable after
/// construction, so concurrent readers are safe.
template <GroupOracle G>
class MetricTable {
public:
    using Element = typename G::Element;

    struct Entry {
        Key key;
        Element element;
    };

    MetricTable(std::string group_id, int horizon, std::vector<std::vector<Entry>> layers)
        : group_id_(std::move(group_id)), horizon_(horizon), layers_(std::move(layers)) {
        std::size_t total = 0;
        for (const auto& layer : layers_) total += layer.size();
        distance_.reserve(total);
        for (std::size_t r = 0; r < layers_.size(); ++r)
            for (const auto& entry : layers_[r]) distance_.emplace(entry.key, static_cast<int>(r));
    }

    [[nodiscard]] const std::string& group_id() const noexcept { return group_id_; }
    [[nodiscard]] int horizon() const noexcept { return horizon_; }
    [[nodiscard]] const std::vector<std::vector<Entry>>& layers() const noexcept { return layers_; }
    [[nodiscard]] const std::vector<Entry>& layer(int r) const {
        check_radius(r);
        return layers_[static_cast<std::size_t>(r)];
    }

    [[nodiscard]] std::optional<int> distance(const Key& key) const {
        auto it = distance_.find(key);
        if (it == distance_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t sphere_size(int r) const { return layer(r).size(); }
    [[nodiscard]] std::size_t ball_size(int r) const {
        check_radius(r);
        std::size_t total = 0;
        for (int i = 0; i <= r; ++i) total += layers_[static_cast<std::size_t>(i)].size();
        return total;
    }

    void check_radius(int r) const {
        if (r < 0 || r > horizon_)
            throw OutOfHorizon("radius " + std::to_string(r) + " exceeds table horizon " + std::to_string(horizon_), r);
    }

private:
    std::string group_id_;
    int horizon_;
    std::vector<std::vector<Entry>> layers_;
    std::unordered_map<Key, int> distance_;
};

/// Breadth-first word metric out to `horizon`. Throws BudgetExceeded when the
/// ball would hold more than `budget` elements.
template <GroupOracle G>
MetricTable<G> bfs_metric(const G& group, int horizon, std::size_t budget = kDefaultElementBudget) {
    using Entry = typename MetricTable<G>::Entry;
    if (horizon < 0) throw DomainError("horizon must be nonnegative");
    if (group.generators().size() == 0) throw DomainError("generating set is empty");

    std::vector<std::vector<Entry>> layers;
    std::unordered_map<Key, int> seen;
    const auto e = group.identity();
    layers.push_back({Entry{group.encode(e), e}});
    seen.emplace(layers[0][0].key, 0);
    std::size_t total = 1;

    for (int r = 0; r < horizon; ++r) {
        std::vector<Entry> next;
        for (const auto& entry : layers[static_cast<std::size_t>(r)]) {
            for (const auto& gen : group.generators()) {
                auto y = group.compose(entry.element, gen.element);
                auto key = group.encode(y);
                if (seen.emplace(key, r + 1).second) {
                    next.push_back(Entry{std::move(key), std::move(y)});
                    if (++total > budget) throw BudgetExceeded(budget, r + 1);
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
        layers.push_back(std::move(next));
    }
    return MetricTable<G>(group.id(), horizon, std::move(layers));
}

/// Word length of `target` by breadth-first search from the identity,
/// without keeping layers. Throws BudgetExceeded when more than `budget`
/// elements are visited and OutOfHorizon past `max_radius`.
template <GroupOracle G>
int bfs_distance(const G& group, const typename G::Element& target, int max_radius,
                 std::size_t budget = kDefaultElementBudget) {
    const auto goal = group.encode(target);
    std::vector<typename G::Element> frontier{group.identity()};
    std::unordered_map<Key, int> seen{{group.encode(group.identity()), 0}};
    if (seen.count(goal)) return 0;
    for (int r = 1; r <= max_radius; ++r) {
        std::vector<typename G::Element> next;
        for (const auto& x : frontier)
            for (const auto& gen : group.generators()) {
                auto y = group.compose(x, gen.element);
                auto key = group.encode(y);
                if (!seen.emplace(key, r).second) continue;
                if (key == goal) return r;
                if (seen.size() > budget) throw BudgetExceeded(budget, r);
                next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    throw OutOfHorizon("element not found within radius " + std::to_string(max_radius), max_radius + 1);
}

/// Forwards a group but hides its closed-form length, so every length comes
/// from breadth-first search. Used to cross-check closed formulas.
template <GroupOracle G>
class BfsOnly {
public:
    using Element = typename G::Element;

    explicit BfsOnly(const G& group) : group_(&group) {}

    [[nodiscard]] std::string id() const { return group_->id(); }
    [[nodiscard]] const GeneratorSet<Element>& generators() const { return group_->generators(); }
    [[nodiscard]] Element identity() const { return group_->identity(); }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const { return group_->compose(x, y); }
    [[nodiscard]] Element invert(const Element& x) const { return group_->invert(x); }
    [[nodiscard]] Key encode(const Element& x) const { return group_->encode(x); }
    [[nodiscard]] Element decode(const Key& key) const { return group_->decode(key); }
    [[nodiscard]] std::optional<int> closed_length(const Element&) const { return std::nullopt; }
    [[nodiscard]] const G& base() const noexcept { return *group_; }

private:
    const G* group_;
};

/// Length lookup combining a group's closed formula with an optional table.
template <GroupOracle G>
class Metric {
public:
    using Element = typename G::Element;

    explicit Metric(const G& group, const MetricTable<G>* table = nullptr) : group_(&group), table_(table) {}

    [[nodiscard]] const G& group() const noexcept { return *group_; }
    [[nodiscard]] const MetricTable<G>* table() const noexcept { return table_; }
    [[nodiscard]] int horizon() const noexcept { return table_ ? table_->horizon() : -1; }

    /// Exact length when known; std::nullopt when the element lies beyond the
    /// table horizon and no closed form applies.
    [[nodiscard]] std::optional<int> lookup(const Element& x) const {
        if (auto closed = group_->closed_length(x)) return closed;
        if (table_) return table_->distance(group_->encode(x));
        return std::nullopt;
    }

    [[nodiscard]] int length(const Element& x, int suggested_horizon = -1) const {
        if (auto d = lookup(x)) return *d;
        throw OutOfHorizon("element lies outside the metric table (horizon " + std::to_string(horizon()) + ")",
                           std::max(suggested_horizon, horizon() + 1));
    }

    /// Whether |x| > bound. An element missing from a table whose horizon
    /// reaches `bound` is known to be longer than `bound`.
    [[nodiscard]] bool longer_than(const Element& x, int bound) const {
        if (auto d = lookup(x)) return *d > bound;
        if (horizon() >= bound) return true;
        throw OutOfHorizon("cannot compare length against " + std::to_string(bound), bound);
    }

    [[nodiscard]] int distance(const Element& x, const Element& y, int suggested_horizon = -1) const {
        return length(group_->compose(group_->invert(x), y), suggested_horizon);
    }

private:
    const G* group_;
    const MetricTable<G>* table_;
};

/// Exact word length. When both the closed form and the table cover the
/// element they must agree.
template <GroupOracle G>
int word_length(const G& group, const typename G::Element& x, const MetricTable<G>* table) {
    const auto closed = group.closed_length(x);
    const auto tabled = table ? table->distance(group.encode(x)) : std::nullopt;
    if (closed && tabled && *closed != *tabled)
        throw Error("closed-form length " + std::to_string(*closed) + " disagrees with BFS length " +
                    std::to_string(*tabled));
    if (closed) return *closed;
    if (tabled) return *tabled;
    throw OutOfHorizon("element lies outside the metric table", table ? table->horizon() + 1 : 1);
}

template <GroupOracle G>
std::vector<typename G::Element> sphere(const MetricTable<G>& table, int r) {
    std::vector<typename G::Element> out;
    for (const auto& entry : table.layer(r)) out.push_back(entry.element);
    return out;
}

template <GroupOracle G>
std::vector<typename G::Element> ball(const MetricTable<G>& table, int r) {
    table.check_radius(r);
    std::vector<typename G::Element> out;
    for (int i = 0; i <= r; ++i)
        for (const auto& entry : table.layer(i)) out.push_back(entry.element);
    return out;
}

}  // namespace curvlab
