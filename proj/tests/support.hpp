#pragma once

#include "curvlab/metric.hpp"

#include <doctest.h>

#include <random>
#include <unordered_map>
#include <vector>

namespace curvlab::testing {

/// Uniformly random word of the given length over the generating set.
template <GroupOracle G>
Word random_word(const G& group, std::size_t length, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(group.generators().size()) - 1);
    Word word(length);
    for (auto& letter : word) letter = pick(rng);
    return word;
}

template <GroupOracle G>
typename G::Element random_element(const G& group, std::size_t length, std::mt19937_64& rng) {
    return evaluate(group, random_word(group, length, rng));
}

/// Sphere sizes around an arbitrary basepoint, by a BFS that starts at h.
template <GroupOracle G>
std::vector<std::size_t> sphere_sizes_from(const G& group, const typename G::Element& h, int radius) {
    std::vector<std::size_t> sizes{1};
    std::vector<typename G::Element> frontier{h};
    std::unordered_map<Key, int> seen{{group.encode(h), 0}};
    for (int r = 1; r <= radius; ++r) {
        std::vector<typename G::Element> next;
        for (const auto& x : frontier)
            for (const auto& gen : group.generators()) {
                auto y = group.compose(x, gen.element);
                if (seen.emplace(group.encode(y), r).second) next.push_back(std::move(y));
            }
        sizes.push_back(next.size());
        frontier = std::move(next);
    }
    return sizes;
}

/// Group-law and encoding checks over random words.
template <GroupOracle G>
void check_group_laws(const G& group, std::uint64_t seed, int trials = 200) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto u = random_word(group, rng() % 7, rng);
        const auto v = random_word(group, rng() % 7, rng);
        const auto w = random_word(group, rng() % 7, rng);
        const auto x = evaluate(group, u), y = evaluate(group, v), z = evaluate(group, w);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(group.encode(evaluate(group, uv)) == group.encode(group.compose(x, y)));
        CHECK(group.encode(group.compose(group.compose(x, y), z)) ==
              group.encode(group.compose(x, group.compose(y, z))));
        CHECK(group.encode(group.invert(group.invert(x))) == group.encode(x));
        CHECK(group.encode(group.compose(x, group.invert(x))) == group.encode(group.identity()));
        CHECK(group.encode(evaluate(group, invert_word(group, u))) == group.encode(group.invert(x)));
        CHECK(group.encode(group.decode(group.encode(x))) == group.encode(x));
    }
}

}  // namespace curvlab::testing
