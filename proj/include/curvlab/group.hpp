#pragma once

#include "curvlab/errors.hpp"

#include <concepts>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

/// Canonical byte encoding of a group element; equal keys iff equal elements.
using Key = std::string;

/// A word over a generating set, stored as generator indices.
using Word = std::vector<int>;

/// Symmetric generating set. Every generator records the index of its formal
/// inverse; an involution is its own inverse and is listed once.
template <class Element>
class GeneratorSet {
public:
    struct Generator {
        std::string name;
        Element element;
        int inverse = -1;
    };

    GeneratorSet() = default;

    /// Adds an involution (its own inverse). Returns its index.
    int add_involution(std::string name, Element element) {
        const int index = static_cast<int>(gens_.size());
        gens_.push_back({std::move(name), std::move(element), index});
        return index;
    }

    /// Adds a generator together with its inverse. Returns the index of the first.
    int add_pair(std::string name, Element element, std::string inverse_name, Element inverse) {
        const int index = static_cast<int>(gens_.size());
        gens_.push_back({std::move(name), std::move(element), index + 1});
        gens_.push_back({std::move(inverse_name), std::move(inverse), index});
        return index;
    }

    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const Generator& operator[](std::size_t i) const { return gens_.at(i); }
    [[nodiscard]] auto begin() const noexcept { return gens_.begin(); }
    [[nodiscard]] auto end() const noexcept { return gens_.end(); }

    [[nodiscard]] int inverse_of(int i) const { return gens_.at(static_cast<std::size_t>(i)).inverse; }
    [[nodiscard]] bool is_involution(int i) const { return inverse_of(i) == i; }

    [[nodiscard]] std::optional<int> find(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return static_cast<int>(i);
        return std::nullopt;
    }

    /// The inverse pairing is a self-inverse bijection on indices.
    [[nodiscard]] bool well_formed() const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const int j = gens_[i].inverse;
            if (j < 0 || static_cast<std::size_t>(j) >= gens_.size()) return false;
            if (gens_[static_cast<std::size_t>(j)].inverse != static_cast<int>(i)) return false;
        }
        return true;
    }

private:
    std::vector<Generator> gens_;
};

/// A finitely generated group supplied as an explicit oracle.
///
/// `closed_length` returns the exact word length when a closed formula covers
/// the element, and `std::nullopt` otherwise (BFS is then the metric source).
template <class G>
concept GroupOracle = requires(const G& g, const typename G::Element& x, const Key& key) {
    typename G::Element;
    { g.id() } -> std::convertible_to<std::string>;
    { g.generators() } -> std::same_as<const GeneratorSet<typename G::Element>&>;
    { g.identity() } -> std::same_as<typename G::Element>;
    { g.compose(x, x) } -> std::same_as<typename G::Element>;
    { g.invert(x) } -> std::same_as<typename G::Element>;
    { g.encode(x) } -> std::same_as<Key>;
    { g.decode(key) } -> std::same_as<typename G::Element>;
    { g.closed_length(x) } -> std::same_as<std::optional<int>>;
};

template <GroupOracle G>
typename G::Element evaluate(const G& group, const Word& word) {
    auto x = group.identity();
    for (int letter : word) x = group.compose(x, group.generators()[static_cast<std::size_t>(letter)].element);
    return x;
}

template <GroupOracle G>
typename G::Element conjugate(const G& group, const typename G::Element& g, const typename G::Element& w) {
    return group.compose(group.invert(w), group.compose(g, w));
}

template <GroupOracle G>
Word invert_word(const G& group, const Word& word) {
    Word out(word.rbegin(), word.rend());
    for (int& letter : out) letter = group.generators().inverse_of(letter);
    return out;
}

template <GroupOracle G>
std::string format_word(const G& group, const Word& word) {
    if (word.empty()) return "e";
    std::string out;
    for (int letter : word) {
        if (!out.empty()) out += ' ';
        out += group.generators()[static_cast<std::size_t>(letter)].name;
    }
    return out;
}

/// Parses whitespace-separated generator names; a trailing "^-1" selects the
/// formal inverse and "^n" repeats.
template <GroupOracle G>
Word parse_word(const G& group, const std::string& text) {
    Word word;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '*') ++j;
        const std::string token = text.substr(i, j - i);
        i = j;
        if (token == "e") continue;
        if (auto direct = group.generators().find(token)) {
            word.push_back(*direct);
            continue;
        }
        const auto caret = token.find('^');
        if (caret == std::string::npos) throw ParseError(token, "generator name");
        auto base = group.generators().find(token.substr(0, caret));
        if (!base) throw ParseError(token, "generator name");
        int exponent = 0;
        try {
            std::size_t used = 0;
            exponent = std::stoi(token.substr(caret + 1), &used);
            if (used != token.size() - caret - 1) throw ParseError(token, "integer exponent");
        } catch (const std::logic_error&) {
            throw ParseError(token, "integer exponent");
        }
        const int letter = exponent < 0 ? group.generators().inverse_of(*base) : *base;
        for (int k = 0; k < std::abs(exponent); ++k) word.push_back(letter);
    }
    return word;
}

}  // namespace curvlab
