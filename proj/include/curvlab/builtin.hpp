#pragma once

#include "curvlab/group.hpp"
#include "curvlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

/// Z^n with the standard generators a1^±1 ... an^±1.
class AbelianGroup {
public:
    using Element = std::vector<std::int64_t>;

    explicit AbelianGroup(int rank);

    [[nodiscard]] std::string id() const { return "Z" + std::to_string(rank_); }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const { return Element(static_cast<std::size_t>(rank_), 0); }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const;
    [[nodiscard]] Element invert(const Element& x) const;
    [[nodiscard]] Key encode(const Element& x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    /// L1 norm.
    [[nodiscard]] std::optional<int> closed_length(const Element& x) const;

    [[nodiscard]] std::string format(const Element& x) const;
    [[nodiscard]] Element parse(const std::string& text) const;

private:
    int rank_;
    GeneratorSet<Element> gens_;
};

/// Free group F_n. Elements are freely reduced words; letter 2i is the i-th
/// generator and 2i+1 its inverse, matching the generator-set indices.
class FreeGroup {
public:
    using Element = std::vector<int>;

    explicit FreeGroup(int rank);

    [[nodiscard]] std::string id() const { return "F" + std::to_string(rank_); }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const { return {}; }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const;
    [[nodiscard]] Element invert(const Element& x) const;
    [[nodiscard]] Key encode(const Element& x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    [[nodiscard]] std::optional<int> closed_length(const Element& x) const {
        return static_cast<int>(x.size());
    }

    [[nodiscard]] std::string format(const Element& x) const;
    [[nodiscard]] Element parse(const std::string& text) const;

    [[nodiscard]] bool is_cyclically_reduced(const Element& x) const;

private:
    int rank_;
    GeneratorSet<Element> gens_;
};

/// Closed-form GenCon in F_n: |g| + 2 - 2/n. Valid for cyclically reduced g;
/// other inputs throw DomainError, the empty word throws IdentityElement.
Rational free_gencon(int rank, const FreeGroup::Element& g);

/// A finite group given by its multiplication table. Lengths come from BFS.
class FiniteGroup {
public:
    using Element = int;

    struct GeneratorSpec {
        std::string name;
        int element;
    };

    /// `table[x][y]` is the index of x*y. Generators must be closed under
    /// inversion; an involution is listed once.
    FiniteGroup(std::string id, std::vector<std::vector<int>> table, std::vector<GeneratorSpec> generators);

    [[nodiscard]] std::string id() const { return id_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(table_.size()); }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const noexcept { return identity_; }
    [[nodiscard]] Element compose(Element x, Element y) const {
        return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    [[nodiscard]] Element invert(Element x) const { return inverse_[static_cast<std::size_t>(x)]; }
    [[nodiscard]] Key encode(Element x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    [[nodiscard]] std::optional<int> closed_length(Element) const { return std::nullopt; }

    /// Shortlex-least geodesic word, used as the printed form.
    [[nodiscard]] const Word& normal_form(Element x) const { return normal_forms_.at(static_cast<std::size_t>(x)); }
    [[nodiscard]] std::string format(Element x) const;
    [[nodiscard]] Element parse(const std::string& text) const;

    [[nodiscard]] bool is_latin_square() const;

private:
    std::string id_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    GeneratorSet<Element> gens_;
    std::vector<Word> normal_forms_;
};

/// S_3 = <s, t | s^2 = t^2 = 1, sts = tst>, hard-coded as permutations of {0,1,2}.
FiniteGroup make_s3();

inline AbelianGroup make_zn(int n) { return AbelianGroup(n); }
inline FreeGroup make_free(int n) { return FreeGroup(n); }

}  // namespace curvlab
