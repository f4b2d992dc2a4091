#pragma once

#include "curvlab/group.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curvlab {

// Beads are labelled by Z \ {0} and sit in slots indexed by Z, in the order
// ..., -2, -1, 1, 2, ...: bead b > 0 occupies slot b - 1, bead b < 0 slot b.
inline std::int64_t bead_to_slot(std::int64_t bead) { return bead > 0 ? bead - 1 : bead; }
inline std::int64_t slot_to_bead(std::int64_t slot) { return slot >= 0 ? slot + 1 : slot; }

/// An eventually-translating bijection F of the slots: F(x) = x + shift
/// outside the window [lo, lo + values.size()). The window is kept minimal,
/// so equal elements have equal representations.
///
/// Read as S_inf x| Z: F = c o T_shift where c(x) is the home slot of the
/// bead now at slot x and the lamplighter stands between slots shift-1 and
/// shift.
class HoughtonElement {
public:
    HoughtonElement() = default;
    /// Pure translation by `shift` slots.
    static HoughtonElement translation(std::int64_t shift);
    /// Builds from explicit window values and canonicalizes.
    static HoughtonElement from_window(std::int64_t shift, std::int64_t lo, std::vector<std::int64_t> values);

    [[nodiscard]] std::int64_t shift() const noexcept { return shift_; }
    [[nodiscard]] std::int64_t lo() const noexcept { return lo_; }
    [[nodiscard]] std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(values_.size()); }
    [[nodiscard]] const std::vector<std::int64_t>& window() const noexcept { return values_; }

    [[nodiscard]] std::int64_t operator()(std::int64_t slot) const {
        if (slot >= lo_ && slot < hi()) return values_[static_cast<std::size_t>(slot - lo_)];
        return slot + shift_;
    }

    friend bool operator==(const HoughtonElement&, const HoughtonElement&) = default;

private:
    void canonicalize();

    std::int64_t shift_ = 0;
    std::int64_t lo_ = 0;
    std::vector<std::int64_t> values_;
};

enum class Orientation { NegFirst, PosFirst };

/// Houghton's group H_2 with generators s, s^-1 (move right/left) and
/// sigma (swap the beads on either side of the lamplighter).
class HoughtonGroup {
public:
    using Element = HoughtonElement;

    HoughtonGroup();

    [[nodiscard]] std::string id() const { return "H2"; }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const { return {}; }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const;
    [[nodiscard]] Element invert(const Element& x) const;
    [[nodiscard]] Key encode(const Element& x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    /// No closed formula is known; BFS is the metric source.
    [[nodiscard]] std::optional<int> closed_length(const Element&) const { return std::nullopt; }

    [[nodiscard]] int s() const noexcept { return 0; }
    [[nodiscard]] int s_inverse() const noexcept { return 1; }
    [[nodiscard]] int sigma() const noexcept { return 2; }

    /// "H2{ b:f(b), ... ; shift=k }" listing the beads whose image differs
    /// from the pure shift. f(b) names the home bead of whatever now sits at b.
    [[nodiscard]] std::string format(const Element& x) const;
    /// Accepts format(), "g(k)", "h(k,m)", "u(l,pos|neg)" and "w: <word>".
    [[nodiscard]] Element parse(const std::string& text) const;

private:
    GeneratorSet<Element> gens_;
};

/// u_l = s^-(l-1) (sigma s)^(2(l-1)) (sigma s^-1)^(2(l-1)) sigma s^(l-1) (negfirst);
/// posfirst is its mirror image. Length 10l - 9.
Word h2_u(int l, Orientation orientation);

/// h_{K,M}: swaps beads l and -l for M <= l <= K, lamplighter at the origin.
HoughtonElement h2_h(int outer, int inner);
inline HoughtonElement h2_g(int k) { return h2_h(k, 1); }

/// Spelling u_K ... u_M (descending) or u_M ... u_K, all in one orientation.
Word h2_h_spelling(int outer, int inner, Orientation orientation, bool descending);

/// Beads whose position changed, ignoring the translation part.
std::set<std::int64_t> h2_moved_points(const HoughtonElement& x);
/// Largest |bead| among the moved points; 0 for none. A lower bound on |x|.
int h2_min_length_bound(const HoughtonElement& x);

}  // namespace curvlab
