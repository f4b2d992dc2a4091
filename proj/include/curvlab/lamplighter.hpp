#pragma once

#include "curvlab/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

/// Finite lamp group A for A wr Z, given by its multiplication table.
struct FiniteGroupSpec {
    std::string name;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(table.size()); }
    [[nodiscard]] int mul(int x, int y) const {
        return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }

    /// Z_n with element i meaning i mod n.
    static FiniteGroupSpec cyclic(int n);
    /// Any table; validates the Latin-square property and derives identity and inverses.
    static FiniteGroupSpec from_table(std::string name, std::vector<std::vector<int>> table);
};

/// Element of A wr Z: finitely supported lamp states plus the lamplighter
/// position. Only non-identity states are stored.
struct LampConfig {
    std::map<std::int64_t, int> lamps;
    std::int64_t pos = 0;

    friend bool operator==(const LampConfig&, const LampConfig&) = default;
};

/// Closed word length for A wr Z with generating set (A \ {e}) u {t, t^-1}:
/// N + min(2L + R + |m - R|, 2R + L + |m + L|) with N the number of lit lamps,
/// R = max(0, rightmost index), L = max(0, -leftmost index), m the position.
int ll_length(const LampConfig& cfg);

/// The lamplighter group A wr Z. Generator a in A \ {e} multiplies the lamp
/// under the lamplighter by a; t moves the lamplighter one step right.
class WreathGroup {
public:
    using Element = LampConfig;

    explicit WreathGroup(FiniteGroupSpec lamps);

    [[nodiscard]] std::string id() const { return id_; }
    [[nodiscard]] const FiniteGroupSpec& lamp_group() const noexcept { return spec_; }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const { return {}; }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const;
    [[nodiscard]] Element invert(const Element& x) const;
    [[nodiscard]] Key encode(const Element& x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    [[nodiscard]] std::optional<int> closed_length(const Element& x) const { return ll_length(x); }

    [[nodiscard]] int t() const noexcept { return t_; }
    [[nodiscard]] int t_inverse() const noexcept { return t_ + 1; }
    /// Generator index toggling by lamp state `state`.
    [[nodiscard]] int toggle(int state) const;

    [[nodiscard]] Element power_of_t(std::int64_t k) const { return LampConfig{{}, k}; }

    /// "L2{ -1,0,2 ; p=3 }" for Z_2, "W3{ 0:1, 1:2 ; p=0 }" otherwise.
    [[nodiscard]] std::string format(const Element& x) const;
    /// Accepts the format() grammar, "d(m)", "d(m)*t^k" and "w: <word>".
    [[nodiscard]] Element parse(const std::string& text) const;

private:
    FiniteGroupSpec spec_;
    std::string id_;
    GeneratorSet<Element> gens_;
    std::vector<int> toggle_index_;
    int t_ = 0;
};

WreathGroup make_lamplighter();                 // Z_2 wr Z with generators a, t, t^-1
WreathGroup make_cyclic_wreath(int n);          // Z_n wr Z with generators s1..s(n-1), t, t^-1

/// Geodesic spelling: light lamps on the first pass, leftward first when the
/// final position is nonnegative, rightward first otherwise.
Word ll_geodesic(const WreathGroup& group, const LampConfig& cfg);

/// d_m: all lamps on [-m, m] lit, lamplighter at 0.
LampConfig ll_make_dm(int m);
/// d_m analogue in A wr Z; `states[i]` is the state at index i - m.
LampConfig wr_make_dm(const FiniteGroupSpec& lamps, int m, const std::vector<int>& states);

struct DeadEndEmbedding {
    enum class Branch { PositionUnlit, PositionLit };

    int m = 0;            ///< constructive M: lamps and final position of w fit in [-M, M]
    Word completion;      ///< w . completion = d_M, lighting each missing lamp once
    Branch branch = Branch::PositionUnlit;
    /// Smallest M' such that a geodesic for w extends to a geodesic for d_M',
    /// when one exists up to 2M + 2.
    std::optional<int> geodesic_m;
    Word extension;       ///< geodesic for w^-1 d_M' when geodesic_m is set
};

/// Word c with w . c = d_m: light the current lamp, or when it is already lit
/// step to the nearest dark lamp of [-m, m] and light that one; return to
/// the origin; then light every remaining dark lamp q with t^q a t^-q.
/// Needs m >= max(1, |pos|, max |lit index|). Lamplighter L_2 only.
Word ll_dead_end_completion(const WreathGroup& group, const LampConfig& w, int m);

/// The constructive M and completion for w, plus the geodesic-extension
/// search. Lamplighter L_2 only.
DeadEndEmbedding ll_embed_in_dead_end(const WreathGroup& group, const LampConfig& w);

}  // namespace curvlab
