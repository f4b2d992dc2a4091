#pragma once

#include "curvlab/group.hpp"
#include "curvlab/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

/// a^A b^B c^C in Mal'cev coordinates, c = a^-1 b^-1 a b central.
struct MalcevTriple {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const MalcevTriple&, const MalcevTriple&) = default;
};

/// Discrete Heisenberg group with generators a^±1, b^±1. With the commutator
/// convention above, b-conjugation adds A to C and a-conjugation subtracts B.
class HeisenbergGroup {
public:
    using Element = MalcevTriple;

    HeisenbergGroup();

    [[nodiscard]] std::string id() const { return "Heis"; }
    [[nodiscard]] const GeneratorSet<Element>& generators() const noexcept { return gens_; }
    [[nodiscard]] Element identity() const { return {}; }
    [[nodiscard]] Element compose(const Element& x, const Element& y) const {
        return {x.a + y.a, x.b + y.b, x.c + y.c - x.b * y.a};
    }
    [[nodiscard]] Element invert(const Element& x) const { return {-x.a, -x.b, -x.c - x.a * x.b}; }
    [[nodiscard]] Key encode(const Element& x) const;
    [[nodiscard]] Element decode(const Key& key) const;
    /// The two-branch formula on its domain A > B > 0, C >= 0; nullopt elsewhere.
    [[nodiscard]] std::optional<int> closed_length(const Element& x) const;

    [[nodiscard]] std::string format(const Element& x) const;
    /// "Heis(A,B,C)" or "w: <word>".
    [[nodiscard]] Element parse(const std::string& text) const;

private:
    GeneratorSet<Element> gens_;
};

/// Word length for A > B > 0, C >= 0:
///   2 ceil(C/A) + A + B            when C <= A^2 - AB (low height)
///   2 ceil(2 sqrt(C + AB)) - A - B when C >= A^2 - AB (high height)
/// Throws DomainError outside that region.
int heis_length(const MalcevTriple& g);
bool heis_in_formula_domain(const MalcevTriple& g);
bool heis_low_height(const MalcevTriple& g);

/// ceil(2 sqrt(n)) in exact integer arithmetic.
std::int64_t ceil_two_sqrt(std::int64_t n);
/// ceil(p / q) for q > 0.
std::int64_t ceil_div(std::int64_t p, std::int64_t q);

struct CeilJump {
    std::int64_t k = 0;         ///< C = kA + s with 0 <= s < A
    std::int64_t s = 0;
    bool degenerate = false;    ///< s == 0: the case formula does not apply
    std::int64_t up = 0;        ///< ceil((C + Bt)/A), direct
    std::int64_t down = 0;      ///< ceil((C - Bt)/A), direct
    std::int64_t up_case = 0;   ///< k+2 if s > A - Bt else k+1
    std::int64_t down_case = 0; ///< k+1 if s > Bt else k
};

/// Ceilings after an a^-t / a^t conjugation, computed directly and from the
/// remainder case split. Needs A > 0 and 0 <= Bt <= A.
CeilJump heis_ceil_jump(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t t);

enum class CaseLabel { X, Y, Z, BoundaryXY, BoundaryYZ, Degenerate };
std::string to_string(CaseLabel label);

/// Remainder case for one t: X when s < Bt, Y when Bt < s < A - Bt, Z when
/// s > A - Bt; the shared endpoints of the closed intervals get boundary labels.
CaseLabel heis_case(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t t);

enum class SignPrediction { Positive, Zero, Negative, Mixed };
std::string to_string(SignPrediction p);

/// Radius-r sector with the band 1/(5r) A <= B <= 2/(5r) A.
struct SectorSpec {
    int radius = 1;
    int max_length = 0;  ///< k: elements of length at most k ...
    bool band = true;    ///< restrict to the band

    /// A > B > 0, C > 0, C - Ar >= 0, A - B >= 2r, low height, 2r < |g| <= k,
    /// and the band when enabled.
    [[nodiscard]] bool contains(const MalcevTriple& g) const;
    [[nodiscard]] static bool in_band(std::int64_t A, std::int64_t B, int r);
};

/// Predicted sign of kappa_r from the ceiling jumps at t = 1..r: positive when
/// every a^±t conjugation pair shortens (X behaviour), zero when none changes
/// (Y), negative when every pair lengthens (Z), mixed otherwise.
SignPrediction heis_sign_predict(const MalcevTriple& g, int r);

struct RemainderFractions {
    std::int64_t A = 0;
    std::int64_t B = 0;
    // Closed intervals 1 <= s <= B, Br <= s <= A - Br, A - B <= s <= A - 1 over s in 1..A-1.
    std::int64_t closed_x = 0, closed_y = 0, closed_z = 0;
    // Exact ceiling behaviour of every residue class 0..A-1 (s = 0 behaves as Z).
    std::int64_t exact_x = 0, exact_y = 0, exact_z = 0, exact_mixed = 0;
    std::int64_t boundary = 0;  ///< s in 1..A-1 carrying a boundary label for some t
};

struct DensityRow {
    MalcevTriple g;
    std::int64_t s = 0;
    std::vector<CaseLabel> cases;  ///< t = 1..r
    SignPrediction predicted = SignPrediction::Mixed;
    Rational kappa;
};

struct DensityReport {
    int radius = 0;
    int max_length = 0;
    std::size_t elements = 0;
    std::array<std::size_t, 3> sign_counts{};       ///< exact kappa: positive, zero, negative
    std::array<std::size_t, 4> prediction_counts{}; ///< positive, zero, negative, mixed
    std::size_t prediction_mismatches = 0;
    std::vector<RemainderFractions> bands;
    std::vector<DensityRow> rows;                   ///< filled when requested
};

/// Exhaustive sector enumeration with exact kappa_r from the closed-form
/// lengths of all conjugates. Throws DomainError when k <= 2r or the sector is empty.
DensityReport heis_density_experiment(int max_length, int radius, bool keep_rows = false);

}  // namespace curvlab
