#include "curvlab/heisenberg.hpp"

#include "curvlab/curvature.hpp"
#include "curvlab/encoding.hpp"

#include <cmath>
#include <limits>
#include <regex>

namespace curvlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

HeisenbergGroup::HeisenbergGroup() {
    gens_.add_pair("a", {1, 0, 0}, "a^-1", {-1, 0, 0});
    gens_.add_pair("b", {0, 1, 0}, "b^-1", {0, -1, 0});
}

Key HeisenbergGroup::encode(const Element& x) const {
    Key key;
    encoding::put_i64(key, x.a);
    encoding::put_i64(key, x.b);
    encoding::put_i64(key, x.c);
    return key;
}

HeisenbergGroup::Element HeisenbergGroup::decode(const Key& key) const {
    encoding::Reader in(key);
    Element x;
    x.a = in.i64();
    x.b = in.i64();
    x.c = in.i64();
    return x;
}

std::optional<int> HeisenbergGroup::closed_length(const Element& x) const {
    if (!heis_in_formula_domain(x)) return std::nullopt;
    return heis_length(x);
}

std::string HeisenbergGroup::format(const Element& x) const {
    return "Heis(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) + ")";
}

HeisenbergGroup::Element HeisenbergGroup::parse(const std::string& text) const {
    const auto t = trim(text);
    if (t.rfind("w:", 0) == 0) return evaluate(*this, parse_word(*this, t.substr(2)));
    static const std::regex re(R"(Heis\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::smatch m;
    if (!std::regex_match(t, m, re)) throw ParseError(t, "Heis(A,B,C) or w: <word>");
    return {std::stoll(m[1].str()), std::stoll(m[2].str()), std::stoll(m[3].str())};
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
    const auto quotient = p / q;
    return quotient + ((p % q != 0) && ((p > 0) == (q > 0)) ? 1 : 0);
}

std::int64_t ceil_two_sqrt(std::int64_t n) {
    // Least q >= 0 with q^2 >= 4n.
    if (n <= 0) return 0;
    auto q = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
    while (q > 0 && (q - 1) * (q - 1) >= 4 * n) --q;
    while (q * q < 4 * n) ++q;
    return q;
}

bool heis_in_formula_domain(const MalcevTriple& g) { return g.a > g.b && g.b > 0 && g.c >= 0; }

bool heis_low_height(const MalcevTriple& g) { return g.c <= g.a * g.a - g.a * g.b; }

int heis_length(const MalcevTriple& g) {
    if (!heis_in_formula_domain(g))
        throw DomainError("closed Heisenberg length needs A > B > 0 and C >= 0; use BFS outside");
    if (heis_low_height(g)) return static_cast<int>(2 * ceil_div(g.c, g.a) + g.a + g.b);
    return static_cast<int>(2 * ceil_two_sqrt(g.c + g.a * g.b) - g.a - g.b);
}

CeilJump heis_ceil_jump(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t t) {
    if (A <= 0) throw DomainError("ceiling case split needs A > 0");
    if (B * t < 0 || B * t > A) throw DomainError("ceiling case split needs 0 <= Bt <= A");
    CeilJump out;
    out.k = C >= 0 ? C / A : -ceil_div(-C, A);
    out.s = C - out.k * A;
    out.degenerate = out.s == 0;
    out.up = ceil_div(C + B * t, A);
    out.down = ceil_div(C - B * t, A);
    out.up_case = out.s > A - B * t ? out.k + 2 : out.k + 1;
    out.down_case = out.s > B * t ? out.k + 1 : out.k;
    return out;
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::X: return "X";
        case CaseLabel::Y: return "Y";
        case CaseLabel::Z: return "Z";
        case CaseLabel::BoundaryXY: return "XY";
        case CaseLabel::BoundaryYZ: return "YZ";
        case CaseLabel::Degenerate: return "0";
    }
    return "?";
}

std::string to_string(SignPrediction p) {
    switch (p) {
        case SignPrediction::Positive: return "+";
        case SignPrediction::Zero: return "0";
        case SignPrediction::Negative: return "-";
        case SignPrediction::Mixed: return "mixed";
    }
    return "?";
}

CaseLabel heis_case(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t t) {
    const auto s = ((C % A) + A) % A;
    if (s == 0) return CaseLabel::Degenerate;
    const auto low = B * t, high = A - B * t;
    if (s == low) return CaseLabel::BoundaryXY;
    if (s == high) return CaseLabel::BoundaryYZ;
    if (s < low) return CaseLabel::X;
    if (s > high) return CaseLabel::Z;
    return CaseLabel::Y;
}

bool SectorSpec::in_band(std::int64_t A, std::int64_t B, int r) {
    return A <= 5 * r * B && 5 * r * B <= 2 * A;
}

bool SectorSpec::contains(const MalcevTriple& g) const {
    if (!(g.a > g.b && g.b > 0 && g.c > 0)) return false;
    if (g.c - g.a * radius < 0 || g.a - g.b < 2 * radius) return false;
    if (!heis_low_height(g)) return false;
    if (band && !in_band(g.a, g.b, radius)) return false;
    const int len = heis_length(g);
    return len > 2 * radius && len <= max_length;
}

namespace {

/// Change of ceil(C/A) summed over the a^t and a^-t conjugations.
int pair_delta(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t t) {
    return static_cast<int>(ceil_div(C + B * t, A) + ceil_div(C - B * t, A) - 2 * ceil_div(C, A));
}

SignPrediction classify(const std::vector<int>& deltas) {
    bool all_neg = true, all_zero = true, all_pos = true;
    for (int d : deltas) {
        all_neg &= d < 0;
        all_zero &= d == 0;
        all_pos &= d > 0;
    }
    if (all_neg) return SignPrediction::Positive;
    if (all_zero) return SignPrediction::Zero;
    if (all_pos) return SignPrediction::Negative;
    return SignPrediction::Mixed;
}

}  // namespace

SignPrediction heis_sign_predict(const MalcevTriple& g, int r) {
    const SectorSpec sector{r, std::numeric_limits<int>::max(), false};
    if (!sector.contains(g)) throw DomainError("sign prediction needs a sector element");
    std::vector<int> deltas;
    for (int t = 1; t <= r; ++t) deltas.push_back(pair_delta(g.a, g.b, g.c, t));
    return classify(deltas);
}

DensityReport heis_density_experiment(int max_length, int radius, bool keep_rows) {
    if (radius < 1) throw DomainError("radius must be at least 1");
    if (max_length <= 2 * radius) throw DomainError("empty sector: k must exceed 2r");
    const HeisenbergGroup group;
    const auto table = bfs_metric(group, radius);
    const Metric<HeisenbergGroup> metric(group, &table);
    const SectorSpec sector{radius, max_length, true};

    DensityReport report;
    report.radius = radius;
    report.max_length = max_length;
    const std::int64_t r = radius;
    for (std::int64_t A = 2; A <= max_length; ++A) {
        for (std::int64_t B = 1; B < A; ++B) {
            if (A - B < 2 * r || !SectorSpec::in_band(A, B, radius)) continue;
            if (A + B > max_length - 2 * r) continue;

            RemainderFractions band;
            band.A = A;
            band.B = B;
            for (std::int64_t s = 0; s < A; ++s) {
                std::vector<int> deltas;
                bool on_boundary = false;
                for (std::int64_t t = 1; t <= r; ++t) {
                    deltas.push_back(pair_delta(A, B, s + A * (r + 1), t));
                    const auto label = heis_case(A, B, s, t);
                    on_boundary |= label == CaseLabel::BoundaryXY || label == CaseLabel::BoundaryYZ;
                }
                switch (classify(deltas)) {
                    case SignPrediction::Positive: ++band.exact_x; break;
                    case SignPrediction::Zero: ++band.exact_y; break;
                    case SignPrediction::Negative: ++band.exact_z; break;
                    case SignPrediction::Mixed: ++band.exact_mixed; break;
                }
                if (s == 0) continue;
                band.boundary += on_boundary ? 1 : 0;
                band.closed_x += s <= B ? 1 : 0;
                band.closed_y += (B * r <= s && s <= A - B * r) ? 1 : 0;
                band.closed_z += s >= A - B ? 1 : 0;
            }
            report.bands.push_back(band);

            const std::int64_t c_max = std::min(A * A - A * B, A * ((max_length - A - B) / 2));
            for (std::int64_t C = std::max<std::int64_t>(1, A * r); C <= c_max; ++C) {
                const MalcevTriple g{A, B, C};
                if (!sector.contains(g)) continue;
                ++report.elements;
                std::vector<int> deltas;
                for (std::int64_t t = 1; t <= r; ++t) deltas.push_back(pair_delta(A, B, C, t));
                const auto predicted = classify(deltas);
                ++report.prediction_counts[static_cast<std::size_t>(predicted)];

                const auto curvature = kappa(metric, g, radius, Mode::Sphere);
                const int sgn = sign(curvature.kappa);
                ++report.sign_counts[sgn > 0 ? 0 : (sgn == 0 ? 1 : 2)];
                const int expected = predicted == SignPrediction::Positive ? 1
                                     : predicted == SignPrediction::Zero   ? 0
                                                                           : -1;
                if (predicted != SignPrediction::Mixed && expected != sgn) ++report.prediction_mismatches;

                if (keep_rows) {
                    DensityRow row;
                    row.g = g;
                    row.s = C % A;
                    for (std::int64_t t = 1; t <= r; ++t) row.cases.push_back(heis_case(A, B, C, t));
                    row.predicted = predicted;
                    row.kappa = curvature.kappa;
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }
    if (report.elements == 0) throw DomainError("empty sector: raise k relative to r");
    return report;
}

}  // namespace curvlab
