#include "support.hpp"

#include "curvlab/curvature.hpp"
#include "curvlab/heisenberg.hpp"

#include <doctest.h>

#include <cmath>

using namespace curvlab;

namespace {

const HeisenbergGroup& heis() {
    static const HeisenbergGroup group;
    return group;
}

// Exact BFS lengths, blind to the closed formula.
const MetricTable<BfsOnly<HeisenbergGroup>>& blind_table() {
    static const BfsOnly<HeisenbergGroup> blind(heis());
    static const auto table = bfs_metric(blind, 12);
    return table;
}

int bfs_length(const MalcevTriple& g) {
    const auto d = blind_table().distance(heis().encode(g));
    REQUIRE(d.has_value());
    return *d;
}

}  // namespace

TEST_CASE("commutator and conjugation effects") {
    const auto& g = heis();
    const MalcevTriple a{1, 0, 0}, b{0, 1, 0};
    CHECK(g.compose(g.invert(a), g.compose(g.invert(b), g.compose(a, b))) == MalcevTriple{0, 0, 1});
    CHECK(g.parse("w: a^-1 b^-1 a b") == MalcevTriple{0, 0, 1});
    const MalcevTriple x{7, 3, 20};
    CHECK(conjugate(g, x, b) == MalcevTriple{7, 3, 27});
    CHECK(conjugate(g, x, g.invert(b)) == MalcevTriple{7, 3, 13});
    CHECK(conjugate(g, x, a) == MalcevTriple{7, 3, 17});
    CHECK(conjugate(g, x, g.invert(a)) == MalcevTriple{7, 3, 23});
    curvlab::testing::check_group_laws(g, 51, 300);
}

TEST_CASE("closed length examples") {
    CHECK(heis_length({3, 1, 6}) == 8);
    CHECK(heis_low_height({3, 1, 6}));
    CHECK(heis_length({2, 1, 1}) == 5);
    CHECK(heis_length({5, 2, 10}) == 11);
    CHECK(bfs_length({3, 1, 6}) == 8);
    CHECK(bfs_length({2, 1, 1}) == 5);
    CHECK(bfs_length({5, 2, 10}) == 11);
    CHECK(bfs_length({0, 0, 1}) == 4);
    CHECK_THROWS_AS(heis_length({1, 2, 3}), DomainError);
    CHECK_THROWS_AS(heis_length({3, 0, 3}), DomainError);
    CHECK_FALSE(heis().closed_length({-3, 1, 2}).has_value());
}

TEST_CASE("closed length matches BFS on its whole domain inside B_12") {
    std::size_t covered = 0;
    for (int r = 0; r <= 12; ++r)
        for (const auto& entry : blind_table().layer(r))
            if (heis_in_formula_domain(entry.element)) {
                ++covered;
                CHECK(heis_length(entry.element) == r);
            }
    CHECK(covered > 100);
}

TEST_CASE("branches agree on the height boundary") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t A = 2 + static_cast<std::int64_t>(rng() % 400);
        const std::int64_t B = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(A - 1));
        const std::int64_t C = A * A - A * B;
        const auto low = 2 * ceil_div(C, A) + A + B;
        const auto high = 2 * ceil_two_sqrt(C + A * B) - A - B;
        CHECK(low == high);
        CHECK(heis_length({A, B, C}) == low);
    }
}

TEST_CASE("integer helpers") {
    for (std::int64_t n = 0; n <= 5000; ++n) {
        const auto v = ceil_two_sqrt(n);
        CHECK(v * v >= 4 * n);
        if (v > 0) CHECK((v - 1) * (v - 1) < 4 * n);
    }
    CHECK(ceil_two_sqrt(9) == 6);
    CHECK(ceil_two_sqrt(std::int64_t{1} << 60) == std::int64_t{1} << 31);
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(-7, 3) == -2);
    CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("ceiling jumps") {
    auto jump = heis_ceil_jump(10, 2, 23, 1);
    CHECK(jump.k == 2);
    CHECK(jump.s == 3);
    CHECK(jump.up == 3);
    CHECK(jump.down == 3);
    CHECK(heis_case(10, 2, 23, 1) == CaseLabel::Y);
    jump = heis_ceil_jump(10, 2, 21, 1);
    CHECK(jump.up == 3);
    CHECK(jump.down == 2);
    CHECK(heis_case(10, 2, 21, 1) == CaseLabel::X);
    jump = heis_ceil_jump(10, 2, 29, 1);
    CHECK(jump.up == 4);
    CHECK(jump.down == 3);
    CHECK(heis_case(10, 2, 29, 1) == CaseLabel::Z);
    CHECK(heis_ceil_jump(10, 2, 30, 1).degenerate);
    CHECK(heis_case(10, 2, 30, 1) == CaseLabel::Degenerate);
    CHECK(heis_case(10, 2, 22, 1) == CaseLabel::BoundaryXY);
    CHECK(heis_case(10, 2, 28, 1) == CaseLabel::BoundaryYZ);

    for (std::int64_t A = 1; A <= 50; ++A)
        for (std::int64_t B = 0; B <= A; ++B)
            for (std::int64_t t = 1; t <= 3 && B * t <= A; ++t)
                for (std::int64_t C = 0; C <= 3 * A; ++C) {
                    const auto j = heis_ceil_jump(A, B, C, t);
                    CHECK(j.up == ceil_div(C + B * t, A));
                    CHECK(j.down == ceil_div(C - B * t, A));
                    if (j.degenerate) continue;
                    CHECK(j.up == j.up_case);
                    CHECK(j.down == j.down_case);
                }
}

TEST_CASE("conjugation by c leaves lengths alone") {
    const MalcevTriple c{0, 0, 1};
    for (int r = 0; r <= 8; ++r)
        for (const auto& entry : blind_table().layer(r)) {
            CHECK(conjugate(heis(), entry.element, c) == entry.element);
            CHECK(conjugate(heis(), entry.element, heis().invert(c)) == entry.element);
        }
}

TEST_CASE("b-conjugation changes cancel in pairs") {
    const SectorSpec sector{1, 60, false};
    std::size_t checked = 0;
    for (std::int64_t A = 2; A <= 60; ++A)
        for (std::int64_t B = 1; B < A; ++B)
            for (std::int64_t C = 1; C <= A * A - A * B; C += 3) {
                const MalcevTriple g{A, B, C};
                if (!sector.contains(g)) continue;
                ++checked;
                const int base = heis_length(g);
                const int up = heis_length({A, B, C + A}) - base;
                const int down = heis_length({A, B, C - A}) - base;
                CHECK(up + down == 0);
            }
    CHECK(checked > 1000);
}

TEST_CASE("sign prediction agrees with the exact curvature") {
    const auto table = bfs_metric(heis(), 2);
    const Metric<HeisenbergGroup> metric(heis(), &table);
    std::array<std::size_t, 3> seen{};
    for (int r = 1; r <= 2; ++r) {
        const SectorSpec sector{r, 60, false};
        for (std::int64_t A = 2; A <= 60; ++A)
            for (std::int64_t B = 1; B < A; ++B)
                for (std::int64_t C = 1; C <= A * A - A * B; ++C) {
                    const MalcevTriple g{A, B, C};
                    if (!sector.contains(g)) continue;
                    const auto p = heis_sign_predict(g, r);
                    if (p == SignPrediction::Mixed) continue;
                    const int exact = kappa_sign(metric, g, r, Mode::Sphere);
                    const int expected = p == SignPrediction::Positive ? 1 : p == SignPrediction::Zero ? 0 : -1;
                    CHECK(exact == expected);
                    ++seen[static_cast<std::size_t>(1 - expected)];
                }
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("remainder-based sign examples") {
    const auto table = bfs_metric(heis(), 1);
    const Metric<HeisenbergGroup> metric(heis(), &table);
    // A = 20, B = 4, r = 1: s <= B is X, B < s < A - B is Y, s >= A - B is Z.
    CHECK(heis_sign_predict({20, 4, 41}, 1) == SignPrediction::Positive);
    CHECK(kappa(metric, MalcevTriple{20, 4, 41}, 1, Mode::Sphere).kappa > 0);
    CHECK(heis_sign_predict({20, 4, 50}, 1) == SignPrediction::Zero);
    CHECK(kappa(metric, MalcevTriple{20, 4, 50}, 1, Mode::Sphere).kappa == 0);
    CHECK(heis_sign_predict({20, 4, 57}, 1) == SignPrediction::Negative);
    CHECK(kappa(metric, MalcevTriple{20, 4, 57}, 1, Mode::Sphere).kappa < 0);
}

TEST_CASE("band membership") {
    CHECK(SectorSpec::in_band(50, 10, 1));
    CHECK(SectorSpec::in_band(50, 20, 1));
    CHECK_FALSE(SectorSpec::in_band(50, 9, 1));
    CHECK_FALSE(SectorSpec::in_band(50, 21, 1));
    CHECK(SectorSpec::in_band(50, 5, 2));
    CHECK(SectorSpec::in_band(50, 10, 2));
    CHECK_FALSE(SectorSpec::in_band(50, 11, 2));
}

TEST_CASE("density experiment") {
    SUBCASE("r = 1, k = 40") {
        const auto report = heis_density_experiment(40, 1, true);
        CHECK(report.elements > 0);
        CHECK(report.rows.size() == report.elements);
        for (auto count : report.sign_counts) CHECK(count > 0);
        CHECK(report.prediction_mismatches == 0);
        for (const auto& band : report.bands) {
            const auto floor_count = [&](std::int64_t count, std::int64_t total) { return 5 * 1 * count >= total; };
            CHECK(floor_count(band.closed_x, band.A - 1));
            CHECK(floor_count(band.closed_y, band.A - 1));
            CHECK(floor_count(band.closed_z, band.A - 1));
            CHECK(floor_count(band.exact_x, band.A));
            CHECK(floor_count(band.exact_y, band.A));
            CHECK(floor_count(band.exact_z, band.A));
        }
        for (const auto& row : report.rows) CHECK(row.cases.size() == 1);
    }
    SUBCASE("r = 2, k = 80") {
        const auto report = heis_density_experiment(80, 2);
        CHECK(report.rows.empty());
        CHECK(report.prediction_mismatches == 0);
        for (auto count : report.sign_counts) CHECK(count > 0);
        CHECK_FALSE(report.bands.empty());
        for (const auto& band : report.bands) {
            CHECK(10 * band.closed_x >= band.A - 1);
            CHECK(10 * band.closed_y >= band.A - 1);
            CHECK(10 * band.closed_z >= band.A - 1);
            CHECK(10 * band.exact_x >= band.A);
            CHECK(10 * band.exact_y >= band.A);
            CHECK(10 * band.exact_z >= band.A);
        }
    }
    CHECK_THROWS_AS(heis_density_experiment(2, 1), DomainError);
    CHECK_THROWS_AS(heis_density_experiment(4, 2), DomainError);
}

TEST_CASE("literals") {
    const auto& g = heis();
    CHECK(g.parse("Heis(3,1,6)") == MalcevTriple{3, 1, 6});
    CHECK(g.parse(" Heis( -2 , 0 , 5 ) ") == MalcevTriple{-2, 0, 5});
    CHECK(g.parse(g.format({4, -1, 7})) == MalcevTriple{4, -1, 7});
    CHECK_THROWS_AS((void)g.parse("Heis(1,2)"), ParseError);
    CHECK_THROWS_AS((void)g.parse("w: a q"), ParseError);
}
