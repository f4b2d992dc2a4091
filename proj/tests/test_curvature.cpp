#include "support.hpp"

#include "curvlab/builtin.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/heisenberg.hpp"
#include "curvlab/houghton.hpp"
#include "curvlab/lamplighter.hpp"

#include <doctest.h>

#include <algorithm>

using namespace curvlab;

namespace {

std::vector<int> sorted_lengths(const auto& report) {
    std::vector<int> out;
    for (const auto& term : report.breakdown) out.push_back(term.length);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("lamplighter d_3 t at radius 1") {
    const auto group = make_lamplighter();
    const auto g = group.parse("d(3)*t^1");
    CHECK(group.closed_length(g) == 18);

    const auto table = bfs_metric(group, 1);
    const Metric<WreathGroup> metric(group, &table);
    const auto report = kappa(metric, g, 1, Mode::Sphere);
    CHECK(report.base_length == 18);
    CHECK(sorted_lengths(report) == std::vector<int>{16, 18, 18});
    CHECK(report.comparison_distance == make_rational(52, 3));
    CHECK(report.kappa == make_rational(1, 27));

    // The a-conjugate: |a d_3 t a| = 6m - k - 1 with m = 3, k = 1.
    const auto a = group.generators()[static_cast<std::size_t>(group.toggle(1))].element;
    CHECK(metric.length(conjugate(group, g, a)) == 16);
}

TEST_CASE("frozen lamplighter values from the closed-form metric") {
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 3);
    const Metric<WreathGroup> metric(group, &table);
    CHECK(kappa(metric, group.parse("d(5)*t^1"), 3, Mode::Sphere).kappa == make_rational(1, 18));
    // a commutes with d_1, and both t-conjugates keep length 7.
    CHECK(kappa(metric, group.parse("d(1)"), 1, Mode::Sphere).kappa == 0);
}

TEST_CASE("free group words") {
    const auto group = make_free(2);
    const auto table = bfs_metric(group, 2);
    const Metric<FreeGroup> metric(group, &table);
    const auto report = kappa(metric, group.parse("a b"), 1, Mode::Sphere);
    CHECK(report.comparison_distance == 3);
    CHECK(report.kappa == make_rational(-1, 2));
    CHECK(report.breakdown.size() == 4);
    CHECK(gencon(metric, group.parse("a b")) == 3);
}

TEST_CASE("finite group S3") {
    const auto group = make_s3();
    const auto table = bfs_metric(group, 3);
    const Metric<FiniteGroup> metric(group, &table);
    const auto report = kappa(metric, group.parse("s"), 1, Mode::Sphere);
    CHECK(sorted_lengths(report) == std::vector<int>{1, 3});
    CHECK(report.kappa == -1);
    // s and t conjugate the longest element s t s to t and s.
    CHECK(kappa(metric, group.parse("s t s"), 1, Mode::Sphere).kappa == make_rational(2, 3));
}

TEST_CASE("ball averages are size-weighted sphere averages") {
    std::mt19937_64 rng(21);
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 3);
    const Metric<WreathGroup> metric(group, &table);
    for (int i = 0; i < 40; ++i) {
        const auto g = curvlab::testing::random_element(group, 1 + rng() % 12, rng);
        if (g == group.identity()) continue;
        for (int r = 1; r <= 3; ++r) {
            Rational weighted = metric.length(g);
            std::size_t total = 1;
            for (int l = 1; l <= r; ++l) {
                weighted += comparison_distance(metric, g, l, Mode::Sphere) * static_cast<long long>(table.sphere_size(l));
                total += table.sphere_size(l);
            }
            CHECK(comparison_distance(metric, g, r, Mode::Ball) == weighted / static_cast<long long>(total));
        }
    }
}

TEST_CASE("structural properties of kappa") {
    std::mt19937_64 rng(22);
    auto run = [&](const auto& group, int horizon, int max_word, int max_r) {
        using G = std::decay_t<decltype(group)>;
        const auto table = bfs_metric(group, horizon);
        const Metric<G> metric(group, &table);
        for (int i = 0; i < 40; ++i) {
            const auto g = curvlab::testing::random_element(group, 1 + rng() % static_cast<unsigned>(max_word), rng);
            if (group.encode(g) == group.encode(group.identity())) continue;
            for (int r = 1; r <= max_r; ++r)
                for (Mode mode : {Mode::Sphere, Mode::Ball}) {
                    const auto report = kappa(metric, g, r, mode);
                    const auto inverse = kappa(metric, group.invert(g), r, mode);
                    CHECK(report.kappa == inverse.kappa);
                    CHECK(report.kappa <= 1);
                    CHECK(report.kappa >= make_rational(-2 * r, report.base_length));
                    CHECK(kappa_sign(metric, g, r, mode) == sign(report.kappa));
                    CHECK(report.breakdown.size() ==
                          (mode == Mode::Sphere ? table.sphere_size(r) : table.ball_size(r)));
                }
        }
    };
    run(make_lamplighter(), 2, 10, 2);
    run(make_free(2), 2, 6, 2);
    run(make_s3(), 3, 4, 2);
    run(make_cyclic_wreath(3), 2, 8, 2);
    run(HeisenbergGroup(), 14, 5, 2);
    run(HoughtonGroup(), 10, 4, 2);
}

TEST_CASE("conjugate elements of Z^2 have equal curvature") {
    const auto group = make_zn(2);
    const auto table = bfs_metric(group, 2);
    const Metric<AbelianGroup> metric(group, &table);
    const auto g = group.parse("(3,-1)");
    const auto h = group.parse("(5,7)");
    CHECK(kappa(metric, conjugate(group, g, h), 2, Mode::Ball).kappa == kappa(metric, g, 2, Mode::Ball).kappa);
}

TEST_CASE("errors") {
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 2);
    const Metric<WreathGroup> metric(group, &table);
    CHECK_THROWS_AS(kappa(metric, group.identity(), 1, Mode::Sphere), IdentityElement);
    CHECK_THROWS_AS(kappa(metric, group.parse("d(1)"), 0, Mode::Sphere), DomainError);
    CHECK_THROWS_AS(kappa(metric, group.parse("d(1)"), 3, Mode::Sphere), OutOfHorizon);
    const Metric<WreathGroup> tableless(group);
    CHECK_THROWS_AS(kappa(tableless, group.parse("d(1)"), 1, Mode::Sphere), OutOfHorizon);

    const HoughtonGroup h2;
    const auto small = bfs_metric(h2, 4);
    const Metric<HoughtonGroup> hm(h2, &small);
    try {
        (void)kappa(hm, h2_g(2), 1, Mode::Sphere);
        FAIL("expected OutOfHorizon");
    } catch (const OutOfHorizon& e) {
        CHECK(e.suggested_horizon > small.horizon());
    }
}
