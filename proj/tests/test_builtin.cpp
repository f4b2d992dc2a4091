#include "support.hpp"

#include "curvlab/builtin.hpp"
#include "curvlab/curvature.hpp"

#include <doctest.h>

using namespace curvlab;

TEST_CASE("Z^n lengths and literals") {
    const auto z2 = make_zn(2);
    CHECK(z2.closed_length(z2.parse("(2,-3)")) == 5);
    CHECK(z2.format(z2.parse("w: a1 a1 a2^-1")) == "(2,-1)");
    CHECK(z2.format(z2.parse(" ( 4 , 0 ) ")) == "(4,0)");
    CHECK_THROWS_AS((void)z2.parse("(1,2,3)"), ParseError);
    CHECK_THROWS_AS((void)z2.parse("(1,x)"), ParseError);
    CHECK_THROWS_AS((void)z2.parse("1,2"), ParseError);
    CHECK_THROWS_AS(make_zn(0), DomainError);
}

TEST_CASE("F_n reduction and lengths") {
    const auto f2 = make_free(2);
    const auto g = f2.parse("a b a^-1");
    CHECK(f2.closed_length(g) == 3);
    CHECK(f2.closed_length(f2.parse("a b b^-1 a^-1")) == 0);
    CHECK(f2.format(f2.parse("a a^-1 b")) == "b");
    CHECK_FALSE(f2.is_cyclically_reduced(g));
    CHECK(f2.is_cyclically_reduced(f2.parse("a b")));
    CHECK_THROWS_AS(make_free(27), DomainError);
}

TEST_CASE("S3 relations and normal forms") {
    const auto s3 = make_s3();
    CHECK(s3.order() == 6);
    CHECK(s3.is_latin_square());
    const auto e = s3.identity();
    CHECK(s3.parse("s s") == e);
    CHECK(s3.parse("t t") == e);
    CHECK(s3.parse("s t s") == s3.parse("t s t"));
    CHECK(s3.parse("s t s t s t") == e);
    CHECK(s3.parse("s t") != s3.parse("t s"));
    const auto table = bfs_metric(s3, 3);
    CHECK(table.sphere_size(1) == 2);
    CHECK(table.sphere_size(2) == 2);
    CHECK(table.sphere_size(3) == 1);
    CHECK(s3.format(s3.parse("t s t")) == "s t s");
    CHECK(s3.format(e) == "e");
}

TEST_CASE("finite groups validate their tables") {
    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {0, 1}}, {{"x", 1}}), DomainError);
    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}}, {{"x", 1}}), DomainError);
    const FiniteGroup z2("Z2f", {{0, 1}, {1, 0}}, {{"x", 1}});
    CHECK(z2.generators().size() == 1);
    CHECK(z2.generators().is_involution(0));
    const FiniteGroup z4("Z4f", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {{"x", 1}, {"y", 3}});
    CHECK(z4.generators().inverse_of(0) == 1);
    CHECK_THROWS_AS(FiniteGroup("Z4g", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {{"x", 1}}),
                    DomainError);
    CHECK_THROWS_AS(FiniteGroup("Z4h", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {{"x", 2}}),
                    DomainError);
}

TEST_CASE("free_gencon closed form") {
    const auto f2 = make_free(2);
    const auto f3 = make_free(3);
    CHECK(free_gencon(2, f2.parse("a b")) == make_rational(3));
    CHECK(free_gencon(3, f3.parse("a")) == make_rational(7, 3));
    CHECK(free_gencon(1, make_free(1).parse("a a")) == make_rational(2));
    CHECK_THROWS_AS(free_gencon(2, f2.parse("a b a^-1")), DomainError);
    CHECK_THROWS_AS(free_gencon(2, f2.identity()), IdentityElement);
}

TEST_CASE("free_gencon equals the generic average on cyclically reduced words") {
    std::mt19937_64 rng(5);
    for (int rank = 1; rank <= 3; ++rank) {
        const auto group = make_free(rank);
        const auto table = bfs_metric(group, 1);
        const Metric<FreeGroup> metric(group, &table);
        int checked = 0;
        for (int i = 0; i < 300; ++i) {
            const auto g = curvlab::testing::random_element(group, 1 + rng() % 8, rng);
            if (g.empty() || !group.is_cyclically_reduced(g)) continue;
            ++checked;
            CHECK(free_gencon(rank, g) == gencon(metric, g));
        }
        CHECK(checked > 50);
    }
}

TEST_CASE("curvature vanishes on free abelian groups") {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 3; ++n) {
        const auto group = make_zn(n);
        const auto table = bfs_metric(group, 3);
        const Metric<AbelianGroup> metric(group, &table);
        for (int i = 0; i < 30; ++i) {
            const auto g = curvlab::testing::random_element(group, 1 + rng() % 10, rng);
            if (g == group.identity()) continue;
            for (int r = 1; r <= 3; ++r) {
                CHECK(kappa(metric, g, r, Mode::Sphere).kappa == 0);
                CHECK(kappa(metric, g, r, Mode::Ball).kappa == 0);
            }
        }
    }
}

TEST_CASE("radius-1 curvature of cyclically reduced free words") {
    std::mt19937_64 rng(7);
    for (int rank = 2; rank <= 3; ++rank) {
        const auto group = make_free(rank);
        const auto table = bfs_metric(group, 1);
        const Metric<FreeGroup> metric(group, &table);
        for (int i = 0; i < 100; ++i) {
            const auto g = curvlab::testing::random_element(group, 1 + rng() % 9, rng);
            if (g.empty() || !group.is_cyclically_reduced(g)) continue;
            const Rational len(static_cast<long long>(g.size()));
            const Rational expected = (make_rational(2, rank) - 2) / len;
            CHECK(kappa(metric, g, 1, Mode::Sphere).kappa == expected);
            CHECK(kappa(metric, g, 1, Mode::Sphere).kappa < 0);
        }
    }
}
