#include "support.hpp"

#include "curvlab/builtin.hpp"
#include "curvlab/heisenberg.hpp"
#include "curvlab/houghton.hpp"
#include "curvlab/lamplighter.hpp"

#include <doctest.h>

#include <set>

using namespace curvlab;
using curvlab::testing::check_group_laws;
using curvlab::testing::random_element;
using curvlab::testing::sphere_sizes_from;

TEST_CASE("generator sets pair every generator with its inverse") {
    GeneratorSet<int> gens;
    const int s = gens.add_involution("s", 1);
    const int a = gens.add_pair("a", 2, "a^-1", 3);
    CHECK(gens.size() == 3);
    CHECK(gens.is_involution(s));
    CHECK(gens.inverse_of(a) == a + 1);
    CHECK(gens.inverse_of(a + 1) == a);
    CHECK(gens.well_formed());
    CHECK(gens.find("a^-1") == a + 1);
    CHECK_FALSE(gens.find("b").has_value());

    CHECK(make_lamplighter().generators().size() == 3);
    CHECK(make_s3().generators().size() == 2);
    CHECK(HeisenbergGroup().generators().size() == 4);
    CHECK(HoughtonGroup().generators().size() == 3);
    CHECK(make_lamplighter().generators().well_formed());
    CHECK(make_cyclic_wreath(3).generators().well_formed());
}

TEST_CASE("group laws and injective encodings hold for every built-in group") {
    check_group_laws(make_zn(3), 1);
    check_group_laws(make_free(2), 2);
    check_group_laws(make_free(3), 3);
    check_group_laws(make_s3(), 4);
    check_group_laws(make_lamplighter(), 5);
    check_group_laws(make_cyclic_wreath(3), 6);
    check_group_laws(make_cyclic_wreath(4), 7);
    check_group_laws(HoughtonGroup(), 8);
    check_group_laws(HeisenbergGroup(), 9);
}

TEST_CASE("BFS sphere sizes") {
    SUBCASE("free group F_2 has 4 * 3^(r-1) reduced words of length r") {
        const auto table = bfs_metric(make_free(2), 3);
        CHECK(table.sphere_size(1) == 4);
        CHECK(table.sphere_size(2) == 12);
        CHECK(table.sphere_size(3) == 36);
        CHECK(table.ball_size(3) == 53);
    }
    SUBCASE("Z^2 spheres are diamonds") {
        const auto table = bfs_metric(make_zn(2), 5);
        for (int r = 1; r <= 5; ++r) CHECK(table.sphere_size(r) == static_cast<std::size_t>(4 * r));
    }
    SUBCASE("the six lamplighter elements of length two") {
        const auto group = make_lamplighter();
        const auto table = bfs_metric(group, 2);
        std::set<Key> expected;
        for (const char* word : {"a t", "t a", "t t", "a t^-1", "t^-1 a", "t^-1 t^-1"})
            expected.insert(group.encode(evaluate(group, parse_word(group, word))));
        std::set<Key> layer;
        for (const auto& entry : table.layer(2)) layer.insert(entry.key);
        CHECK(layer == expected);
    }
    SUBCASE("lamplighter layer sizes out to radius 8 (frozen from the first BFS run)") {
        const auto table = bfs_metric(make_lamplighter(), 8);
        const std::vector<std::size_t> frozen{1, 3, 6, 12, 22, 40, 71, 123, 212};
        for (int r = 0; r <= 8; ++r) CHECK(table.sphere_size(r) == frozen[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("MetricTable structure") {
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 5);
    REQUIRE(table.layer(0).size() == 1);
    CHECK(table.layer(0)[0].key == group.encode(group.identity()));
    std::set<Key> all;
    std::size_t total = 0;
    for (int r = 0; r <= 5; ++r) {
        const auto& layer = table.layer(r);
        total += layer.size();
        CHECK(std::is_sorted(layer.begin(), layer.end(), [](const auto& x, const auto& y) { return x.key < y.key; }));
        for (const auto& entry : layer) {
            all.insert(entry.key);
            if (r == 0) continue;
            bool has_parent = false;
            for (const auto& gen : group.generators())
                has_parent |= table.distance(group.encode(group.compose(entry.element, gen.element))) == r - 1;
            CHECK(has_parent);
        }
    }
    CHECK(all.size() == total);
    CHECK(table.ball_size(5) == total);
    CHECK_THROWS_AS((void)table.layer(6), OutOfHorizon);
}

TEST_CASE("word_length") {
    const auto lamplighter = make_lamplighter();
    CHECK(word_length<WreathGroup>(lamplighter, lamplighter.identity(), nullptr) == 0);
    CHECK(word_length<WreathGroup>(lamplighter, ll_make_dm(3), nullptr) == 19);

    SUBCASE("the commutator c = [a,b] has length 4 by BFS") {
        const HeisenbergGroup heis;
        const BfsOnly<HeisenbergGroup> blind(heis);
        const auto table = bfs_metric(blind, 4);
        CHECK(word_length(blind, MalcevTriple{0, 0, 1}, &table) == 4);
    }
    SUBCASE("elements beyond the horizon without a closed form are rejected") {
        const HoughtonGroup h2;
        const auto table = bfs_metric(h2, 3);
        CHECK_THROWS_AS(word_length(h2, h2_g(2), &table), OutOfHorizon);
        const Metric<HoughtonGroup> metric(h2, &table);
        CHECK_FALSE(metric.lookup(h2_g(2)).has_value());
        CHECK(metric.longer_than(h2_g(2), 3));
        CHECK_THROWS_AS((void)metric.longer_than(h2_g(2), 4), OutOfHorizon);
    }
}

TEST_CASE("sphere and ball enumeration") {
    const auto table = bfs_metric(make_zn(2), 3);
    CHECK(sphere(table, 0).size() == 1);
    CHECK(ball(table, 0).size() == 1);
    CHECK(sphere(table, 2).size() == 8);
    CHECK(ball(table, 2).size() == 13);
    CHECK_THROWS_AS(sphere(table, 4), OutOfHorizon);
}

TEST_CASE("closed-form lengths agree with BFS") {
    auto agree = [](const auto& group, int horizon) {
        using G = std::decay_t<decltype(group)>;
        const BfsOnly<G> blind(group);
        const auto table = bfs_metric(blind, horizon);
        std::size_t covered = 0;
        for (int r = 0; r <= horizon; ++r)
            for (const auto& entry : table.layer(r))
                if (auto closed = group.closed_length(entry.element)) {
                    ++covered;
                    CHECK(*closed == r);
                }
        return covered;
    };
    CHECK(agree(make_zn(2), 8) == bfs_metric(make_zn(2), 8).ball_size(8));
    CHECK(agree(make_zn(3), 6) > 0);
    CHECK(agree(make_free(2), 6) > 0);
    CHECK(agree(make_lamplighter(), 8) == 490);
    CHECK(agree(make_cyclic_wreath(3), 6) == 515);
    CHECK(agree(HeisenbergGroup(), 10) > 0);
}

TEST_CASE("triangle inequality on sampled triples") {
    const auto group = make_lamplighter();
    const Metric<WreathGroup> metric(group);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto x = random_element(group, rng() % 9, rng);
        const auto y = random_element(group, rng() % 9, rng);
        const auto z = random_element(group, rng() % 9, rng);
        CHECK(metric.distance(x, z) <= metric.distance(x, y) + metric.distance(y, z));
    }
    const HoughtonGroup h2;
    const auto table = bfs_metric(h2, 12);
    const Metric<HoughtonGroup> hm(h2, &table);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_element(h2, rng() % 5, rng);
        const auto y = random_element(h2, rng() % 5, rng);
        const auto z = random_element(h2, rng() % 5, rng);
        CHECK(hm.distance(x, z) <= hm.distance(x, y) + hm.distance(y, z));
    }
}

TEST_CASE("sphere sizes do not depend on the basepoint") {
    std::mt19937_64 rng(12);
    auto check_group = [&](const auto& group, int radius) {
        const auto table = bfs_metric(group, radius);
        for (int i = 0; i < 5; ++i) {
            const auto h = random_element(group, 1 + rng() % 6, rng);
            const auto sizes = sphere_sizes_from(group, h, radius);
            for (int r = 0; r <= radius; ++r) CHECK(sizes[static_cast<std::size_t>(r)] == table.sphere_size(r));
        }
    };
    check_group(make_lamplighter(), 6);
    check_group(make_free(2), 4);
    check_group(make_s3(), 3);
    check_group(HoughtonGroup(), 6);
    check_group(HeisenbergGroup(), 6);
}

TEST_CASE("element budget") {
    CHECK_THROWS_AS(bfs_metric(make_free(3), 6, 1000), BudgetExceeded);
    CHECK_NOTHROW(bfs_metric(make_free(3), 3, 1000));
    CHECK(bfs_distance(HoughtonGroup(), h2_g(2), 20) == 12);
    CHECK_THROWS_AS(bfs_distance(HoughtonGroup(), h2_g(2), 20, 500), BudgetExceeded);
}

TEST_CASE("word parsing") {
    const auto group = make_lamplighter();
    CHECK(parse_word(group, "a t^-1 t^3 e").size() == 5);
    CHECK(format_word(group, parse_word(group, "a t t^-1")) == "a t t^-1");
    CHECK(format_word(group, {}) == "e");
    try {
        (void)parse_word(group, "a q");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.token == "q");
    }
    CHECK_THROWS_AS(parse_word(group, "t^x"), ParseError);
}
