#include "curvlab/builtin.hpp"
#include "curvlab/cache.hpp"
#include "curvlab/houghton.hpp"
#include "curvlab/lamplighter.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>

#include <unistd.h>

using namespace curvlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("curvlab-cache-test-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <GroupOracle G>
void check_same(const MetricTable<G>& x, const MetricTable<G>& y) {
    REQUIRE(x.horizon() == y.horizon());
    CHECK(x.group_id() == y.group_id());
    for (int r = 0; r <= x.horizon(); ++r) {
        REQUIRE(x.layer(r).size() == y.layer(r).size());
        for (std::size_t i = 0; i < x.layer(r).size(); ++i) {
            CHECK(x.layer(r)[i].key == y.layer(r)[i].key);
            CHECK(x.layer(r)[i].element == y.layer(r)[i].element);
        }
    }
}

}  // namespace

TEST_CASE("save then load reproduces the table and the bytes") {
    TempDir dir;
    const auto group = make_lamplighter();
    const auto table = bfs_metric(group, 7);
    const auto path = cache_path(dir.path, group.id(), 7);
    save_cache(table, path);
    auto loaded = load_cache(group, 7, path);
    REQUIRE(loaded.has_value());
    check_same(table, *loaded);

    const auto second = dir.path / "again.bfs";
    save_cache(*loaded, second);
    CHECK(slurp(path) == slurp(second));
}

TEST_CASE("round trips for groups with other element types") {
    TempDir dir;
    const HoughtonGroup h2;
    const auto table = bfs_metric(h2, 6);
    save_cache(table, dir.path / "h2.bfs");
    auto loaded = load_cache(h2, 6, dir.path / "h2.bfs");
    REQUIRE(loaded);
    check_same(table, *loaded);

    const auto s3 = make_s3();
    const auto small = bfs_metric(s3, 3);
    save_cache(small, dir.path / "s3.bfs");
    auto back = load_cache(s3, 3, dir.path / "s3.bfs");
    REQUIRE(back);
    check_same(small, *back);
}

TEST_CASE("mismatched group, horizon or missing file yield no table") {
    TempDir dir;
    const auto lamplighter = make_lamplighter();
    save_cache(bfs_metric(lamplighter, 4), dir.path / "l2.bfs");
    CHECK_FALSE(load_cache(lamplighter, 5, dir.path / "l2.bfs").has_value());
    CHECK_FALSE(load_cache(make_cyclic_wreath(3), 4, dir.path / "l2.bfs").has_value());
    CHECK_FALSE(load_cache(lamplighter, 4, dir.path / "absent.bfs").has_value());
}

TEST_CASE("corrupt files are rejected") {
    TempDir dir;
    const auto path = dir.path / "junk.bfs";
    {
        std::ofstream out(path, std::ios::binary);
        out << "NOTACACHEFILE";
    }
    CHECK_THROWS_AS(load_cache(make_lamplighter(), 4, path), Error);
}

TEST_CASE("cached_bfs_metric writes once and then reads") {
    TempDir dir;
    const auto group = make_free(2);
    const auto first = cached_bfs_metric(group, 4, kDefaultElementBudget, dir.path);
    const auto path = cache_path(dir.path, group.id(), 4);
    REQUIRE(fs::exists(path));
    const auto bytes = slurp(path);
    const auto second = cached_bfs_metric(group, 4, kDefaultElementBudget, dir.path);
    check_same(first, second);
    CHECK(slurp(path) == bytes);
    const auto direct = cached_bfs_metric(group, 4, kDefaultElementBudget, fs::path{});
    check_same(first, direct);
}
