#pragma once

// Binary BFS cache. Layout (all integers little-endian):
//
//   magic        8 bytes  "CURVLAB\0"
//   version      u32      kCacheVersion
//   id_len       u32      followed by id_len bytes of group id
//   horizon      u32
//   layer_count  u32      always horizon + 1
//   counts       u64 x layer_count
//   entries      per layer in order, per key in ascending byte order:
//                  key_len u32, key bytes, length u32
//
// Loading re-derives elements through the group's decode().

#include "curvlab/metric.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace curvlab {

inline constexpr std::uint32_t kCacheVersion = 1;
inline constexpr std::array<char, 8> kCacheMagic{'C', 'U', 'R', 'V', 'L', 'A', 'B', '\0'};

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFFu));
}
inline void put_u64(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFFu));
}
inline std::uint64_t get_le(std::istream& in, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw Error("truncated cache file");
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

}  // namespace detail

template <GroupOracle G>
void save_cache(const MetricTable<G>& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + path.string());
    out.write(kCacheMagic.data(), kCacheMagic.size());
    detail::put_u32(out, kCacheVersion);
    detail::put_u32(out, static_cast<std::uint32_t>(table.group_id().size()));
    out.write(table.group_id().data(), static_cast<std::streamsize>(table.group_id().size()));
    detail::put_u32(out, static_cast<std::uint32_t>(table.horizon()));
    detail::put_u32(out, static_cast<std::uint32_t>(table.layers().size()));
    for (const auto& layer : table.layers()) detail::put_u64(out, layer.size());
    for (std::size_t r = 0; r < table.layers().size(); ++r) {
        for (const auto& entry : table.layers()[r]) {
            detail::put_u32(out, static_cast<std::uint32_t>(entry.key.size()));
            out.write(entry.key.data(), static_cast<std::streamsize>(entry.key.size()));
            detail::put_u32(out, static_cast<std::uint32_t>(r));
        }
    }
    if (!out) throw Error("failed writing cache file " + path.string());
}

/// Returns std::nullopt when the file is absent or was written for a
/// different group, horizon or format version. Corrupt files throw.
template <GroupOracle G>
std::optional<MetricTable<G>> load_cache(const G& group, int horizon, const std::filesystem::path& path) {
    using Entry = typename MetricTable<G>::Entry;
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kCacheMagic) throw Error("not a curvlab cache file: " + path.string());
    if (detail::get_le(in, 4) != kCacheVersion) return std::nullopt;
    std::string id(detail::get_le(in, 4), '\0');
    in.read(id.data(), static_cast<std::streamsize>(id.size()));
    if (id != group.id()) return std::nullopt;
    if (static_cast<int>(detail::get_le(in, 4)) != horizon) return std::nullopt;
    const auto layer_count = detail::get_le(in, 4);
    if (layer_count != static_cast<std::uint64_t>(horizon) + 1) throw Error("inconsistent layer count in cache");
    std::vector<std::uint64_t> counts(layer_count);
    for (auto& c : counts) c = detail::get_le(in, 8);
    std::vector<std::vector<Entry>> layers(layer_count);
    for (std::size_t r = 0; r < layer_count; ++r) {
        layers[r].reserve(counts[r]);
        for (std::uint64_t i = 0; i < counts[r]; ++i) {
            Key key(detail::get_le(in, 4), '\0');
            in.read(key.data(), static_cast<std::streamsize>(key.size()));
            if (detail::get_le(in, 4) != r) throw Error("cache entry stored in the wrong layer");
            auto element = group.decode(key);
            layers[r].push_back(Entry{std::move(key), std::move(element)});
        }
    }
    return MetricTable<G>(id, horizon, std::move(layers));
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& group_id, int horizon) {
    return dir / (group_id + "-h" + std::to_string(horizon) + ".bfs");
}

/// Loads the table from `dir` when a matching cache exists, otherwise runs BFS
/// and writes the cache. An empty `dir` disables caching.
template <GroupOracle G>
MetricTable<G> cached_bfs_metric(const G& group, int horizon, std::size_t budget, const std::filesystem::path& dir) {
    if (dir.empty()) return bfs_metric(group, horizon, budget);
    const auto path = cache_path(dir, group.id(), horizon);
    if (auto hit = load_cache(group, horizon, path)) return std::move(*hit);
    auto table = bfs_metric(group, horizon, budget);
    std::filesystem::create_directories(dir);
    save_cache(table, path);
    return table;
}

}  // namespace curvlab
