#pragma once

#include "curvlab/errors.hpp"
#include "curvlab/group.hpp"

#include <cstdint>
#include <string_view>

namespace curvlab::encoding {

/// Appends v as 8 big-endian bytes with the sign bit flipped, so byte order
/// matches numeric order.
inline void put_i64(Key& out, std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << 63);
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xFFu));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::int64_t i64() {
        if (pos_ + 8 > bytes_.size()) throw Error("truncated element key");
        std::uint64_t u = 0;
        for (int i = 0; i < 8; ++i) u = (u << 8) | static_cast<unsigned char>(bytes_[pos_++]);
        return static_cast<std::int64_t>(u ^ (std::uint64_t{1} << 63));
    }

    [[nodiscard]] bool done() const noexcept { return pos_ == bytes_.size(); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace curvlab::encoding
