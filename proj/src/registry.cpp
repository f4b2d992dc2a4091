#include "curvlab/registry.hpp"

#include <charconv>

namespace curvlab {

namespace {

int parse_rank(const std::string& id, std::size_t offset, int max_rank) {
    int n = 0;
    const char* first = id.data() + offset;
    const char* last = id.data() + id.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last || first == last || n < 1 || n > max_rank)
        throw ParseError(id, "group id Z<n>, F<n>, S3, L2, W<n>, H2 or Heis");
    return n;
}

}  // namespace

AnyGroup make_group(const std::string& id) {
    if (id == "S3") return make_s3();
    if (id == "L2") return make_lamplighter();
    if (id == "H2") return HoughtonGroup();
    if (id == "Heis") return HeisenbergGroup();
    if (id.size() > 1 && id[0] == 'Z') return AbelianGroup(parse_rank(id, 1, 64));
    if (id.size() > 1 && id[0] == 'F') return FreeGroup(parse_rank(id, 1, 26));
    if (id.size() > 1 && id[0] == 'W') {
        const int n = parse_rank(id, 1, 255);
        if (n < 2) throw ParseError(id, "W<n> with n >= 2");
        return make_cyclic_wreath(n);
    }
    throw ParseError(id, "group id Z<n>, F<n>, S3, L2, W<n>, H2 or Heis");
}

std::vector<std::string> known_group_ids() { return {"Z<n>", "F<n>", "S3", "L2", "W<n>", "H2", "Heis"}; }

}  // namespace curvlab
