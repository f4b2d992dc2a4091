#pragma once

#include "curvlab/builtin.hpp"
#include "curvlab/heisenberg.hpp"
#include "curvlab/houghton.hpp"
#include "curvlab/lamplighter.hpp"

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace curvlab {

/// Every group the command line can name.
using AnyGroup = std::variant<AbelianGroup, FreeGroup, FiniteGroup, WreathGroup, HoughtonGroup, HeisenbergGroup>;

/// Builds a group from its id: Z<n>, F<n>, S3, L2, W<n> (Z_n wr Z), H2, Heis.
AnyGroup make_group(const std::string& id);

/// Ids accepted by make_group, for help text.
std::vector<std::string> known_group_ids();

/// Whether closed_length covers every element, so a metric table is only
/// needed to enumerate spheres.
template <class G>
inline constexpr bool has_total_closed_length =
    std::is_same_v<G, AbelianGroup> || std::is_same_v<G, FreeGroup> || std::is_same_v<G, WreathGroup>;

}  // namespace curvlab
