#pragma once

#include <cstdint>
#include <vector>

namespace curvlab {

/// Dense square integer cost matrix, row-major.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), data_(n * n, fill) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    [[nodiscard]] std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    [[nodiscard]] std::int64_t cost_of(const std::vector<int>& perm) const;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

using Permutation = std::vector<int>;  // row i -> column perm[i]

struct AssignmentResult {
    std::int64_t cost = 0;
    Permutation assignment;
    std::vector<std::int64_t> row_potential;
    std::vector<std::int64_t> col_potential;
};

/// Exact minimum-cost perfect assignment (Hungarian method with potentials,
/// O(n^3)). The potentials certify optimality: cost(i,j) - u_i - v_j >= 0
/// with equality on the returned assignment.
AssignmentResult solve_assignment(const CostMatrix& cost);

struct OptimaEnumeration {
    std::vector<Permutation> permutations;  ///< lexicographic order
    bool truncated = false;                 ///< more optima exist beyond the cap
};

/// Every optimal assignment, found as the perfect matchings on the zero
/// reduced-cost edges of an optimal dual solution. Stops after `cap`.
OptimaEnumeration enumerate_optimal_assignments(const CostMatrix& cost, const AssignmentResult& solved,
                                                std::size_t cap);

}  // namespace curvlab
