#include "curvlab/assignment.hpp"

#include "curvlab/errors.hpp"

#include <functional>
#include <limits>

namespace curvlab {

std::int64_t CostMatrix::cost_of(const std::vector<int>& perm) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += (*this)(i, static_cast<std::size_t>(perm[i]));
    return total;
}

AssignmentResult solve_assignment(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    AssignmentResult out;
    if (n == 0) return out;
    constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;
    // 1-based shortest augmenting paths; column 0 is a virtual source.
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            std::int64_t delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const auto reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (reduced < minv[j]) {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    out.assignment.assign(n, -1);
    for (std::size_t j = 1; j <= n; ++j) out.assignment[match[j] - 1] = static_cast<int>(j - 1);
    out.row_potential.assign(u.begin() + 1, u.end());
    out.col_potential.assign(v.begin() + 1, v.end());
    out.cost = cost.cost_of(out.assignment);
    return out;
}

namespace {

/// Kuhn's algorithm: can the free rows [from, n) be matched into free columns?
bool completable(const std::vector<std::vector<int>>& tight, std::size_t from, const std::vector<bool>& col_used) {
    const std::size_t n = tight.size();
    std::vector<int> owner(n, -1);
    std::vector<bool> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t row) {
        for (int j : tight[row]) {
            const auto c = static_cast<std::size_t>(j);
            if (col_used[c] || visited[c]) continue;
            visited[c] = true;
            if (owner[c] < 0 || augment(static_cast<std::size_t>(owner[c]))) {
                owner[c] = static_cast<int>(row);
                return true;
            }
        }
        return false;
    };
    for (std::size_t row = from; row < n; ++row) {
        visited.assign(n, false);
        if (!augment(row)) return false;
    }
    return true;
}

}  // namespace

OptimaEnumeration enumerate_optimal_assignments(const CostMatrix& cost, const AssignmentResult& solved,
                                                std::size_t cap) {
    const std::size_t n = cost.size();
    OptimaEnumeration out;
    if (n == 0) {
        out.permutations.push_back({});
        return out;
    }
    std::vector<std::vector<int>> tight(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cost(i, j) - solved.row_potential[i] - solved.col_potential[j] == 0)
                tight[i].push_back(static_cast<int>(j));

    Permutation current(n, -1);
    std::vector<bool> col_used(n, false);
    std::function<bool(std::size_t)> search = [&](std::size_t row) {
        if (row == n) {
            if (out.permutations.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.permutations.push_back(current);
            return true;
        }
        for (int j : tight[row]) {
            const auto c = static_cast<std::size_t>(j);
            if (col_used[c]) continue;
            col_used[c] = true;
            current[row] = j;
            const bool keep_going = !completable(tight, row + 1, col_used) || search(row + 1);
            col_used[c] = false;
            if (!keep_going) return false;
        }
        return true;
    };
    search(0);
    for (const auto& p : out.permutations)
        if (cost.cost_of(p) != solved.cost) throw Error("enumerated assignment is not optimal");
    return out;
}

}  // namespace curvlab
