#pragma once

#include <cstdint>
#include <span>

#include "triuniv/tri_sum.hpp"

namespace triuniv {

/// Node budget for the brute-force representation counter.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// Exact integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

/// Whether sum(coeffs[i] * x_i^2) = target has a solution with every x_i odd.
/// Bounded depth-first search over positive odd x_i (signs are immaterial).
bool diagonal_all_odd_solvable(std::span<const std::uint64_t> coeffs, std::uint64_t target);

/// The odd-square formulation of one even representability question:
/// `sum` represents the even target 2n iff sum(a_i x_i^2) = 16n + sum(a_i)
/// has a solution with every x_i odd.  shifted == sum(a_i) (mod 16) and
/// shifted >= sum(a_i) by construction.
struct OddSquareInstance {
    TriSum sum;
    std::uint64_t even_target = 0;
    std::uint64_t shifted = 0;

    static OddSquareInstance of(const TriSum& sum, std::uint64_t even_target);
    bool solvable() const;
};

/// Whether `sum` represents the even number `target`, decided through the
/// odd-square formulation.  Independent of the bit-sweep path.
bool represents_even_via_odd_squares(const TriSum& sum, std::uint64_t target);

/// Number of tuples (x_1..x_k), x_i >= 0, with sum(a_i T(x_i)) = n.  The
/// symmetry T(-x-1) = T(x) is folded once, so counting over nonnegative x_i
/// is exhaustive over triangular values.  Brute force; throws BudgetError
/// when the explored node count exceeds `budget` (fine up to n ~ 10^5 at
/// small arity).
std::uint64_t representation_count(const TriSum& sum, std::uint64_t n,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace triuniv
