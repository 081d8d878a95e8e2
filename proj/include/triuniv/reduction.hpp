#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "triuniv/tri_sum.hpp"

namespace triuniv {

/// 16n + sum of coefficients: the right-hand side of the odd-square
/// formulation for the even target 2n.
std::uint64_t shifted_target(const TriSum& sum, std::uint64_t n);

/// Positive definite ternary form f(x) = sum_i w_i * (row_i . x)^2 with
/// integer rows.  Solvability checks are exact: variable boxes are derived
/// from the adjugate of the Gram matrix, so the search is exhaustive.
class WeightedSquareForm {
public:
    WeightedSquareForm(std::array<std::uint64_t, 3> weights,
                       std::array<std::array<std::int64_t, 3>, 3> rows);

    std::uint64_t evaluate(const std::array<std::int64_t, 3>& x) const;

    /// Some integer solution of f(x) = target, if one exists.  `radius`
    /// optionally tightens the per-variable search box.
    std::optional<std::array<std::int64_t, 3>> solve(
        std::uint64_t target, std::optional<std::int64_t> radius = std::nullopt) const;

    bool solvable(std::uint64_t target,
                  std::optional<std::int64_t> radius = std::nullopt) const {
        return solve(target, radius).has_value();
    }

private:
    std::array<std::uint64_t, 3> weights_;
    std::array<std::array<std::int64_t, 3>, 3> rows_;
    std::array<std::array<std::int64_t, 3>, 3> gram_;  // integer Gram matrix
    std::int64_t det_ = 0;
    std::array<std::int64_t, 3> adj_diag_{};
};

/// The ternary section (a1,a2,a3) of a sum together with the congruence-free
/// substitution available when exactly one coefficient is odd:
/// f(x1,x2,x3) = a(x3-2x1)^2 + b(x3-2x2)^2 + c*x3^2 over a permutation
/// putting the odd coefficient last.  Any solution of f = M with M odd has
/// all induced diagonal values (x3-2x1, x3-2x2, x3) odd, so f-solvability is
/// equivalent to representing M by a*y1^2+b*y2^2+c*y3^2 with y1 y2 y3 odd.
class TernarySectionForm {
public:
    explicit TernarySectionForm(std::array<std::uint64_t, 3> coefficients);
    explicit TernarySectionForm(const TriSum& sum);  // first three coefficients

    const std::array<std::uint64_t, 3>& coefficients() const { return coeffs_; }
    std::array<int, 3> parity_pattern() const;

    /// True when exactly one coefficient is odd (the pattern the
    /// substitution is defined for).
    bool has_substitution() const { return form_.has_value(); }
    const WeightedSquareForm& substituted_form() const;

    /// The diagonal values (y1,y2,y3) induced by a solution of the
    /// substituted form at `target`, if one exists.
    std::optional<std::array<std::int64_t, 3>> diagonal_witness(std::uint64_t target) const;

    /// Whether a1 y1^2 + a2 y2^2 + a3 y3^2 = target with all y_i odd.
    /// Routes through the substituted form when the pattern admits one,
    /// otherwise through the bounded odd-square search; both are exact.
    bool represents_with_odd_variables(std::uint64_t target) const;

private:
    std::array<std::uint64_t, 3> coeffs_{};
    std::array<std::uint64_t, 3> permuted_{};  // (even, even, odd) order when available
    std::optional<WeightedSquareForm> form_;
};

/// f(x) = target for the substituted form of the section.
/// pre: section.has_substitution().
bool substituted_solvable(const TernarySectionForm& section, std::uint64_t target,
                          std::optional<std::int64_t> radius = std::nullopt);

/// Odd values assigned to the tail variables x4..xk, plus what is left of
/// the shifted target for the ternary section.
struct TailAssignment {
    std::vector<std::int64_t> values;  // all odd, positive representatives
    std::uint64_t residual = 0;
};

using TernaryOracle = std::function<bool(const std::array<std::uint64_t, 3>&, std::uint64_t)>;

/// The default residual check: TernarySectionForm::represents_with_odd_variables.
const TernaryOracle& default_ternary_oracle();

/// Searches odd (a4..ak), lexicographically by ascending odd magnitude with
/// |a_i| <= sqrt(M/alpha_i), for an assignment whose residual
/// M - sum(alpha_i a_i^2) is nonnegative and represented by the ternary
/// section with odd variables.  pre: arity >= 4.
std::optional<TailAssignment> tail_search(const TriSum& sum, std::uint64_t n,
                                          const TernaryOracle& oracle = default_ternary_oracle());

/// Ternary-section route for "does `sum` represent the even `target`":
/// tail search plus ternary odd-variable check.  Sound (true implies the
/// target is represented); completeness is not claimed.  pre: arity >= 3.
bool reduction_solver(const TriSum& sum, std::uint64_t target);

}  // namespace triuniv
