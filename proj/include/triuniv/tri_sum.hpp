#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triuniv/types.hpp"

namespace triuniv {

/// Coefficients above this are rejected so that 16n + sum(coefficients)
/// stays comfortably inside 64 bits at every bound the toolkit accepts.
inline constexpr std::uint64_t kMaxCoefficient = std::uint64_t{1} << 20;

/// A weighted sum of triangular numbers, identified by its multiset of
/// positive coefficients.  Stored in nondecreasing order; two sums are equal
/// iff their coefficient multisets are equal.
///
/// The default-constructed value is the empty sum, which represents exactly
/// {0}.  It is only meant as the escalation root; the user-facing
/// constructors reject empty input.
class TriSum {
public:
    TriSum() = default;

    /// Validates and sorts arbitrary-order coefficients.  Rejects empty
    /// input, values < 1 and values > kMaxCoefficient.
    static TriSum canonicalize(const std::vector<std::int64_t>& raw);

    /// Parses the textual form "1,1,7,14" (any order, optional blanks).
    static TriSum parse(std::string_view text);

    std::span<const std::uint64_t> coefficients() const { return coeffs_; }
    std::size_t arity() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    std::uint64_t coefficient_sum() const;
    std::uint64_t max_coefficient() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// New sum with `c` inserted at its sorted position.
    TriSum appended(std::uint64_t c) const;

    /// New sum with the coefficient at `index` removed.
    TriSum without_index(std::size_t index) const;

    /// Canonical textual form, e.g. "1,1,7,14".  Empty sum prints "".
    std::string str() const;

    friend auto operator<=>(const TriSum&, const TriSum&) = default;

private:
    std::vector<std::uint64_t> coeffs_;
};

/// T(x) = (x^2 + x) / 2.  Defined for negative x as well; T(-x-1) = T(x).
std::uint64_t triangular(std::int64_t x);

}  // namespace triuniv
