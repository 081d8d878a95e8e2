#pragma once

#include <cstdint>

#include "triuniv/achievability.hpp"
#include "triuniv/tri_sum.hpp"
#include "triuniv/types.hpp"

namespace triuniv {

/// Least target of `parity` in [first, bound] not represented by `sum`.
TruantReport first_missing_target(const TriSum& sum, TargetParity parity, std::uint64_t bound);

/// Least nonnegative integer <= bound not represented.  pre: bound >= 1.
TruantReport truant(const TriSum& sum, std::uint64_t bound);

/// Least nonnegative even integer <= bound not represented.
/// pre: bound >= 2 and even.
TruantReport even_truant(const TriSum& sum, std::uint64_t bound);

/// Checks `sum` against a criterion set and cross-checks the verdict with a
/// direct scan up to `bound`.  Returns CriterionCertified(set.name) when all
/// targets are represented, else FailsAt(least missing set member).  Throws
/// InconsistencyError if the two routes disagree (a certified sum with a
/// truant <= bound, or a failing member <= bound with no truant) — either
/// would be a numerical counterexample to the criterion.
UniversalityStatus classify(const TriSum& sum, const CriterionSet& set, std::uint64_t bound);

/// Bound-only verification: BoundVerified(bound) when no target of `parity`
/// up to `bound` is missing, else FailsAt(least missing).  Never certifies.
UniversalityStatus verify_up_to(const TriSum& sum, TargetParity parity, std::uint64_t bound);

}  // namespace triuniv
