#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace triuniv {

/// Input that cannot be turned into a valid sum (zero/negative/oversized
/// coefficients, malformed text).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation was asked to exceed its configured resource budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A criterion-set verdict disagreed with the direct bounded scan.  This
/// would be a numerical counterexample to the criterion and is never
/// expected to fire; it is kept as a hard error rather than a silent result.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which targets a universality notion ranges over.
enum class TargetParity { All, Even, Odd };

std::string_view to_string(TargetParity parity);
std::optional<TargetParity> parity_from_string(std::string_view text);

/// Smallest target of the given parity (All/Even start at 0, Odd at 1).
inline std::uint64_t first_target(TargetParity parity) {
    return parity == TargetParity::Odd ? 1 : 0;
}

/// Step between consecutive targets of the given parity.
inline std::uint64_t target_step(TargetParity parity) {
    return parity == TargetParity::All ? 1 : 2;
}

/// Result of scanning targets of one parity up to a bound: either the least
/// missing target, or the statement that none is missing up to the bound.
struct TruantReport {
    TargetParity parity = TargetParity::All;
    std::uint64_t bound = 0;
    std::optional<std::uint64_t> truant;  // empty: none up to `bound`

    bool found() const { return truant.has_value(); }
    std::uint64_t value() const { return truant.value(); }

    friend bool operator==(const TruantReport&, const TruantReport&) = default;
};

/// A named finite set of targets whose representation certifies a
/// universality notion of the matching parity.
struct CriterionSet {
    std::string name;
    std::vector<std::uint64_t> targets;  // sorted ascending
    TargetParity parity = TargetParity::All;
    std::string provenance;
};

/// What a universality check actually established.  Certification requires a
/// criterion set; a plain bounded sweep only ever yields BoundVerified.
struct UniversalityStatus {
    enum class Kind { CriterionCertified, BoundVerified, FailsAt };

    Kind kind = Kind::FailsAt;
    TargetParity parity = TargetParity::All;
    std::string criterion;     // set name, for CriterionCertified
    std::uint64_t value = 0;   // bound for BoundVerified, target for FailsAt

    static UniversalityStatus certified(std::string name, TargetParity parity) {
        return {Kind::CriterionCertified, parity, std::move(name), 0};
    }
    static UniversalityStatus bound_verified(std::uint64_t bound, TargetParity parity) {
        return {Kind::BoundVerified, parity, {}, bound};
    }
    static UniversalityStatus fails_at(std::uint64_t target, TargetParity parity) {
        return {Kind::FailsAt, parity, {}, target};
    }

    bool certified_ok() const { return kind == Kind::CriterionCertified; }
    friend bool operator==(const UniversalityStatus&, const UniversalityStatus&) = default;
};

}  // namespace triuniv
