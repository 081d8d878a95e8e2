#include "triuniv/truant.hpp"

#include <string>

namespace triuniv {

TruantReport first_missing_target(const TriSum& sum, TargetParity parity, std::uint64_t bound) {
    if (bound < 1) throw std::invalid_argument("truant bound must be >= 1");
    auto seq = AchievabilityCache::global().get_or_compute(sum, bound);
    TruantReport report{parity, bound, seq->first_missing(parity, bound)};
    return report;
}

TruantReport truant(const TriSum& sum, std::uint64_t bound) {
    return first_missing_target(sum, TargetParity::All, bound);
}

TruantReport even_truant(const TriSum& sum, std::uint64_t bound) {
    if (bound < 2 || bound % 2 != 0)
        throw std::invalid_argument("even-truant bound must be even and >= 2");
    return first_missing_target(sum, TargetParity::Even, bound);
}

UniversalityStatus classify(const TriSum& sum, const CriterionSet& set, std::uint64_t bound) {
    std::optional<std::uint64_t> failing;
    for (std::uint64_t t : set.targets) {
        if (!represents(sum, t)) {
            failing = t;
            break;
        }
    }
    const TruantReport scan = first_missing_target(sum, set.parity, bound);
    if (!failing && scan.found())
        throw InconsistencyError("criterion " + set.name + " certifies " + sum.str() +
                                 " but target " + std::to_string(scan.value()) +
                                 " is not represented");
    if (failing && *failing <= bound && !scan.found())
        throw InconsistencyError("criterion " + set.name + " rejects " + sum.str() + " at " +
                                 std::to_string(*failing) +
                                 " but the bounded scan finds no missing target");
    if (failing && scan.found() && scan.value() > *failing)
        throw InconsistencyError("bounded scan for " + sum.str() +
                                 " skipped the missing criterion member " +
                                 std::to_string(*failing));
    if (failing) return UniversalityStatus::fails_at(*failing, set.parity);
    return UniversalityStatus::certified(set.name, set.parity);
}

UniversalityStatus verify_up_to(const TriSum& sum, TargetParity parity, std::uint64_t bound) {
    const TruantReport scan = first_missing_target(sum, parity, bound);
    if (scan.found()) return UniversalityStatus::fails_at(scan.value(), parity);
    return UniversalityStatus::bound_verified(bound, parity);
}

}  // namespace triuniv
