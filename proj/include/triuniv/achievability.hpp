#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "triuniv/tri_sum.hpp"

namespace triuniv {

/// Default cap on the bit array of one achievability sweep (bits, i.e. the
/// largest accepted bound N).  256 MiB of bits.
inline constexpr std::uint64_t kDefaultBoundBudget = std::uint64_t{1} << 31;

/// Which integers in [0, N] a sum represents, as a word-packed bit sequence.
/// Built by the shifted-disjunction sweep: start from {0} and, for each
/// coefficient a, union the shifts by a*T(j) over all j with a*T(j) <= N.
class AchievabilitySequence {
public:
    static AchievabilitySequence compute(const TriSum& sum, std::uint64_t bound,
                                         std::uint64_t bound_budget = kDefaultBoundBudget);

    const TriSum& sum() const { return sum_; }
    std::uint64_t bound() const { return bound_; }

    /// bits[n]; pre: n <= bound().
    bool contains(std::uint64_t n) const {
        return (words_[n >> 6] >> (n & 63)) & 1;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Least target of the given parity in [first_target(parity), upto] that
    /// is not represented; empty if all are.  pre: upto <= bound().
    std::optional<std::uint64_t> first_missing(TargetParity parity, std::uint64_t upto) const;

    /// Represented values <= upto, ascending (enumeration helper).
    std::vector<std::uint64_t> values_up_to(std::uint64_t upto) const;

private:
    friend class AchievabilityCache;

    AchievabilitySequence(TriSum sum, std::uint64_t bound, std::vector<std::uint64_t> words)
        : sum_(std::move(sum)), bound_(bound), words_(std::move(words)) {}

    TriSum sum_;
    std::uint64_t bound_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Cache of achievability sequences keyed by canonical sum.  One entry per
/// sum, holding the largest bound computed so far (larger bounds subsume
/// smaller ones).  Concurrent readers are fine; writers are serialized.
class AchievabilityCache {
public:
    std::shared_ptr<const AchievabilitySequence> get_or_compute(const TriSum& sum,
                                                                std::uint64_t bound);

    /// Drops every entry.
    void clear();
    std::size_t size() const;

    /// File format: magic line "TRIUNIV1", then per record a header line
    /// "sum=<csv> N=<int>" followed by one line of hex-encoded bytes,
    /// little-endian within bytes (bit n lives in byte n/8 at position n%8).
    void save(std::ostream& out) const;
    void load(std::istream& in);
    void save_file(const std::string& path) const;
    bool load_file(const std::string& path);  // false if the file is absent

    static AchievabilityCache& global();

private:
    mutable std::shared_mutex mutex_;
    std::map<TriSum, std::shared_ptr<const AchievabilitySequence>> entries_;
};

/// Whether `sum` represents n.  Uses the global cache.
bool represents(const TriSum& sum, std::uint64_t n);
bool represents(const TriSum& sum, std::uint64_t n, AchievabilityCache& cache);

}  // namespace triuniv
