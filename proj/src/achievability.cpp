#include "triuniv/achievability.hpp"

#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace triuniv {

namespace {

// dst |= src << shift, over 64-bit words; bits shifted past dst are dropped.
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::uint64_t shift) {
    const std::size_t word = shift >> 6;
    const unsigned bit = shift & 63;
    const std::size_t n = dst.size();
    if (word >= n) return;
    if (bit == 0) {
        for (std::size_t i = n; i-- > word;) dst[i] |= src[i - word];
    } else {
        for (std::size_t i = n; i-- > word;) {
            std::uint64_t v = src[i - word] << bit;
            if (i > word) v |= src[i - word - 1] >> (64 - bit);
            dst[i] |= v;
        }
    }
}

void mask_tail(std::vector<std::uint64_t>& words, std::uint64_t bound) {
    const unsigned used = static_cast<unsigned>((bound + 1) & 63);
    if (used) words.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace

AchievabilitySequence AchievabilitySequence::compute(const TriSum& sum, std::uint64_t bound,
                                                     std::uint64_t bound_budget) {
    if (bound < 1) throw std::invalid_argument("achievability bound must be >= 1");
    if (bound > bound_budget)
        throw BudgetError("achievability bound " + std::to_string(bound) +
                          " exceeds the configured budget");

    const std::size_t nwords = static_cast<std::size_t>(bound / 64 + 1);
    std::vector<std::uint64_t> cur(nwords, 0);
    cur[0] = 1;  // the empty assignment: every x_i = 0

    for (std::uint64_t a : sum.coefficients()) {
        std::vector<std::uint64_t> next = cur;  // j = 0 term, shift 0
        for (std::int64_t j = 1;; ++j) {
            const std::uint64_t t = triangular(j);
            if (t > bound / a) break;
            or_shifted(next, cur, a * t);
        }
        mask_tail(next, bound);
        cur = std::move(next);
    }
    return AchievabilitySequence(sum, bound, std::move(cur));
}

std::optional<std::uint64_t> AchievabilitySequence::first_missing(TargetParity parity,
                                                                  std::uint64_t upto) const {
    const std::uint64_t step = target_step(parity);
    for (std::uint64_t t = first_target(parity); t <= upto; t += step)
        if (!contains(t)) return t;
    return std::nullopt;
}

std::vector<std::uint64_t> AchievabilitySequence::values_up_to(std::uint64_t upto) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= upto; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

std::shared_ptr<const AchievabilitySequence> AchievabilityCache::get_or_compute(
    const TriSum& sum, std::uint64_t bound) {
    {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(sum);
        if (it != entries_.end() && it->second->bound() >= bound) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = entries_.find(sum);
    if (it != entries_.end() && it->second->bound() >= bound) return it->second;
    auto seq = std::make_shared<const AchievabilitySequence>(
        AchievabilitySequence::compute(sum, bound));
    entries_[sum] = seq;
    return seq;
}

void AchievabilityCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::size_t AchievabilityCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

namespace {
constexpr char kCacheMagic[] = "TRIUNIV1";
constexpr char kHexDigits[] = "0123456789abcdef";
}  // namespace

void AchievabilityCache::save(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    out << kCacheMagic << '\n';
    for (const auto& [sum, seq] : entries_) {
        out << "sum=" << sum.str() << " N=" << seq->bound() << '\n';
        const std::uint64_t nbytes = seq->bound() / 8 + 1;
        auto words = seq->words();
        std::string hex;
        hex.reserve(nbytes * 2);
        for (std::uint64_t b = 0; b < nbytes; ++b) {
            const unsigned byte =
                static_cast<unsigned>((words[b >> 3] >> ((b & 7) * 8)) & 0xFF);
            hex += kHexDigits[byte >> 4];
            hex += kHexDigits[byte & 0xF];
        }
        out << hex << '\n';
    }
}

void AchievabilityCache::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCacheMagic)
        throw ParseError("bad cache file: missing TRIUNIV1 magic");
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("sum=", 0) != 0) throw ParseError("bad cache record header");
        const std::size_t space = line.find(" N=");
        if (space == std::string::npos) throw ParseError("bad cache record header");
        const TriSum sum = TriSum::parse(line.substr(4, space - 4));
        const std::uint64_t bound = std::stoull(line.substr(space + 3));
        std::string hex;
        if (!std::getline(in, hex)) throw ParseError("truncated cache record");
        const std::uint64_t nbytes = bound / 8 + 1;
        if (hex.size() != nbytes * 2) throw ParseError("cache bit payload has wrong length");
        std::vector<std::uint64_t> words(static_cast<std::size_t>(bound / 64 + 1), 0);
        auto nibble = [](char c) -> unsigned {
            if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
            if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
            if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
            throw ParseError("bad hex digit in cache payload");
        };
        for (std::uint64_t b = 0; b < nbytes; ++b) {
            const std::uint64_t byte = nibble(hex[2 * b]) * 16 + nibble(hex[2 * b + 1]);
            words[b >> 3] |= byte << ((b & 7) * 8);
        }
        auto it = entries_.find(sum);
        if (it == entries_.end() || it->second->bound() < bound) {
            entries_[sum] = std::shared_ptr<const AchievabilitySequence>(
                new AchievabilitySequence(sum, bound, std::move(words)));
        }
    }
}

void AchievabilityCache::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    save(out);
}

bool AchievabilityCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    load(in);
    return true;
}

AchievabilityCache& AchievabilityCache::global() {
    static AchievabilityCache cache;
    return cache;
}

bool represents(const TriSum& sum, std::uint64_t n, AchievabilityCache& cache) {
    if (n == 0) return true;
    // Round the cached bound up so nearby queries share one sweep.
    std::uint64_t bound = 1024;
    while (bound < n) bound *= 2;
    return cache.get_or_compute(sum, bound)->contains(n);
}

bool represents(const TriSum& sum, std::uint64_t n) {
    return represents(sum, n, AchievabilityCache::global());
}

}  // namespace triuniv
