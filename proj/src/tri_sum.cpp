#include "triuniv/tri_sum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace triuniv {

std::string_view to_string(TargetParity parity) {
    switch (parity) {
        case TargetParity::All: return "all";
        case TargetParity::Even: return "even";
        case TargetParity::Odd: return "odd";
    }
    return "?";
}

std::optional<TargetParity> parity_from_string(std::string_view text) {
    if (text == "all") return TargetParity::All;
    if (text == "even") return TargetParity::Even;
    if (text == "odd") return TargetParity::Odd;
    return std::nullopt;
}

namespace {

std::uint64_t checked_coefficient(std::int64_t value) {
    if (value < 1) throw ParseError("coefficients must be positive integers");
    if (static_cast<std::uint64_t>(value) > kMaxCoefficient)
        throw ParseError("coefficient exceeds the 2^20 guard");
    return static_cast<std::uint64_t>(value);
}

}  // namespace

TriSum TriSum::canonicalize(const std::vector<std::int64_t>& raw) {
    if (raw.empty()) throw ParseError("a sum needs at least one coefficient");
    TriSum result;
    result.coeffs_.reserve(raw.size());
    for (std::int64_t v : raw) result.coeffs_.push_back(checked_coefficient(v));
    std::sort(result.coeffs_.begin(), result.coeffs_.end());
    return result;
}

TriSum TriSum::parse(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
            token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
            token.remove_suffix(1);
        if (token.empty()) throw ParseError("empty coefficient in sum text");
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("bad coefficient '" + std::string(token) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return canonicalize(values);
}

std::uint64_t TriSum::coefficient_sum() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), std::uint64_t{0});
}

TriSum TriSum::appended(std::uint64_t c) const {
    TriSum result = *this;
    result.coeffs_.insert(std::upper_bound(result.coeffs_.begin(), result.coeffs_.end(), c), c);
    return result;
}

TriSum TriSum::without_index(std::size_t index) const {
    TriSum result = *this;
    result.coeffs_.erase(result.coeffs_.begin() + static_cast<std::ptrdiff_t>(index));
    return result;
}

std::string TriSum::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

std::uint64_t triangular(std::int64_t x) {
    // x*(x+1) is always even; fold negatives via T(-x-1) = T(x).
    if (x < 0) x = -x - 1;
    auto u = static_cast<std::uint64_t>(x);
    return (u % 2 == 0) ? (u / 2) * (u + 1) : u * ((u + 1) / 2);
}

}  // namespace triuniv
