#include "triuniv/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace triuniv {

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

namespace {

bool is_odd_square(std::uint64_t q) {
    if (q % 2 == 0) return false;
    const std::uint64_t r = isqrt(q);
    return r * r == q;
}

// coeffs sorted descending; suffix[i] = sum of coeffs[i..].
bool odd_square_dfs(const std::vector<std::uint64_t>& coeffs,
                    const std::vector<std::uint64_t>& suffix, std::size_t idx,
                    std::uint64_t rem) {
    const std::uint64_t c = coeffs[idx];
    if (idx + 1 == coeffs.size()) return rem % c == 0 && is_odd_square(rem / c);
    const std::uint64_t rest = suffix[idx + 1];  // each later variable costs >= c_j
    for (std::uint64_t x = 1;; x += 2) {
        const std::uint64_t used = c * x * x;
        if (used + rest > rem) break;
        const std::uint64_t next = rem - used;
        // Odd squares are 1 mod 8, so the tail must be able to match mod 8.
        if ((next - rest) % 8 == 0 && odd_square_dfs(coeffs, suffix, idx + 1, next))
            return true;
    }
    return false;
}

}  // namespace

bool diagonal_all_odd_solvable(std::span<const std::uint64_t> coeffs, std::uint64_t target) {
    if (coeffs.empty()) return target == 0;
    std::vector<std::uint64_t> sorted(coeffs.begin(), coeffs.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<std::uint64_t> suffix(sorted.size() + 1, 0);
    for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i];
    if (target < suffix[0] || (target - suffix[0]) % 8 != 0) return false;
    return odd_square_dfs(sorted, suffix, 0, target);
}

OddSquareInstance OddSquareInstance::of(const TriSum& sum, std::uint64_t even_target) {
    if (even_target % 2 != 0)
        throw std::invalid_argument("odd-square oracle needs an even target");
    return {sum, even_target, 16 * (even_target / 2) + sum.coefficient_sum()};
}

bool OddSquareInstance::solvable() const {
    if (sum.empty()) return even_target == 0;
    return diagonal_all_odd_solvable(sum.coefficients(), shifted);
}

bool represents_even_via_odd_squares(const TriSum& sum, std::uint64_t target) {
    return OddSquareInstance::of(sum, target).solvable();
}

namespace {

std::uint64_t count_dfs(std::span<const std::uint64_t> coeffs, std::size_t idx,
                        std::uint64_t rem, std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget)
        throw BudgetError("representation_count exceeded its enumeration budget");
    if (idx == coeffs.size()) return rem == 0 ? 1 : 0;
    const std::uint64_t a = coeffs[idx];
    std::uint64_t total = 0;
    for (std::int64_t x = 0;; ++x) {
        const std::uint64_t t = triangular(x);
        if (t > rem / a) break;
        total += count_dfs(coeffs, idx + 1, rem - a * t, nodes, budget);
    }
    return total;
}

}  // namespace

std::uint64_t representation_count(const TriSum& sum, std::uint64_t n, std::uint64_t budget) {
    std::uint64_t nodes = 0;
    return count_dfs(sum.coefficients(), 0, n, nodes, budget);
}

}  // namespace triuniv
