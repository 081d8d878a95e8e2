#include "triuniv/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "triuniv/oracles.hpp"

namespace triuniv {

std::uint64_t shifted_target(const TriSum& sum, std::uint64_t n) {
    return 16 * n + sum.coefficient_sum();
}

WeightedSquareForm::WeightedSquareForm(std::array<std::uint64_t, 3> weights,
                                       std::array<std::array<std::int64_t, 3>, 3> rows)
    : weights_(weights), rows_(rows) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::int64_t g = 0;
            for (int i = 0; i < 3; ++i)
                g += static_cast<std::int64_t>(weights_[i]) * rows_[i][a] * rows_[i][b];
            gram_[a][b] = g;
        }
    const auto& g = gram_;
    det_ = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (det_ <= 0)
        throw std::invalid_argument("weighted square form must be positive definite");
    adj_diag_[0] = g[1][1] * g[2][2] - g[1][2] * g[2][1];
    adj_diag_[1] = g[0][0] * g[2][2] - g[0][2] * g[2][0];
    adj_diag_[2] = g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

std::uint64_t WeightedSquareForm::evaluate(const std::array<std::int64_t, 3>& x) const {
    std::int64_t total = 0;
    for (int i = 0; i < 3; ++i) {
        const std::int64_t v =
            rows_[i][0] * x[0] + rows_[i][1] * x[1] + rows_[i][2] * x[2];
        total += static_cast<std::int64_t>(weights_[i]) * v * v;
    }
    return static_cast<std::uint64_t>(total);
}

std::optional<std::array<std::int64_t, 3>> WeightedSquareForm::solve(
    std::uint64_t target, std::optional<std::int64_t> radius) const {
    if (target == 0) return std::array<std::int64_t, 3>{0, 0, 0};
    const auto t = static_cast<std::int64_t>(target);

    // x_a^2 <= target * adj_aa / det for any solution of x' G x = target.
    std::array<std::int64_t, 3> box{};
    for (int a = 0; a < 3; ++a) {
        box[a] = static_cast<std::int64_t>(
            isqrt(static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(adj_diag_[a]) /
                  static_cast<std::uint64_t>(det_)));
        if (radius) box[a] = std::min(box[a], *radius);
    }

    const auto& g = gram_;
    for (std::int64_t x2 = -box[2]; x2 <= box[2]; ++x2) {
        for (std::int64_t x1 = -box[1]; x1 <= box[1]; ++x1) {
            // Solve g00*x0^2 + 2(g01*x1 + g02*x2)*x0 + (rest - target) = 0.
            const std::int64_t a = g[0][0];
            const std::int64_t b = 2 * (g[0][1] * x1 + g[0][2] * x2);
            const std::int64_t c =
                g[1][1] * x1 * x1 + 2 * g[1][2] * x1 * x2 + g[2][2] * x2 * x2 - t;
            const std::int64_t disc = b * b - 4 * a * c;
            if (disc < 0) continue;
            const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(disc)));
            if (root * root != disc) continue;
            for (const std::int64_t num : {-b + root, -b - root}) {
                if (num % (2 * a) != 0) continue;
                const std::int64_t x0 = num / (2 * a);
                std::array<std::int64_t, 3> x{x0, x1, x2};
                if (evaluate(x) == target) return x;
            }
        }
    }
    return std::nullopt;
}

TernarySectionForm::TernarySectionForm(std::array<std::uint64_t, 3> coefficients)
    : coeffs_(coefficients) {
    int odd_count = 0;
    for (std::uint64_t c : coeffs_) {
        if (c == 0) throw std::invalid_argument("ternary section needs positive coefficients");
        odd_count += static_cast<int>(c % 2);
    }
    if (odd_count != 1) return;  // substitution defined only for (even, even, odd)

    std::array<std::uint64_t, 3> p{};
    int even_slot = 0;
    for (std::uint64_t c : coeffs_) {
        if (c % 2 == 1)
            p[2] = c;
        else
            p[even_slot++] = c;
    }
    permuted_ = p;
    // f(x1,x2,x3) = a(x3-2x1)^2 + b(x3-2x2)^2 + c x3^2
    form_.emplace(p, std::array<std::array<std::int64_t, 3>, 3>{{
                         {{-2, 0, 1}},
                         {{0, -2, 1}},
                         {{0, 0, 1}},
                     }});
}

TernarySectionForm::TernarySectionForm(const TriSum& sum)
    : TernarySectionForm([&] {
          if (sum.arity() < 3)
              throw std::invalid_argument("ternary section needs arity >= 3");
          auto c = sum.coefficients();
          return std::array<std::uint64_t, 3>{c[0], c[1], c[2]};
      }()) {}

std::array<int, 3> TernarySectionForm::parity_pattern() const {
    return {static_cast<int>(coeffs_[0] % 2), static_cast<int>(coeffs_[1] % 2),
            static_cast<int>(coeffs_[2] % 2)};
}

const WeightedSquareForm& TernarySectionForm::substituted_form() const {
    if (!form_) throw std::logic_error("parity pattern admits no substitution");
    return *form_;
}

std::optional<std::array<std::int64_t, 3>> TernarySectionForm::diagonal_witness(
    std::uint64_t target) const {
    auto x = substituted_form().solve(target);
    if (!x) return std::nullopt;
    return std::array<std::int64_t, 3>{(*x)[2] - 2 * (*x)[0], (*x)[2] - 2 * (*x)[1], (*x)[2]};
}

bool TernarySectionForm::represents_with_odd_variables(std::uint64_t target) const {
    const std::uint64_t total = coeffs_[0] + coeffs_[1] + coeffs_[2];
    if (target < total || (target - total) % 8 != 0) return false;
    if (form_) return form_->solvable(target);
    return diagonal_all_odd_solvable(coeffs_, target);
}

bool substituted_solvable(const TernarySectionForm& section, std::uint64_t target,
                          std::optional<std::int64_t> radius) {
    return section.substituted_form().solvable(target, radius);
}

const TernaryOracle& default_ternary_oracle() {
    static const TernaryOracle oracle = [](const std::array<std::uint64_t, 3>& coeffs,
                                           std::uint64_t residual) {
        return TernarySectionForm(coeffs).represents_with_odd_variables(residual);
    };
    return oracle;
}

namespace {

bool tail_dfs(std::span<const std::uint64_t> tail, std::size_t idx, std::uint64_t rem,
              std::uint64_t ternary_min, const std::array<std::uint64_t, 3>& section,
              const TernaryOracle& oracle, std::vector<std::int64_t>& values,
              std::uint64_t& residual_out) {
    if (idx == tail.size()) {
        if ((rem - ternary_min) % 8 != 0) return false;
        if (!oracle(section, rem)) return false;
        residual_out = rem;
        return true;
    }
    const std::uint64_t a = tail[idx];
    std::uint64_t later = ternary_min;  // every later variable costs at least its coefficient
    for (std::size_t j = idx + 1; j < tail.size(); ++j) later += tail[j];
    for (std::uint64_t x = 1;; x += 2) {
        const std::uint64_t used = a * x * x;
        if (used + later > rem) break;
        values.push_back(static_cast<std::int64_t>(x));
        if (tail_dfs(tail, idx + 1, rem - used, ternary_min, section, oracle, values,
                     residual_out))
            return true;
        values.pop_back();
    }
    return false;
}

}  // namespace

std::optional<TailAssignment> tail_search(const TriSum& sum, std::uint64_t n,
                                          const TernaryOracle& oracle) {
    if (sum.arity() < 4) throw std::invalid_argument("tail search needs arity >= 4");
    const std::uint64_t m = shifted_target(sum, n);
    const auto coeffs = sum.coefficients();
    const std::array<std::uint64_t, 3> section{coeffs[0], coeffs[1], coeffs[2]};
    const std::uint64_t ternary_min = section[0] + section[1] + section[2];
    const auto tail = coeffs.subspan(3);

    TailAssignment assignment;
    assignment.values.reserve(tail.size());
    if (tail_dfs(tail, 0, m, ternary_min, section, oracle, assignment.values,
                 assignment.residual))
        return assignment;
    return std::nullopt;
}

bool reduction_solver(const TriSum& sum, std::uint64_t target) {
    if (sum.arity() < 3)
        throw std::invalid_argument("reduction solver needs arity >= 3");
    if (target % 2 != 0)
        throw std::invalid_argument("reduction solver takes an even target");
    if (sum.arity() == 3) {
        const TernarySectionForm section(sum);
        return section.represents_with_odd_variables(shifted_target(sum, target / 2));
    }
    return tail_search(sum, target / 2).has_value();
}

}  // namespace triuniv
