#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "triuniv/tri_sum.hpp"
#include "triuniv/types.hpp"

namespace triuniv::catalog {

/// The eight even targets that certify even universality.
const CriterionSet& e8_even();
/// Bosma–Kane theorem-of-eight targets {1,2,4,5,8} (full universality).
const CriterionSet& bk8();
/// Kane's thirteen odd targets (GRH-conditional in the literature).
const CriterionSet& kane_odd();

/// Lookup by CLI name: "E8", "E8-even", "BK8", "kane-odd" (case-insensitive).
const CriterionSet* find_criterion(std::string_view name);

/// Liouville's seven universal ternary triples.
const std::vector<TriSum>& liouville_triples();

/// Known even truant of `sum`, when the embedded tables carry it.
std::optional<std::uint64_t> expected_even_truant(const TriSum& sum);

/// Known (all-parity) truant of `sum`, when the embedded tables carry it.
std::optional<std::uint64_t> expected_truant(const TriSum& sum);

/// The unary/binary/ternary even-truant table (19 rows): sums with known
/// even truants at arity <= 3, in catalog order.
const std::vector<std::pair<TriSum, std::uint64_t>>& small_even_truant_table();

/// All embedded even-truant rows, including the arity >= 4 spot values.
const std::vector<std::pair<TriSum, std::uint64_t>>& even_truant_table();

/// The 75 proper even universal sums, grouped by arity (15/37/23).
const std::map<std::size_t, std::vector<TriSum>>& table1_expected();
std::size_t table1_total();

/// The raw embedded line-oriented "kind|payload" resource.
std::string_view resource_text();

}  // namespace triuniv::catalog
