#include "triuniv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace triuniv::detail {
extern const char* const kCatalogResource;
}

namespace triuniv::catalog {

namespace {

struct Dataset {
    std::vector<CriterionSet> criteria;
    std::vector<TriSum> liouville;
    std::vector<std::pair<TriSum, std::uint64_t>> even_truants;  // catalog order
    std::vector<std::pair<TriSum, std::uint64_t>> truants;
    std::map<std::size_t, std::vector<TriSum>> table1;

    std::map<TriSum, std::uint64_t> even_truant_index;
    std::map<TriSum, std::uint64_t> truant_index;
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        parts.push_back(line.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::vector<std::uint64_t> parse_targets(const std::string& csv) {
    std::vector<std::uint64_t> out;
    for (const std::string& tok : split(csv, ',')) out.push_back(std::stoull(tok));
    std::sort(out.begin(), out.end());
    return out;
}

Dataset parse_resource() {
    Dataset data;
    std::istringstream in(detail::kCatalogResource);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto parts = split(line, '|');
        const std::string& kind = parts[0];
        if (kind == "version") {
            if (parts.at(1) != "1") throw ParseError("unknown catalog resource version");
        } else if (kind == "criterion") {
            CriterionSet set;
            set.name = parts.at(1);
            set.parity = parity_from_string(parts.at(2)).value();
            set.targets = parse_targets(parts.at(3));
            set.provenance = parts.at(4);
            data.criteria.push_back(std::move(set));
        } else if (kind == "liouville") {
            data.liouville.push_back(TriSum::parse(parts.at(1)));
        } else if (kind == "etruant") {
            TriSum sum = TriSum::parse(parts.at(1));
            const std::uint64_t value = std::stoull(parts.at(2));
            data.even_truant_index.emplace(sum, value);
            data.even_truants.emplace_back(std::move(sum), value);
        } else if (kind == "truant") {
            TriSum sum = TriSum::parse(parts.at(1));
            const std::uint64_t value = std::stoull(parts.at(2));
            data.truant_index.emplace(sum, value);
            data.truants.emplace_back(std::move(sum), value);
        } else if (kind == "table1") {
            const std::size_t arity = std::stoul(parts.at(1));
            TriSum sum = TriSum::parse(parts.at(2));
            if (sum.arity() != arity) throw ParseError("catalog table1 arity mismatch");
            data.table1[arity].push_back(std::move(sum));
        } else {
            throw ParseError("unknown catalog record kind '" + kind + "'");
        }
    }
    for (auto& [arity, sums] : data.table1) std::sort(sums.begin(), sums.end());
    return data;
}

const Dataset& dataset() {
    static const Dataset data = parse_resource();
    return data;
}

const CriterionSet& named(std::string_view name) {
    for (const CriterionSet& set : dataset().criteria)
        if (set.name == name) return set;
    throw std::logic_error("criterion set missing from catalog");
}

}  // namespace

const CriterionSet& e8_even() { return named("E8-even"); }
const CriterionSet& bk8() { return named("BK8"); }
const CriterionSet& kane_odd() { return named("Kane-odd"); }

const CriterionSet* find_criterion(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "e8" || lower == "e8-even") return &e8_even();
    if (lower == "bk8") return &bk8();
    if (lower == "kane-odd" || lower == "kane") return &kane_odd();
    return nullptr;
}

const std::vector<TriSum>& liouville_triples() { return dataset().liouville; }

std::optional<std::uint64_t> expected_even_truant(const TriSum& sum) {
    const auto& index = dataset().even_truant_index;
    auto it = index.find(sum);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint64_t> expected_truant(const TriSum& sum) {
    const auto& index = dataset().truant_index;
    auto it = index.find(sum);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::pair<TriSum, std::uint64_t>>& small_even_truant_table() {
    static const std::vector<std::pair<TriSum, std::uint64_t>> small = [] {
        std::vector<std::pair<TriSum, std::uint64_t>> rows;
        for (const auto& row : dataset().even_truants)
            if (row.first.arity() <= 3) rows.push_back(row);
        return rows;
    }();
    return small;
}

const std::vector<std::pair<TriSum, std::uint64_t>>& even_truant_table() {
    return dataset().even_truants;
}

const std::map<std::size_t, std::vector<TriSum>>& table1_expected() { return dataset().table1; }

std::size_t table1_total() {
    std::size_t total = 0;
    for (const auto& [arity, sums] : table1_expected()) total += sums.size();
    return total;
}

std::string_view resource_text() { return detail::kCatalogResource; }

}  // namespace triuniv::catalog
