#include "triuniv/escalation.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "triuniv/catalog.hpp"

namespace triuniv {

namespace {

const CriterionSet& criterion_for(TargetParity parity) {
    switch (parity) {
        case TargetParity::Even: return catalog::e8_even();
        case TargetParity::All: return catalog::bk8();
        case TargetParity::Odd: return catalog::kane_odd();
    }
    throw std::logic_error("bad parity");
}

struct Builder {
    const EscalationOptions& options;
    const CriterionSet& criterion;

    // chain_run: length of the trailing run of equal appended coefficients
    // whose appends all left the truant value unchanged.
    EscalationNode build(const TriSum& sum, std::size_t chain_run) {
        EscalationNode node;
        node.sum = sum;
        node.truant_report = first_missing_target(sum, options.parity, options.bound);

        if (!node.truant_report.found()) {
            node.status = EscalationNode::Status::Certified;
            const UniversalityStatus status = classify(sum, criterion, options.bound);
            if (!status.certified_ok())
                throw InconsistencyError("bounded scan certified " + sum.str() +
                                         " but criterion " + criterion.name + " rejected it");
            if (options.evaluate_proper && options.parity == TargetParity::Even)
                node.proper = proper(sum, options.bound);
            return node;
        }

        if (sum.arity() >= options.max_arity) {
            node.status = EscalationNode::Status::Truncated;
            node.truncation = EscalationNode::Truncation::ArityCap;
            return node;
        }
        if (options.chain_pruning && chain_run >= 3) {
            node.status = EscalationNode::Status::Truncated;
            node.truncation = EscalationNode::Truncation::ChainHeuristic;
            return node;
        }

        node.status = EscalationNode::Status::Failing;
        const std::uint64_t truant_value = node.truant_report.value();
        for (const TriSum& child : escalation_children(sum, node.truant_report))
            node.children.push_back(build_child(child, sum, chain_run, truant_value));
        return node;
    }

    EscalationNode build_child(const TriSum& child, const TriSum& parent,
                               std::size_t parent_run, std::uint64_t parent_truant) {
        // The run needs the child's truant; the sequence is cached, so the
        // recomputation inside build() is a cheap rescan.
        const TruantReport child_report =
            first_missing_target(child, options.parity, options.bound);
        const std::uint64_t appended = child.coefficients().back();
        std::size_t run = 1;
        if (!parent.empty() && appended == parent.max_coefficient() && child_report.found() &&
            child_report.value() == parent_truant)
            run = parent_run + 1;
        return build(child, run);
    }
};

}  // namespace

std::vector<TriSum> escalation_children(const TriSum& sum, const TruantReport& report) {
    if (!report.found())
        throw std::invalid_argument("certified nodes have no escalation children");
    std::vector<TriSum> children;
    const std::uint64_t lo = std::max<std::uint64_t>(1, sum.max_coefficient());
    for (std::uint64_t c = lo; c <= report.value(); ++c) children.push_back(sum.appended(c));
    return children;
}

EscalationNode escalate(const EscalationOptions& options) {
    if (options.max_arity < 1) throw std::invalid_argument("max_arity must be >= 1");
    const CriterionSet& criterion = criterion_for(options.parity);
    if (!criterion.targets.empty() && options.bound < criterion.targets.back())
        throw std::invalid_argument("escalation bound must cover the criterion targets");
    if (options.parity == TargetParity::Even && options.bound % 2 != 0)
        throw std::invalid_argument("even escalation needs an even bound");
    Builder builder{options, criterion};
    return builder.build(TriSum{}, 0);
}

bool proper(const TriSum& sum, std::uint64_t bound) {
    std::uint64_t previous = 0;
    for (std::size_t i = 0; i < sum.arity(); ++i) {
        const std::uint64_t c = sum.coefficients()[i];
        if (i > 0 && c == previous) continue;  // equal deletions give the same multiset
        previous = c;
        if (!even_truant(sum.without_index(i), bound).found()) return false;
    }
    return true;
}

void for_each_node(const EscalationNode& root,
                   const std::function<void(const EscalationNode&)>& fn) {
    fn(root);
    for (const EscalationNode& child : root.children) for_each_node(child, fn);
}

Table1Result table1(std::uint64_t bound) {
    EscalationOptions options;
    options.max_arity = 5;
    options.bound = bound;
    options.parity = TargetParity::Even;
    options.evaluate_proper = true;
    const EscalationNode root = escalate(options);

    Table1Result result;
    for_each_node(root, [&](const EscalationNode& node) {
        if (node.status == EscalationNode::Status::Certified && node.proper == true)
            result.by_arity[node.sum.arity()].push_back(node.sum);
    });
    for (auto& [arity, sums] : result.by_arity) std::sort(sums.begin(), sums.end());

    std::set<TriSum> found;
    for (const auto& [arity, sums] : result.by_arity) found.insert(sums.begin(), sums.end());
    std::set<TriSum> expected;
    for (const auto& [arity, sums] : catalog::table1_expected())
        expected.insert(sums.begin(), sums.end());
    std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                        std::back_inserter(result.diff.missing));
    std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                        std::back_inserter(result.diff.unexpected));
    return result;
}

namespace {

nlohmann::json node_to_json(const EscalationNode& node) {
    nlohmann::json j;
    j["sum"] = node.sum.str();
    if (node.truant_report.found())
        j["even_truant"] = node.truant_report.value();
    else
        j["even_truant"] = nullptr;
    switch (node.status) {
        case EscalationNode::Status::Certified: j["status"] = "even-universal"; break;
        case EscalationNode::Status::Failing: j["status"] = "failing"; break;
        case EscalationNode::Status::Truncated: j["status"] = "truncated"; break;
    }
    if (node.truncation == EscalationNode::Truncation::ArityCap)
        j["truncated_by"] = "arity-cap";
    else if (node.truncation == EscalationNode::Truncation::ChainHeuristic)
        j["truncated_by"] = "chain-heuristic";
    if (node.proper.has_value())
        j["proper"] = *node.proper;
    else
        j["proper"] = nullptr;
    j["children"] = nlohmann::json::array();
    for (const EscalationNode& child : node.children)
        j["children"].push_back(node_to_json(child));
    return j;
}

}  // namespace

std::string tree_to_json(const EscalationNode& root, int indent) {
    return node_to_json(root).dump(indent);
}

std::string table1_to_csv(const Table1Result& result) {
    std::string csv;
    for (const auto& [arity, sums] : result.by_arity) {
        for (const TriSum& sum : sums) {
            csv += std::to_string(arity);
            csv += ",\"";
            csv += sum.str();
            csv += "\",true\n";
        }
    }
    return csv;
}

}  // namespace triuniv
