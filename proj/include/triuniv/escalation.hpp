#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "triuniv/tri_sum.hpp"
#include "triuniv/truant.hpp"
#include "triuniv/types.hpp"

namespace triuniv {

/// One candidate in the escalation tree.
struct EscalationNode {
    enum class Status {
        Certified,  ///< no missing target up to the bound; criterion-certified
        Failing,    ///< has a truant; children were generated
        Truncated,  ///< has a truant; children withheld (cap or chain prune)
    };
    enum class Truncation { None, ArityCap, ChainHeuristic };

    TriSum sum;
    TruantReport truant_report;
    Status status = Status::Failing;
    Truncation truncation = Truncation::None;
    std::optional<bool> proper;  // evaluated for certified nodes only
    std::vector<EscalationNode> children;
};

struct EscalationOptions {
    std::size_t max_arity = 6;
    std::uint64_t bound = 100'000;
    TargetParity parity = TargetParity::Even;
    bool evaluate_proper = true;
    /// Cut a branch after three consecutive equal appended coefficients that
    /// leave the truant unchanged (the infinite-chain heuristic; such nodes
    /// are never universal, so nothing certified is lost).
    bool chain_pruning = true;
};

/// Child sums of a non-certified node: append c with
/// max(1, max coefficient) <= c <= truant, ascending.  pre: report.found().
std::vector<TriSum> escalation_children(const TriSum& sum, const TruantReport& report);

/// Builds the candidate tree from the empty root.  Certification uses the
/// criterion set matching options.parity (E8-even / BK8 / Kane-odd) and is
/// cross-checked against the bounded scan.  pre: bound covers every target
/// of that criterion set.
EscalationNode escalate(const EscalationOptions& options = {});

/// Whether every arity-(k-1) coefficient-deletion of `sum` misses some even
/// integer <= bound.  pre: sum is even universal (certified).  Checking one
/// deletion level suffices: any even-universal proper subset extends to an
/// even-universal (k-1)-subset.
bool proper(const TriSum& sum, std::uint64_t bound);

/// Walks the tree depth-first, parents before children.
void for_each_node(const EscalationNode& root,
                   const std::function<void(const EscalationNode&)>& fn);

struct Table1Diff {
    std::vector<TriSum> missing;     // expected but not found
    std::vector<TriSum> unexpected;  // found but not expected
    bool empty() const { return missing.empty() && unexpected.empty(); }
};

struct Table1Result {
    std::map<std::size_t, std::vector<TriSum>> by_arity;
    Table1Diff diff;  // against the embedded catalog
};

/// All certified-and-proper sums found by escalate(max_arity=5, bound),
/// grouped by arity, with a diff against the embedded catalog.
Table1Result table1(std::uint64_t bound = 100'000);

/// Tree export: nested objects {sum, even_truant, status, proper, children}.
std::string tree_to_json(const EscalationNode& root, int indent = -1);

/// CSV rows "arity,\"c1,c2,...\",proper" for every listed sum.
std::string table1_to_csv(const Table1Result& result);

}  // namespace triuniv
