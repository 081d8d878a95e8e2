#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "triuniv/achievability.hpp"
#include "triuniv/catalog.hpp"
#include "triuniv/escalation.hpp"
#include "triuniv/oracles.hpp"
#include "triuniv/reduction.hpp"
#include "triuniv/truant.hpp"

namespace {

using namespace triuniv;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string cache_file_path() {
    const char* dir = std::getenv("TRIUNIV_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/achievability.cache";
}

void load_cache() {
    const std::string path = cache_file_path();
    if (path.empty()) return;
    try {
        AchievabilityCache::global().load_file(path);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache file " << path << ": " << e.what() << "\n";
    }
}

void save_cache() {
    const std::string path = cache_file_path();
    if (path.empty()) return;
    try {
        AchievabilityCache::global().save_file(path);
    } catch (const std::exception& e) {
        std::cerr << "warning: could not save cache file " << path << ": " << e.what() << "\n";
    }
}

nlohmann::json json_uint(std::uint64_t v) {
    if (v > (std::uint64_t{1} << 53)) return std::to_string(v);
    return v;
}

std::vector<TriSum> random_sums(std::uint64_t seed, std::size_t count, std::size_t max_arity,
                                std::uint64_t max_coeff) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> arity_dist(1, max_arity);
    std::uniform_int_distribution<std::int64_t> coeff_dist(
        1, static_cast<std::int64_t>(max_coeff));
    std::vector<TriSum> sums;
    sums.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::int64_t> coeffs(arity_dist(rng));
        for (auto& c : coeffs) c = coeff_dist(rng);
        sums.push_back(TriSum::canonicalize(coeffs));
    }
    return sums;
}

int cmd_represent(const std::string& sum_text, std::uint64_t n) {
    const TriSum sum = TriSum::parse(sum_text);
    std::cout << (represents(sum, n) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_truant(const std::string& sum_text, bool even, std::uint64_t bound) {
    const TriSum sum = TriSum::parse(sum_text);
    const TruantReport report = even ? even_truant(sum, bound) : truant(sum, bound);
    if (report.found())
        std::cout << report.value() << "\n";
    else
        std::cout << "none" << "\n";
    return kExitOk;
}

int cmd_escalate(std::size_t max_arity, std::uint64_t bound, const std::string& json_path) {
    EscalationOptions options;
    options.max_arity = max_arity;
    options.bound = bound;
    options.parity = TargetParity::Even;
    options.evaluate_proper = true;
    const EscalationNode root = escalate(options);

    // per arity: candidates / certified / proper / cap-truncated / chain-pruned
    std::map<std::size_t, std::array<std::size_t, 5>> layers;
    for_each_node(root, [&](const EscalationNode& node) {
        if (node.sum.empty()) return;
        auto& row = layers[node.sum.arity()];
        row[0] += 1;
        if (node.status == EscalationNode::Status::Certified) {
            row[1] += 1;
            if (node.proper == true) row[2] += 1;
        }
        if (node.truncation == EscalationNode::Truncation::ArityCap) row[3] += 1;
        if (node.truncation == EscalationNode::Truncation::ChainHeuristic) row[4] += 1;
    });
    std::cout << "bound=" << bound << " max-arity=" << max_arity << "\n";
    for (const auto& [arity, row] : layers) {
        std::cout << "arity " << arity << ": candidates=" << row[0] << " even-universal="
                  << row[1] << " proper=" << row[2] << " truncated=" << row[3];
        if (row[4]) std::cout << " chain-pruned(heuristic)=" << row[4];
        std::cout << "\n";
    }

    if (!json_path.empty()) {
        nlohmann::json envelope;
        envelope["command"] = "escalate";
        envelope["params"] = {{"max_arity", max_arity}, {"bound", json_uint(bound)}};
        envelope["results"] = {{"tree", nlohmann::json::parse(tree_to_json(root))}};
        envelope["verdict"] = "ok";
        if (json_path == "-") {
            std::cout << envelope.dump(2) << "\n";
        } else {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write " + json_path);
            out << envelope.dump(2) << "\n";
        }
    }
    return kExitOk;
}

int cmd_table1(std::uint64_t bound, const std::string& csv_path) {
    const Table1Result result = table1(bound);
    const std::string csv = table1_to_csv(result);
    std::cout << csv;
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << csv;
    }
    if (!result.diff.empty()) {
        for (const TriSum& sum : result.diff.missing)
            std::cerr << "missing from escalation: " << sum.str() << "\n";
        for (const TriSum& sum : result.diff.unexpected)
            std::cerr << "not in catalog: " << sum.str() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_verify_criterion(const std::string& set_name, std::uint64_t bound, std::size_t random_count,
                         std::uint64_t max_coeff, std::size_t max_arity, std::uint64_t seed) {
    const CriterionSet* set = catalog::find_criterion(set_name);
    if (!set) {
        std::cerr << "unknown criterion set '" << set_name << "'\n";
        return kExitUsage;
    }

    EscalationOptions options;
    options.max_arity = 5;
    options.bound = bound;
    options.parity = TargetParity::Even;
    options.evaluate_proper = false;
    const EscalationNode root = escalate(options);

    std::vector<TriSum> population;
    for_each_node(root, [&](const EscalationNode& node) {
        if (!node.sum.empty()) population.push_back(node.sum);
    });
    const std::size_t tree_size = population.size();
    for (TriSum& sum : random_sums(seed, random_count, max_arity, max_coeff))
        population.push_back(std::move(sum));

    std::size_t counterexamples = 0;
    for (const TriSum& sum : population) {
        bool criterion_ok = true;
        for (std::uint64_t t : set->targets)
            if (!represents(sum, t)) {
                criterion_ok = false;
                break;
            }
        const bool scan_ok = !first_missing_target(sum, set->parity, bound).found();
        if (criterion_ok != scan_ok) {
            ++counterexamples;
            std::cerr << "counterexample: " << sum.str() << " criterion="
                      << (criterion_ok ? "pass" : "fail") << " scan="
                      << (scan_ok ? "pass" : "fail") << "\n";
        }
    }
    std::cout << "criterion=" << set->name << " bound=" << bound << " population=tree:"
              << tree_size << "+random:" << random_count << " seed=" << seed << "\n";
    std::cout << "counterexamples=" << counterexamples << "\n";
    std::cout << "verdict=" << (counterexamples == 0 ? "VERIFIED" : "MISMATCH") << "\n";
    return counterexamples == 0 ? kExitOk : kExitMismatch;
}

int cmd_verify_liouville(std::uint64_t bound) {
    EscalationOptions options;
    options.max_arity = 3;
    options.bound = bound;
    options.parity = TargetParity::All;
    options.evaluate_proper = false;
    const EscalationNode root = escalate(options);

    std::set<TriSum> universal;
    std::size_t ternary = 0;
    for_each_node(root, [&](const EscalationNode& node) {
        if (node.sum.arity() != 3) return;
        ++ternary;
        if (node.status == EscalationNode::Status::Certified) universal.insert(node.sum);
    });
    const std::set<TriSum> expected(catalog::liouville_triples().begin(),
                                    catalog::liouville_triples().end());
    std::cout << "ternary-candidates=" << ternary << " universal=" << universal.size() << "\n";
    bool ok = universal == expected;
    for (const TriSum& sum : expected)
        if (!universal.count(sum)) std::cerr << "expected universal: " << sum.str() << "\n";
    for (const TriSum& sum : universal)
        if (!expected.count(sum)) std::cerr << "unexpected universal: " << sum.str() << "\n";
    std::cout << "verdict=" << (ok ? "VERIFIED" : "MISMATCH") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int cmd_verify_reduction(std::uint64_t bound) {
    std::size_t oracle_mismatches = 0;
    std::size_t unsound = 0;
    std::size_t sums = 0;
    for (const auto& [arity, entries] : catalog::table1_expected()) {
        for (const TriSum& sum : entries) {
            ++sums;
            auto seq = AchievabilityCache::global().get_or_compute(sum, bound);
            for (std::uint64_t target = 0; target <= bound; target += 2) {
                const bool dp = seq->contains(target);
                if (represents_even_via_odd_squares(sum, target) != dp) {
                    ++oracle_mismatches;
                    std::cerr << "oracle mismatch: " << sum.str() << " at " << target << "\n";
                }
                if (reduction_solver(sum, target) && !dp) {
                    ++unsound;
                    std::cerr << "unsound reduction: " << sum.str() << " at " << target << "\n";
                }
            }
        }
    }
    std::cout << "sums=" << sums << " even-targets<=" << bound
              << " oracle-mismatches=" << oracle_mismatches << " unsound-reductions=" << unsound
              << "\n";
    const bool ok = oracle_mismatches == 0 && unsound == 0;
    std::cout << "verdict=" << (ok ? "VERIFIED" : "MISMATCH") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representability, truants and escalation for weighted sums of triangular numbers"};
    app.require_subcommand(1);

    std::string sum_text;
    std::uint64_t n = 0;
    auto* represent_cmd = app.add_subcommand("represent", "Decide whether a sum represents n");
    represent_cmd->add_option("sum", sum_text, "coefficients, e.g. 1,1,7,14")->required();
    represent_cmd->add_option("n", n, "target")->required();

    bool even = false;
    std::uint64_t truant_bound = 100'000;
    auto* truant_cmd = app.add_subcommand("truant", "Least unrepresented (even) target");
    truant_cmd->add_option("sum", sum_text, "coefficients")->required();
    truant_cmd->add_flag("--even", even, "scan even targets only");
    truant_cmd->add_option("--bound", truant_bound, "scan bound (default 100000)");

    std::size_t max_arity = 6;
    std::uint64_t escalate_bound = 100'000;
    std::string json_path;
    auto* escalate_cmd = app.add_subcommand("escalate", "Build and classify the candidate tree");
    escalate_cmd->add_option("--max-arity", max_arity, "arity cap (default 6)");
    escalate_cmd->add_option("--bound", escalate_bound, "truant scan bound (default 100000)");
    escalate_cmd->add_option("--json", json_path, "write the tree as JSON ('-' for stdout)");

    std::uint64_t table1_bound = 100'000;
    std::string csv_path;
    auto* table1_cmd = app.add_subcommand("table1", "Proper even universal sums, arity 3..5");
    table1_cmd->add_option("--bound", table1_bound, "truant scan bound (default 100000)");
    table1_cmd->add_option("--csv", csv_path, "also write the rows to a file");

    std::string set_name;
    std::uint64_t verify_bound = 100'000;
    std::size_t random_count = 1000;
    std::uint64_t max_coeff = 50;
    std::size_t random_arity = 6;
    std::uint64_t seed = 1;
    auto* verify_cmd =
        app.add_subcommand("verify-criterion", "Criterion set vs direct scan over a population");
    verify_cmd->add_option("set", set_name, "E8 | BK8 | kane-odd")->required();
    verify_cmd->add_option("--bound", verify_bound, "scan bound (default 100000)");
    verify_cmd->add_option("--random", random_count, "random sums to add (default 1000)");
    verify_cmd->add_option("--max-coeff", max_coeff, "random coefficient cap (default 50)");
    verify_cmd->add_option("--max-arity", random_arity, "random arity cap (default 6)");
    verify_cmd->add_option("--seed", seed, "generator seed (default 1)");

    std::uint64_t liouville_bound = 100'000;
    auto* liouville_cmd =
        app.add_subcommand("verify-liouville", "Universal ternary sums vs the known seven");
    liouville_cmd->add_option("--bound", liouville_bound, "scan bound (default 100000)");

    std::uint64_t reduction_bound = 2000;
    auto* reduction_cmd = app.add_subcommand(
        "verify-reduction", "Bit-sweep vs odd-square oracle plus reduction soundness");
    reduction_cmd->add_option("--bound", reduction_bound, "even-target bound (default 2000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    load_cache();
    int rc = kExitOk;
    try {
        if (represent_cmd->parsed()) rc = cmd_represent(sum_text, n);
        else if (truant_cmd->parsed()) rc = cmd_truant(sum_text, even, truant_bound);
        else if (escalate_cmd->parsed()) rc = cmd_escalate(max_arity, escalate_bound, json_path);
        else if (table1_cmd->parsed()) rc = cmd_table1(table1_bound, csv_path);
        else if (verify_cmd->parsed())
            rc = cmd_verify_criterion(set_name, verify_bound, random_count, max_coeff,
                                      random_arity, seed);
        else if (liouville_cmd->parsed()) rc = cmd_verify_liouville(liouville_bound);
        else if (reduction_cmd->parsed()) rc = cmd_verify_reduction(reduction_bound);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    save_cache();
    return rc;
}
