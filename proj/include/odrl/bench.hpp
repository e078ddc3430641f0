#pragma once

#include "odrl/alignment.hpp"
#include "odrl/kb.hpp"
#include "odrl/verdict.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace odrl::bench {

enum class Category { OperatorCoverage, Composition, Alignment, Runtime, Structural };
enum class ProblemKind { Pair, Composite, Aligned, Runtime };

std::string_view to_string(Category c);
std::string_view to_string(ProblemKind k);
std::optional<Category> parse_category(std::string_view text);
std::optional<ProblemKind> parse_problem_kind(std::string_view text);

struct BenchmarkProblem {
    std::string id;
    std::string analog;  // reference problem reproduced, if any (e.g. "ODRL085")
    Category category = Category::OperatorCoverage;
    ProblemKind kind = ProblemKind::Pair;
    std::string description;

    std::string kb;         // pair / runtime: the KB; aligned: the source KB
    std::string target_kb;  // aligned only
    std::string alignment;  // aligned only: key into Suite::alignments
    std::map<std::string, std::string> bindings;  // composite: operand -> KB id

    std::optional<Constraint> c1, c2;                     // pair, aligned, runtime
    std::optional<CompositeConstraint> left, right;      // composite

    // Verdict of the problem's main check: the pair verdict, the composite
    // verdict, or the aligned (target-side) verdict.
    Verdict expected_open = Verdict::Unknown;
    Verdict expected_closed = Verdict::Unknown;

    Verdict expected(Mode m) const { return m == Mode::Open ? expected_open : expected_closed; }
};

struct Suite {
    std::map<std::string, KbSpec> kbs;
    std::map<std::string, Alignment> alignments;
    std::vector<BenchmarkProblem> problems;  // sorted by id
};

// Fixture KBs, alignments and problems with their frozen expectations.
Suite build_builtin_suite();
// Same problems with every expectation left at UNKNOWN; input of the
// expectation generator.
Suite builtin_definitions();

// Individual fixtures by id (GEO000, GEO001, DPV000, DPV001, LNG000, LNG001,
// NOM000, CHN000, DIA000, SNG000, NMS000, EX1A, EX1B).
std::map<std::string, KbSpec> builtin_kbs();
std::map<std::string, Alignment> builtin_alignments();

struct UnitResult {
    std::string label;      // operand or "pair"
    Verdict engine = Verdict::Unknown;
    Verdict oracle = Verdict::Unknown;
    bool epr_ok = true;
    bool compat_sat = false;    // compat-query countersatisfiable
    bool conflict_sat = false;  // conflict-query countersatisfiable
    std::string tptp_compat, tptp_conflict, smt_compat, smt_conflict;
};

struct ProblemResult {
    std::string id;
    ProblemKind kind = ProblemKind::Pair;
    Verdict verdict = Verdict::Unknown;
    Verdict expected = Verdict::Unknown;
    bool pass = false;
    std::optional<Verdict> source_verdict;  // aligned problems
    bool false_conflict = false;            // aligned: CONFLICT not present in the source
    bool degradation = false;               // aligned: verdict lost to an unmapped value
    std::optional<std::size_t> violating_contexts;  // runtime problems
    std::optional<bool> witness_satisfies;           // runtime problems
    std::vector<UnitResult> units;                   // filled when emitting
    bool concordant = true;                          // every unit engine == oracle
    std::string error;
};

struct SuiteReport {
    Mode mode = Mode::Open;
    bool emitted = false;
    std::vector<ProblemResult> results;  // sorted by id
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t units = 0;
    std::size_t formats_emitted = 0;
    std::size_t epr_failures = 0;
    std::size_t oracle_mismatches = 0;
    std::size_t false_conflicts = 0;
    std::size_t degradation_pairs = 0;
    std::size_t degradation_pair_failures = 0;  // not sat under both polarities
    std::size_t runtime_violations = 0;

    bool ok() const;
};

// Evaluates every problem with the engine; with emit, also encodes each
// constraint-group check in both formats and polarities, runs the EPR guard
// and decides it with the ground-instantiation oracle. Throws nothing; a
// problem that fails to evaluate is reported with its error.
SuiteReport run_suite(const Suite& suite, Mode mode, bool emit);

std::string report_json(const SuiteReport& r, int indent = 2);
std::string report_text(const SuiteReport& r);

// On-disk layout: kbs/<id>.json, alignments/<name>.json and one directory per
// problem with problem.json. write_results adds <id>[.<unit>].<polarity>.p /
// .smt2 files and result.json.
void write_suite(const Suite& suite, const std::filesystem::path& dir);
Suite load_suite(const std::filesystem::path& dir);
void write_results(const SuiteReport& report, const std::filesystem::path& dir);

}  // namespace odrl::bench
