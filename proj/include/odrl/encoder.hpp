#pragma once

#include "odrl/denotation.hpp"
#include "odrl/fol.hpp"
#include "odrl/ground.hpp"
#include "odrl/kb.hpp"
#include "odrl/verdict.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace odrl {

// compat-query proves the existence of a common member, conflict-query its
// absence.
enum class Polarity { CompatQuery, ConflictQuery };
enum class ExpectedStatus { TheoremUnsat, CounterSatSat };

std::string_view to_string(Polarity p);
std::string_view to_string(ExpectedStatus s);
std::optional<Polarity> parse_polarity(std::string_view text);  // "compat" | "conflict"

struct EmitOptions {
    // Encode ungrounded constraints as unconstrained predicates instead of
    // throwing.
    bool allow_indeterminate = false;
};

struct EncodedProblem {
    std::string id;
    Polarity polarity = Polarity::CompatQuery;
    ExpectedStatus expected = ExpectedStatus::CounterSatSat;
    Verdict engine_verdict = Verdict::Unknown;  // open mode
    fol::Problem problem;
    std::string tptp_text;
    std::string smtlib_text;
};

// Throws Error{UngroundedConstraint} unless options.allow_indeterminate, and
// Error{OperandMismatch} when operands differ.
EncodedProblem emit_problem(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Polarity polarity,
                            const std::string& id = "p", EmitOptions options = {});
// Same-operand conjunctive groups, one membership predicate per constraint.
EncodedProblem emit_group(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs,
                          Polarity polarity, const std::string& id = "p", EmitOptions options = {});

// Pre-grounded sides; nullopt entries are encoded as unconstrained predicates.
// labels name each constraint (lhs first) in the emitted comments.
EncodedProblem emit_grounded(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs,
                             std::span<const std::string> labels, Polarity polarity, const std::string& id = "p");

// Throws Error{UnrecognizedToken} for anything but Theorem,
// CounterSatisfiable, unsat, sat.
Verdict interpret_result(std::string_view token, Polarity polarity);
Verdict interpret_result(fol::GroundStatus status, Polarity polarity);

// Both polarities through the ground-instantiation oracle, combined per the
// negated-conjecture pattern.
struct OracleVerdict {
    Verdict verdict = Verdict::Unknown;
    fol::GroundStatus compat = fol::GroundStatus::CounterSatisfiable;
    fol::GroundStatus conflict = fol::GroundStatus::CounterSatisfiable;
};
OracleVerdict ground_oracle(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs);
OracleVerdict ground_oracle(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs);

// First SZS status or bare sat/unsat line in a prover's standard output.
std::optional<std::string> extract_status_token(std::string_view output);

struct ProverRun {
    int exit_code = 0;
    std::string output;
    std::optional<std::string> token;
};

// Runs `<command> <file>` through the shell and captures standard output.
ProverRun run_prover(const std::string& command, const std::string& file);

}  // namespace odrl
