#pragma once

#include "odrl/denotation.hpp"
#include "odrl/kb.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odrl {

enum class Verdict { Conflict, Compatible, Unknown };
enum class Subsumption { Confirmed, Refuted, Unknown };

// Open: absent relation facts are unknown (sound three-valued verdicts).
// Closed: the KB is taken as complete and denotations are intersected as sets.
enum class Mode { Open, Closed };

std::string_view to_string(Verdict v);
std::string_view to_string(Subsumption s);
std::string_view to_string(Mode m);
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<Mode> parse_mode(std::string_view text);

// nullopt stands for the indeterminate denotation.
using Grounding = std::optional<GroundedConstraint>;

struct PairVerdict {
    Verdict verdict = Verdict::Unknown;
    std::optional<std::string> witness;  // lexicographically least common concept
};

// Compatibility of two conjunctive groups of constraints over one KB: is there
// a concept satisfying everything in lhs and rhs at once?
PairVerdict decide(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs, Mode mode);

// Throws Error{OperandMismatch} when the left operands differ.
PairVerdict check_pair(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Mode mode = Mode::Open);
PairVerdict check_group(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs,
                        Mode mode = Mode::Open);

Subsumption subsumes(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Mode mode = Mode::Open);
Subsumption subsumes(const KnowledgeBase& kb, const Grounding& c1, const Grounding& c2, Mode mode);

enum class Composition { And, Or, Xone };

std::string_view to_string(Composition c);
std::optional<Composition> parse_composition(std::string_view text);

// Kleene-style folding of per-operand verdicts. Throws std::invalid_argument
// on an empty list.
Verdict compose(Composition mode, std::span<const Verdict> verdicts);

// Leaf constraint or an and/or/xone node over nested composites.
class CompositeConstraint {
public:
    static CompositeConstraint leaf(Constraint c);
    static CompositeConstraint node(Composition mode, std::vector<CompositeConstraint> children);

    bool is_leaf() const { return leaf_.has_value(); }
    const Constraint& constraint() const { return *leaf_; }
    Composition mode() const { return mode_; }
    const std::vector<CompositeConstraint>& children() const { return children_; }

    std::set<std::string> operands() const;
    std::vector<const Constraint*> leaves() const;

    friend bool operator==(const CompositeConstraint&, const CompositeConstraint&) = default;

private:
    std::optional<Constraint> leaf_;
    Composition mode_ = Composition::And;
    std::vector<CompositeConstraint> children_;
};

// Binds each left operand to the KB that interprets it.
class KbRegistry {
public:
    void bind(std::string operand, std::shared_ptr<const KnowledgeBase> kb);
    const KnowledgeBase* find(std::string_view operand) const;
    // Throws Error{ConfigError}.
    const KnowledgeBase& at(std::string_view operand) const;
    std::vector<std::string> operands() const;

private:
    std::map<std::string, std::shared_ptr<const KnowledgeBase>, std::less<>> kbs_;
};

struct OperandVerdict {
    std::string operand;
    Verdict verdict = Verdict::Unknown;
    std::optional<std::string> witness;
    std::string left;   // rendered constraint group on each side
    std::string right;
    std::vector<Constraint> left_group;
    std::vector<Constraint> right_group;
};

struct CompositeResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<OperandVerdict> per_operand;
    // Operands whose verdict determined the final result.
    std::vector<std::string> blocking;
    bool shared_operands = true;
};

// Pairs leaves by left operand across the two trees and folds the per-operand
// verdicts through the tree structure (right tree outermost). Operands
// constrained on one side only are not paired; a subtree with no paired leaf
// counts as COMPATIBLE next to paired siblings. Same-operand leaves directly
// under an `and` node are conjoined before pairing.
CompositeResult check_composite(const KbRegistry& kbs, const CompositeConstraint& left,
                                const CompositeConstraint& right, Mode mode = Mode::Open);

// Refined exclusivity test for two and-composed branches: and-fold of the
// per-operand verdicts over shared operands, COMPATIBLE when nothing is shared.
// Throws std::invalid_argument if a branch contains or/xone nodes.
Verdict branch_exclusivity(const KbRegistry& kbs, const CompositeConstraint& branch_j,
                           const CompositeConstraint& branch_k, Mode mode = Mode::Open);

}  // namespace odrl
