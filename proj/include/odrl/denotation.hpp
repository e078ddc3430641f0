#pragma once

#include "odrl/kb.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odrl {

enum class Operator { Eq, Neq, IsA, IsPartOf, HasPart, IsAnyOf, IsAllOf, IsNoneOf };

inline constexpr Operator kAllOperators[] = {Operator::Eq,      Operator::Neq,     Operator::IsA,
                                             Operator::IsPartOf, Operator::HasPart, Operator::IsAnyOf,
                                             Operator::IsAllOf,  Operator::IsNoneOf};

std::string_view to_string(Operator op);
// Exact, case-sensitive ODRL names. Throws Error{UnknownOperator}.
Operator parse_operator(std::string_view name);
bool is_set_operator(Operator op);

// (leftOperand, operator, rightOperand). Single-valued operators carry exactly
// one value, set operators a non-empty list.
struct Constraint {
    std::string left_operand;
    Operator op = Operator::Eq;
    std::vector<std::string> values;

    Constraint() = default;
    Constraint(std::string operand, Operator o, std::string value)
        : left_operand(std::move(operand)), op(o), values{std::move(value)} {}
    Constraint(std::string operand, Operator o, std::vector<std::string> vs)
        : left_operand(std::move(operand)), op(o), values(std::move(vs)) {}

    // Throws Error{ValidationError} when the value arity does not fit the operator.
    void check_well_formed() const;
    std::string to_string() const;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

// A constraint whose values all resolved to concepts of one KB.
struct GroundedConstraint {
    Operator op = Operator::Eq;
    std::vector<ConceptIndex> targets;  // sorted, deduplicated

    friend bool operator==(const GroundedConstraint&, const GroundedConstraint&) = default;
};

// nullopt when any value is unmapped; the denotation is then indeterminate.
std::optional<GroundedConstraint> ground_constraint(const KnowledgeBase& kb, const Constraint& c);

// Either a concrete concept subset or the indeterminate marker. TOP is not the
// universal set: it means the KB cannot compute the denotation.
class Denotation {
public:
    static Denotation top() { return Denotation(); }
    static Denotation of(ConceptSet s) { return Denotation(std::move(s)); }

    bool is_top() const { return !set_.has_value(); }
    bool is_empty() const { return set_.has_value() && set_->empty(); }
    const ConceptSet& set() const { return *set_; }

    friend bool operator==(const Denotation&, const Denotation&) = default;

private:
    Denotation() = default;
    explicit Denotation(ConceptSet s) : set_(std::move(s)) {}
    std::optional<ConceptSet> set_;
};

// Closed-world denotation over the KB's concept space.
Denotation denote(const KnowledgeBase& kb, const Constraint& c);
Denotation denote(const KnowledgeBase& kb, const GroundedConstraint& g);

// Conservative intersection: empty beats TOP, TOP beats any other set.
Denotation intersect(const Denotation& d1, const Denotation& d2);
// n-ary form: empty as soon as the concrete operands intersect to nothing,
// TOP if any operand is TOP otherwise. Agrees with the binary form for n = 2.
Denotation intersect_all(std::span<const Denotation> ds);

enum class Truth { True, False, Unknown };

std::string_view to_string(Truth t);
Truth kleene_not(Truth a);
Truth kleene_and(Truth a, Truth b);
Truth kleene_or(Truth a, Truth b);

// Open-world membership of x: TRUE/FALSE only when every consistent
// extension of the KB's relations agrees. Throws Error{UngroundedConstraint}.
Truth member3(const KnowledgeBase& kb, ConceptIndex x, const Constraint& c);
Truth member3(const KnowledgeBase& kb, ConceptIndex x, const GroundedConstraint& g);

}  // namespace odrl
