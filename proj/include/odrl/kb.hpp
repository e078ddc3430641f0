#pragma once

#include "odrl/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace odrl {

enum class Domain { Taxonomic, Mereological, Nominal };

std::string_view to_string(Domain d);
std::optional<Domain> parse_domain(std::string_view text);

using ConceptPair = std::pair<std::string, std::string>;

// Raw, user-facing description of a knowledge base. Relations hold direct
// edges only; closures are computed by KnowledgeBase::build.
struct KbSpec {
    std::string id;
    Domain domain = Domain::Taxonomic;
    bool una = true;
    std::vector<std::string> concepts;
    std::vector<ConceptPair> leq;
    std::vector<ConceptPair> disjoint;
    std::vector<ConceptPair> not_leq;
    std::map<std::string, std::string> gamma;
};

// Finite concept space with a preorder, a downward-closed disjointness
// relation, optional negative order facts and a grounding map from right
// operand values to concepts. Immutable once built.
class KnowledgeBase {
public:
    // Closes the relations and enforces every structural axiom. Throws
    // Error{ClosureContradiction | DomainViolation | UnknownConcept}.
    static KnowledgeBase build(const KbSpec& spec);

    // Same closure computation as build() but without the contradiction and
    // domain checks; the result may violate axioms and is meant for
    // validate_kb reporting. Unknown concepts still throw.
    static KnowledgeBase close_unchecked(const KbSpec& spec);

    // Takes the relations verbatim (no closure, no checks).
    static KnowledgeBase from_relations(std::string id, Domain domain, bool una,
                                        std::vector<std::string> concepts, Relation leq,
                                        Relation disjoint, Relation not_leq,
                                        std::map<std::string, ConceptIndex> gamma);

    const std::string& id() const { return id_; }
    Domain domain() const { return domain_; }
    bool una() const { return una_; }
    std::size_t size() const { return concepts_.size(); }

    const std::vector<std::string>& concepts() const { return concepts_; }
    const std::string& name(ConceptIndex i) const { return concepts_[i]; }
    std::optional<ConceptIndex> index_of(std::string_view concept_id) const;
    // Throws Error{UnknownConcept}.
    ConceptIndex require(std::string_view concept_id) const;

    bool leq(ConceptIndex x, ConceptIndex y) const { return leq_.test(x, y); }
    bool disjoint(ConceptIndex x, ConceptIndex y) const { return disjoint_.test(x, y); }
    bool not_leq(ConceptIndex x, ConceptIndex y) const { return not_leq_.test(x, y); }
    // True when no consistent extension of the KB can contain x <= y: either
    // an explicit negative fact lies below/above the pair, or some concept
    // under x is disjoint from y.
    bool refutes_leq(ConceptIndex x, ConceptIndex y) const { return refuted_.test(x, y); }

    bool leq(std::string_view x, std::string_view y) const;
    bool disjoint(std::string_view x, std::string_view y) const;

    const Relation& leq_relation() const { return leq_; }
    const Relation& disjoint_relation() const { return disjoint_; }
    const Relation& not_leq_relation() const { return not_leq_; }

    std::optional<ConceptIndex> ground(std::string_view value) const;
    std::optional<std::string> ground_name(std::string_view value) const;
    const std::map<std::string, ConceptIndex>& gamma() const { return gamma_; }

    // Downset / upset of a concept under the closed order.
    ConceptSet below(ConceptIndex g) const;
    ConceptSet above(ConceptIndex g) const;

    // Closed relations as edge lists; feeding this back to build() yields
    // identical relations.
    KbSpec to_spec() const;

private:
    KnowledgeBase() = default;
    void index_concepts();
    void derive_refutations();

    std::string id_;
    Domain domain_ = Domain::Taxonomic;
    bool una_ = true;
    std::vector<std::string> concepts_;
    std::unordered_map<std::string, ConceptIndex> index_;
    Relation leq_;
    Relation disjoint_;
    Relation not_leq_;
    Relation refuted_;
    std::map<std::string, ConceptIndex> gamma_;
};

enum class ViolationKind {
    Reflexivity,
    Transitivity,
    Symmetry,
    Irreflexivity,
    DownwardClosure,
    LemmaViolation,
    CommonLowerBound,
    NotLeqViolation,
    NominalOrder,
    NominalDisjointness,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string x;
    std::string y;  // empty for single-concept axioms

    std::string to_string() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty iff every structural axiom holds.
std::vector<Violation> validate_kb(const KnowledgeBase& kb);

}  // namespace odrl
