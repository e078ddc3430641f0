#include "odrl/kb.hpp"

#include "odrl/error.hpp"

#include <algorithm>
#include <set>

namespace odrl {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ClosureContradiction: return "ClosureContradiction";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::UnknownConcept: return "UnknownConcept";
        case ErrorKind::UnknownOperator: return "UnknownOperator";
        case ErrorKind::UngroundedConstraint: return "UngroundedConstraint";
        case ErrorKind::OperandMismatch: return "OperandMismatch";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::AlignmentInvalid: return "AlignmentInvalid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::UnrecognizedToken: return "UnrecognizedToken";
    }
    return "Error";
}

std::string_view to_string(Domain d) {
    switch (d) {
        case Domain::Taxonomic: return "taxonomic";
        case Domain::Mereological: return "mereological";
        case Domain::Nominal: return "nominal";
    }
    return "taxonomic";
}

std::optional<Domain> parse_domain(std::string_view text) {
    if (text == "taxonomic") return Domain::Taxonomic;
    if (text == "mereological") return Domain::Mereological;
    if (text == "nominal") return Domain::Nominal;
    return std::nullopt;
}

namespace {

struct Indexed {
    std::vector<std::string> concepts;
    std::unordered_map<std::string, ConceptIndex> index;
};

Indexed index_spec(const KbSpec& spec) {
    Indexed out;
    for (const auto& c : spec.concepts) {
        if (c.empty()) throw Error(ErrorKind::UnknownConcept, "empty concept identifier in KB '" + spec.id + "'");
        if (out.index.contains(c)) continue;  // duplicates collapse
        out.index.emplace(c, static_cast<ConceptIndex>(out.concepts.size()));
        out.concepts.push_back(c);
    }
    return out;
}

ConceptIndex lookup(const Indexed& ix, const std::string& kb_id, const std::string& c, const char* where) {
    auto it = ix.index.find(c);
    if (it == ix.index.end()) {
        throw Error(ErrorKind::UnknownConcept,
                    "'" + c + "' referenced by " + where + " is not a concept of KB '" + kb_id + "'");
    }
    return it->second;
}

Relation edges(const Indexed& ix, const KbSpec& spec, const std::vector<ConceptPair>& pairs, const char* where) {
    Relation r(ix.concepts.size());
    for (const auto& [x, y] : pairs) {
        r.set(lookup(ix, spec.id, x, where), lookup(ix, spec.id, y, where));
    }
    return r;
}

// disjoint(x', y') iff some seed pair (x, y) has x' <= x and y' <= y.
Relation downward_closure(const Relation& seeds, const Relation& leq) {
    const auto n = seeds.dimension();
    Relation out(n);
    for (const auto& [x, y] : seeds.pairs()) {
        for (ConceptIndex xs = 0; xs < n; ++xs) {
            if (!leq.test(xs, x)) continue;
            for (ConceptIndex ys = 0; ys < n; ++ys) {
                if (leq.test(ys, y)) out.set(xs, ys);
            }
        }
    }
    return out;
}

}  // namespace

void KnowledgeBase::index_concepts() {
    index_.clear();
    for (ConceptIndex i = 0; i < concepts_.size(); ++i) index_.emplace(concepts_[i], i);
}

void KnowledgeBase::derive_refutations() {
    const auto n = size();
    refuted_ = Relation(n);
    for (ConceptIndex x = 0; x < n; ++x) {
        for (ConceptIndex y = 0; y < n; ++y) {
            bool refuted = false;
            for (ConceptIndex w = 0; w < n && !refuted; ++w) {
                if (leq_.test(w, x) && disjoint_.test(w, y)) refuted = true;
            }
            for (const auto& [a, b] : not_leq_.pairs()) {
                if (refuted) break;
                if (leq_.test(a, x) && leq_.test(y, b)) refuted = true;
            }
            if (refuted) refuted_.set(x, y);
        }
    }
}

KnowledgeBase KnowledgeBase::close_unchecked(const KbSpec& spec) {
    Indexed ix = index_spec(spec);
    KnowledgeBase kb;
    kb.id_ = spec.id;
    kb.domain_ = spec.domain;
    kb.una_ = spec.una;
    const auto n = ix.concepts.size();

    kb.leq_ = edges(ix, spec, spec.leq, "a leq edge");
    kb.leq_.make_reflexive();
    kb.leq_.make_transitive();

    Relation seeds = edges(ix, spec, spec.disjoint, "a disjoint pair");
    if (spec.domain == Domain::Nominal) {
        for (ConceptIndex x = 0; x < n; ++x) {
            for (ConceptIndex y = 0; y < n; ++y) {
                if (x != y) seeds.set(x, y);
            }
        }
    }
    seeds.make_symmetric();
    kb.disjoint_ = downward_closure(seeds, kb.leq_);
    kb.not_leq_ = edges(ix, spec, spec.not_leq, "a not_leq pair");

    for (const auto& [value, target] : spec.gamma) {
        kb.gamma_.emplace(value, lookup(ix, spec.id, target, "gamma"));
    }
    kb.concepts_ = std::move(ix.concepts);
    kb.index_ = std::move(ix.index);
    kb.derive_refutations();
    return kb;
}

KnowledgeBase KnowledgeBase::build(const KbSpec& spec) {
    if (spec.domain == Domain::Nominal && !spec.leq.empty()) {
        throw Error(ErrorKind::DomainViolation,
                    "nominal KB '" + spec.id + "' must not declare leq edges (order is identity)");
    }
    KnowledgeBase kb = close_unchecked(spec);
    const auto n = kb.size();
    for (ConceptIndex x = 0; x < n; ++x) {
        for (ConceptIndex y = 0; y < n; ++y) {
            if (kb.leq_.test(x, y) && kb.disjoint_.test(x, y)) {
                throw Error(ErrorKind::ClosureContradiction,
                            "'" + kb.name(x) + "' <= '" + kb.name(y) + "' but the closed disjointness relation contains the pair");
            }
            if (kb.leq_.test(x, y) && kb.not_leq_.test(x, y)) {
                throw Error(ErrorKind::ClosureContradiction,
                            "'" + kb.name(x) + "' <= '" + kb.name(y) + "' contradicts an explicit not_leq fact");
            }
        }
    }
    return kb;
}

KnowledgeBase KnowledgeBase::from_relations(std::string id, Domain domain, bool una,
                                            std::vector<std::string> concepts, Relation leq,
                                            Relation disjoint, Relation not_leq,
                                            std::map<std::string, ConceptIndex> gamma) {
    KnowledgeBase kb;
    kb.id_ = std::move(id);
    kb.domain_ = domain;
    kb.una_ = una;
    kb.concepts_ = std::move(concepts);
    kb.leq_ = std::move(leq);
    kb.disjoint_ = std::move(disjoint);
    kb.not_leq_ = std::move(not_leq);
    kb.gamma_ = std::move(gamma);
    kb.index_concepts();
    kb.derive_refutations();
    return kb;
}

std::optional<ConceptIndex> KnowledgeBase::index_of(std::string_view concept_id) const {
    auto it = index_.find(std::string(concept_id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ConceptIndex KnowledgeBase::require(std::string_view concept_id) const {
    if (auto i = index_of(concept_id)) return *i;
    throw Error(ErrorKind::UnknownConcept, "'" + std::string(concept_id) + "' is not a concept of KB '" + id_ + "'");
}

bool KnowledgeBase::leq(std::string_view x, std::string_view y) const {
    return leq(require(x), require(y));
}

bool KnowledgeBase::disjoint(std::string_view x, std::string_view y) const {
    return disjoint(require(x), require(y));
}

std::optional<ConceptIndex> KnowledgeBase::ground(std::string_view value) const {
    auto it = gamma_.find(std::string(value));
    if (it == gamma_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> KnowledgeBase::ground_name(std::string_view value) const {
    if (auto g = ground(value)) return concepts_[*g];
    return std::nullopt;
}

ConceptSet KnowledgeBase::below(ConceptIndex g) const {
    ConceptSet out(size());
    for (ConceptIndex x = 0; x < size(); ++x) {
        if (leq_.test(x, g)) out.insert(x);
    }
    return out;
}

ConceptSet KnowledgeBase::above(ConceptIndex g) const {
    ConceptSet out(size());
    for (ConceptIndex x = 0; x < size(); ++x) {
        if (leq_.test(g, x)) out.insert(x);
    }
    return out;
}

KbSpec KnowledgeBase::to_spec() const {
    KbSpec spec;
    spec.id = id_;
    spec.domain = domain_;
    spec.una = una_;
    spec.concepts = concepts_;
    for (const auto& [x, y] : leq_.pairs()) {
        if (x != y && domain_ != Domain::Nominal) spec.leq.emplace_back(concepts_[x], concepts_[y]);
    }
    for (const auto& [x, y] : disjoint_.pairs()) {
        if (x < y && domain_ != Domain::Nominal) spec.disjoint.emplace_back(concepts_[x], concepts_[y]);
    }
    for (const auto& [x, y] : not_leq_.pairs()) spec.not_leq.emplace_back(concepts_[x], concepts_[y]);
    for (const auto& [value, g] : gamma_) spec.gamma.emplace(value, concepts_[g]);
    return spec;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Reflexivity: return "Reflexivity";
        case ViolationKind::Transitivity: return "Transitivity";
        case ViolationKind::Symmetry: return "Symmetry";
        case ViolationKind::Irreflexivity: return "Irreflexivity";
        case ViolationKind::DownwardClosure: return "DownwardClosure";
        case ViolationKind::LemmaViolation: return "LemmaViolation";
        case ViolationKind::CommonLowerBound: return "CommonLowerBound";
        case ViolationKind::NotLeqViolation: return "NotLeqViolation";
        case ViolationKind::NominalOrder: return "NominalOrder";
        case ViolationKind::NominalDisjointness: return "NominalDisjointness";
    }
    return "Violation";
}

std::string Violation::to_string() const {
    std::string out(odrl::to_string(kind));
    out += "(" + x;
    if (!y.empty()) out += ", " + y;
    out += ")";
    return out;
}

std::vector<Violation> validate_kb(const KnowledgeBase& kb) {
    const auto n = static_cast<ConceptIndex>(kb.size());
    const auto& leq = kb.leq_relation();
    const auto& dis = kb.disjoint_relation();
    std::vector<Violation> out;
    auto report = [&](ViolationKind k, ConceptIndex x, std::optional<ConceptIndex> y = std::nullopt) {
        Violation v{k, kb.name(x), y ? kb.name(*y) : std::string()};
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };

    for (ConceptIndex x = 0; x < n; ++x) {
        if (!leq.test(x, x)) report(ViolationKind::Reflexivity, x);
        if (dis.test(x, x)) report(ViolationKind::Irreflexivity, x);
    }
    for (ConceptIndex x = 0; x < n; ++x) {
        for (ConceptIndex y = 0; y < n; ++y) {
            if (leq.test(x, y)) {
                for (ConceptIndex z = 0; z < n; ++z) {
                    if (leq.test(y, z) && !leq.test(x, z)) report(ViolationKind::Transitivity, x, z);
                }
            }
            if (dis.test(x, y) && !dis.test(y, x)) report(ViolationKind::Symmetry, x, y);
            if (x != y && leq.test(x, y) && dis.test(x, y)) report(ViolationKind::LemmaViolation, x, y);
            if (leq.test(x, y) && kb.not_leq(x, y)) report(ViolationKind::NotLeqViolation, x, y);
        }
    }
    // Downward closure. A reflexive target (z, z) means z lies below both
    // sides of a disjoint pair; that is a Lemma violation when z is one of
    // the pair and a CommonLowerBound otherwise.
    for (const auto& [x, y] : dis.pairs()) {
        if (x == y) continue;
        for (ConceptIndex xs = 0; xs < n; ++xs) {
            if (!leq.test(xs, x)) continue;
            for (ConceptIndex ys = 0; ys < n; ++ys) {
                if (!leq.test(ys, y) || dis.test(xs, ys)) continue;
                if (xs != ys) {
                    report(ViolationKind::DownwardClosure, xs, ys);
                } else if (xs != x && xs != y) {
                    report(ViolationKind::CommonLowerBound, xs, std::min(x, y));
                }
            }
        }
    }
    if (kb.domain() == Domain::Nominal) {
        for (ConceptIndex x = 0; x < n; ++x) {
            for (ConceptIndex y = 0; y < n; ++y) {
                if (x == y) continue;
                if (leq.test(x, y)) report(ViolationKind::NominalOrder, x, y);
                if (!dis.test(x, y)) report(ViolationKind::NominalDisjointness, x, y);
            }
        }
    }
    return out;
}

}  // namespace odrl
