#include "odrl/denotation.hpp"

#include "odrl/error.hpp"

#include <algorithm>

namespace odrl {

std::string_view to_string(Operator op) {
    switch (op) {
        case Operator::Eq: return "eq";
        case Operator::Neq: return "neq";
        case Operator::IsA: return "isA";
        case Operator::IsPartOf: return "isPartOf";
        case Operator::HasPart: return "hasPart";
        case Operator::IsAnyOf: return "isAnyOf";
        case Operator::IsAllOf: return "isAllOf";
        case Operator::IsNoneOf: return "isNoneOf";
    }
    return "eq";
}

Operator parse_operator(std::string_view name) {
    for (Operator op : kAllOperators) {
        if (to_string(op) == name) return op;
    }
    throw Error(ErrorKind::UnknownOperator, "'" + std::string(name) + "' is not one of the eight KB-dependent operators");
}

bool is_set_operator(Operator op) {
    return op == Operator::IsAnyOf || op == Operator::IsAllOf || op == Operator::IsNoneOf;
}

void Constraint::check_well_formed() const {
    if (is_set_operator(op)) {
        if (values.empty()) {
            throw Error(ErrorKind::ValidationError, std::string(odrl::to_string(op)) + " needs a non-empty value list");
        }
    } else if (values.size() != 1) {
        throw Error(ErrorKind::ValidationError, std::string(odrl::to_string(op)) + " takes exactly one value");
    }
}

std::string Constraint::to_string() const {
    std::string out = "(" + left_operand + ", " + std::string(odrl::to_string(op)) + ", ";
    if (is_set_operator(op)) {
        out += "{";
        for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i];
        out += "}";
    } else if (!values.empty()) {
        out += values.front();
    }
    return out + ")";
}

std::optional<GroundedConstraint> ground_constraint(const KnowledgeBase& kb, const Constraint& c) {
    c.check_well_formed();
    GroundedConstraint g{c.op, {}};
    for (const auto& v : c.values) {
        auto target = kb.ground(v);
        if (!target) return std::nullopt;
        g.targets.push_back(*target);
    }
    std::sort(g.targets.begin(), g.targets.end());
    g.targets.erase(std::unique(g.targets.begin(), g.targets.end()), g.targets.end());
    return g;
}

Denotation denote(const KnowledgeBase& kb, const GroundedConstraint& g) {
    const auto n = kb.size();
    switch (g.op) {
        case Operator::Eq: {
            ConceptSet s(n);
            s.insert(g.targets.front());
            return Denotation::of(std::move(s));
        }
        case Operator::Neq: {
            ConceptSet s(n, true);
            s.erase(g.targets.front());
            return Denotation::of(std::move(s));
        }
        case Operator::IsA:
        case Operator::IsPartOf:
            return Denotation::of(kb.below(g.targets.front()));
        case Operator::HasPart:
            return Denotation::of(kb.above(g.targets.front()));
        case Operator::IsAnyOf:
        case Operator::IsNoneOf: {
            ConceptSet s(n);
            for (auto t : g.targets) s |= kb.below(t);
            return Denotation::of(g.op == Operator::IsAnyOf ? s : s.complement());
        }
        case Operator::IsAllOf: {
            ConceptSet s(n, true);
            for (auto t : g.targets) s &= kb.below(t);
            return Denotation::of(std::move(s));
        }
    }
    return Denotation::top();
}

Denotation denote(const KnowledgeBase& kb, const Constraint& c) {
    auto g = ground_constraint(kb, c);
    if (!g) return Denotation::top();
    return denote(kb, *g);
}

Denotation intersect(const Denotation& d1, const Denotation& d2) {
    if (d1.is_empty() || d2.is_empty()) return Denotation::of(d1.is_empty() ? d1.set() : d2.set());
    if (!d1.is_top() && !d2.is_top()) {
        ConceptSet s = d1.set();
        s &= d2.set();
        return Denotation::of(std::move(s));
    }
    return Denotation::top();
}

Denotation intersect_all(std::span<const Denotation> ds) {
    std::optional<ConceptSet> concrete;
    bool any_top = false;
    for (const auto& d : ds) {
        if (d.is_top()) {
            any_top = true;
            continue;
        }
        if (!concrete) {
            concrete = d.set();
        } else {
            *concrete &= d.set();
        }
    }
    if (concrete && concrete->empty()) return Denotation::of(*concrete);
    if (any_top || !concrete) return Denotation::top();
    return Denotation::of(*concrete);
}

std::string_view to_string(Truth t) {
    switch (t) {
        case Truth::True: return "TRUE";
        case Truth::False: return "FALSE";
        case Truth::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

Truth kleene_not(Truth a) {
    if (a == Truth::True) return Truth::False;
    if (a == Truth::False) return Truth::True;
    return Truth::Unknown;
}

Truth kleene_and(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False) return Truth::False;
    if (a == Truth::True && b == Truth::True) return Truth::True;
    return Truth::Unknown;
}

Truth kleene_or(Truth a, Truth b) {
    if (a == Truth::True || b == Truth::True) return Truth::True;
    if (a == Truth::False && b == Truth::False) return Truth::False;
    return Truth::Unknown;
}

namespace {

Truth below3(const KnowledgeBase& kb, ConceptIndex x, ConceptIndex g) {
    if (kb.leq(x, g)) return Truth::True;
    if (kb.refutes_leq(x, g)) return Truth::False;
    return Truth::Unknown;
}

Truth same3(const KnowledgeBase& kb, ConceptIndex x, ConceptIndex g) {
    if (x == g) return Truth::True;
    if (kb.una() || kb.refutes_leq(x, g) || kb.refutes_leq(g, x)) return Truth::False;
    return Truth::Unknown;
}

}  // namespace

Truth member3(const KnowledgeBase& kb, ConceptIndex x, const GroundedConstraint& g) {
    switch (g.op) {
        case Operator::Eq: return same3(kb, x, g.targets.front());
        case Operator::Neq: return kleene_not(same3(kb, x, g.targets.front()));
        case Operator::IsA:
        case Operator::IsPartOf: return below3(kb, x, g.targets.front());
        case Operator::HasPart: return below3(kb, g.targets.front(), x);
        case Operator::IsAnyOf:
        case Operator::IsNoneOf: {
            Truth t = Truth::False;
            for (auto target : g.targets) t = kleene_or(t, below3(kb, x, target));
            return g.op == Operator::IsAnyOf ? t : kleene_not(t);
        }
        case Operator::IsAllOf: {
            Truth t = Truth::True;
            for (auto target : g.targets) t = kleene_and(t, below3(kb, x, target));
            return t;
        }
    }
    return Truth::Unknown;
}

Truth member3(const KnowledgeBase& kb, ConceptIndex x, const Constraint& c) {
    auto g = ground_constraint(kb, c);
    if (!g) throw Error(ErrorKind::UngroundedConstraint, c.to_string() + " has a value with no concept in KB '" + kb.id() + "'");
    return member3(kb, x, *g);
}

}  // namespace odrl
