#include "completion.hpp"

#include <algorithm>
#include <numeric>

namespace odrl::detail {

namespace {

enum class Fold { True, False, Open };

Fold fold_leq(const KnowledgeBase& kb, ConceptIndex a, ConceptIndex b, bool positive) {
    if (a == b || kb.leq(a, b)) return positive ? Fold::True : Fold::False;
    if (kb.refutes_leq(a, b)) return positive ? Fold::False : Fold::True;
    return Fold::Open;
}

Fold fold_same(const KnowledgeBase& kb, ConceptIndex a, ConceptIndex b, bool positive) {
    if (a == b) return positive ? Fold::True : Fold::False;
    if (kb.una() || kb.refutes_leq(a, b) || kb.refutes_leq(b, a)) return positive ? Fold::False : Fold::True;
    return Fold::Open;
}

struct Pending {
    Fold fold;
    Literal literal;
};

Pending leq_atom(const KnowledgeBase& kb, ConceptIndex a, ConceptIndex b, bool positive) {
    return {fold_leq(kb, a, b, positive), Literal{Literal::Atom::Leq, a, b, positive}};
}

Pending same_atom(const KnowledgeBase& kb, ConceptIndex a, ConceptIndex b, bool positive) {
    return {fold_same(kb, a, b, positive), Literal{Literal::Atom::Same, a, b, positive}};
}

Dnf all_of(const std::vector<Pending>& parts) {
    Term term;
    for (const auto& p : parts) {
        if (p.fold == Fold::False) return {};
        if (p.fold == Fold::Open) term.push_back(p.literal);
    }
    return {term};
}

Dnf any_of(const std::vector<Pending>& parts) {
    Dnf out;
    for (const auto& p : parts) {
        if (p.fold == Fold::True) return {Term{}};
        if (p.fold == Fold::Open) out.push_back(Term{p.literal});
    }
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
    ConceptIndex find(ConceptIndex x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(ConceptIndex a, ConceptIndex b) { parent_[find(a)] = find(b); }

private:
    std::vector<ConceptIndex> parent_;
};

void add_edge(Relation& leq, ConceptIndex a, ConceptIndex b) {
    if (leq.test(a, b)) return;
    const auto n = leq.dimension();
    std::vector<ConceptIndex> lower, upper;
    for (ConceptIndex i = 0; i < n; ++i) {
        if (leq.test(i, a)) lower.push_back(i);
        if (leq.test(b, i)) upper.push_back(i);
    }
    for (auto i : lower) {
        for (auto j : upper) leq.set(i, j);
    }
}

}  // namespace

Dnf membership(const KnowledgeBase& kb, const GroundedConstraint& c, ConceptIndex x, bool negated) {
    const bool pos = !negated;
    std::vector<Pending> parts;
    switch (c.op) {
        case Operator::Eq: return all_of({same_atom(kb, x, c.targets.front(), pos)});
        case Operator::Neq: return all_of({same_atom(kb, x, c.targets.front(), !pos)});
        case Operator::IsA:
        case Operator::IsPartOf: return all_of({leq_atom(kb, x, c.targets.front(), pos)});
        case Operator::HasPart: return all_of({leq_atom(kb, c.targets.front(), x, pos)});
        case Operator::IsAnyOf:
            for (auto g : c.targets) parts.push_back(leq_atom(kb, x, g, pos));
            return pos ? any_of(parts) : all_of(parts);
        case Operator::IsAllOf:
            for (auto g : c.targets) parts.push_back(leq_atom(kb, x, g, pos));
            return pos ? all_of(parts) : any_of(parts);
        case Operator::IsNoneOf:
            for (auto g : c.targets) parts.push_back(leq_atom(kb, x, g, !pos));
            return pos ? all_of(parts) : any_of(parts);
    }
    return {};
}

Dnf conjoin(const Dnf& lhs, const Dnf& rhs) {
    Dnf out;
    for (const auto& l : lhs) {
        for (const auto& r : rhs) {
            Term t = l;
            t.insert(t.end(), r.begin(), r.end());
            out.push_back(std::move(t));
        }
    }
    return out;
}

bool consistent(const KnowledgeBase& kb, std::span<const Literal> literals) {
    const auto n = static_cast<ConceptIndex>(kb.size());
    Relation leq = kb.leq_relation();
    UnionFind same(n);
    bool grew = false;
    for (const auto& l : literals) {
        if (!l.positive) continue;
        if (l.atom == Literal::Atom::Leq) {
            add_edge(leq, l.a, l.b);
        } else {
            if (l.a != l.b && kb.una()) return false;
            add_edge(leq, l.a, l.b);
            add_edge(leq, l.b, l.a);
            same.unite(l.a, l.b);
        }
        grew = true;
    }
    for (const auto& l : literals) {
        if (l.positive) continue;
        if (l.atom == Literal::Atom::Leq ? leq.test(l.a, l.b) : same.find(l.a) == same.find(l.b)) return false;
    }
    if (!grew) return true;
    for (const auto& [a, b] : kb.not_leq_relation().pairs()) {
        if (leq.test(a, b)) return false;
    }
    const auto& dis = kb.disjoint_relation();
    for (ConceptIndex p = 0; p < n; ++p) {
        for (ConceptIndex q = p + 1; q < n; ++q) {
            if (!dis.test(p, q)) continue;
            for (ConceptIndex w = 0; w < n; ++w) {
                if (leq.test(w, p) && leq.test(w, q)) return false;
            }
        }
    }
    return true;
}

std::vector<ConceptIndex> by_name(const KnowledgeBase& kb) {
    std::vector<ConceptIndex> order(kb.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](ConceptIndex a, ConceptIndex b) { return kb.name(a) < kb.name(b); });
    return order;
}

namespace {

using Options = std::vector<std::pair<ConceptIndex, std::vector<Term>>>;

// Looks for one term per undecided point such that all of them hold together:
// a completion in which no point is a common member.
bool separable(const KnowledgeBase& kb, const Options& options, std::size_t depth, std::vector<Literal>& chosen) {
    if (depth == options.size()) return true;
    for (const auto& term : options[depth].second) {
        const auto mark = chosen.size();
        chosen.insert(chosen.end(), term.begin(), term.end());
        if (consistent(kb, chosen) && separable(kb, options, depth + 1, chosen)) return true;
        chosen.resize(mark);
    }
    return false;
}

}  // namespace

IntersectionResult decide_intersection(const KnowledgeBase& kb, std::span<const SignedConstraint> items) {
    const auto order = by_name(kb);
    std::vector<ConceptIndex> undecided;
    for (auto x : order) {
        Truth t = Truth::True;
        for (const auto& item : items) {
            Truth m = member3(kb, x, *item.constraint);
            t = kleene_and(t, item.negated ? kleene_not(m) : m);
        }
        if (t == Truth::True) return {Coverage::Always, x};
        if (t == Truth::Unknown) undecided.push_back(x);
    }
    if (undecided.empty()) return {Coverage::Never, std::nullopt};

    bool possible = false;
    for (auto x : undecided) {
        Dnf both{Term{}};
        for (const auto& item : items) both = conjoin(both, membership(kb, *item.constraint, x, item.negated));
        for (const auto& term : both) {
            if (consistent(kb, term)) {
                possible = true;
                break;
            }
        }
        if (possible) break;
    }
    if (!possible) return {Coverage::Never, std::nullopt};

    Options options;
    for (auto x : undecided) {
        std::vector<Term> escapes;
        for (const auto& item : items) {
            for (auto& term : membership(kb, *item.constraint, x, !item.negated)) {
                if (consistent(kb, term)) escapes.push_back(std::move(term));
            }
        }
        if (escapes.empty()) return {Coverage::Always, x};
        options.emplace_back(x, std::move(escapes));
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
    std::vector<Literal> chosen;
    if (separable(kb, options, 0, chosen)) return {Coverage::Sometimes, std::nullopt};
    return {Coverage::Always, std::nullopt};
}

}  // namespace odrl::detail
