#include "odrl/verdict.hpp"

#include "completion.hpp"
#include "odrl/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace odrl {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Conflict: return "CONFLICT";
        case Verdict::Compatible: return "COMPATIBLE";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string_view to_string(Subsumption s) {
    switch (s) {
        case Subsumption::Confirmed: return "CONFIRMED";
        case Subsumption::Refuted: return "REFUTED";
        case Subsumption::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string_view to_string(Mode m) { return m == Mode::Open ? "open" : "closed"; }

std::optional<Verdict> parse_verdict(std::string_view text) {
    for (Verdict v : {Verdict::Conflict, Verdict::Compatible, Verdict::Unknown}) {
        if (to_string(v) == text) return v;
    }
    return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "open") return Mode::Open;
    if (text == "closed") return Mode::Closed;
    return std::nullopt;
}

std::string_view to_string(Composition c) {
    switch (c) {
        case Composition::And: return "and";
        case Composition::Or: return "or";
        case Composition::Xone: return "xone";
    }
    return "and";
}

std::optional<Composition> parse_composition(std::string_view text) {
    if (text == "and") return Composition::And;
    if (text == "or") return Composition::Or;
    if (text == "xone") return Composition::Xone;
    return std::nullopt;
}

namespace {

std::optional<std::string> least_member(const KnowledgeBase& kb, const ConceptSet& s) {
    std::optional<std::string> best;
    for (auto x : s.members()) {
        if (!best || kb.name(x) < *best) best = kb.name(x);
    }
    return best;
}

void require_same_operand(const Constraint& a, const Constraint& b) {
    if (a.left_operand != b.left_operand) {
        throw Error(ErrorKind::OperandMismatch,
                    "constraints over '" + a.left_operand + "' and '" + b.left_operand + "' cannot be compared");
    }
}

std::vector<Grounding> ground_all(const KnowledgeBase& kb, std::span<const Constraint> cs) {
    std::vector<Grounding> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(ground_constraint(kb, c));
    return out;
}

}  // namespace

PairVerdict decide(const KnowledgeBase& kb, std::span<const Grounding> lhs, std::span<const Grounding> rhs, Mode mode) {
    std::vector<const Grounding*> all;
    for (const auto& g : lhs) all.push_back(&g);
    for (const auto& g : rhs) all.push_back(&g);

    if (mode == Mode::Closed) {
        std::vector<Denotation> ds;
        for (const auto* g : all) ds.push_back(*g ? denote(kb, **g) : Denotation::top());
        Denotation d = intersect_all(ds);
        if (d.is_top()) return {Verdict::Unknown, std::nullopt};
        if (d.is_empty()) return {Verdict::Conflict, std::nullopt};
        return {Verdict::Compatible, least_member(kb, d.set())};
    }

    std::vector<detail::SignedConstraint> items;
    bool indeterminate = false;
    for (const auto* g : all) {
        if (*g) {
            items.push_back({&**g, false});
        } else {
            indeterminate = true;
        }
    }
    if (indeterminate && items.empty()) return {Verdict::Unknown, std::nullopt};
    auto r = detail::decide_intersection(kb, items);
    if (r.coverage == detail::Coverage::Never) return {Verdict::Conflict, std::nullopt};
    if (indeterminate || r.coverage == detail::Coverage::Sometimes) return {Verdict::Unknown, std::nullopt};
    std::optional<std::string> witness;
    if (r.witness) witness = kb.name(*r.witness);
    return {Verdict::Compatible, witness};
}

PairVerdict check_pair(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Mode mode) {
    require_same_operand(c1, c2);
    Grounding g1 = ground_constraint(kb, c1);
    Grounding g2 = ground_constraint(kb, c2);
    return decide(kb, std::span(&g1, 1), std::span(&g2, 1), mode);
}

PairVerdict check_group(const KnowledgeBase& kb, std::span<const Constraint> lhs, std::span<const Constraint> rhs,
                        Mode mode) {
    const Constraint* first = !lhs.empty() ? &lhs.front() : (!rhs.empty() ? &rhs.front() : nullptr);
    if (first) {
        for (const auto& c : lhs) require_same_operand(*first, c);
        for (const auto& c : rhs) require_same_operand(*first, c);
    }
    auto gl = ground_all(kb, lhs);
    auto gr = ground_all(kb, rhs);
    return decide(kb, gl, gr, mode);
}

Subsumption subsumes(const KnowledgeBase& kb, const Grounding& c1, const Grounding& c2, Mode mode) {
    if (!c1 || !c2) return Subsumption::Unknown;
    if (mode == Mode::Closed) {
        return denote(kb, *c1).set().subset_of(denote(kb, *c2).set()) ? Subsumption::Confirmed : Subsumption::Refuted;
    }
    // c1 is contained in c2 exactly when c1 and not-c2 share no member.
    const detail::SignedConstraint items[] = {{&*c1, false}, {&*c2, true}};
    auto r = detail::decide_intersection(kb, items);
    if (r.coverage == detail::Coverage::Never) return Subsumption::Confirmed;
    if (r.coverage == detail::Coverage::Always) return Subsumption::Refuted;
    return Subsumption::Unknown;
}

Subsumption subsumes(const KnowledgeBase& kb, const Constraint& c1, const Constraint& c2, Mode mode) {
    require_same_operand(c1, c2);
    return subsumes(kb, ground_constraint(kb, c1), ground_constraint(kb, c2), mode);
}

Verdict compose(Composition mode, std::span<const Verdict> verdicts) {
    if (verdicts.empty()) throw std::invalid_argument("compose needs at least one verdict");
    const auto count = [&](Verdict v) { return std::count(verdicts.begin(), verdicts.end(), v); };
    const auto n = static_cast<std::ptrdiff_t>(verdicts.size());
    const auto compatible = count(Verdict::Compatible);
    const auto conflict = count(Verdict::Conflict);
    switch (mode) {
        case Composition::And:
            if (conflict > 0) return Verdict::Conflict;
            if (compatible == n) return Verdict::Compatible;
            return Verdict::Unknown;
        case Composition::Or:
            if (compatible > 0) return Verdict::Compatible;
            if (conflict == n) return Verdict::Conflict;
            return Verdict::Unknown;
        case Composition::Xone:
            if (compatible == 1 && conflict == n - 1) return Verdict::Compatible;
            if (conflict == n) return Verdict::Conflict;
            return Verdict::Unknown;
    }
    return Verdict::Unknown;
}

CompositeConstraint CompositeConstraint::leaf(Constraint c) {
    CompositeConstraint out;
    out.leaf_ = std::move(c);
    return out;
}

CompositeConstraint CompositeConstraint::node(Composition mode, std::vector<CompositeConstraint> children) {
    if (children.empty()) throw std::invalid_argument(std::string(to_string(mode)) + " node needs at least one child");
    CompositeConstraint out;
    out.mode_ = mode;
    out.children_ = std::move(children);
    return out;
}

std::set<std::string> CompositeConstraint::operands() const {
    std::set<std::string> out;
    for (const auto* c : leaves()) out.insert(c->left_operand);
    return out;
}

std::vector<const Constraint*> CompositeConstraint::leaves() const {
    if (is_leaf()) return {&*leaf_};
    std::vector<const Constraint*> out;
    for (const auto& child : children_) {
        auto sub = child.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

void KbRegistry::bind(std::string operand, std::shared_ptr<const KnowledgeBase> kb) {
    kbs_[std::move(operand)] = std::move(kb);
}

const KnowledgeBase* KbRegistry::find(std::string_view operand) const {
    auto it = kbs_.find(operand);
    return it == kbs_.end() ? nullptr : it->second.get();
}

const KnowledgeBase& KbRegistry::at(std::string_view operand) const {
    if (const auto* kb = find(operand)) return *kb;
    throw Error(ErrorKind::ConfigError, "no knowledge base is bound to operand '" + std::string(operand) + "'");
}

std::vector<std::string> KbRegistry::operands() const {
    std::vector<std::string> out;
    for (const auto& [op, kb] : kbs_) out.push_back(op);
    return out;
}

namespace {

// Normalised tree: a conjunctive group of same-operand constraints, or a node.
struct Part {
    bool is_node = false;
    Composition mode = Composition::And;
    std::vector<Part> children;
    std::string operand;
    std::vector<Constraint> group;
};

Part normalize(const CompositeConstraint& c) {
    Part p;
    if (c.is_leaf()) {
        p.operand = c.constraint().left_operand;
        p.group.push_back(c.constraint());
        return p;
    }
    p.is_node = true;
    p.mode = c.mode();
    for (const auto& child : c.children()) {
        Part n = normalize(child);
        if (p.mode == Composition::And && !n.is_node) {
            auto same = std::find_if(p.children.begin(), p.children.end(),
                                     [&](const Part& q) { return !q.is_node && q.operand == n.operand; });
            if (same != p.children.end()) {
                same->group.insert(same->group.end(), n.group.begin(), n.group.end());
                continue;
            }
        }
        p.children.push_back(std::move(n));
    }
    return p;
}

std::string render(const std::vector<Constraint>& group) {
    std::string out;
    for (std::size_t i = 0; i < group.size(); ++i) out += (i ? " & " : "") + group[i].to_string();
    return out;
}

struct Eval {
    Verdict verdict;
    std::vector<std::size_t> forcing;  // indices into CompositeResult::per_operand
};

bool forces(Composition mode, Verdict result, Verdict child, bool any_unknown) {
    switch (mode) {
        case Composition::And:
            return result == Verdict::Compatible || child == result;
        case Composition::Or:
            return result == Verdict::Conflict || child == result;
        case Composition::Xone:
            if (result != Verdict::Unknown) return true;
            return any_unknown ? child == Verdict::Unknown : child == Verdict::Compatible;
    }
    return false;
}

class CompositeEvaluator {
public:
    CompositeEvaluator(const KbRegistry& kbs, Mode mode, CompositeResult& out) : kbs_(kbs), mode_(mode), out_(out) {}

    std::optional<Eval> eval(const Part& l, const Part& r) {
        if (r.is_node) return fold(r, [&](const Part& child) { return eval(l, child); });
        if (l.is_node) return fold(l, [&](const Part& child) { return eval(child, r); });
        if (l.operand != r.operand) return std::nullopt;
        const auto& kb = kbs_.at(l.operand);
        auto pv = check_group(kb, l.group, r.group, mode_);
        out_.per_operand.push_back({l.operand, pv.verdict, pv.witness, render(l.group), render(r.group), l.group, r.group});
        return Eval{pv.verdict, {out_.per_operand.size() - 1}};
    }

private:
    template <class Step>
    std::optional<Eval> fold(const Part& node, Step step) {
        std::vector<std::optional<Eval>> parts;
        bool paired = false;
        for (const auto& child : node.children) {
            parts.push_back(step(child));
            paired = paired || parts.back().has_value();
        }
        if (!paired) return std::nullopt;
        // A branch that shares no operand with the other side is vacuously
        // satisfiable next to its paired siblings.
        std::vector<Eval> evals;
        for (auto& p : parts) evals.push_back(p ? std::move(*p) : Eval{Verdict::Compatible, {}});
        std::vector<Verdict> vs;
        for (const auto& e : evals) vs.push_back(e.verdict);
        Verdict result = compose(node.mode, vs);
        const bool any_unknown = std::find(vs.begin(), vs.end(), Verdict::Unknown) != vs.end();
        Eval out{result, {}};
        for (const auto& e : evals) {
            if (forces(node.mode, result, e.verdict, any_unknown)) {
                out.forcing.insert(out.forcing.end(), e.forcing.begin(), e.forcing.end());
            }
        }
        return out;
    }

    const KbRegistry& kbs_;
    Mode mode_;
    CompositeResult& out_;
};

void collect_and_groups(const CompositeConstraint& c, std::map<std::string, std::vector<Constraint>>& groups) {
    if (c.is_leaf()) {
        groups[c.constraint().left_operand].push_back(c.constraint());
        return;
    }
    if (c.mode() != Composition::And) {
        throw std::invalid_argument("branch exclusivity needs and-composed branches, found '" +
                                    std::string(to_string(c.mode())) + "'");
    }
    for (const auto& child : c.children()) collect_and_groups(child, groups);
}

}  // namespace

CompositeResult check_composite(const KbRegistry& kbs, const CompositeConstraint& left,
                                const CompositeConstraint& right, Mode mode) {
    CompositeResult result;
    CompositeEvaluator evaluator(kbs, mode, result);
    auto e = evaluator.eval(normalize(left), normalize(right));
    if (!e) {
        result.shared_operands = false;
        result.verdict = Verdict::Unknown;
        return result;
    }
    result.verdict = e->verdict;
    std::sort(e->forcing.begin(), e->forcing.end());
    for (auto i : e->forcing) {
        const auto& op = result.per_operand[i].operand;
        if (std::find(result.blocking.begin(), result.blocking.end(), op) == result.blocking.end()) {
            result.blocking.push_back(op);
        }
    }
    return result;
}

Verdict branch_exclusivity(const KbRegistry& kbs, const CompositeConstraint& branch_j,
                           const CompositeConstraint& branch_k, Mode mode) {
    std::map<std::string, std::vector<Constraint>> gj, gk;
    collect_and_groups(branch_j, gj);
    collect_and_groups(branch_k, gk);
    std::vector<Verdict> per_operand;
    for (const auto& [operand, cs] : gj) {
        auto other = gk.find(operand);
        if (other == gk.end()) continue;
        per_operand.push_back(check_group(kbs.at(operand), cs, other->second, mode).verdict);
    }
    if (per_operand.empty()) return Verdict::Compatible;
    return compose(Composition::And, per_operand);
}

}  // namespace odrl
