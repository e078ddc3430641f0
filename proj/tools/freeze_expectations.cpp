// Regenerates src/bench_expected.inc. Open-mode expectations come from the
// ground-instantiation oracle, closed-mode ones from plain set intersection;
// neither path goes through the verdict engine.

#include "odrl/alignment.hpp"
#include "odrl/bench.hpp"
#include "odrl/encoder.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>

using namespace odrl;

namespace {

bool in_set(const KnowledgeBase& kb, ConceptIndex x, const GroundedConstraint& g) {
    auto below = [&](ConceptIndex t) { return kb.leq(x, t); };
    const auto& ts = g.targets;
    switch (g.op) {
        case Operator::Eq: return x == ts[0];
        case Operator::Neq: return x != ts[0];
        case Operator::IsA:
        case Operator::IsPartOf: return below(ts[0]);
        case Operator::HasPart: return kb.leq(ts[0], x);
        case Operator::IsAnyOf: return std::any_of(ts.begin(), ts.end(), below);
        case Operator::IsAllOf: return std::all_of(ts.begin(), ts.end(), below);
        case Operator::IsNoneOf: return std::none_of(ts.begin(), ts.end(), below);
    }
    return false;
}

Verdict closed_oracle(const KnowledgeBase& kb, const std::vector<Grounding>& gs) {
    bool top = false;
    bool common = false;
    for (ConceptIndex x = 0; x < kb.size(); ++x) {
        bool all = true;
        for (const auto& g : gs) {
            if (g && !in_set(kb, x, *g)) all = false;
        }
        common = common || all;
    }
    for (const auto& g : gs) top = top || !g;
    if (!common) return Verdict::Conflict;
    return top ? Verdict::Unknown : Verdict::Compatible;
}

Verdict unit(const KnowledgeBase& kb, const std::vector<Grounding>& lhs, const std::vector<Grounding>& rhs, Mode mode) {
    if (mode == Mode::Open) return ground_oracle(kb, lhs, rhs).verdict;
    std::vector<Grounding> all = lhs;
    all.insert(all.end(), rhs.begin(), rhs.end());
    return closed_oracle(kb, all);
}

std::vector<Grounding> ground(const KnowledgeBase& kb, const std::vector<Constraint>& cs) {
    std::vector<Grounding> out;
    for (const auto& c : cs) out.push_back(ground_constraint(kb, c));
    return out;
}

Verdict fold(Composition mode, const std::vector<Verdict>& vs) {
    auto count = [&](Verdict v) { return std::count(vs.begin(), vs.end(), v); };
    const auto n = static_cast<long>(vs.size());
    switch (mode) {
        case Composition::And:
            if (count(Verdict::Conflict)) return Verdict::Conflict;
            return count(Verdict::Compatible) == n ? Verdict::Compatible : Verdict::Unknown;
        case Composition::Or:
            if (count(Verdict::Compatible)) return Verdict::Compatible;
            return count(Verdict::Conflict) == n ? Verdict::Conflict : Verdict::Unknown;
        case Composition::Xone:
            if (count(Verdict::Conflict) == n) return Verdict::Conflict;
            if (count(Verdict::Compatible) == 1 && count(Verdict::Conflict) == n - 1) return Verdict::Compatible;
            return Verdict::Unknown;
    }
    return Verdict::Unknown;
}

// Tree with same-operand leaves under `and` merged into one group.
struct Node {
    std::optional<Composition> mode;
    std::vector<Node> kids;
    std::vector<Constraint> group;
};

Node merge(const CompositeConstraint& c) {
    if (c.is_leaf()) return Node{std::nullopt, {}, {c.constraint()}};
    Node n{c.mode(), {}, {}};
    std::map<std::string, std::size_t> slot;
    for (const auto& child : c.children()) {
        Node k = merge(child);
        if (c.mode() == Composition::And && !k.mode) {
            const auto& op = k.group.front().left_operand;
            if (auto it = slot.find(op); it != slot.end()) {
                auto& g = n.kids[it->second].group;
                g.insert(g.end(), k.group.begin(), k.group.end());
                continue;
            }
            slot[op] = n.kids.size();
        }
        n.kids.push_back(std::move(k));
    }
    return n;
}

struct Bound {
    const std::map<std::string, std::shared_ptr<const KnowledgeBase>>& kbs;
    Mode mode;

    std::optional<Verdict> eval(const Node& l, const Node& r) const {
        if (r.mode) return over(*r.mode, r.kids, [&](const Node& k) { return eval(l, k); });
        if (l.mode) return over(*l.mode, l.kids, [&](const Node& k) { return eval(k, r); });
        const auto& op = l.group.front().left_operand;
        if (op != r.group.front().left_operand) return std::nullopt;
        const auto& kb = *kbs.at(op);
        return unit(kb, ground(kb, l.group), ground(kb, r.group), mode);
    }

    template <class F>
    std::optional<Verdict> over(Composition m, const std::vector<Node>& kids, F f) const {
        std::vector<Verdict> vs;
        std::size_t paired = 0;
        for (const auto& k : kids) {
            auto v = f(k);
            paired += v.has_value();
            vs.push_back(v.value_or(Verdict::Compatible));
        }
        if (paired == 0) return std::nullopt;
        return fold(m, vs);
    }
};

}  // namespace

int main(int argc, char** argv) {
    const bench::Suite suite = bench::builtin_definitions();
    std::map<std::string, std::shared_ptr<const KnowledgeBase>> kbs;
    for (const auto& [id, spec] : suite.kbs) kbs[id] = std::make_shared<const KnowledgeBase>(KnowledgeBase::build(spec));

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (argc > 1) {
        file.open(argv[1]);
        out = &file;
    }
    *out << "// Generated by freeze_expectations; do not edit.\n";
    for (const auto& p : suite.problems) {
        Verdict v[2] = {Verdict::Unknown, Verdict::Unknown};
        for (Mode mode : {Mode::Open, Mode::Closed}) {
            Verdict& slot = v[mode == Mode::Open ? 0 : 1];
            switch (p.kind) {
                case bench::ProblemKind::Pair:
                case bench::ProblemKind::Runtime: {
                    const auto& kb = *kbs.at(p.kb);
                    slot = unit(kb, ground(kb, {*p.c1}), ground(kb, {*p.c2}), mode);
                    break;
                }
                case bench::ProblemKind::Composite: {
                    std::map<std::string, std::shared_ptr<const KnowledgeBase>> bound;
                    for (const auto& [operand, id] : p.bindings) bound[operand] = kbs.at(id);
                    slot = Bound{bound, mode}.eval(merge(*p.left), merge(*p.right)).value_or(Verdict::Unknown);
                    break;
                }
                case bench::ProblemKind::Aligned: {
                    const auto& a = suite.alignments.at(p.alignment);
                    const auto& ka = *kbs.at(p.kb);
                    const KnowledgeBase restricted = restrict_kb(a, ka, *kbs.at(p.target_kb));
                    auto g = [&](const Constraint& c) -> Grounding {
                        auto aligned = align_constraint(a, ka, c);
                        return aligned ? ground_constraint(restricted, *aligned) : std::nullopt;
                    };
                    slot = unit(restricted, {g(*p.c1)}, {g(*p.c2)}, mode);
                    break;
                }
            }
        }
        *out << "    {\"" << p.id << "\", " << to_string(v[0]) << ", " << to_string(v[1]) << "},\n";
    }
    return 0;
}
