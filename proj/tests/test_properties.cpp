#include "doctest.h"
#include "support.hpp"

#include "odrl/runtime.hpp"
#include "odrl/verdict.hpp"

#include <functional>
#include <memory>

using namespace odrl;
using namespace odrl::testing;

namespace {

struct World {
    std::vector<std::string> operands;
    std::map<std::string, KbSpec> specs;
    std::map<std::string, std::shared_ptr<const KnowledgeBase>> kbs;
    KbRegistry registry;
};

World random_world(Rng& rng, std::size_t operands, std::size_t max_concepts) {
    World w;
    for (std::size_t i = 0; i < operands; ++i) {
        const std::string op = "o" + std::to_string(i);
        auto spec = random_spec(rng, {.max_concepts = max_concepts, .gamma_p = 1.0});
        auto kb = std::make_shared<const KnowledgeBase>(KnowledgeBase::build(spec));
        w.operands.push_back(op);
        w.specs.emplace(op, std::move(spec));
        w.kbs.emplace(op, kb);
        w.registry.bind(op, kb);
    }
    return w;
}

CompositeConstraint random_tree(Rng& rng, const World& w, int depth) {
    if (depth == 0 || coin(rng, 0.35)) {
        const auto& op = w.operands[pick(rng, w.operands.size())];
        return CompositeConstraint::leaf(random_constraint(rng, w.specs.at(op), 0.0, op));
    }
    const Composition mode = std::array{Composition::And, Composition::Or, Composition::Xone}[pick(rng, 3)];
    std::vector<CompositeConstraint> kids;
    const std::size_t n = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < n; ++i) kids.push_back(random_tree(rng, w, depth - 1));
    return CompositeConstraint::node(mode, std::move(kids));
}

// Context-level satisfaction over the KBs read as complete.
bool holds(const World& w, const std::map<std::string, ConceptIndex>& ctx, const CompositeConstraint& c) {
    if (c.is_leaf()) {
        const auto& k = c.constraint();
        return satisfies_concept(*w.kbs.at(k.left_operand), ctx.at(k.left_operand), k, Mode::Closed);
    }
    std::size_t sat = 0;
    for (const auto& child : c.children()) sat += holds(w, ctx, child);
    switch (c.mode()) {
        case Composition::And: return sat == c.children().size();
        case Composition::Or: return sat > 0;
        case Composition::Xone: return sat == 1;
    }
    return false;
}

bool some_context(const World& w, const CompositeConstraint& l, const CompositeConstraint& r) {
    std::map<std::string, ConceptIndex> ctx;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == w.operands.size()) return holds(w, ctx, l) && holds(w, ctx, r);
        const auto& op = w.operands[i];
        for (ConceptIndex x = 0; x < w.kbs.at(op)->size(); ++x) {
            ctx[op] = x;
            if (go(i + 1)) return true;
        }
        return false;
    };
    return go(0);
}

}  // namespace

TEST_CASE("property: composite CONFLICT admits no satisfying context") {
    Rng rng(0xc0e1);
    std::size_t conflicts = 0, trees = 0;
    for (int iter = 0; iter < 600; ++iter) {
        const auto w = random_world(rng, 1 + pick(rng, 3), 4);
        for (int k = 0; k < 8; ++k) {
            const auto l = random_tree(rng, w, 2), r = random_tree(rng, w, 2);
            for (Mode m : {Mode::Open, Mode::Closed}) {
                const auto res = check_composite(w.registry, l, r, m);
                ++trees;
                if (res.verdict != Verdict::Conflict) continue;
                ++conflicts;
                CHECK_FALSE(some_context(w, l, r));
                CHECK_FALSE(res.blocking.empty());
            }
        }
    }
    CHECK(conflicts > 500);
    MESSAGE(conflicts << " conflicts among " << trees << " composite checks");
}

TEST_CASE("property: composite verdicts refine across modes") {
    Rng rng(0x3e1);
    for (int iter = 0; iter < 400; ++iter) {
        const auto w = random_world(rng, 1 + pick(rng, 2), 5);
        for (int k = 0; k < 6; ++k) {
            const auto l = random_tree(rng, w, 2), r = random_tree(rng, w, 2);
            const auto open = check_composite(w.registry, l, r, Mode::Open);
            const auto closed = check_composite(w.registry, l, r, Mode::Closed);
            REQUIRE(open.per_operand.size() == closed.per_operand.size());
            for (std::size_t i = 0; i < open.per_operand.size(); ++i) {
                CHECK(open.per_operand[i].operand == closed.per_operand[i].operand);
                if (open.per_operand[i].verdict != Verdict::Unknown)
                    CHECK(open.per_operand[i].verdict == closed.per_operand[i].verdict);
            }
            if (open.verdict != Verdict::Unknown) CHECK(open.verdict == closed.verdict);
        }
    }
}

TEST_CASE("property: grouped verdicts equal the completion oracle") {
    Rng rng(0x6e0);
    for (int iter = 0; iter < 200; ++iter) {
        const auto spec = random_spec(rng, {.max_concepts = 4});
        const auto kb = build(spec);
        const auto models = completions(kb);
        for (int k = 0; k < 10; ++k) {
            std::vector<Constraint> lhs{random_constraint(rng, spec)}, rhs{random_constraint(rng, spec)};
            if (coin(rng, 0.5)) lhs.push_back(random_constraint(rng, spec));
            if (coin(rng, 0.5)) rhs.push_back(random_constraint(rng, spec));
            std::vector<Constraint> all = lhs;
            all.insert(all.end(), rhs.begin(), rhs.end());
            CHECK(check_group(kb, lhs, rhs, Mode::Open).verdict == open_oracle(kb, models, all));
            CHECK(check_group(kb, lhs, rhs, Mode::Closed).verdict == closed_oracle(kb, all));
        }
    }
}

TEST_CASE("property: merged and-groups agree with the grouped check") {
    Rng rng(0x3e7);
    for (int iter = 0; iter < 300; ++iter) {
        const auto w = random_world(rng, 1, 5);
        const auto& spec = w.specs.at("o0");
        const Constraint a = random_constraint(rng, spec, 0.0, "o0"), b = random_constraint(rng, spec, 0.0, "o0"),
                         c = random_constraint(rng, spec, 0.0, "o0");
        const auto left = CompositeConstraint::node(Composition::And, {CompositeConstraint::leaf(a), CompositeConstraint::leaf(b)});
        for (Mode m : {Mode::Open, Mode::Closed}) {
            const auto r = check_composite(w.registry, left, CompositeConstraint::leaf(c), m);
            CHECK(r.verdict == check_group(*w.kbs.at("o0"), std::vector{a, b}, std::vector{c}, m).verdict);
        }
    }
}
