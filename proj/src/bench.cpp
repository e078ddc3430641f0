#include "odrl/bench.hpp"

#include "json_codec.hpp"
#include "odrl/encoder.hpp"
#include "odrl/error.hpp"
#include "odrl/fol.hpp"
#include "odrl/ground.hpp"
#include "odrl/policy_io.hpp"
#include "odrl/runtime.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace odrl::bench {

using io::detail::json;

std::string_view to_string(Category c) {
    switch (c) {
        case Category::OperatorCoverage: return "operator-coverage";
        case Category::Composition: return "composition";
        case Category::Alignment: return "alignment";
        case Category::Runtime: return "runtime";
        case Category::Structural: return "structural";
    }
    return "operator-coverage";
}

std::string_view to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::Pair: return "pair";
        case ProblemKind::Composite: return "composite";
        case ProblemKind::Aligned: return "aligned";
        case ProblemKind::Runtime: return "runtime";
    }
    return "pair";
}

std::optional<Category> parse_category(std::string_view text) {
    for (auto c : {Category::OperatorCoverage, Category::Composition, Category::Alignment, Category::Runtime,
                   Category::Structural}) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

std::optional<ProblemKind> parse_problem_kind(std::string_view text) {
    for (auto k : {ProblemKind::Pair, ProblemKind::Composite, ProblemKind::Aligned, ProblemKind::Runtime}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

bool SuiteReport::ok() const {
    return failed == 0 && epr_failures == 0 && oracle_mismatches == 0 && false_conflicts == 0 &&
           degradation_pair_failures == 0 && runtime_violations == 0;
}

namespace {

using KbCache = std::map<std::string, std::shared_ptr<const KnowledgeBase>>;

std::shared_ptr<const KnowledgeBase> kb_for(const Suite& suite, KbCache& cache, const std::string& id) {
    if (auto it = cache.find(id); it != cache.end()) return it->second;
    auto spec = suite.kbs.find(id);
    if (spec == suite.kbs.end()) throw Error(ErrorKind::ConfigError, "benchmark KB '" + id + "' is not defined");
    auto kb = std::make_shared<const KnowledgeBase>(KnowledgeBase::build(spec->second));
    cache.emplace(id, kb);
    return kb;
}

std::vector<Grounding> ground_all(const KnowledgeBase& kb, std::span<const Constraint> cs) {
    std::vector<Grounding> out;
    for (const auto& c : cs) out.push_back(ground_constraint(kb, c));
    return out;
}

UnitResult run_unit(const KnowledgeBase& kb, const std::string& id, const std::string& label,
                    std::span<const Grounding> lhs, std::span<const Grounding> rhs, std::span<const std::string> names) {
    UnitResult u;
    u.label = label;
    u.engine = decide(kb, lhs, rhs, Mode::Open).verdict;
    const std::string base = label == "pair" ? id : id + "." + label;
    auto compat = emit_grounded(kb, lhs, rhs, names, Polarity::CompatQuery, base);
    auto conflict = emit_grounded(kb, lhs, rhs, names, Polarity::ConflictQuery, base);
    u.epr_ok = fol::epr_check(compat.problem).ok && fol::epr_check(conflict.problem).ok;
    auto oracle = ground_oracle(kb, lhs, rhs);
    u.oracle = oracle.verdict;
    u.compat_sat = oracle.compat == fol::GroundStatus::CounterSatisfiable;
    u.conflict_sat = oracle.conflict == fol::GroundStatus::CounterSatisfiable;
    u.tptp_compat = std::move(compat.tptp_text);
    u.tptp_conflict = std::move(conflict.tptp_text);
    u.smt_compat = std::move(compat.smtlib_text);
    u.smt_conflict = std::move(conflict.smtlib_text);
    return u;
}

std::vector<std::string> labels(std::span<const Constraint> lhs, std::span<const Constraint> rhs) {
    std::vector<std::string> out;
    for (const auto& c : lhs) out.push_back("left " + c.to_string());
    for (const auto& c : rhs) out.push_back("right " + c.to_string());
    return out;
}

void emit_group_unit(ProblemResult& r, const KnowledgeBase& kb, const std::string& label, std::span<const Constraint> lhs,
                     std::span<const Constraint> rhs) {
    auto gl = ground_all(kb, lhs);
    auto gr = ground_all(kb, rhs);
    auto names = labels(lhs, rhs);
    r.units.push_back(run_unit(kb, r.id, label, gl, gr, names));
}

const Constraint& need(const std::optional<Constraint>& c, const BenchmarkProblem& p) {
    if (!c) throw Error(ErrorKind::ConfigError, "benchmark problem '" + p.id + "' lacks a constraint");
    return *c;
}

void run_pair(const Suite& suite, KbCache& cache, const BenchmarkProblem& p, Mode mode, bool emit, ProblemResult& r) {
    auto kb = kb_for(suite, cache, p.kb);
    const auto& c1 = need(p.c1, p);
    const auto& c2 = need(p.c2, p);
    r.verdict = check_pair(*kb, c1, c2, mode).verdict;
    if (p.kind == ProblemKind::Runtime) {
        auto report = exhaustive_soundness_check(*kb, c1, c2, mode);
        r.violating_contexts = report.violating.size();
        r.witness_satisfies = report.witness_satisfies;
    }
    if (emit) emit_group_unit(r, *kb, "pair", std::span(&c1, 1), std::span(&c2, 1));
}

void run_composite(const Suite& suite, KbCache& cache, const BenchmarkProblem& p, Mode mode, bool emit,
                   ProblemResult& r) {
    if (!p.left || !p.right) throw Error(ErrorKind::ConfigError, "benchmark problem '" + p.id + "' lacks a composite");
    KbRegistry registry;
    for (const auto& [operand, kb_id] : p.bindings) registry.bind(operand, kb_for(suite, cache, kb_id));
    auto result = check_composite(registry, *p.left, *p.right, mode);
    r.verdict = result.verdict;
    if (!emit) return;
    std::size_t n = 0;
    for (const auto& ov : result.per_operand) {
        const std::string label = ov.operand + (n ? "-" + std::to_string(n) : std::string());
        emit_group_unit(r, registry.at(ov.operand), label, ov.left_group, ov.right_group);
        ++n;
    }
}

Grounding aligned_grounding(const Alignment& a, const KnowledgeBase& kb_a, const KnowledgeBase& restricted,
                            const Constraint& c) {
    auto aligned = align_constraint(a, kb_a, c);
    if (!aligned) return std::nullopt;
    return ground_constraint(restricted, *aligned);
}

void run_aligned(const Suite& suite, KbCache& cache, const BenchmarkProblem& p, Mode mode, bool emit, ProblemResult& r) {
    auto it = suite.alignments.find(p.alignment);
    if (it == suite.alignments.end()) {
        throw Error(ErrorKind::ConfigError, "benchmark alignment '" + p.alignment + "' is not defined");
    }
    const Alignment& a = it->second;
    auto kb_a = kb_for(suite, cache, p.kb);
    auto kb_b = kb_for(suite, cache, p.target_kb);
    const auto& c1 = need(p.c1, p);
    const auto& c2 = need(p.c2, p);
    auto av = aligned_verdict(a, *kb_a, *kb_b, c1, c2, mode);
    r.verdict = av.aligned.verdict;
    r.source_verdict = av.source.verdict;
    r.false_conflict = av.aligned.verdict == Verdict::Conflict && av.source.verdict != Verdict::Conflict;
    r.degradation = av.source.verdict != Verdict::Unknown && av.aligned.verdict == Verdict::Unknown;
    if (!emit) return;
    const KnowledgeBase restricted = restrict_kb(a, *kb_a, *kb_b);
    const Grounding g1 = aligned_grounding(a, *kb_a, restricted, c1);
    const Grounding g2 = aligned_grounding(a, *kb_a, restricted, c2);
    auto names = labels(std::span(&c1, 1), std::span(&c2, 1));
    r.units.push_back(run_unit(restricted, r.id, "pair", std::span(&g1, 1), std::span(&g2, 1), names));
}

}  // namespace

SuiteReport run_suite(const Suite& suite, Mode mode, bool emit) {
    SuiteReport report;
    report.mode = mode;
    report.emitted = emit;
    KbCache cache;
    for (const auto& p : suite.problems) {
        ProblemResult r;
        r.id = p.id;
        r.kind = p.kind;
        r.expected = p.expected(mode);
        try {
            switch (p.kind) {
                case ProblemKind::Pair:
                case ProblemKind::Runtime: run_pair(suite, cache, p, mode, emit, r); break;
                case ProblemKind::Composite: run_composite(suite, cache, p, mode, emit, r); break;
                case ProblemKind::Aligned: run_aligned(suite, cache, p, mode, emit, r); break;
            }
            r.pass = r.verdict == r.expected;
        } catch (const std::exception& e) {
            r.error = e.what();
            r.pass = false;
        }
        for (const auto& u : r.units) {
            ++report.units;
            report.formats_emitted += 4;
            if (!u.epr_ok) ++report.epr_failures;
            if (u.engine != u.oracle) {
                ++report.oracle_mismatches;
                r.concordant = false;
            }
        }
        if (r.false_conflict) ++report.false_conflicts;
        if (r.degradation) {
            ++report.degradation_pairs;
            if (emit && !std::all_of(r.units.begin(), r.units.end(),
                                     [](const UnitResult& u) { return u.compat_sat && u.conflict_sat; })) {
                ++report.degradation_pair_failures;
            }
        }
        if (r.violating_contexts) report.runtime_violations += *r.violating_contexts;
        if (r.witness_satisfies && !*r.witness_satisfies) ++report.runtime_violations;
        (r.pass ? report.passed : report.failed) += 1;
        report.results.push_back(std::move(r));
    }
    std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return report;
}

namespace {

json result_to_json(const ProblemResult& r) {
    json j;
    j["id"] = r.id;
    j["kind"] = std::string(to_string(r.kind));
    j["verdict"] = std::string(to_string(r.verdict));
    j["expected"] = std::string(to_string(r.expected));
    j["pass"] = r.pass;
    if (r.source_verdict) {
        j["source_verdict"] = std::string(to_string(*r.source_verdict));
        j["false_conflict"] = r.false_conflict;
        j["degradation"] = r.degradation;
    }
    if (r.violating_contexts) j["violating_contexts"] = *r.violating_contexts;
    if (r.witness_satisfies) j["witness_satisfies"] = *r.witness_satisfies;
    if (!r.units.empty()) {
        j["concordant"] = r.concordant;
        j["units"] = json::array();
        for (const auto& u : r.units) {
            json e;
            e["label"] = u.label;
            e["engine"] = std::string(to_string(u.engine));
            e["oracle"] = std::string(to_string(u.oracle));
            e["epr"] = u.epr_ok;
            e["compat_query"] = u.compat_sat ? "CounterSatisfiable" : "Theorem";
            e["conflict_query"] = u.conflict_sat ? "CounterSatisfiable" : "Theorem";
            j["units"].push_back(std::move(e));
        }
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json summary_json(const SuiteReport& r) {
    json s;
    s["mode"] = std::string(to_string(r.mode));
    s["problems"] = r.results.size();
    s["passed"] = r.passed;
    s["failed"] = r.failed;
    if (r.emitted) {
        s["units"] = r.units;
        s["formats_emitted"] = r.formats_emitted;
        s["epr_failures"] = r.epr_failures;
        s["oracle_mismatches"] = r.oracle_mismatches;
    }
    s["false_conflicts"] = r.false_conflicts;
    s["degradation_pairs"] = r.degradation_pairs;
    if (r.emitted) s["degradation_pair_failures"] = r.degradation_pair_failures;
    s["runtime_violations"] = r.runtime_violations;
    s["ok"] = r.ok();
    return s;
}

}  // namespace

std::string report_json(const SuiteReport& r, int indent) {
    json j;
    j["summary"] = summary_json(r);
    j["results"] = json::array();
    for (const auto& p : r.results) j["results"].push_back(result_to_json(p));
    return j.dump(indent);
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream out;
    std::size_t width = 4;
    for (const auto& p : r.results) width = std::max(width, p.id.size());
    for (const auto& p : r.results) {
        out << (p.pass ? "PASS " : "FAIL ") << p.id << std::string(width - p.id.size() + 2, ' ') << to_string(p.verdict);
        if (!p.pass) out << " (expected " << to_string(p.expected) << ")";
        if (p.source_verdict) out << "  source=" << to_string(*p.source_verdict);
        if (!p.concordant) out << "  oracle disagrees";
        if (!p.error.empty()) out << "  error: " << p.error;
        out << '\n';
    }
    out << "mode " << to_string(r.mode) << ": " << r.passed << "/" << r.results.size() << " passed";
    if (r.emitted) {
        out << ", " << r.units << " units, " << r.formats_emitted << " encodings, " << r.epr_failures
            << " EPR failures, " << r.oracle_mismatches << " oracle mismatches";
    }
    out << ", " << r.false_conflicts << " false conflicts, " << r.degradation_pairs << " degradation pairs";
    if (r.emitted) out << " (" << r.degradation_pair_failures << " not sat/sat)";
    out << ", " << r.runtime_violations << " runtime violations\n";
    return out.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ConfigError, "cannot write '" + path.string() + "'");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

json problem_to_json(const BenchmarkProblem& p) {
    json j;
    j["id"] = p.id;
    if (!p.analog.empty()) j["analog"] = p.analog;
    j["category"] = std::string(to_string(p.category));
    j["kind"] = std::string(to_string(p.kind));
    if (!p.description.empty()) j["description"] = p.description;
    if (!p.kb.empty()) j["kb"] = p.kb;
    if (!p.target_kb.empty()) j["target_kb"] = p.target_kb;
    if (!p.alignment.empty()) j["alignment"] = p.alignment;
    if (!p.bindings.empty()) j["bindings"] = p.bindings;
    if (p.c1) j["c1"] = io::detail::constraint_to_json(*p.c1);
    if (p.c2) j["c2"] = io::detail::constraint_to_json(*p.c2);
    if (p.left) j["left"] = io::detail::composite_to_json(*p.left);
    if (p.right) j["right"] = io::detail::composite_to_json(*p.right);
    j["expected"] = {{"open", std::string(to_string(p.expected_open))},
                     {"closed", std::string(to_string(p.expected_closed))}};
    return j;
}

Verdict verdict_field(const json& j, const io::detail::Where& w) {
    auto v = parse_verdict(io::detail::as_string(j, w));
    if (!v) w.fail(ErrorKind::ValidationError, "expected CONFLICT, COMPATIBLE or UNKNOWN");
    return *v;
}

BenchmarkProblem problem_from_json(const json& j, const io::detail::Where& w) {
    using io::detail::as_string;
    using io::detail::field;
    io::detail::only_fields(j, w, {"id", "analog", "category", "kind", "description", "kb", "target_kb", "alignment",
                                   "bindings", "c1", "c2", "left", "right", "expected"});
    BenchmarkProblem p;
    p.id = as_string(field(j, w, "id"), w.at("id"));
    auto opt = [&](const char* key, std::string& out) {
        if (j.contains(key)) out = as_string(j[key], w.at(key));
    };
    opt("analog", p.analog);
    opt("description", p.description);
    opt("kb", p.kb);
    opt("target_kb", p.target_kb);
    opt("alignment", p.alignment);
    auto cat = parse_category(as_string(field(j, w, "category"), w.at("category")));
    if (!cat) w.at("category").fail(ErrorKind::ValidationError, "unknown category");
    p.category = *cat;
    auto kind = parse_problem_kind(as_string(field(j, w, "kind"), w.at("kind")));
    if (!kind) w.at("kind").fail(ErrorKind::ValidationError, "unknown problem kind");
    p.kind = *kind;
    if (j.contains("bindings")) {
        const auto bw = w.at("bindings");
        if (!j["bindings"].is_object()) bw.fail(ErrorKind::ValidationError, "expected an object");
        for (const auto& [operand, kb] : j["bindings"].items()) p.bindings[operand] = as_string(kb, bw.at(operand));
    }
    if (j.contains("c1")) p.c1 = io::detail::constraint_from_json(j["c1"], w.at("c1"));
    if (j.contains("c2")) p.c2 = io::detail::constraint_from_json(j["c2"], w.at("c2"));
    if (j.contains("left")) p.left = io::detail::composite_from_json(j["left"], w.at("left"));
    if (j.contains("right")) p.right = io::detail::composite_from_json(j["right"], w.at("right"));
    const auto ew = w.at("expected");
    const json& e = field(j, w, "expected");
    io::detail::only_fields(e, ew, {"open", "closed"});
    p.expected_open = verdict_field(field(e, ew, "open"), ew.at("open"));
    p.expected_closed = verdict_field(field(e, ew, "closed"), ew.at("closed"));
    return p;
}

}  // namespace

void write_suite(const Suite& suite, const std::filesystem::path& dir) {
    for (const auto& [id, spec] : suite.kbs) write_text(dir / "kbs" / (id + ".json"), io::serialize_kb(spec));
    for (const auto& [name, a] : suite.alignments) {
        write_text(dir / "alignments" / (name + ".json"), io::serialize_alignment(a));
    }
    for (const auto& p : suite.problems) write_text(dir / "problems" / p.id / "problem.json", problem_to_json(p).dump(2));
}

Suite load_suite(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorKind::ConfigError, "'" + dir.string() + "' is not a suite directory");
    Suite suite;
    auto sorted_entries = [](const fs::path& d) {
        std::vector<fs::path> out;
        if (fs::is_directory(d)) {
            for (const auto& e : fs::directory_iterator(d)) out.push_back(e.path());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& path : sorted_entries(dir / "kbs")) {
        if (path.extension() != ".json") continue;
        KbSpec spec = io::parse_kb_spec_file(path);
        suite.kbs[spec.id] = std::move(spec);
    }
    for (const auto& path : sorted_entries(dir / "alignments")) {
        if (path.extension() != ".json") continue;
        suite.alignments[path.stem().string()] = io::parse_alignment_file(path);
    }
    for (const auto& path : sorted_entries(dir / "problems")) {
        const auto file = path / "problem.json";
        if (!fs::is_regular_file(file)) continue;
        const std::string source = file.string();
        json j = io::detail::parse_json(io::read_file(file), source);
        suite.problems.push_back(problem_from_json(j, io::detail::Where{source, ""}));
    }
    std::sort(suite.problems.begin(), suite.problems.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return suite;
}

void write_results(const SuiteReport& report, const std::filesystem::path& dir) {
    for (const auto& r : report.results) {
        const auto pdir = dir / "problems" / r.id;
        for (const auto& u : r.units) {
            const std::string base = u.label == "pair" ? r.id : r.id + "." + u.label;
            write_text(pdir / (base + ".compat.p"), u.tptp_compat);
            write_text(pdir / (base + ".conflict.p"), u.tptp_conflict);
            write_text(pdir / (base + ".compat.smt2"), u.smt_compat);
            write_text(pdir / (base + ".conflict.smt2"), u.smt_conflict);
        }
        write_text(pdir / "result.json", result_to_json(r).dump(2));
    }
    json j;
    j["summary"] = summary_json(report);
    write_text(dir / ("summary." + std::string(to_string(report.mode)) + ".json"), j.dump(2));
}

}  // namespace odrl::bench
