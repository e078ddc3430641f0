#include "odrl/alignment.hpp"
#include "odrl/bench.hpp"
#include "odrl/encoder.hpp"
#include "odrl/error.hpp"
#include "odrl/fol.hpp"
#include "odrl/policy_io.hpp"
#include "odrl/runtime.hpp"
#include "odrl/verdict.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace fs = std::filesystem;
using namespace odrl;

namespace {

constexpr int kInputError = 2;

// Verdicts are data; only input problems change the exit code.
struct Options {
    std::string kb, kbdir, left, right, constraint, context, alignment, source, target, out, suite, id = "p";
    std::string mode = "open", format = "tptp", polarity = "compat", prover, write_suite;
    bool json = false, allow_indeterminate = false, no_emit = false;
};

Mode mode_of(const std::string& text) {
    auto m = parse_mode(text);
    if (!m) throw Error(ErrorKind::ConfigError, "unknown mode '" + text + "' (expected open or closed)");
    return *m;
}

CompositeConstraint composite_arg(const std::string& arg, const char* what) {
    return io::parse_composite(io::read_inline_or_file(arg), arg.starts_with("{") || arg.starts_with("[") ? what : arg);
}

Constraint constraint_arg(const std::string& arg, const char* what) {
    return io::parse_constraint(io::read_inline_or_file(arg), arg.starts_with("{") ? what : arg);
}

std::string render_set(const KnowledgeBase& kb, const Denotation& d) {
    if (d.is_top()) return "TOP";
    std::vector<std::string> names;
    for (auto x : d.set().members()) names.push_back(kb.name(x));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out + "}";
}

void print_result(const CompositeResult& r, Mode mode, bool json) {
    if (json) {
        std::cout << io::result_json(r, mode) << '\n';
        return;
    }
    std::cout << to_string(r.verdict) << '\n';
    for (const auto& ov : r.per_operand) {
        std::cout << "  " << ov.operand << ": " << to_string(ov.verdict);
        if (ov.witness) std::cout << " (witness " << *ov.witness << ")";
        std::cout << "\n    left:  " << ov.left << "\n    right: " << ov.right << '\n';
    }
    if (!r.shared_operands) std::cout << "  no shared operand\n";
    if (!r.blocking.empty()) {
        std::cout << "  blocking:";
        for (const auto& b : r.blocking) std::cout << ' ' << b;
        std::cout << '\n';
    }
}

int validate_kb_cmd(const Options& o) {
    KbSpec spec = io::parse_kb_spec_file(o.kb);
    auto violations = validate_kb(KnowledgeBase::close_unchecked(spec));
    if (spec.domain == Domain::Nominal) {
        for (const auto& [x, y] : spec.leq) {
            Violation v{ViolationKind::NominalOrder, x, y};
            if (x != y && std::find(violations.begin(), violations.end(), v) == violations.end()) violations.push_back(v);
        }
    }
    if (o.json) {
        std::cout << io::violations_json(violations) << '\n';
    } else if (violations.empty()) {
        std::cout << "valid: " << spec.id << " (" << spec.concepts.size() << " concepts)\n";
    } else {
        std::cout << "invalid: " << spec.id << '\n';
        for (const auto& v : violations) std::cout << "  " << v.to_string() << '\n';
    }
    return violations.empty() ? 0 : kInputError;
}

int denote_cmd(const Options& o) {
    const KnowledgeBase kb = io::parse_kb_file(o.kb);
    const Constraint c = constraint_arg(o.constraint, "--constraint");
    c.check_well_formed();
    const Denotation d = denote(kb, c);
    if (mode_of(o.mode) == Mode::Closed || d.is_top()) {
        std::cout << render_set(kb, d) << '\n';
        return 0;
    }
    auto g = ground_constraint(kb, c);
    std::vector<std::string> certain, possible;
    for (const auto& name : kb.concepts()) {
        Truth t = member3(kb, kb.require(name), *g);
        if (t == Truth::True) certain.push_back(name);
        if (t == Truth::Unknown) possible.push_back(name);
    }
    auto list = [](const std::vector<std::string>& xs) {
        std::string out = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
        return out + "}";
    };
    std::sort(certain.begin(), certain.end());
    std::sort(possible.begin(), possible.end());
    std::cout << "member:    " << list(certain) << "\nundecided: " << list(possible) << '\n';
    return 0;
}

int check_cmd(const Options& o) {
    auto kb = std::make_shared<const KnowledgeBase>(io::parse_kb_file(o.kb));
    const auto left = composite_arg(o.left, "--left");
    const auto right = composite_arg(o.right, "--right");
    KbRegistry registry;
    for (const auto& op : left.operands()) registry.bind(op, kb);
    for (const auto& op : right.operands()) registry.bind(op, kb);
    const Mode mode = mode_of(o.mode);
    print_result(check_composite(registry, left, right, mode), mode, o.json);
    return 0;
}

int check_policy_cmd(const Options& o) {
    const auto dir = io::load_kb_dir(o.kbdir);
    const Mode mode = mode_of(o.mode);
    print_result(check_composite(dir.registry, composite_arg(o.left, "--left"), composite_arg(o.right, "--right"), mode),
                 mode, o.json);
    return 0;
}

int align_validate_cmd(const Options& o) {
    const Alignment a = io::parse_alignment_file(o.alignment);
    const KnowledgeBase ka = io::parse_kb_file(o.source);
    const KnowledgeBase kb = io::parse_kb_file(o.target);
    auto violations = validate_alignment(a, ka, kb);
    if (o.json) {
        std::cout << io::alignment_report_json(violations) << '\n';
    } else if (violations.empty()) {
        std::cout << "valid: " << a.source_kb_id << " -> " << a.target_kb_id << " (" << a.mapping.size() << " pairs)\n";
    } else {
        std::cout << "invalid: " << a.source_kb_id << " -> " << a.target_kb_id << '\n';
        for (const auto& v : violations) std::cout << "  " << v.to_string() << '\n';
    }
    return violations.empty() ? 0 : kInputError;
}

int align_check_cmd(const Options& o) {
    const Alignment a = io::parse_alignment_file(o.alignment);
    const KnowledgeBase ka = io::parse_kb_file(o.source);
    const KnowledgeBase kb = io::parse_kb_file(o.target);
    const Constraint c1 = constraint_arg(o.left, "--left");
    const Constraint c2 = constraint_arg(o.right, "--right");
    const Mode mode = mode_of(o.mode);
    const auto av = aligned_verdict(a, ka, kb, c1, c2, mode);
    auto show = [](const PairVerdict& pv) {
        std::string s(to_string(pv.verdict));
        if (pv.witness) s += " (witness " + *pv.witness + ")";
        return s;
    };
    if (o.json) {
        std::ostringstream j;
        auto field = [](const PairVerdict& pv) {
            std::string s = "{\"verdict\": \"" + std::string(to_string(pv.verdict)) + "\", \"witness\": ";
            return s + (pv.witness ? "\"" + *pv.witness + "\"" : "null") + "}";
        };
        j << "{\"mode\": \"" << to_string(mode) << "\", \"source\": " << field(av.source)
          << ", \"aligned\": " << field(av.aligned) << "}";
        std::cout << j.str() << '\n';
    } else {
        std::cout << "source:  " << show(av.source) << "\naligned: " << show(av.aligned) << '\n';
    }
    return 0;
}

int satisfies_cmd(const Options& o) {
    const auto dir = io::load_kb_dir(o.kbdir);
    const auto ctx = io::parse_context(io::read_inline_or_file(o.context), o.context);
    const Constraint c = constraint_arg(o.constraint, "--constraint");
    const bool ok = satisfies(dir.registry, ctx, c, mode_of(o.mode));
    std::cout << (ok ? "true" : "false") << '\n';
    return 0;
}

int encode_cmd(const Options& o) {
    const KnowledgeBase kb = io::parse_kb_file(o.kb);
    const Constraint c1 = constraint_arg(o.left, "--left");
    const Constraint c2 = constraint_arg(o.right, "--right");
    auto polarity = parse_polarity(o.polarity);
    if (!polarity) throw Error(ErrorKind::ConfigError, "unknown polarity '" + o.polarity + "'");
    if (o.format != "tptp" && o.format != "smt2") throw Error(ErrorKind::ConfigError, "unknown format '" + o.format + "'");
    EmitOptions opts;
    opts.allow_indeterminate = o.allow_indeterminate;
    const auto ep = emit_problem(kb, c1, c2, *polarity, o.id, opts);
    const bool tptp = o.format == "tptp";
    const std::string& text = tptp ? ep.tptp_text : ep.smtlib_text;
    fs::path file;
    if (o.out.empty()) {
        std::cout << text;
    } else {
        fs::create_directories(o.out);
        file = fs::path(o.out) / (o.id + (tptp ? ".p" : ".smt2"));
        std::ofstream(file, std::ios::binary) << text;
        std::cout << file.string() << '\n';
    }
    auto epr = fol::epr_check(ep.problem);
    std::cerr << "expected " << to_string(ep.expected) << ", engine " << to_string(ep.engine_verdict) << ", EPR "
              << (epr.ok ? "ok" : "violated") << '\n';
    if (!o.prover.empty()) {
        if (file.empty()) throw Error(ErrorKind::ConfigError, "--prover needs --out");
        auto run = run_prover(o.prover, file.string());
        if (!run.token) throw Error(ErrorKind::UnrecognizedToken, "prover printed no status line");
        std::cout << *run.token << " -> " << to_string(interpret_result(*run.token, *polarity)) << '\n';
    }
    return 0;
}

int bench_run_cmd(const Options& o) {
    const bench::Suite suite = o.suite.empty() ? bench::build_builtin_suite() : bench::load_suite(o.suite);
    if (!o.write_suite.empty()) bench::write_suite(suite, o.write_suite);
    const auto report = bench::run_suite(suite, mode_of(o.mode), !o.no_emit);
    if (!o.out.empty()) bench::write_results(report, o.out);
    std::cout << (o.json ? bench::report_json(report) + "\n" : bench::report_text(report));
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ODRL constraint conflict detection over finite knowledge bases", "odrlc"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto mode_opt = [&](CLI::App* sub) { sub->add_option("--mode", o.mode, "open | closed")->capture_default_str(); };
    auto on = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&, fn] { action = [&, fn] { return fn(o); }; }); };

    auto* vk = app.add_subcommand("validate-kb", "Report structural axiom violations of a KB file");
    vk->add_option("kb", o.kb, "KB JSON file")->required();
    vk->add_flag("--json", o.json);
    on(vk, validate_kb_cmd);

    auto* dn = app.add_subcommand("denote", "Print the denotation of a constraint");
    dn->add_option("--kb", o.kb)->required();
    dn->add_option("--constraint", o.constraint, "inline JSON or file")->required();
    mode_opt(dn);
    on(dn, denote_cmd);

    auto* ck = app.add_subcommand("check", "Check two constraints (or composites) over one KB");
    ck->add_option("--kb", o.kb)->required();
    ck->add_option("--left", o.left)->required();
    ck->add_option("--right", o.right)->required();
    mode_opt(ck);
    ck->add_flag("--json", o.json);
    on(ck, check_cmd);

    auto* cp = app.add_subcommand("check-policy", "Check two composite rules against a KB directory");
    cp->add_option("--kbdir", o.kbdir, "directory with manifest.json")->required();
    cp->add_option("--left", o.left)->required();
    cp->add_option("--right", o.right)->required();
    mode_opt(cp);
    cp->add_flag("--json", o.json);
    on(cp, check_policy_cmd);

    auto* av = app.add_subcommand("align-validate", "Validate an alignment between two KBs");
    av->add_option("--alignment", o.alignment)->required();
    av->add_option("--source", o.source)->required();
    av->add_option("--target", o.target)->required();
    av->add_flag("--json", o.json);
    on(av, align_validate_cmd);

    auto* ac = app.add_subcommand("align-check", "Verdict before and after alignment");
    ac->add_option("--alignment", o.alignment)->required();
    ac->add_option("--source", o.source)->required();
    ac->add_option("--target", o.target)->required();
    ac->add_option("--left", o.left)->required();
    ac->add_option("--right", o.right)->required();
    mode_opt(ac);
    ac->add_flag("--json", o.json);
    on(ac, align_check_cmd);

    auto* sa = app.add_subcommand("satisfies", "Evaluate a constraint against an execution context");
    sa->add_option("--kbdir", o.kbdir)->required();
    sa->add_option("--context", o.context)->required();
    sa->add_option("--constraint", o.constraint)->required();
    mode_opt(sa);
    on(sa, satisfies_cmd);

    auto* en = app.add_subcommand("encode", "Emit a TPTP or SMT-LIB2 problem");
    en->add_option("--kb", o.kb)->required();
    en->add_option("--left", o.left)->required();
    en->add_option("--right", o.right)->required();
    en->add_option("--format", o.format, "tptp | smt2")->capture_default_str();
    en->add_option("--polarity", o.polarity, "compat | conflict")->capture_default_str();
    en->add_option("--out", o.out, "output directory (default: stdout)");
    en->add_option("--id", o.id, "problem id")->capture_default_str();
    en->add_flag("--allow-indeterminate", o.allow_indeterminate, "encode ungrounded constraints as free predicates");
    en->add_option("--prover", o.prover, "run `<cmd> <file>` and interpret its status line");
    on(en, encode_cmd);

    auto* bn = app.add_subcommand("bench", "Built-in benchmark suite");
    bn->require_subcommand(1);
    auto* br = bn->add_subcommand("run", "Run the suite and report concordance");
    br->add_option("--suite", o.suite, "suite directory (default: built-in)");
    br->add_flag("--json", o.json);
    mode_opt(br);
    br->add_flag("--no-emit", o.no_emit, "skip encoding and the ground oracle");
    br->add_option("--out", o.out, "write emitted problems and results here");
    br->add_option("--write-suite", o.write_suite, "export the suite definition here");
    on(br, bench_run_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    try {
        return action ? action() : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
