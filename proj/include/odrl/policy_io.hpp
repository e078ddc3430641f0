#pragma once

#include "odrl/alignment.hpp"
#include "odrl/kb.hpp"
#include "odrl/runtime.hpp"
#include "odrl/verdict.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace odrl::io {

// All parsers reject unknown fields and report failures as
// Error{ParseError | ValidationError | UnknownConcept | ...} whose message
// starts with the source name and a JSON pointer (or line:column for syntax
// errors).

KbSpec parse_kb_spec(std::string_view text, const std::string& source = "<input>");
// Parses and builds (closure plus structural checks).
KnowledgeBase parse_kb(std::string_view text, const std::string& source = "<input>");
KbSpec parse_kb_spec_file(const std::filesystem::path& path);
KnowledgeBase parse_kb_file(const std::filesystem::path& path);
std::string serialize_kb(const KbSpec& spec);

Constraint parse_constraint(std::string_view text, const std::string& source = "<input>");
std::string serialize_constraint(const Constraint& c);

CompositeConstraint parse_composite(std::string_view text, const std::string& source = "<input>");
CompositeConstraint parse_policy_file(const std::filesystem::path& path);
std::string serialize_composite(const CompositeConstraint& c);

Alignment parse_alignment(std::string_view text, const std::string& source = "<input>");
Alignment parse_alignment_file(const std::filesystem::path& path);
std::string serialize_alignment(const Alignment& a);

ExecutionContext parse_context(std::string_view text, const std::string& source = "<input>");
ExecutionContext parse_context_file(const std::filesystem::path& path);
std::string serialize_context(const ExecutionContext& ctx);

// Directory holding manifest.json ({"operands": {operand: kb-file}}) and the
// KB files it names, resolved relative to the directory.
struct KbDirectory {
    KbRegistry registry;
    std::map<std::string, std::filesystem::path> files;
};
KbDirectory load_kb_dir(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);
// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
std::string read_inline_or_file(const std::string& arg);

// Stable machine-readable reports.
std::string result_json(const CompositeResult& r, Mode mode, int indent = 2);
std::string violations_json(const std::vector<Violation>& vs, int indent = 2);
std::string alignment_report_json(const std::vector<AlignmentViolation>& vs, int indent = 2);

}  // namespace odrl::io
