// gadtmap: validate GADT programs and analyze mappability of terms.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gadtmap/report.hpp"

namespace {

enum Exit { kOk = 0, kRejected = 1, kInput = 2 };

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int parse_depth(const std::string& text) {
  std::string v = text.rfind("depth=", 0) == 0 ? text.substr(6) : text;
  std::size_t used = 0;
  int d = std::stoi(v, &used);
  if (used != v.size() || d < 1) throw std::invalid_argument(text);
  return d;
}

void print_parse_error(const std::string& where, const gadtmap::ParseError& e) {
  std::cerr << where << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mappability analysis for generalized algebraic data types"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "Check that a program is in the supported class");
  validate->add_option("file", file, "Program file")->required();
  validate->add_flag("--json", json, "Emit JSON");

  std::string term_text;
  std::string spec_text;
  std::string verify_text;
  bool trace = false;
  bool annotate = false;
  bool int_literals = false;
  auto* analyze = app.add_subcommand("analyze", "Compute the most general mappable function");
  analyze->add_option("file", file, "Program file")->required();
  analyze->add_option("--term", term_text, "Term to analyze")->required();
  analyze->add_option("--spec", spec_text, "Specification, e.g. 'List (List b1)'")->required();
  analyze->add_flag("--trace", trace, "Print the per-call trace table and all constraints");
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_flag("--annotate", annotate, "Mark essential structure with '*'");
  analyze->add_option("--verify", verify_text, "Check against the bounded oracle, e.g. depth=3");
  analyze->add_flag("--int-literals", int_literals, "Default numeric literals to Int instead of Nat");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  std::string source;
  if (!read_file(file, source)) {
    std::cerr << "error: cannot read " << file << "\n";
    return kInput;
  }
  gadtmap::Program program;
  try {
    program = gadtmap::parse_program(source);
  } catch (const gadtmap::ParseError& e) {
    print_parse_error(file, e);
    return kInput;
  }
  std::vector<gadtmap::Diagnostic> diags = gadtmap::check_program(program);

  if (validate->parsed()) {
    std::cout << (json ? gadtmap::render_validation_json(program, diags)
                       : gadtmap::render_validation_text(program, diags));
    return diags.empty() ? kOk : kRejected;
  }

  if (!diags.empty()) {
    if (json) {
      nlohmann::ordered_json out;
      out["status"] = "InvalidProgram";
      out["detail"] = gadtmap::ValidationError(diags).what();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "status: InvalidProgram\n" << gadtmap::render_validation_text(program, diags);
    }
    return kRejected;
  }

  gadtmap::AnalyzeOptions opts;
  opts.int_literals = int_literals;
  if (!verify_text.empty()) {
    try {
      opts.verify_depth = parse_depth(verify_text);
    } catch (const std::exception&) {
      std::cerr << "error: --verify expects depth=N with N >= 1\n";
      return kInput;
    }
  }

  gadtmap::ValidatedProgram vp(program);
  gadtmap::Term term;
  gadtmap::Spec spec;
  try {
    term = gadtmap::parse_term(term_text, program);
  } catch (const gadtmap::ParseError& e) {
    print_parse_error("--term", e);
    return kInput;
  }
  try {
    spec = gadtmap::parse_spec(spec_text, program);
  } catch (const gadtmap::ParseError& e) {
    print_parse_error("--spec", e);
    return kInput;
  }
  gadtmap::AnalysisReport report = gadtmap::analyze(vp, term, spec, opts);
  std::cout << (json ? gadtmap::render_json(report)
                     : gadtmap::render_text(report, gadtmap::RenderOptions{trace, annotate}));
  return report.exit_code();
}
