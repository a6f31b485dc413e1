#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gadtmap/adm.hpp"
#include "gadtmap/oracle.hpp"
#include "gadtmap/solver.hpp"
#include "gadtmap/wellformed.hpp"

namespace gadtmap {

enum class Status { Mappable, SpecMismatch, IllTyped, Unsatisfiable };

std::string_view to_string(Status s);

struct AnalyzeOptions {
  bool int_literals = false;
  std::optional<int> verify_depth;
};

struct AnalysisReport {
  Status status = Status::Mappable;
  std::string detail;
  Term term;
  Spec spec;
  AdmResult adm;
  SolvedSystem solved;
  GeneralForm form;
  std::optional<VerifyReport> verify;

  /// 0 mappable, 1 rejected, 3 oracle disagreement.
  int exit_code() const;
};

/// Parse, infer, run adm, solve, and optionally verify. Throws ParseError
/// for malformed term or spec text.
AnalysisReport analyze(const ValidatedProgram& vp, std::string_view term_text,
                       std::string_view spec_text, const AnalyzeOptions& opts = {});
AnalysisReport analyze(const ValidatedProgram& vp, const Term& term, const Spec& spec,
                       const AnalyzeOptions& opts = {});

struct RenderOptions {
  bool trace = false;
  bool annotate = false;
};

std::string render_text(const AnalysisReport& r, const RenderOptions& opts);
std::string render_json(const AnalysisReport& r);

std::string render_validation_text(const Program& p, const std::vector<Diagnostic>& diags);
std::string render_validation_json(const Program& p, const std::vector<Diagnostic>& diags);

}  // namespace gadtmap
