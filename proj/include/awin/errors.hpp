#ifndef AWIN_ERRORS_HPP
#define AWIN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace awin {

enum class IssueCode {
  TooFewVertices,
  OffsetOnNonTorus,
  PunctureOnCurve,
  InvalidSurface,
  MismatchedFrames,
  BadEndpoint,
  NonGeneric,
  HitsPuncture,
  MismatchedCurves,
  ShrinkNotSupported,
  EndpointMismatch,
  PointOnCurve,
  NotPeriodic,
  NoGenericSampleFound,
  ComponentMismatch,
  LengthMismatch,
  UnsupportedSurface,
  NonTransverse,
  TimeOrder,
  PoleOnContour,
  QuadratureNotConverged,
  InvalidFunction,
  BadArgument,
};

const char* issue_code_name(IssueCode code);

/// One violated invariant, with the indices that locate it
/// (frame, slab, triangle, puncture, pole, ... as applicable).
struct Issue {
  IssueCode code;
  std::vector<std::pair<std::string, long long>> where;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  bool has(IssueCode code) const;
  void add(IssueCode code, std::vector<std::pair<std::string, long long>> where = {},
           std::string message = {});
  std::string summary() const;
};

/// Domain error: a precondition or invariant failed. Carries the full
/// report so callers (the CLI in particular) can emit the offending
/// simplex/pole/frame indices.
class Error : public std::runtime_error {
 public:
  Error(IssueCode code, std::string message,
        std::vector<std::pair<std::string, long long>> where = {});
  explicit Error(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Malformed input document (bad JSON, bad schema, bad number literal).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string message) : std::runtime_error(std::move(message)) {}
};

}  // namespace awin

#endif
