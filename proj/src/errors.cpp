#include "awin/errors.hpp"

#include <sstream>

namespace awin {

const char* issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::TooFewVertices: return "TooFewVertices";
    case IssueCode::OffsetOnNonTorus: return "OffsetOnNonTorus";
    case IssueCode::PunctureOnCurve: return "PunctureOnCurve";
    case IssueCode::InvalidSurface: return "InvalidSurface";
    case IssueCode::MismatchedFrames: return "MismatchedFrames";
    case IssueCode::BadEndpoint: return "BadEndpoint";
    case IssueCode::NonGeneric: return "NonGeneric";
    case IssueCode::HitsPuncture: return "HitsPuncture";
    case IssueCode::MismatchedCurves: return "MismatchedCurves";
    case IssueCode::ShrinkNotSupported: return "ShrinkNotSupported";
    case IssueCode::EndpointMismatch: return "EndpointMismatch";
    case IssueCode::PointOnCurve: return "PointOnCurve";
    case IssueCode::NotPeriodic: return "NotPeriodic";
    case IssueCode::NoGenericSampleFound: return "NoGenericSampleFound";
    case IssueCode::ComponentMismatch: return "ComponentMismatch";
    case IssueCode::LengthMismatch: return "LengthMismatch";
    case IssueCode::UnsupportedSurface: return "UnsupportedSurface";
    case IssueCode::NonTransverse: return "NonTransverse";
    case IssueCode::TimeOrder: return "TimeOrder";
    case IssueCode::PoleOnContour: return "PoleOnContour";
    case IssueCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case IssueCode::InvalidFunction: return "InvalidFunction";
    case IssueCode::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

bool ValidationReport::has(IssueCode code) const {
  for (const auto& issue : issues)
    if (issue.code == code) return true;
  return false;
}

void ValidationReport::add(IssueCode code,
                           std::vector<std::pair<std::string, long long>> where,
                           std::string message) {
  issues.push_back(Issue{code, std::move(where), std::move(message)});
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) out << "; ";
    out << issue_code_name(issues[i].code);
    if (!issues[i].where.empty()) {
      out << "(";
      for (size_t k = 0; k < issues[i].where.size(); ++k) {
        if (k) out << ", ";
        out << issues[i].where[k].first << "=" << issues[i].where[k].second;
      }
      out << ")";
    }
    if (!issues[i].message.empty()) out << ": " << issues[i].message;
  }
  return out.str();
}

Error::Error(IssueCode code, std::string message,
             std::vector<std::pair<std::string, long long>> where)
    : std::runtime_error(std::string(issue_code_name(code)) +
                         (message.empty() ? "" : ": " + message)) {
  report_.add(code, std::move(where), std::move(message));
}

Error::Error(ValidationReport report)
    : std::runtime_error(report.summary()), report_(std::move(report)) {}

}  // namespace awin
