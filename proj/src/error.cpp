#include "teacheval/error.hpp"

#include <algorithm>

namespace teacheval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unreadable_document: return "unreadable-document";
    case ErrorCode::malformed_scale: return "malformed-scale";
    case ErrorCode::duplicate_id: return "duplicate-id";
    case ErrorCode::empty_group: return "empty-group";
    case ErrorCode::group_numbering: return "group-numbering";
    case ErrorCode::invalid_field: return "invalid-field";
    case ErrorCode::unresolved_target: return "unresolved-target";
    case ErrorCode::rating_out_of_range: return "rating-out-of-range";
    case ErrorCode::unknown_key: return "unknown-key";
    case ErrorCode::mixed_mode: return "mixed-mode";
    case ErrorCode::missing_rating: return "missing-rating";
    case ErrorCode::empty_dataset: return "empty-dataset";
    case ErrorCode::zero_sent: return "zero-sent";
    case ErrorCode::count_mismatch: return "count-mismatch";
    case ErrorCode::negative_weight: return "negative-weight";
    case ErrorCode::weight_group_mismatch: return "weight-group-mismatch";
    case ErrorCode::weight_sum: return "weight-sum";
    case ErrorCode::zero_weights: return "zero-weights";
    case ErrorCode::invalid_weights: return "invalid-weights";
    case ErrorCode::invalid_record: return "invalid-record";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& location,
                    const std::string& message) {
  std::string out(to_string(code));
  if (!location.empty()) {
    out += " at ";
    out += location;
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string location, const std::string& message)
    : std::runtime_error(compose(code, location, message)),
      code_(code),
      location_(std::move(location)) {}

std::size_t ValidationReport::error_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      findings.begin(), findings.end(),
      [](const Finding& f) { return f.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const noexcept {
  return findings.size() - error_count();
}

std::size_t ValidationReport::count(ErrorCode code) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [code](const Finding& f) { return f.code == code; }));
}

}  // namespace teacheval
