#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teacheval {

enum class ErrorCode {
  unreadable_document,
  malformed_scale,
  duplicate_id,
  empty_group,
  group_numbering,
  invalid_field,
  unresolved_target,
  rating_out_of_range,
  unknown_key,
  mixed_mode,
  missing_rating,
  empty_dataset,
  zero_sent,
  count_mismatch,
  negative_weight,
  weight_group_mismatch,
  weight_sum,
  zero_weights,
  invalid_weights,
  invalid_record,
};

std::string_view to_string(ErrorCode code);

// Thrown for invalid inputs. `location` names the offending document
// position (line number, JSON pointer, item id) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string location, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

enum class Severity { error, warning };

struct Finding {
  Severity severity = Severity::error;
  ErrorCode code = ErrorCode::invalid_field;
  std::string location;
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool clean() const noexcept { return findings.empty(); }
  std::size_t error_count() const noexcept;
  std::size_t warning_count() const noexcept;
  std::size_t count(ErrorCode code) const noexcept;
};

}  // namespace teacheval
