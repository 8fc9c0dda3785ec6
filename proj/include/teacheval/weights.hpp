#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teacheval/analytics.hpp"
#include "teacheval/schema.hpp"

namespace teacheval {

enum class WeightStrategy { mean_normalized, manual, uniform };

std::string_view to_string(WeightStrategy s);

using GroupWeights = std::map<int, double>;

// Nonnegative group weights that sum to one. Only constructible through the
// factories below, which normalize.
class WeightVector {
 public:
  // Normalizes `raw`. Throws on negative, non-finite or all-zero input.
  static WeightVector from_raw(const GroupWeights& raw, WeightStrategy strategy,
                               std::string source_note);

  const GroupWeights& weights() const noexcept { return weights_; }
  double weight(int group_id) const;
  WeightStrategy strategy() const noexcept { return strategy_; }
  const std::string& source_note() const noexcept { return source_note_; }
  // Values as supplied before normalization (manual loads keep them for audit).
  const GroupWeights& raw() const noexcept { return raw_; }
  double raw_sum() const;
  double sum() const;

  bool operator==(const WeightVector&) const = default;

 private:
  WeightVector() = default;

  GroupWeights weights_;
  GroupWeights raw_;
  WeightStrategy strategy_ = WeightStrategy::manual;
  std::string source_note_;
};

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kManualSumTolerance = 1e-3;
inline constexpr std::string_view kBuiltinTableName = "paper-table-4";

// Divides each weight by the total. Throws zero_weights when the total is 0.
GroupWeights renormalize(const GroupWeights& weights);
WeightVector renormalize(const WeightVector& weights);

// w_g = mean_g / sum of means, over every entry of `stats`.
WeightVector derive_weights_mean(const StatsSummary& stats);

WeightVector uniform_weights(const QuestionnaireSchema& schema);

// Group weights assigned by the expert panel for the canonical schema (sorted
// table as published, raw sum 1.0004).
GroupWeights builtin_weight_table();

// Manual weights from CSV "group_id,weight" or the builtin name. The raw sum
// must be within kManualSumTolerance of 1; the result is exactly
// renormalized.
WeightVector load_weight_table(std::string_view document_or_builtin,
                               const QuestionnaireSchema& schema);
WeightVector load_weight_table(const GroupWeights& raw, const QuestionnaireSchema& schema,
                               std::string source);

struct WeightComparisonRow {
  int group_id = 0;
  double a = 0.0;
  double b = 0.0;
  double difference = 0.0;  // a - b
  int rank_a = 0;           // competition rank, 1 = largest weight
  int rank_b = 0;
};

struct WeightComparison {
  std::vector<WeightComparisonRow> rows;  // group id order
  double spearman = 0.0;  // NaN when exactly one vector is constant
  std::vector<int> top_a;  // groups sharing rank 1
  std::vector<int> top_b;
  bool same_top() const { return top_a == top_b; }
};

WeightComparison compare_weights(const WeightVector& a, const WeightVector& b);

// Spearman rank correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace teacheval
