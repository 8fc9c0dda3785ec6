#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teacheval/ingest.hpp"
#include "teacheval/schema.hpp"
#include "teacheval/weights.hpp"

namespace teacheval {

struct EvaluateeRecord {
  std::string evaluatee_id;
  std::map<std::string, double> ratings;  // item id -> rating on the scale
};

struct ScoreCard {
  std::string evaluatee_id;
  std::map<int, double> group_scores;
  double overall = 0.0;
  double normalized = 0.0;  // (overall - scale min) / (scale max - scale min)
  int rank = 0;             // 0 until rank() assigns one

  bool operator==(const ScoreCard&) const = default;
};

struct ScoringOptions {
  Completeness policy = Completeness::strict;
  // Optional per-group item weights, in the group's item order. Groups not
  // listed weight their items uniformly.
  std::map<int, std::vector<double>> item_weights;
};

// Convex combination of one group's item ratings. Empty `within_weights`
// means uniform; otherwise they must be nonnegative, match `ratings` in
// length and sum to 1.
double score_group(std::span<const double> ratings, std::span<const double> within_weights = {});

// Two-level weighted sum: group scores from score_group, combined with the
// group weights.
ScoreCard score_overall(const EvaluateeRecord& record, const WeightVector& weights,
                        const QuestionnaireSchema& schema, const ScoringOptions& options = {});

std::vector<ScoreCard> score_all(std::span<const EvaluateeRecord> records,
                                 const WeightVector& weights, const QuestionnaireSchema& schema,
                                 const ScoringOptions& options = {});

// Sorts by overall (descending, ties by evaluatee_id ascending) and assigns
// competition ranks (1, 2, 2, 4).
std::vector<ScoreCard> rank(std::vector<ScoreCard> cards);

// Long-form CSV evaluatee_id,item_id,rating. Records keep first-appearance
// order.
std::vector<EvaluateeRecord> parse_evaluatee_ratings(std::string_view document,
                                                     const QuestionnaireSchema& schema);

}  // namespace teacheval
