#include "teacheval/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "teacheval/csv.hpp"

namespace teacheval {

namespace {

// A convex combination lies within [min, max] of its operands; clamping only
// removes rounding drift.
double clamp_to_operands(double value, std::span<const double> operands) {
  const auto [lo, hi] = std::minmax_element(operands.begin(), operands.end());
  return std::clamp(value, *lo, *hi);
}

}  // namespace

double score_group(std::span<const double> ratings, std::span<const double> within_weights) {
  if (ratings.empty()) throw Error(ErrorCode::missing_rating, "group", "no item ratings");
  for (double r : ratings)
    if (!std::isfinite(r)) throw Error(ErrorCode::invalid_record, "group", "rating is not finite");

  double value = 0.0;
  if (within_weights.empty()) {
    for (double r : ratings) value += r;
    value /= static_cast<double>(ratings.size());
  } else {
    if (within_weights.size() != ratings.size())
      throw Error(ErrorCode::invalid_weights, "group",
                  "item weights cover " + std::to_string(within_weights.size()) + " of " +
                      std::to_string(ratings.size()) + " items");
    double sum = 0.0;
    for (double w : within_weights) {
      if (!std::isfinite(w) || w < 0.0)
        throw Error(ErrorCode::invalid_weights, "group", "item weights must be nonnegative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > kNormTolerance)
      throw Error(ErrorCode::invalid_weights, "group", "item weights must sum to 1");
    for (std::size_t i = 0; i < ratings.size(); ++i) value += within_weights[i] * ratings[i];
  }
  return clamp_to_operands(value, ratings);
}

ScoreCard score_overall(const EvaluateeRecord& record, const WeightVector& weights,
                        const QuestionnaireSchema& schema, const ScoringOptions& options) {
  {
    std::set<int> schema_groups, weight_groups;
    for (const auto& g : schema.groups) schema_groups.insert(g.group_id);
    for (const auto& [g, w] : weights.weights()) weight_groups.insert(g);
    if (schema_groups != weight_groups)
      throw Error(ErrorCode::weight_group_mismatch, "weights",
                  "weight vector groups differ from schema groups");
  }

  const std::string where = "evaluatee " + record.evaluatee_id;
  const double lo = schema.scale.min_level();
  const double hi = schema.scale.max_level();
  for (const auto& [item, rating] : record.ratings) {
    if (!schema.find_item(item))
      throw Error(ErrorCode::unknown_key, where, "unknown item id '" + item + "'");
    if (!std::isfinite(rating) || rating < lo || rating > hi)
      throw Error(ErrorCode::rating_out_of_range, where,
                  "rating for '" + item + "' outside the scale");
  }

  ScoreCard card;
  card.evaluatee_id = record.evaluatee_id;
  std::vector<double> group_values;
  double overall = 0.0;
  for (const auto& g : schema.groups) {
    const auto wit = options.item_weights.find(g.group_id);
    const bool custom = wit != options.item_weights.end();
    if (custom && wit->second.size() != g.items.size())
      throw Error(ErrorCode::invalid_weights, "group " + std::to_string(g.group_id),
                  "item weights must cover every item of the group");

    std::vector<double> ratings, item_w;
    for (std::size_t i = 0; i < g.items.size(); ++i) {
      const auto it = record.ratings.find(g.items[i].item_id);
      if (it == record.ratings.end()) {
        if (options.policy == Completeness::strict)
          throw Error(ErrorCode::missing_rating, where, "no rating for item " + g.items[i].item_id);
        continue;
      }
      ratings.push_back(it->second);
      if (custom) item_w.push_back(wit->second[i]);
    }
    if (ratings.empty())
      throw Error(ErrorCode::missing_rating, where,
                  "no rated items in group " + std::to_string(g.group_id));
    if (custom && ratings.size() < g.items.size()) {
      // Lenient gaps: spread the remaining item weights over rated items.
      double s = 0.0;
      for (double w : item_w) s += w;
      if (!(s > 0.0))
        throw Error(ErrorCode::invalid_weights, "group " + std::to_string(g.group_id),
                    "rated items carry zero weight");
      for (double& w : item_w) w /= s;
    }

    const double score = score_group(ratings, item_w);
    card.group_scores.emplace(g.group_id, score);
    group_values.push_back(score);
    overall += weights.weight(g.group_id) * score;
  }
  card.overall = clamp_to_operands(overall, group_values);
  card.normalized = hi > lo ? (card.overall - lo) / (hi - lo) : 0.0;
  return card;
}

std::vector<ScoreCard> score_all(std::span<const EvaluateeRecord> records,
                                 const WeightVector& weights, const QuestionnaireSchema& schema,
                                 const ScoringOptions& options) {
  std::vector<ScoreCard> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(score_overall(r, weights, schema, options));
  return out;
}

std::vector<ScoreCard> rank(std::vector<ScoreCard> cards) {
  std::set<std::string> ids;
  for (const auto& c : cards)
    if (!ids.insert(c.evaluatee_id).second)
      throw Error(ErrorCode::duplicate_id, "evaluatee " + c.evaluatee_id,
                  "evaluatee appears more than once");

  std::sort(cards.begin(), cards.end(), [](const ScoreCard& a, const ScoreCard& b) {
    if (a.overall != b.overall) return a.overall > b.overall;
    return a.evaluatee_id < b.evaluatee_id;
  });
  for (std::size_t i = 0; i < cards.size(); ++i)
    cards[i].rank = (i > 0 && cards[i].overall == cards[i - 1].overall)
                        ? cards[i - 1].rank
                        : static_cast<int>(i) + 1;
  return cards;
}

std::vector<EvaluateeRecord> parse_evaluatee_ratings(std::string_view document,
                                                     const QuestionnaireSchema& schema) {
  const auto rows =
      csv::parse_with_header(document, {"evaluatee_id", "item_id", "rating"}, "ratings");
  std::vector<EvaluateeRecord> out;
  std::map<std::string, std::size_t> index;
  for (const auto& row : rows) {
    const std::string where = "ratings line " + std::to_string(row.line);
    const auto& id = row.fields[0];
    const auto& item = row.fields[1];
    const auto& text = row.fields[2];
    if (id.empty()) throw Error(ErrorCode::invalid_field, where, "missing evaluatee_id");
    if (!schema.find_item(item))
      throw Error(ErrorCode::unknown_key, where, "unknown item id '" + item + "'");
    double rating = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), rating);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(rating))
      throw Error(ErrorCode::rating_out_of_range, where, "rating '" + text + "' is not a number");
    if (rating < schema.scale.min_level() || rating > schema.scale.max_level())
      throw Error(ErrorCode::rating_out_of_range, where,
                  "rating " + text + " for '" + item + "' outside the scale");
    auto [it, fresh] = index.try_emplace(id, out.size());
    if (fresh) out.push_back({id, {}});
    if (!out[it->second].ratings.emplace(item, rating).second)
      throw Error(ErrorCode::duplicate_id, where, "'" + id + "' rates '" + item + "' twice");
  }
  return out;
}

}  // namespace teacheval
