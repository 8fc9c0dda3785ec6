#include "teacheval/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "teacheval/csv.hpp"

namespace teacheval {

std::string_view to_string(WeightStrategy s) {
  switch (s) {
    case WeightStrategy::mean_normalized: return "mean_normalized";
    case WeightStrategy::manual: return "manual";
    case WeightStrategy::uniform: return "uniform";
  }
  return "?";
}

namespace {

double total(const GroupWeights& w) {
  double s = 0.0;
  for (const auto& [g, v] : w) s += v;
  return s;
}

void check_entries(const GroupWeights& w) {
  if (w.empty()) throw Error(ErrorCode::zero_weights, "weights", "no groups");
  for (const auto& [g, v] : w) {
    if (!std::isfinite(v))
      throw Error(ErrorCode::invalid_weights, "group " + std::to_string(g), "weight is not finite");
    if (v < 0.0)
      throw Error(ErrorCode::negative_weight, "group " + std::to_string(g),
                  "weight is negative");
  }
}

std::string format_weight(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

WeightVector WeightVector::from_raw(const GroupWeights& raw, WeightStrategy strategy,
                                    std::string source_note) {
  WeightVector out;
  out.weights_ = renormalize(raw);
  out.raw_ = raw;
  out.strategy_ = strategy;
  out.source_note_ = std::move(source_note);
  return out;
}

double WeightVector::weight(int group_id) const {
  const auto it = weights_.find(group_id);
  return it == weights_.end() ? 0.0 : it->second;
}

double WeightVector::raw_sum() const { return total(raw_); }
double WeightVector::sum() const { return total(weights_); }

GroupWeights renormalize(const GroupWeights& weights) {
  check_entries(weights);
  const double s = total(weights);
  if (!(s > 0.0)) throw Error(ErrorCode::zero_weights, "weights", "weights sum to zero");
  GroupWeights out;
  for (const auto& [g, v] : weights) out.emplace(g, v / s);
  return out;
}

WeightVector renormalize(const WeightVector& weights) {
  return WeightVector::from_raw(weights.weights(), weights.strategy(), weights.source_note());
}

WeightVector derive_weights_mean(const StatsSummary& stats) {
  if (stats.entries.empty())
    throw Error(ErrorCode::weight_group_mismatch, "stats", "no group entries");
  GroupWeights means;
  for (const auto& e : stats.entries) {
    int gid = 0;
    const auto res = std::from_chars(e.key.data(), e.key.data() + e.key.size(), gid);
    if (res.ec != std::errc{} || res.ptr != e.key.data() + e.key.size())
      throw Error(ErrorCode::weight_group_mismatch, "entry " + e.key,
                  "mean weights need group-level statistics");
    if (e.n == 0 || !std::isfinite(e.mean))
      throw Error(ErrorCode::weight_group_mismatch, "group " + e.key, "group has no ratings");
    if (!(e.mean > 0.0))
      throw Error(ErrorCode::invalid_weights, "group " + e.key, "group mean is not positive");
    if (!means.emplace(gid, e.mean).second)
      throw Error(ErrorCode::duplicate_id, "group " + e.key, "group listed twice");
  }
  return WeightVector::from_raw(means, WeightStrategy::mean_normalized,
                                "group means normalized by their sum (" +
                                    format_weight(total(means)) + ")");
}

WeightVector uniform_weights(const QuestionnaireSchema& schema) {
  GroupWeights w;
  for (const auto& g : schema.groups) w.emplace(g.group_id, 1.0);
  return WeightVector::from_raw(w, WeightStrategy::uniform, "equal weight per group");
}

GroupWeights builtin_weight_table() {
  return {{1, 0.0727},  {2, 0.0729},  {3, 0.0726},  {4, 0.0674},  {5, 0.0677},
          {6, 0.0720},  {7, 0.0753},  {8, 0.0742},  {9, 0.0605},  {10, 0.0726},
          {11, 0.0602}, {12, 0.0706}, {13, 0.0577}, {14, 0.0550}, {15, 0.0490}};
}

WeightVector load_weight_table(const GroupWeights& raw, const QuestionnaireSchema& schema,
                               std::string source) {
  check_entries(raw);
  for (const auto& g : schema.groups)
    if (!raw.count(g.group_id))
      throw Error(ErrorCode::weight_group_mismatch, "group " + std::to_string(g.group_id),
                  "no weight given");
  for (const auto& [gid, v] : raw)
    if (!schema.find_group(gid))
      throw Error(ErrorCode::weight_group_mismatch, "group " + std::to_string(gid),
                  "not a schema group");
  const double s = total(raw);
  if (std::abs(s - 1.0) > kManualSumTolerance)
    throw Error(ErrorCode::weight_sum, source,
                "raw weights sum to " + format_weight(s) + ", outside 1 +/- 0.001");

  std::ostringstream note;
  note << source << " raw:";
  for (const auto& [gid, v] : raw) note << ' ' << gid << '=' << format_weight(v);
  note << "; raw sum " << format_weight(s);
  return WeightVector::from_raw(raw, WeightStrategy::manual, note.str());
}

WeightVector load_weight_table(std::string_view document_or_builtin,
                               const QuestionnaireSchema& schema) {
  if (document_or_builtin == kBuiltinTableName)
    return load_weight_table(builtin_weight_table(), schema, std::string(kBuiltinTableName));

  const auto rows = csv::parse_with_header(document_or_builtin, {"group_id", "weight"}, "weights");
  GroupWeights raw;
  for (const auto& row : rows) {
    const std::string where = "weights line " + std::to_string(row.line);
    int gid = 0;
    const auto& gs = row.fields[0];
    auto r1 = std::from_chars(gs.data(), gs.data() + gs.size(), gid);
    if (r1.ec != std::errc{} || r1.ptr != gs.data() + gs.size())
      throw Error(ErrorCode::unreadable_document, where, "group_id '" + gs + "' is not an integer");
    double w = 0.0;
    const auto& ws = row.fields[1];
    auto r2 = std::from_chars(ws.data(), ws.data() + ws.size(), w);
    if (r2.ec != std::errc{} || r2.ptr != ws.data() + ws.size())
      throw Error(ErrorCode::unreadable_document, where, "weight '" + ws + "' is not a number");
    if (!raw.emplace(gid, w).second)
      throw Error(ErrorCode::duplicate_id, where, "group " + gs + " listed twice");
  }
  return load_weight_table(raw, schema, "weight file");
}

// --------------------------------------------------------------- comparison

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return v[i] < v[j]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

bool has_ties(const std::vector<double>& ranks) {
  return std::any_of(ranks.begin(), ranks.end(), [](double r) { return r != std::floor(r); }) ||
         std::set<double>(ranks.begin(), ranks.end()).size() != ranks.size();
}

// 1 = largest; equal values share the smaller rank.
std::vector<int> competition_ranks_desc(const std::vector<double>& v) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = 1 + static_cast<int>(std::count_if(v.begin(), v.end(), [&](double x) { return x > v[i]; }));
  return out;
}

}  // namespace

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(ErrorCode::weight_group_mismatch, "spearman", "need two equal-length vectors");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  // Identical orderings agree perfectly, including the all-tied case.
  if (rx == ry) return 1.0;
  const double n = static_cast<double>(x.size());
  if (!has_ties(rx) && !has_ties(ry)) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
    return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
  }
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

WeightComparison compare_weights(const WeightVector& a, const WeightVector& b) {
  std::vector<int> ga, gb;
  for (const auto& [g, v] : a.weights()) ga.push_back(g);
  for (const auto& [g, v] : b.weights()) gb.push_back(g);
  if (ga != gb)
    throw Error(ErrorCode::weight_group_mismatch, "compare",
                "weight vectors cover different groups");

  std::vector<double> va, vb;
  for (int g : ga) {
    va.push_back(a.weight(g));
    vb.push_back(b.weight(g));
  }
  const auto ra = competition_ranks_desc(va);
  const auto rb = competition_ranks_desc(vb);

  WeightComparison out;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    out.rows.push_back({ga[i], va[i], vb[i], va[i] - vb[i], ra[i], rb[i]});
    if (ra[i] == 1) out.top_a.push_back(ga[i]);
    if (rb[i] == 1) out.top_b.push_back(ga[i]);
  }
  out.spearman = ga.size() < 2 ? std::numeric_limits<double>::quiet_NaN()
                               : spearman_correlation(va, vb);
  return out;
}

}  // namespace teacheval
