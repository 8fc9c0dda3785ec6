#include "teacheval/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "teacheval/csv.hpp"

namespace teacheval::report {

std::string fixed(double value, int decimals) {
  if (!std::isfinite(value)) return "-";
  const double scale = std::pow(10.0, decimals);
  // Nudge values a hair below a tie (4.485 stored as 4.48499...) upward.
  const double scaled = std::floor(std::abs(value) * scale + 0.5 + 1e-9);
  const double rounded = std::copysign(scaled / scale, value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

std::string hundredths(std::int64_t value) {
  const bool neg = value < 0;
  const std::int64_t v = neg ? -value : value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", neg ? "-" : "", static_cast<long long>(v / 100),
                static_cast<long long>(v % 100));
  return buf;
}

std::string exact(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string group_name(const QuestionnaireSchema& schema, int gid) {
  const auto* g = schema.find_group(gid);
  return g ? g->name : "group " + std::to_string(gid);
}

std::string entry_label(const QuestionnaireSchema& schema, const std::string& key) {
  if (const auto* item = schema.find_item(key)) return key + " " + item->label;
  for (const auto& g : schema.groups)
    if (std::to_string(g.group_id) == key) return g.name;
  return key;
}

}  // namespace

std::string validation(const ValidationReport& report, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "severity,code,location,message\n";
    for (const auto& f : report.findings)
      out << (f.severity == Severity::error ? "error" : "warning") << ','
          << to_string(f.code) << ',' << csv::escape(f.location) << ','
          << csv::escape(f.message) << '\n';
    return out.str();
  }
  for (const auto& f : report.findings)
    out << (f.severity == Severity::error ? "error" : "warning") << " [" << to_string(f.code)
        << "] " << f.location << ": " << f.message << '\n';
  out << report.error_count() << " error(s), " << report.warning_count() << " warning(s)\n";
  return out.str();
}

std::string schema_summary(const QuestionnaireSchema& schema, const ValidationReport& report,
                           Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "group_id,name,items\n";
    for (const auto& g : schema.groups)
      out << g.group_id << ',' << csv::escape(g.name) << ',' << g.items.size() << '\n';
    return out.str() + validation(report, format);
  }
  out << "Questionnaire schema version " << schema.version << ": " << schema.groups.size()
      << " groups, " << schema.item_count() << " items\n";
  out << "Scale:";
  for (auto it = schema.scale.levels.rbegin(); it != schema.scale.levels.rend(); ++it)
    out << ' ' << it->level << '=' << it->label << (std::next(it) == schema.scale.levels.rend() ? "" : ",");
  out << '\n';
  for (const auto& g : schema.groups)
    out << pad_left(std::to_string(g.group_id), 3) << "  " << pad_right(g.name, 38)
        << pad_left(std::to_string(g.items.size()), 3) << '\n';
  if (!schema.revision_log.empty())
    out << "Revisions applied: " << schema.revision_log.size() << '\n';
  out << validation(report, format);
  return out.str();
}

std::string stats(const StatsSummary& summary, const QuestionnaireSchema& schema, Format format,
                  std::string_view title) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "key,n,mean,std_dev,min,max\n";
    for (const auto& e : summary.entries)
      out << e.key << ',' << e.n << ',' << exact(e.mean) << ',' << exact(e.std_dev) << ','
          << exact(e.min) << ',' << exact(e.max) << '\n';
    return out.str();
  }
  if (!title.empty()) out << title << '\n';
  out << "(Total Responses N: " << summary.n_total << ", " << schema.scale.max_level() << "= "
      << (schema.scale.levels.empty() ? "" : schema.scale.levels.back().label) << ", "
      << schema.scale.min_level() << "= "
      << (schema.scale.levels.empty() ? "" : schema.scale.levels.front().label)
      << "; std dev: " << to_string(summary.convention) << ")\n\n";
  std::size_t width = 24;
  for (const auto& e : summary.entries) width = std::max(width, entry_label(schema, e.key).size() + 2);
  out << pad_right("Factor", width) << pad_left("N", 4) << pad_left("Mean", 8)
      << pad_left("Std Dev", 10) << pad_left("Min", 7) << pad_left("Max", 7) << '\n';
  for (const auto& e : summary.entries)
    out << pad_right(entry_label(schema, e.key), width) << pad_left(std::to_string(e.n), 4)
        << pad_left(fixed(e.mean, 2), 8) << pad_left(fixed(e.std_dev, 3), 10)
        << pad_left(fixed(e.min, 2), 7) << pad_left(fixed(e.max, 2), 7) << '\n';
  return out.str();
}

std::string distribution(const DistributionSummary& summary, Format format) {
  std::ostringstream out;
  auto medium = [](Channel ch) -> std::string {
    switch (ch) {
      case Channel::post: return "Through Post";
      case Channel::email: return "Through Email";
      case Channel::by_hand: return "By hand";
    }
    return "?";
  };
  if (format == Format::csv) {
    out << "channel,sent,received,rate\n";
    for (const auto& r : summary.rows)
      out << to_string(r.channel) << ',' << r.sent << ',' << r.received << ','
          << hundredths(r.rate_hundredths()) << '\n';
    out << "total," << summary.total_sent << ',' << summary.total_received << ','
        << hundredths(summary.total_rate_hundredths()) << '\n';
    return out.str();
  }
  out << pad_right("Medium", 16) << pad_left("Sent", 8) << pad_left("Responses", 11)
      << pad_left("%age", 9) << '\n';
  for (const auto& r : summary.rows)
    out << pad_right(medium(r.channel), 16) << pad_left(std::to_string(r.sent), 8)
        << pad_left(std::to_string(r.received), 11)
        << pad_left(hundredths(r.rate_hundredths()), 9) << '\n';
  out << pad_right("Total", 16) << pad_left(std::to_string(summary.total_sent), 8)
      << pad_left(std::to_string(summary.total_received), 11)
      << pad_left(hundredths(summary.total_rate_hundredths()), 9) << '\n';
  return out.str();
}

std::string weights(const WeightVector& w, const QuestionnaireSchema& schema, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "group_id,weight\n";
    for (const auto& [g, v] : w.weights()) out << g << ',' << exact(v) << '\n';
    return out.str();
  }
  out << "Strategy: " << to_string(w.strategy()) << '\n';
  out << "Source: " << w.source_note() << '\n';
  // Sorted by weight, heaviest first; ties by group id.
  std::vector<std::pair<int, double>> sorted(w.weights().begin(), w.weights().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  out << pad_left("S.No", 4) << "  " << pad_right("Main Groups of Factors", 38) << pad_left("Weight", 8)
      << '\n';
  int i = 0;
  for (const auto& [g, v] : sorted)
    out << pad_left(std::to_string(++i), 4) << "  " << pad_right(group_name(schema, g), 38)
        << pad_left(fixed(v, 4), 8) << '\n';
  out << pad_right("Total weight:", 44) << pad_left(fixed(w.sum(), 4), 8) << '\n';
  return out.str();
}

std::string comparison(const WeightComparison& cmp, const WeightVector& a, const WeightVector& b,
                       const QuestionnaireSchema& schema, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "group_id,weight_a,weight_b,difference,rank_a,rank_b\n";
    for (const auto& r : cmp.rows)
      out << r.group_id << ',' << exact(r.a) << ',' << exact(r.b) << ',' << exact(r.difference)
          << ',' << r.rank_a << ',' << r.rank_b << '\n';
    out << "spearman," << exact(cmp.spearman) << ",,,,\n";
    return out.str();
  }
  auto tops = [&](const std::vector<int>& ids) {
    std::string s;
    for (int g : ids) s += (s.empty() ? "" : ", ") + group_name(schema, g);
    return s;
  };
  out << "A: " << to_string(a.strategy()) << "  B: " << to_string(b.strategy()) << '\n';
  out << pad_right("Group", 38) << pad_left("A", 9) << pad_left("B", 9) << pad_left("A-B", 10)
      << pad_left("RankA", 7) << pad_left("RankB", 7) << '\n';
  for (const auto& r : cmp.rows)
    out << pad_right(group_name(schema, r.group_id), 38) << pad_left(fixed(r.a, 4), 9)
        << pad_left(fixed(r.b, 4), 9) << pad_left(fixed(r.difference, 4), 10)
        << pad_left(std::to_string(r.rank_a), 7) << pad_left(std::to_string(r.rank_b), 7) << '\n';
  out << "Spearman rank correlation: " << fixed(cmp.spearman, 4) << '\n';
  out << "Top of A: " << tops(cmp.top_a) << '\n';
  out << "Top of B: " << tops(cmp.top_b) << '\n';
  out << (cmp.same_top() ? "Top ranks agree\n" : "Top ranks differ\n");
  return out.str();
}

std::string scorecards(std::span<const ScoreCard> cards, const QuestionnaireSchema& schema,
                       Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "evaluatee_id";
    for (const auto& g : schema.groups) out << ",group_" << g.group_id;
    out << ",overall,normalized,rank\n";
    for (const auto& c : cards) {
      out << csv::escape(c.evaluatee_id);
      for (const auto& g : schema.groups) {
        const auto it = c.group_scores.find(g.group_id);
        out << ',' << (it == c.group_scores.end() ? std::string() : exact(it->second));
      }
      out << ',' << exact(c.overall) << ',' << exact(c.normalized) << ','
          << (c.rank > 0 ? std::to_string(c.rank) : std::string()) << '\n';
    }
    return out.str();
  }
  std::size_t width = 12;
  for (const auto& c : cards) width = std::max(width, c.evaluatee_id.size() + 2);
  out << pad_left("Rank", 4) << "  " << pad_right("Evaluatee", width) << pad_left("Overall", 9)
      << pad_left("Normalized", 12) << '\n';
  for (const auto& c : cards)
    out << pad_left(c.rank > 0 ? std::to_string(c.rank) : "-", 4) << "  "
        << pad_right(c.evaluatee_id, width) << pad_left(fixed(c.overall, 4), 9)
        << pad_left(fixed(c.normalized, 4), 12) << '\n';
  return out.str();
}

}  // namespace teacheval::report
