#include "teacheval/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teacheval {

std::string_view to_string(StdConvention c) {
  return c == StdConvention::sample ? "sample" : "population";
}

std::optional<StdConvention> parse_convention(std::string_view token) {
  if (token == "sample") return StdConvention::sample;
  if (token == "population") return StdConvention::population;
  return std::nullopt;
}

const StatsEntry* StatsSummary::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

namespace {

// Welford running moments.
class Moments {
 public:
  void push(double x) {
    ++n_;
    sum_ += x;
    const double delta = x - running_mean_;
    running_mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - running_mean_);
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }

  StatsEntry entry(std::string key, StdConvention convention) const {
    StatsEntry e;
    e.key = std::move(key);
    e.n = n_;
    if (n_ == 0) {
      e.mean = e.std_dev = e.min = e.max = std::numeric_limits<double>::quiet_NaN();
      return e;
    }
    e.mean = sum_ / static_cast<double>(n_);
    e.min = min_;
    e.max = max_;
    if (min_ == max_) {
      e.std_dev = 0.0;
    } else {
      const double denom = convention == StdConvention::sample ? static_cast<double>(n_ - 1)
                                                               : static_cast<double>(n_);
      e.std_dev = denom > 0 ? std::sqrt(std::max(0.0, m2_) / denom) : 0.0;
    }
    return e;
  }

 private:
  std::size_t n_ = 0;
  double sum_ = 0.0;
  double running_mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

// Respondent's value for a group, or nullopt when they gave none.
std::optional<double> group_value(const ResponseRecord& rec, const FactorGroup& group,
                                  Completeness policy) {
  if (rec.mode == RatingMode::group) {
    const auto it = rec.ratings.find(std::to_string(group.group_id));
    if (it == rec.ratings.end()) return std::nullopt;
    return static_cast<double>(it->second);
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& item : group.items) {
    const auto it = rec.ratings.find(item.item_id);
    if (it == rec.ratings.end()) {
      if (policy == Completeness::strict) return std::nullopt;
      continue;
    }
    sum += it->second;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

void require_nonempty(const ResponseDataset& dataset) {
  if (dataset.records.empty())
    throw Error(ErrorCode::empty_dataset, "dataset", "no response records");
}

}  // namespace

StatsSummary group_stats(const ResponseDataset& dataset, const QuestionnaireSchema& schema,
                         StdConvention convention, Completeness policy) {
  require_nonempty(dataset);
  StatsSummary out;
  out.convention = convention;
  out.n_total = dataset.records.size();
  for (const auto& group : schema.groups) {
    Moments m;
    for (const auto& rec : dataset.records) {
      const auto v = group_value(rec, group, policy);
      if (!v) {
        if (policy == Completeness::strict)
          throw Error(ErrorCode::missing_rating, "respondent " + rec.respondent_id,
                      "no complete rating for group " + std::to_string(group.group_id));
        continue;
      }
      m.push(*v);
    }
    out.entries.push_back(m.entry(std::to_string(group.group_id), convention));
  }
  return out;
}

StatsSummary item_stats(const ResponseDataset& dataset, const QuestionnaireSchema& schema,
                        StdConvention convention, Completeness policy) {
  require_nonempty(dataset);
  std::vector<const ResponseRecord*> item_records;
  for (const auto& rec : dataset.records)
    if (rec.mode == RatingMode::item) item_records.push_back(&rec);
  if (item_records.empty())
    throw Error(ErrorCode::empty_dataset, "dataset",
                "item statistics need item-level records; dataset is group-level only");

  StatsSummary out;
  out.convention = convention;
  out.n_total = item_records.size();
  for (const auto& group : schema.groups) {
    for (const auto& item : group.items) {
      Moments m;
      for (const auto* rec : item_records) {
        const auto it = rec->ratings.find(item.item_id);
        if (it == rec->ratings.end()) {
          if (policy == Completeness::strict)
            throw Error(ErrorCode::missing_rating, "respondent " + rec->respondent_id,
                        "no rating for item " + item.item_id);
          continue;
        }
        m.push(it->second);
      }
      out.entries.push_back(m.entry(item.item_id, convention));
    }
  }
  return out;
}

StatsSummary reference_group_summary() {
  static const double kMeans[] = {4.48, 4.36, 4.28, 4.28, 4.12, 4.16, 4.32, 4.00,
                                  3.96, 4.28, 4.08, 4.28, 3.96, 3.88, 3.72};
  static const double kStd[] = {0.653, 0.810, 0.936, 0.737, 1.053, 0.986, 1.029, 1.080,
                                0.934, 0.842, 0.862, 0.842, 1.059, 1.235, 1.275};
  StatsSummary out;
  out.n_total = 25;
  for (std::size_t g = 0; g < 15; ++g) {
    StatsEntry e;
    e.key = std::to_string(g + 1);
    e.n = 25;
    e.mean = kMeans[g];
    e.std_dev = kStd[g];
    // Extremes are unpublished; the full scale range is the only safe bound.
    e.min = 1.0;
    e.max = 5.0;
    out.entries.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------------ cohorts

bool CohortPredicate::empty() const {
  return gender.empty() && designation.empty() && qualification.empty() &&
         admin_experience.empty() && specialty.empty() && region.empty();
}

bool CohortPredicate::matches(const ExpertProfile& p) const {
  auto allowed = [](const auto& set, const auto& value) {
    return set.empty() || set.count(value) > 0;
  };
  if (!allowed(gender, p.gender) || !allowed(designation, p.designation) ||
      !allowed(qualification, p.qualification) || !allowed(specialty, p.specialty) ||
      !allowed(region, p.region))
    return false;
  return std::all_of(admin_experience.begin(), admin_experience.end(),
                     [&](AdminRole r) { return p.has_admin(r); });
}

std::string CohortPredicate::describe() const {
  std::string out;
  auto emit = [&](std::string_view name, const auto& set) {
    if (set.empty()) return;
    if (!out.empty()) out += "; ";
    out += name;
    out += " in {";
    bool first = true;
    for (const auto& v : set) {
      if (!first) out += ",";
      out += to_string(v);
      first = false;
    }
    out += "}";
  };
  emit("gender", gender);
  emit("designation", designation);
  emit("qualification", qualification);
  emit("admin_experience", admin_experience);
  emit("specialty", specialty);
  emit("region", region);
  return out;
}

void add_constraint(CohortPredicate& predicate, std::string_view expression) {
  const auto eq = expression.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorCode::invalid_field, std::string(expression),
                "cohort constraint must look like attribute=value");
  const auto attr = expression.substr(0, eq);
  const auto value = expression.substr(eq + 1);
  auto bad = [&] {
    return Error(ErrorCode::invalid_field, std::string(expression),
                 "unrecognised value '" + std::string(value) + "'");
  };
  if (attr == "gender") {
    auto v = parse_gender(value);
    if (!v) throw bad();
    predicate.gender.insert(*v);
  } else if (attr == "designation") {
    auto v = parse_designation(value);
    if (!v) throw bad();
    predicate.designation.insert(*v);
  } else if (attr == "qualification") {
    auto v = parse_qualification(value);
    if (!v) throw bad();
    predicate.qualification.insert(*v);
  } else if (attr == "admin_experience") {
    auto v = parse_admin_role(value);
    if (!v) throw bad();
    predicate.admin_experience.insert(*v);
  } else if (attr == "specialty") {
    auto v = parse_specialty(value);
    if (!v) throw bad();
    predicate.specialty.insert(*v);
  } else if (attr == "region") {
    auto v = parse_region(value);
    if (!v) throw bad();
    predicate.region.insert(*v);
  } else {
    throw Error(ErrorCode::invalid_field, std::string(expression),
                "unknown profile attribute '" + std::string(attr) + "'");
  }
}

ResponseDataset cohort_filter(const ResponseDataset& dataset, const CohortPredicate& predicate) {
  if (predicate.empty()) return dataset;

  ResponseDataset out;
  out.schema_version = dataset.schema_version;
  out.sent_counts = dataset.sent_counts;
  out.notes = dataset.notes;
  for (const auto& rec : dataset.records) {
    const auto p = dataset.profiles.find(rec.respondent_id);
    if (p == dataset.profiles.end() || !predicate.matches(p->second)) continue;
    out.records.push_back(rec);
    out.profiles.emplace(p->first, p->second);
  }
  out.notes.push_back("cohort filter (" + predicate.describe() + "): kept " +
                      std::to_string(out.records.size()) + " of " +
                      std::to_string(dataset.records.size()) +
                      " records; sent counts are for the full distribution");
  return out;
}

}  // namespace teacheval
