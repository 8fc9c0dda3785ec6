#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teacheval/ingest.hpp"
#include "teacheval/schema.hpp"

namespace teacheval {

enum class StdConvention { sample, population };

std::string_view to_string(StdConvention c);
std::optional<StdConvention> parse_convention(std::string_view token);

struct StatsEntry {
  std::string key;  // group id or item id
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double min = 0.0;
  double max = 0.0;

  bool operator==(const StatsEntry&) const = default;
};

struct StatsSummary {
  std::vector<StatsEntry> entries;  // schema order
  StdConvention convention = StdConvention::sample;
  std::size_t n_total = 0;

  const StatsEntry* find(std::string_view key) const;
};

// Per-group mean and standard deviation. Item-level records contribute the
// mean of their item ratings within each group. Under strict completeness
// every record must contribute to every group; lenient skips gaps and yields
// n = 0 entries (NaN mean) for groups nobody rated.
StatsSummary group_stats(const ResponseDataset& dataset, const QuestionnaireSchema& schema,
                         StdConvention convention = StdConvention::sample,
                         Completeness policy = Completeness::strict);

// Per-item statistics over item-level records only.
StatsSummary item_stats(const ResponseDataset& dataset, const QuestionnaireSchema& schema,
                        StdConvention convention = StdConvention::sample,
                        Completeness policy = Completeness::strict);

// Published group summary for the canonical schema: N = 25, means and
// standard deviations as reported by the expert panel.
StatsSummary reference_group_summary();

// Every non-empty field is a constraint; a profile matches when its value is
// in the allowed set. `admin_experience` requires every listed role.
struct CohortPredicate {
  std::set<Gender> gender;
  std::set<Designation> designation;
  std::set<Qualification> qualification;
  std::set<AdminRole> admin_experience;
  std::set<Specialty> specialty;
  std::set<Region> region;

  bool empty() const;
  bool matches(const ExpertProfile& profile) const;
  std::string describe() const;
};

// Parses "attribute=value" (e.g. "specialty=education") into `predicate`.
// Repeating an attribute widens its allowed set.
void add_constraint(CohortPredicate& predicate, std::string_view expression);

ResponseDataset cohort_filter(const ResponseDataset& dataset, const CohortPredicate& predicate);

}  // namespace teacheval
