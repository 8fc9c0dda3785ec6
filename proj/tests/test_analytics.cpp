#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "teacheval/analytics.hpp"
#include "teacheval/report.hpp"

using namespace teacheval;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TEACHEVAL_FIXTURES) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

QuestionnaireSchema single_group_schema(std::size_t items = 2) {
  QuestionnaireSchema s;
  s.scale = canonical_scale();
  FactorGroup g{1, "Only", {}};
  for (std::size_t i = 1; i <= items; ++i) g.items.push_back({"1." + std::to_string(i), "item"});
  s.groups.push_back(g);
  return s;
}

ResponseDataset group_dataset(const std::vector<int>& values, int group_id = 1) {
  ResponseDataset ds;
  for (std::size_t i = 0; i < values.size(); ++i)
    ds.records.push_back({"R" + std::to_string(i), Channel::post, RatingMode::group,
                          {{std::to_string(group_id), values[i]}}});
  return ds;
}

// Direct two-pass evaluation, independent of the library's accumulator.
struct Oracle {
  double mean, sample_sd, population_sd;
};

Oracle two_pass(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double n = static_cast<double>(v.size());
  return {mean, v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0, std::sqrt(ss / n)};
}

}  // namespace

TEST(GroupStats, AllFives) {
  const auto s = group_stats(group_dataset(std::vector<int>(25, 5)), single_group_schema());
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].mean, 5.0);
  EXPECT_EQ(s.entries[0].std_dev, 0.0);
  EXPECT_EQ(s.n_total, 25u);
}

TEST(GroupStats, TwelveFivesThirteenFours) {
  std::vector<int> v(12, 5);
  v.insert(v.end(), 13, 4);
  const auto ds = group_dataset(v);
  // Hand computation: sum 112, sum of squared deviations
  // 12 * 0.52^2 + 13 * 0.48^2 = 6.24.
  const auto sample = group_stats(ds, single_group_schema(), StdConvention::sample);
  const auto pop = group_stats(ds, single_group_schema(), StdConvention::population);
  EXPECT_NEAR(sample.entries[0].mean, 4.48, 1e-12);
  EXPECT_NEAR(sample.entries[0].std_dev, std::sqrt(6.24 / 24.0), 1e-12);
  EXPECT_NEAR(pop.entries[0].std_dev, std::sqrt(6.24 / 25.0), 1e-12);
  EXPECT_EQ(report::fixed(sample.entries[0].std_dev, 4), "0.5099");
  EXPECT_EQ(report::fixed(pop.entries[0].std_dev, 4), "0.4996");
  EXPECT_EQ(sample.entries[0].min, 4.0);
  EXPECT_EQ(sample.entries[0].max, 5.0);
}

TEST(GroupStats, ReproducesPublishedRowFoundByExhaustiveSearch) {
  // Enumerate every multiset of 25 ratings in 1..5 (as level counts) and keep
  // those whose directly evaluated mean and sample std print as 4.48 / 0.653.
  std::vector<std::array<int, 5>> matches;
  for (int c1 = 0; c1 <= 25; ++c1)
    for (int c2 = 0; c1 + c2 <= 25; ++c2)
      for (int c3 = 0; c1 + c2 + c3 <= 25; ++c3)
        for (int c4 = 0; c1 + c2 + c3 + c4 <= 25; ++c4) {
          const int c5 = 25 - c1 - c2 - c3 - c4;
          std::vector<double> v;
          const std::array<int, 5> counts = {c1, c2, c3, c4, c5};
          for (int level = 0; level < 5; ++level)
            v.insert(v.end(), counts[level], level + 1.0);
          const auto o = two_pass(v);
          if (std::round(o.mean * 100) == 448 && std::round(o.sample_sd * 1000) == 653)
            matches.push_back(counts);
        }
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0], (std::array<int, 5>{0, 0, 2, 9, 14}));

  std::vector<int> values;
  for (int level = 0; level < 5; ++level) values.insert(values.end(), matches[0][level], level + 1);
  const auto s = group_stats(group_dataset(values), single_group_schema());
  EXPECT_EQ(report::fixed(s.entries[0].mean, 2), "4.48");
  EXPECT_EQ(report::fixed(s.entries[0].std_dev, 2), "0.65");
  EXPECT_EQ(report::fixed(s.entries[0].std_dev, 3), "0.653");
}

TEST(GroupStats, FixtureFirstGroupMatchesPublishedRow) {
  const auto ds = parse_responses(fixture("responses_group.csv"), canonical_schema());
  const auto s = group_stats(ds, canonical_schema());
  ASSERT_EQ(s.entries.size(), 15u);
  EXPECT_EQ(report::fixed(s.entries[0].mean, 2), "4.48");
  EXPECT_EQ(report::fixed(s.entries[0].std_dev, 3), "0.653");
  // Means were built to hit every published mean exactly.
  const auto ref = reference_group_summary();
  for (std::size_t g = 0; g < 15; ++g)
    EXPECT_EQ(report::fixed(s.entries[g].mean, 2), report::fixed(ref.entries[g].mean, 2));
}

TEST(GroupStats, ItemRecordsCollapseToGroupMean) {
  ResponseDataset ds;
  ds.records.push_back({"A", Channel::email, RatingMode::item, {{"1.1", 3}, {"1.2", 4}}});
  ds.records.push_back({"B", Channel::email, RatingMode::group, {{"1", 5}}});
  const auto s = group_stats(ds, single_group_schema());
  EXPECT_DOUBLE_EQ(s.entries[0].mean, (3.5 + 5.0) / 2.0);
  EXPECT_DOUBLE_EQ(s.entries[0].min, 3.5);
}

TEST(GroupStats, StrictAndLenientGaps) {
  ResponseDataset ds;
  ds.records.push_back({"A", Channel::post, RatingMode::item, {{"1.1", 3}}});
  ds.records.push_back({"B", Channel::post, RatingMode::item, {{"1.1", 5}, {"1.2", 5}}});
  EXPECT_THROW(group_stats(ds, single_group_schema()), Error);
  const auto s = group_stats(ds, single_group_schema(), StdConvention::sample, Completeness::lenient);
  EXPECT_EQ(s.entries[0].n, 2u);
  EXPECT_DOUBLE_EQ(s.entries[0].mean, 4.0);

  QuestionnaireSchema two = single_group_schema();
  two.groups.push_back({2, "Second", {{"2.1", "x"}}});
  const auto lenient = group_stats(group_dataset({4, 4}), two, StdConvention::sample,
                                   Completeness::lenient);
  EXPECT_EQ(lenient.entries[1].n, 0u);
  EXPECT_TRUE(std::isnan(lenient.entries[1].mean));
  EXPECT_THROW(group_stats(group_dataset({4, 4}), two), Error);
  EXPECT_THROW(group_stats(ResponseDataset{}, two), Error);
}

TEST(ItemStats, Basics) {
  ResponseDataset ds;
  ds.records.push_back({"A", Channel::post, RatingMode::item, {{"1.1", 4}, {"1.2", 3}}});
  ds.records.push_back({"B", Channel::post, RatingMode::item, {{"1.1", 4}, {"1.2", 5}}});
  const auto s = item_stats(ds, single_group_schema());
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0].key, "1.1");
  EXPECT_EQ(s.entries[0].mean, 4.0);
  EXPECT_EQ(s.entries[0].std_dev, 0.0);
  EXPECT_EQ(s.entries[1].mean, 4.0);
  EXPECT_NEAR(s.entries[1].std_dev, std::sqrt(2.0), 1e-12);
  try {
    item_stats(group_dataset({3, 4}), single_group_schema());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_dataset);
  }
}

TEST(ItemStats, CanonicalFixtureInSchemaOrder) {
  const auto ds = parse_responses(fixture("responses_item.csv"), canonical_schema());
  const auto s = item_stats(ds, canonical_schema());
  ASSERT_EQ(s.entries.size(), 99u);
  EXPECT_EQ(s.entries.front().key, "1.1");
  EXPECT_EQ(s.entries.back().key, "15.6");
  EXPECT_EQ(s.n_total, 4u);
}

TEST(Properties, OracleAgreementAndBounds) {
  std::mt19937 rng(1234);
  QuestionnaireSchema schema;
  schema.scale = canonical_scale();
  for (int g = 1; g <= 4; ++g) schema.groups.push_back({g, "g", {{std::to_string(g) + ".1", "i"}}});

  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    ResponseDataset ds;
    std::vector<std::vector<double>> columns(4);
    for (int r = 0; r < n; ++r) {
      ResponseRecord rec{"R" + std::to_string(r), Channel::post, RatingMode::group, {}};
      for (int g = 1; g <= 4; ++g) {
        const int v = 1 + static_cast<int>(rng() % 5);
        rec.ratings[std::to_string(g)] = v;
        columns[g - 1].push_back(v);
      }
      ds.records.push_back(rec);
    }
    const auto sample = group_stats(ds, schema, StdConvention::sample);
    const auto pop = group_stats(ds, schema, StdConvention::population);
    for (int g = 0; g < 4; ++g) {
      const auto o = two_pass(columns[g]);
      const auto& e = sample.entries[g];
      EXPECT_NEAR(e.mean, o.mean, 1e-12);
      EXPECT_NEAR(e.std_dev, o.sample_sd, 1e-12);
      EXPECT_NEAR(pop.entries[g].std_dev, o.population_sd, 1e-12);
      EXPECT_LE(1.0, e.min);
      EXPECT_LE(e.min, e.mean);
      EXPECT_LE(e.mean, e.max);
      EXPECT_LE(e.max, 5.0);
      EXPECT_LE(e.n, sample.n_total);
      if (n >= 2) EXPECT_LE(pop.entries[g].std_dev, e.std_dev);
      const double total = e.mean * static_cast<double>(e.n);
      EXPECT_NEAR(total, std::round(total), 1e-9);
      EXPECT_EQ(e.std_dev == 0.0, e.min == e.max);
    }
  }
}

TEST(Properties, PermutationInvariance) {
  const auto base = parse_responses(fixture("responses_group.csv"), canonical_schema());
  const auto expected = group_stats(base, canonical_schema());
  std::mt19937 rng(99);
  for (int k = 0; k < 50; ++k) {
    auto shuffled = base;
    std::shuffle(shuffled.records.begin(), shuffled.records.end(), rng);
    const auto got = group_stats(shuffled, canonical_schema());
    for (std::size_t g = 0; g < got.entries.size(); ++g) {
      EXPECT_EQ(got.entries[g].mean, expected.entries[g].mean);
      EXPECT_NEAR(got.entries[g].std_dev, expected.entries[g].std_dev, 1e-12);
    }
  }
}

TEST(CohortFilter, Cases) {
  auto ds = parse_responses(fixture("responses_group.csv"), canonical_schema());
  ds.sent_counts = parse_sent_counts(fixture("sent.json"));
  ds = attach_profiles(std::move(ds), parse_profiles(fixture("profiles.csv")).profiles);

  EXPECT_EQ(cohort_filter(ds, {}), ds);

  CohortPredicate edu;
  add_constraint(edu, "specialty=education");
  const auto only_edu = cohort_filter(ds, edu);
  EXPECT_EQ(only_edu.records.size(), 5u);
  for (const auto& r : only_edu.records)
    EXPECT_EQ(ds.profiles.at(r.respondent_id).specialty, Specialty::education);
  EXPECT_EQ(only_edu.sent_counts, ds.sent_counts);
  ASSERT_EQ(only_edu.notes.size(), 1u);

  CohortPredicate south;
  add_constraint(south, "region=balochistan");
  EXPECT_TRUE(cohort_filter(ds, south).records.empty());

  CohortPredicate admin;
  add_constraint(admin, "admin_experience=dean");
  for (const auto& r : cohort_filter(ds, admin).records)
    EXPECT_TRUE(ds.profiles.at(r.respondent_id).has_admin(AdminRole::dean));

  CohortPredicate bad;
  EXPECT_THROW(add_constraint(bad, "shoe_size=9"), Error);
  EXPECT_THROW(add_constraint(bad, "specialty"), Error);
}

TEST(Display, HalfUpRounding) {
  EXPECT_EQ(report::fixed(0.65319, 3), "0.653");
  EXPECT_EQ(report::fixed(4.125, 2), "4.13");
  EXPECT_EQ(report::fixed(4.485, 2), "4.49");
  EXPECT_EQ(report::fixed(0.0, 3), "0.000");
  EXPECT_EQ(report::fixed(std::nan(""), 2), "-");
  EXPECT_EQ(report::hundredths(2873), "28.73");
  EXPECT_EQ(report::hundredths(10000), "100.00");
}
