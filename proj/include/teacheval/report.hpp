#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "teacheval/analytics.hpp"
#include "teacheval/ingest.hpp"
#include "teacheval/schema.hpp"
#include "teacheval/scoring.hpp"
#include "teacheval/weights.hpp"

namespace teacheval::report {

enum class Format { text, csv };

// Half-up rounding to `decimals` places ("0.653", "4.48"). NaN prints "-".
std::string fixed(double value, int decimals);

// Hundredths as a two-decimal string: 2873 -> "28.73".
std::string hundredths(std::int64_t value);

// Shortest round-trip decimal form.
std::string exact(double value);

std::string validation(const ValidationReport& report, Format format);
std::string schema_summary(const QuestionnaireSchema& schema, const ValidationReport& report,
                           Format format);
std::string stats(const StatsSummary& summary, const QuestionnaireSchema& schema, Format format,
                  std::string_view title = {});
std::string distribution(const DistributionSummary& summary, Format format);
std::string weights(const WeightVector& weights, const QuestionnaireSchema& schema, Format format);
std::string comparison(const WeightComparison& cmp, const WeightVector& a, const WeightVector& b,
                       const QuestionnaireSchema& schema, Format format);
std::string scorecards(std::span<const ScoreCard> cards, const QuestionnaireSchema& schema,
                       Format format);

}  // namespace teacheval::report
