#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teacheval/error.hpp"
#include "teacheval/schema.hpp"

namespace teacheval {

enum class Gender { male, female, unspecified };
enum class Designation { professor, associate_professor, assistant_professor, lecturer, other };
enum class Qualification { post_doc, phd, mphil, other };
enum class AdminRole { vice_chancellor, dean, chairman, director };
enum class Specialty { education, hrm, psychology, computer_science, statistics, other };
enum class Region { federal, sindh, punjab, nwfp, balochistan, other };
enum class Channel { post, email, by_hand };

inline constexpr Channel kChannels[] = {Channel::post, Channel::email, Channel::by_hand};

std::string_view to_string(Gender v);
std::string_view to_string(Designation v);
std::string_view to_string(Qualification v);
std::string_view to_string(AdminRole v);
std::string_view to_string(Specialty v);
std::string_view to_string(Region v);
std::string_view to_string(Channel v);

// Token parsers accept the canonical names plus common spellings
// ("Associate Professor", "M.Phil", "Human Resource Management", "By hand").
std::optional<Gender> parse_gender(std::string_view token);
std::optional<Designation> parse_designation(std::string_view token);
std::optional<Qualification> parse_qualification(std::string_view token);
std::optional<AdminRole> parse_admin_role(std::string_view token);
std::optional<Specialty> parse_specialty(std::string_view token);
std::optional<Region> parse_region(std::string_view token);
std::optional<Channel> parse_channel(std::string_view token);

struct ExpertProfile {
  std::string respondent_id;
  Gender gender = Gender::unspecified;
  Designation designation = Designation::other;
  Qualification qualification = Qualification::other;
  std::vector<AdminRole> admin_experience;  // sorted, unique
  Specialty specialty = Specialty::other;
  Region region = Region::other;

  bool has_admin(AdminRole role) const;
  bool operator==(const ExpertProfile&) const = default;
};

struct ParsedProfiles {
  std::vector<ExpertProfile> profiles;
  std::vector<std::string> warnings;
};

// CSV: respondent_id,gender,designation,qualification,admin_experience,
// specialty,region. Unknown enum tokens fall back to `other` (gender:
// `unspecified`) and produce a warning.
ParsedProfiles parse_profiles(std::string_view document);

enum class RatingMode { item, group };

std::string_view to_string(RatingMode mode);

struct ResponseRecord {
  std::string respondent_id;
  Channel channel = Channel::post;
  RatingMode mode = RatingMode::group;
  // Key is an item id ("3.2") in item mode or a group id ("3") in group mode.
  std::map<std::string, int> ratings;

  bool operator==(const ResponseRecord&) const = default;
};

struct ResponseDataset {
  int schema_version = 1;
  std::vector<ResponseRecord> records;
  std::map<std::string, ExpertProfile> profiles;
  std::map<Channel, std::int64_t> sent_counts;
  std::vector<std::string> notes;

  std::int64_t received(Channel channel) const;
  bool operator==(const ResponseDataset&) const = default;
};

// Long-form CSV (respondent_id,channel,mode,key,rating) or the JSON form
// {"schema_version": n, "records": [{"respondent_id", "channel", "mode",
// "ratings": {key: rating}}]}. Rows for one respondent are merged into one
// record; records keep first-appearance order.
ResponseDataset parse_responses(std::string_view document, const QuestionnaireSchema& schema);

// JSON object mapping channel name to questionnaires sent.
std::map<Channel, std::int64_t> parse_sent_counts(std::string_view document);

// Returns `dataset` with `profiles` joined in. Throws on duplicate ids.
ResponseDataset attach_profiles(ResponseDataset dataset,
                                const std::vector<ExpertProfile>& profiles);

enum class Completeness { strict, lenient };

// Missing ratings are errors under strict completeness and warnings under
// lenient. Records without a profile are errors once any profile is attached;
// profiles without records are warnings. Received above sent is an error.
ValidationReport validate_dataset(const ResponseDataset& dataset,
                                  const QuestionnaireSchema& schema,
                                  Completeness policy = Completeness::strict);

struct DistributionRow {
  Channel channel = Channel::post;
  std::int64_t sent = 0;
  std::int64_t received = 0;

  // Exact percentage as a double.
  double rate() const;
  // Percentage in hundredths of a percent, truncated (2873 for 25/87).
  std::int64_t rate_hundredths() const;
};

struct DistributionSummary {
  std::vector<DistributionRow> rows;  // post, email, by_hand order
  std::int64_t total_sent = 0;
  std::int64_t total_received = 0;

  double total_rate() const;
  std::int64_t total_rate_hundredths() const;
};

// Percentage received/sent in hundredths, truncated toward zero.
std::int64_t percent_hundredths(std::int64_t received, std::int64_t sent);

DistributionSummary distribution_summary(const ResponseDataset& dataset);

}  // namespace teacheval
