#include "teacheval/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "json.hpp"
#include "teacheval/csv.hpp"

namespace teacheval {

using nlohmann::json;

// ------------------------------------------------------------------- tokens

namespace {

// Lowercase, drop dots, map spaces and hyphens to '_', squeeze repeats.
std::string normalize_token(std::string_view raw) {
  std::string out;
  for (char c : csv::trim(raw)) {
    if (c == '.') continue;
    if (c == ' ' || c == '-' || c == '_' || c == '/') {
      if (!out.empty() && out.back() != '_') out += '_';
      continue;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

template <typename E>
std::optional<E> lookup(std::string_view raw,
                        std::initializer_list<std::pair<const char*, E>> table) {
  const auto tok = normalize_token(raw);
  for (const auto& [name, value] : table)
    if (tok == name) return value;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Gender v) {
  switch (v) {
    case Gender::male: return "male";
    case Gender::female: return "female";
    case Gender::unspecified: return "unspecified";
  }
  return "?";
}

std::string_view to_string(Designation v) {
  switch (v) {
    case Designation::professor: return "professor";
    case Designation::associate_professor: return "associate_professor";
    case Designation::assistant_professor: return "assistant_professor";
    case Designation::lecturer: return "lecturer";
    case Designation::other: return "other";
  }
  return "?";
}

std::string_view to_string(Qualification v) {
  switch (v) {
    case Qualification::post_doc: return "post_doc";
    case Qualification::phd: return "phd";
    case Qualification::mphil: return "mphil";
    case Qualification::other: return "other";
  }
  return "?";
}

std::string_view to_string(AdminRole v) {
  switch (v) {
    case AdminRole::vice_chancellor: return "vice_chancellor";
    case AdminRole::dean: return "dean";
    case AdminRole::chairman: return "chairman";
    case AdminRole::director: return "director";
  }
  return "?";
}

std::string_view to_string(Specialty v) {
  switch (v) {
    case Specialty::education: return "education";
    case Specialty::hrm: return "hrm";
    case Specialty::psychology: return "psychology";
    case Specialty::computer_science: return "computer_science";
    case Specialty::statistics: return "statistics";
    case Specialty::other: return "other";
  }
  return "?";
}

std::string_view to_string(Region v) {
  switch (v) {
    case Region::federal: return "federal";
    case Region::sindh: return "sindh";
    case Region::punjab: return "punjab";
    case Region::nwfp: return "nwfp";
    case Region::balochistan: return "balochistan";
    case Region::other: return "other";
  }
  return "?";
}

std::string_view to_string(Channel v) {
  switch (v) {
    case Channel::post: return "post";
    case Channel::email: return "email";
    case Channel::by_hand: return "by_hand";
  }
  return "?";
}

std::string_view to_string(RatingMode mode) {
  return mode == RatingMode::item ? "item" : "group";
}

std::optional<Gender> parse_gender(std::string_view token) {
  return lookup<Gender>(token, {{"male", Gender::male},
                                {"m", Gender::male},
                                {"female", Gender::female},
                                {"f", Gender::female},
                                {"unspecified", Gender::unspecified}});
}

std::optional<Designation> parse_designation(std::string_view token) {
  return lookup<Designation>(token, {{"professor", Designation::professor},
                                     {"prof", Designation::professor},
                                     {"associate_professor", Designation::associate_professor},
                                     {"assistant_professor", Designation::assistant_professor},
                                     {"lecturer", Designation::lecturer},
                                     {"other", Designation::other}});
}

std::optional<Qualification> parse_qualification(std::string_view token) {
  return lookup<Qualification>(token, {{"post_doc", Qualification::post_doc},
                                       {"postdoc", Qualification::post_doc},
                                       {"phd", Qualification::phd},
                                       {"mphil", Qualification::mphil},
                                       {"other", Qualification::other}});
}

std::optional<AdminRole> parse_admin_role(std::string_view token) {
  return lookup<AdminRole>(token, {{"vice_chancellor", AdminRole::vice_chancellor},
                                   {"vc", AdminRole::vice_chancellor},
                                   {"dean", AdminRole::dean},
                                   {"chairman", AdminRole::chairman},
                                   {"chairperson", AdminRole::chairman},
                                   {"director", AdminRole::director}});
}

std::optional<Specialty> parse_specialty(std::string_view token) {
  return lookup<Specialty>(token, {{"education", Specialty::education},
                                   {"hrm", Specialty::hrm},
                                   {"human_resource_management", Specialty::hrm},
                                   {"psychology", Specialty::psychology},
                                   {"computer_science", Specialty::computer_science},
                                   {"cs", Specialty::computer_science},
                                   {"statistics", Specialty::statistics},
                                   {"other", Specialty::other}});
}

std::optional<Region> parse_region(std::string_view token) {
  return lookup<Region>(token, {{"federal", Region::federal},
                                {"sindh", Region::sindh},
                                {"punjab", Region::punjab},
                                {"nwfp", Region::nwfp},
                                {"balochistan", Region::balochistan},
                                {"other", Region::other}});
}

std::optional<Channel> parse_channel(std::string_view token) {
  return lookup<Channel>(token, {{"post", Channel::post},
                                 {"through_post", Channel::post},
                                 {"email", Channel::email},
                                 {"e_mail", Channel::email},
                                 {"through_email", Channel::email},
                                 {"by_hand", Channel::by_hand},
                                 {"hand", Channel::by_hand}});
}

bool ExpertProfile::has_admin(AdminRole role) const {
  return std::find(admin_experience.begin(), admin_experience.end(), role) !=
         admin_experience.end();
}

// ----------------------------------------------------------------- profiles

ParsedProfiles parse_profiles(std::string_view document) {
  static const std::vector<std::string> header = {
      "respondent_id", "gender", "designation", "qualification", "admin_experience",
      "specialty",     "region"};
  const auto rows = csv::parse_with_header(document, header, "profiles");

  ParsedProfiles out;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    const std::string where = "profiles line " + std::to_string(row.line);
    const auto& f = row.fields;
    ExpertProfile p;
    p.respondent_id = f[0];
    if (p.respondent_id.empty())
      throw Error(ErrorCode::invalid_field, where, "missing respondent_id");
    if (!seen.insert(p.respondent_id).second)
      throw Error(ErrorCode::duplicate_id, where,
                  "respondent_id '" + p.respondent_id + "' appears more than once");

    auto fallback = [&](std::string_view column, const std::string& value,
                        std::string_view used) {
      out.warnings.push_back(where + ": " + std::string(column) + " '" + value +
                             "' not recognised, using " + std::string(used));
    };

    if (!f[1].empty()) {
      if (auto v = parse_gender(f[1])) p.gender = *v;
      else fallback("gender", f[1], "unspecified");
    }
    if (!f[2].empty()) {
      if (auto v = parse_designation(f[2])) p.designation = *v;
      else fallback("designation", f[2], "other");
    }
    if (!f[3].empty()) {
      if (auto v = parse_qualification(f[3])) p.qualification = *v;
      else fallback("qualification", f[3], "other");
    }
    std::string_view admin = f[4];
    while (!admin.empty()) {
      const auto cut = admin.find(';');
      const auto token = csv::trim(admin.substr(0, cut));
      admin = cut == std::string_view::npos ? std::string_view{} : admin.substr(cut + 1);
      if (token.empty()) continue;
      if (auto v = parse_admin_role(token)) p.admin_experience.push_back(*v);
      else
        out.warnings.push_back(where + ": admin_experience '" + token +
                               "' not recognised, dropped");
    }
    std::sort(p.admin_experience.begin(), p.admin_experience.end());
    p.admin_experience.erase(std::unique(p.admin_experience.begin(), p.admin_experience.end()),
                             p.admin_experience.end());
    if (!f[5].empty()) {
      if (auto v = parse_specialty(f[5])) p.specialty = *v;
      else fallback("specialty", f[5], "other");
    }
    if (!f[6].empty()) {
      if (auto v = parse_region(f[6])) p.region = *v;
      else fallback("region", f[6], "other");
    }
    out.profiles.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------- responses

std::int64_t ResponseDataset::received(Channel channel) const {
  return std::count_if(records.begin(), records.end(),
                       [channel](const ResponseRecord& r) { return r.channel == channel; });
}

namespace {

// Accumulates long-form rows into records, enforcing per-record consistency.
class RecordBuilder {
 public:
  explicit RecordBuilder(const QuestionnaireSchema& schema) : schema_(schema) {}

  void add(const std::string& where, const std::string& respondent, const std::string& channel,
           const std::string& mode, const std::string& key, int rating) {
    if (respondent.empty()) throw Error(ErrorCode::invalid_field, where, "missing respondent_id");
    const auto ch = parse_channel(channel);
    if (!ch) throw Error(ErrorCode::invalid_field, where, "unknown channel '" + channel + "'");
    RatingMode m;
    if (mode == "item") m = RatingMode::item;
    else if (mode == "group") m = RatingMode::group;
    else throw Error(ErrorCode::invalid_field, where, "mode must be 'item' or 'group'");

    check_key(where, m, key);
    check_rating(where, key, rating);

    auto [it, fresh] = index_.try_emplace(respondent, records_.size());
    if (fresh) records_.push_back({respondent, *ch, m, {}});
    auto& rec = records_[it->second];
    if (rec.mode != m)
      throw Error(ErrorCode::mixed_mode, where,
                  "respondent '" + respondent + "' mixes item-level and group-level ratings");
    if (rec.channel != *ch)
      throw Error(ErrorCode::invalid_field, where,
                  "respondent '" + respondent + "' listed under two channels");
    if (!rec.ratings.emplace(key, rating).second)
      throw Error(ErrorCode::duplicate_id, where,
                  "respondent '" + respondent + "' rates '" + key + "' twice");
  }

  std::vector<ResponseRecord> take() { return std::move(records_); }

 private:
  void check_key(const std::string& where, RatingMode mode, const std::string& key) const {
    if (mode == RatingMode::item) {
      if (!schema_.find_item(key))
        throw Error(ErrorCode::unknown_key, where, "unknown item id '" + key + "'");
      return;
    }
    int gid = 0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), gid);
    if (res.ec != std::errc{} || res.ptr != key.data() + key.size() || !schema_.find_group(gid) ||
        std::to_string(gid) != key)
      throw Error(ErrorCode::unknown_key, where, "unknown group id '" + key + "'");
  }

  void check_rating(const std::string& where, const std::string& key, int rating) const {
    if (rating < schema_.scale.min_level() || rating > schema_.scale.max_level())
      throw Error(ErrorCode::rating_out_of_range, where,
                  "rating " + std::to_string(rating) + " for '" + key + "' outside " +
                      std::to_string(schema_.scale.min_level()) + ".." +
                      std::to_string(schema_.scale.max_level()));
  }

  const QuestionnaireSchema& schema_;
  std::vector<ResponseRecord> records_;
  std::map<std::string, std::size_t> index_;
};

int parse_rating_text(const std::string& where, const std::string& key, const std::string& text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::rating_out_of_range, where,
                "rating '" + text + "' for '" + key + "' is not an integer");
  return value;
}

ResponseDataset parse_responses_json(std::string_view document,
                                     const QuestionnaireSchema& schema) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::unreadable_document, "responses byte " + std::to_string(e.byte),
                e.what());
  }
  if (!root.is_object() || !root.contains("records") || !root["records"].is_array())
    throw Error(ErrorCode::unreadable_document, "/", "expected an object with a 'records' list");

  ResponseDataset ds;
  ds.schema_version = schema.version;
  if (root.contains("schema_version")) {
    if (!root["schema_version"].is_number_integer())
      throw Error(ErrorCode::unreadable_document, "/schema_version", "expected an integer");
    ds.schema_version = root["schema_version"].get<int>();
  }
  if (ds.schema_version != schema.version)
    throw Error(ErrorCode::invalid_field, "/schema_version",
                "responses target schema version " + std::to_string(ds.schema_version) +
                    ", schema is version " + std::to_string(schema.version));

  RecordBuilder builder(schema);
  const auto& recs = root["records"];
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const std::string where = "/records/" + std::to_string(i);
    const auto& r = recs[i];
    if (!r.is_object() || !r.contains("respondent_id") || !r["respondent_id"].is_string() ||
        !r.contains("channel") || !r["channel"].is_string() || !r.contains("mode") ||
        !r["mode"].is_string() || !r.contains("ratings") || !r["ratings"].is_object())
      throw Error(ErrorCode::unreadable_document, where,
                  "expected {respondent_id, channel, mode, ratings}");
    const auto id = r["respondent_id"].get<std::string>();
    const auto channel = r["channel"].get<std::string>();
    const auto mode = r["mode"].get<std::string>();
    if (r["ratings"].empty())
      throw Error(ErrorCode::invalid_record, where, "record has no ratings");
    for (const auto& [key, value] : r["ratings"].items()) {
      const std::string at = where + "/ratings/" + key;
      if (!value.is_number_integer())
        throw Error(ErrorCode::rating_out_of_range, at,
                    "rating for '" + key + "' is not an integer");
      builder.add(at, id, channel, mode, key, value.get<int>());
    }
  }
  ds.records = builder.take();
  return ds;
}

}  // namespace

ResponseDataset parse_responses(std::string_view document, const QuestionnaireSchema& schema) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && document[first] == '{')
    return parse_responses_json(document, schema);

  static const std::vector<std::string> header = {"respondent_id", "channel", "mode", "key",
                                                  "rating"};
  const auto rows = csv::parse_with_header(document, header, "responses");
  RecordBuilder builder(schema);
  for (const auto& row : rows) {
    const std::string where = "responses line " + std::to_string(row.line);
    const auto& f = row.fields;
    builder.add(where, f[0], f[1], f[2], f[3], parse_rating_text(where, f[3], f[4]));
  }
  ResponseDataset ds;
  ds.schema_version = schema.version;
  ds.records = builder.take();
  return ds;
}

std::map<Channel, std::int64_t> parse_sent_counts(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::unreadable_document, "sent counts byte " + std::to_string(e.byte),
                e.what());
  }
  if (!root.is_object())
    throw Error(ErrorCode::unreadable_document, "/", "sent counts must be a JSON object");
  std::map<Channel, std::int64_t> out;
  for (const auto& [key, value] : root.items()) {
    const auto ch = parse_channel(key);
    if (!ch) throw Error(ErrorCode::invalid_field, "/" + key, "unknown channel '" + key + "'");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      throw Error(ErrorCode::invalid_field, "/" + key, "sent count must be a nonnegative integer");
    if (!out.emplace(*ch, value.get<std::int64_t>()).second)
      throw Error(ErrorCode::duplicate_id, "/" + key, "channel listed twice");
  }
  return out;
}

ResponseDataset attach_profiles(ResponseDataset dataset,
                                const std::vector<ExpertProfile>& profiles) {
  for (const auto& p : profiles)
    if (!dataset.profiles.emplace(p.respondent_id, p).second)
      throw Error(ErrorCode::duplicate_id, "profile " + p.respondent_id,
                  "respondent_id appears more than once");
  return dataset;
}

// --------------------------------------------------------------- validation

ValidationReport validate_dataset(const ResponseDataset& dataset,
                                  const QuestionnaireSchema& schema, Completeness policy) {
  ValidationReport report;
  auto add = [&](Severity sev, ErrorCode code, std::string location, std::string message) {
    report.findings.push_back({sev, code, std::move(location), std::move(message)});
  };
  const Severity missing_sev =
      policy == Completeness::strict ? Severity::error : Severity::warning;

  if (dataset.schema_version != schema.version)
    add(Severity::error, ErrorCode::invalid_field, "dataset",
        "dataset targets schema version " + std::to_string(dataset.schema_version) +
            ", schema is version " + std::to_string(schema.version));

  std::set<std::string> ids;
  for (const auto& rec : dataset.records) {
    const std::string where = "respondent " + rec.respondent_id;
    if (!ids.insert(rec.respondent_id).second)
      add(Severity::error, ErrorCode::duplicate_id, where, "respondent has more than one record");

    for (const auto& [key, rating] : rec.ratings) {
      const bool known = rec.mode == RatingMode::item
                             ? schema.find_item(key) != nullptr
                             : std::any_of(schema.groups.begin(), schema.groups.end(),
                                           [&](const FactorGroup& g) {
                                             return std::to_string(g.group_id) == key;
                                           });
      if (!known)
        add(Severity::error, ErrorCode::unknown_key, where, "unknown key '" + key + "'");
      if (rating < schema.scale.min_level() || rating > schema.scale.max_level())
        add(Severity::error, ErrorCode::rating_out_of_range, where,
            "rating " + std::to_string(rating) + " for '" + key + "' outside scale");
    }

    if (rec.mode == RatingMode::group) {
      for (const auto& g : schema.groups) {
        const auto key = std::to_string(g.group_id);
        if (!rec.ratings.count(key))
          add(missing_sev, ErrorCode::missing_rating, where,
              "no rating for group " + key + " (" + g.name + ")");
      }
    } else {
      for (const auto& g : schema.groups)
        for (const auto& it : g.items)
          if (!rec.ratings.count(it.item_id))
            add(missing_sev, ErrorCode::missing_rating, where,
                "no rating for item " + it.item_id);
    }

    if (!dataset.profiles.empty() && !dataset.profiles.count(rec.respondent_id))
      add(Severity::error, ErrorCode::invalid_record, where, "no expert profile");
  }

  if (!dataset.profiles.empty())
    for (const auto& [id, profile] : dataset.profiles)
      if (!ids.count(id))
        add(Severity::warning, ErrorCode::invalid_record, "profile " + id,
            "profile has no response record");

  if (!dataset.sent_counts.empty()) {
    for (auto ch : kChannels) {
      const auto received = dataset.received(ch);
      const auto it = dataset.sent_counts.find(ch);
      const std::int64_t sent = it == dataset.sent_counts.end() ? 0 : it->second;
      if (received > sent)
        add(Severity::error, ErrorCode::count_mismatch, "channel " + std::string(to_string(ch)),
            std::to_string(received) + " responses received but " + std::to_string(sent) +
                " questionnaires sent");
    }
  }
  return report;
}

// ------------------------------------------------------------- distribution

std::int64_t percent_hundredths(std::int64_t received, std::int64_t sent) {
  if (sent <= 0) return 0;
  return received * 10000 / sent;
}

double DistributionRow::rate() const {
  return sent > 0 ? 100.0 * static_cast<double>(received) / static_cast<double>(sent) : 0.0;
}

std::int64_t DistributionRow::rate_hundredths() const { return percent_hundredths(received, sent); }

double DistributionSummary::total_rate() const {
  return total_sent > 0
             ? 100.0 * static_cast<double>(total_received) / static_cast<double>(total_sent)
             : 0.0;
}

std::int64_t DistributionSummary::total_rate_hundredths() const {
  return percent_hundredths(total_received, total_sent);
}

DistributionSummary distribution_summary(const ResponseDataset& dataset) {
  DistributionSummary out;
  for (auto ch : kChannels) {
    const auto it = dataset.sent_counts.find(ch);
    const std::int64_t sent = it == dataset.sent_counts.end() ? 0 : it->second;
    const std::int64_t received = dataset.received(ch);
    if (sent == 0 && received == 0 && it == dataset.sent_counts.end()) continue;
    if (sent == 0 && received > 0)
      throw Error(ErrorCode::zero_sent, "channel " + std::string(to_string(ch)),
                  std::to_string(received) + " responses received but none sent");
    out.rows.push_back({ch, sent, received});
    out.total_sent += sent;
    out.total_received += received;
  }
  return out;
}

}  // namespace teacheval
