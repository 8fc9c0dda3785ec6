#include "teacheval/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "teacheval/analytics.hpp"
#include "teacheval/ingest.hpp"
#include "teacheval/report.hpp"
#include "teacheval/schema.hpp"
#include "teacheval/scoring.hpp"
#include "teacheval/weights.hpp"

namespace teacheval::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validation findings already written; exit 1 without another diagnostic.
struct FindingsFailure {};

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw IoFailure("cannot read '" + path + "': no such file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string schema = "builtin";
  std::string responses;
  std::string profiles;
  std::string sent;
  std::vector<std::string> weights;
  std::string ratings;
  std::string revisions;
  std::string convention = "sample";
  std::string level = "group";
  std::string format = "text";
  std::string out;
  std::vector<std::string> where;
  bool lenient = false;
};

class Pipeline {
 public:
  Pipeline(const Options& opt, std::ostream& err) : opt_(opt), err_(err) {}

  Completeness policy() const { return opt_.lenient ? Completeness::lenient : Completeness::strict; }
  report::Format format() const { return opt_.format == "csv" ? report::Format::csv : report::Format::text; }
  StdConvention convention() const { return *parse_convention(opt_.convention); }

  const QuestionnaireSchema& schema() {
    if (!schema_) {
      if (opt_.schema == "builtin") schema_ = canonical_schema();
      else schema_ = parse_schema(read_file(opt_.schema));
    }
    return *schema_;
  }

  // Responses with profiles and sent counts attached when given.
  ResponseDataset dataset() {
    auto ds = parse_responses(read_file(opt_.responses), schema());
    if (!opt_.profiles.empty()) {
      auto parsed = parse_profiles(read_file(opt_.profiles));
      for (const auto& w : parsed.warnings) err_ << "warning: " << w << '\n';
      ds = attach_profiles(std::move(ds), parsed.profiles);
    }
    if (!opt_.sent.empty()) ds.sent_counts = parse_sent_counts(read_file(opt_.sent));
    return ds;
  }

  // Strict mode: error findings stop the run.
  void gate(const ValidationReport& report) {
    if (report.findings.empty()) return;
    err_ << report::validation(report, report::Format::text);
    if (report.error_count() > 0) throw FindingsFailure{};
  }

  ResponseDataset checked_dataset() {
    auto ds = dataset();
    gate(validate_dataset(ds, schema(), policy()));
    if (!opt_.where.empty()) {
      CohortPredicate pred;
      for (const auto& w : opt_.where) add_constraint(pred, w);
      if (ds.profiles.empty())
        throw Error(ErrorCode::invalid_field, "--where", "cohort filters need --profiles");
      ds = cohort_filter(ds, pred);
      for (const auto& n : ds.notes) err_ << "note: " << n << '\n';
    }
    return ds;
  }

  WeightVector weights(const std::string& spec) {
    if (spec == kBuiltinTableName) return load_weight_table(spec, schema());
    if (spec == "uniform") return uniform_weights(schema());
    if (spec == "mean") {
      StatsSummary stats;
      if (opt_.responses.empty()) {
        if (schema().groups.size() != reference_group_summary().entries.size())
          throw Error(ErrorCode::weight_group_mismatch, "--weights mean",
                      "published group means only fit the canonical schema; pass --responses");
        stats = reference_group_summary();
      } else {
        stats = group_stats(checked_dataset(), schema(), convention(), policy());
      }
      return derive_weights_mean(stats);
    }
    return load_weight_table(read_file(spec), schema());
  }

 private:
  const Options& opt_;
  std::ostream& err_;
  std::optional<QuestionnaireSchema> schema_;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
}

std::string dispatch(const std::string& command, const Options& opt, std::ostream& err,
                     int& status) {
  Pipeline p(opt, err);
  const auto fmt = p.format();

  if (command == "schema-validate") {
    const auto schema = opt.schema == "builtin" ? canonical_schema()
                                                : parse_schema_structure(read_file(opt.schema));
    const auto report = validate_schema(schema);
    if (!report.clean()) status = kExitDataError;
    if (opt.format == "json") {
      if (!report.clean()) {
        err << report::validation(report, report::Format::text);
        throw FindingsFailure{};
      }
      return serialize_schema(schema);
    }
    return report::schema_summary(schema, report, fmt);
  }

  if (command == "schema-revise") {
    require(opt.revisions, "--revisions");
    const auto ops = parse_revisions(read_file(opt.revisions));
    const auto revised = apply_revisions(p.schema(), ops);
    if (opt.format == "json") return serialize_schema(revised);
    return report::schema_summary(revised, validate_schema(revised), fmt);
  }

  if (command == "ingest-check") {
    require(opt.responses, "--responses");
    const auto ds = p.dataset();
    const auto report = validate_dataset(ds, p.schema(), p.policy());
    if (report.error_count() > 0) status = kExitDataError;
    return report::validation(report, fmt);
  }

  if (command == "stats") {
    require(opt.responses, "--responses");
    const auto ds = p.checked_dataset();
    if (opt.level == "item")
      return report::stats(item_stats(ds, p.schema(), p.convention(), p.policy()), p.schema(), fmt,
                           "Item response summary");
    return report::stats(group_stats(ds, p.schema(), p.convention(), p.policy()), p.schema(), fmt,
                         "Response summary by main group of factors");
  }

  if (command == "distribution") {
    require(opt.responses, "--responses");
    require(opt.sent, "--sent");
    const auto ds = p.dataset();
    return report::distribution(distribution_summary(ds), fmt);
  }

  if (command == "weights-derive") {
    const auto spec = opt.weights.empty() ? std::string("mean") : opt.weights.front();
    if (opt.weights.size() > 1)
      throw CLI::ValidationError("--weights", "weights-derive takes one weight source");
    return report::weights(p.weights(spec), p.schema(), fmt);
  }

  if (command == "weights-compare") {
    if (opt.weights.size() != 2)
      throw CLI::ValidationError("--weights", "weights-compare needs exactly two --weights");
    const auto a = p.weights(opt.weights[0]);
    const auto b = p.weights(opt.weights[1]);
    return report::comparison(compare_weights(a, b), a, b, p.schema(), fmt);
  }

  if (command == "score" || command == "rank-report") {
    require(opt.ratings, "--ratings");
    if (opt.weights.size() > 1)
      throw CLI::ValidationError("--weights", command + " takes one weight source");
    const auto spec = opt.weights.empty() ? std::string(kBuiltinTableName) : opt.weights.front();
    const auto records = parse_evaluatee_ratings(read_file(opt.ratings), p.schema());
    const auto w = p.weights(spec);
    ScoringOptions so;
    so.policy = p.policy();
    auto cards = score_all(records, w, p.schema(), so);
    if (command == "rank-report") cards = rank(std::move(cards));
    return report::scorecards(cards, p.schema(), fmt);
  }

  throw CLI::ValidationError("subcommand", "unknown subcommand " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teacher-performance evaluation pipeline: questionnaire schema, expert "
               "responses, statistics, group weights and weighted-sum scoring.",
               "teacheval"};
  app.require_subcommand(1, 1);
  Options opt;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"schema-validate", "Validate a questionnaire schema"},
      {"schema-revise", "Apply a revision list to a schema"},
      {"ingest-check", "Validate responses, profiles and sent counts"},
      {"stats", "Per-group or per-item mean and standard deviation"},
      {"distribution", "Questionnaire distribution and response rates"},
      {"weights-derive", "Build a group weight vector"},
      {"weights-compare", "Compare two group weight vectors"},
      {"score", "Score evaluatees with the weighted summation"},
      {"rank-report", "Score and rank evaluatees"},
  };
  const std::vector<std::string> formats_json = {"text", "csv", "json"};
  const std::vector<std::string> formats = {"text", "csv"};

  for (const auto& s : specs) {
    const std::string name = s.name;
    auto* sub = app.add_subcommand(name, s.help);
    sub->add_option("--schema", opt.schema, "Schema JSON path or 'builtin'")->capture_default_str();
    sub->add_option("--out", opt.out, "Write the report to this path");
    const bool schema_cmd = name == "schema-validate" || name == "schema-revise";
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember(schema_cmd ? formats_json : formats))
        ->capture_default_str();
    if (name == "schema-revise")
      sub->add_option("--revisions", opt.revisions, "JSON list of revision ops")->required();
    if (!schema_cmd && name != "score" && name != "rank-report") {
      sub->add_option("--responses", opt.responses, "Response CSV or JSON");
      sub->add_option("--profiles", opt.profiles, "Expert profile CSV");
      sub->add_option("--sent", opt.sent, "Sent counts JSON");
      sub->add_option("--convention", opt.convention, "Standard deviation convention")
          ->check(CLI::IsMember({"sample", "population"}))
          ->capture_default_str();
    }
    if (name == "stats") {
      sub->add_option("--level", opt.level, "Aggregate by group or item")
          ->check(CLI::IsMember({"group", "item"}))
          ->capture_default_str();
      sub->add_option("--where", opt.where, "Cohort constraint attribute=value (repeatable)");
    }
    if (name == "weights-derive" || name == "weights-compare" || name == "score" ||
        name == "rank-report")
      sub->add_option("--weights", opt.weights,
                      "Weight file path, paper-table-4, uniform or mean");
    if (name == "score" || name == "rank-report")
      sub->add_option("--ratings", opt.ratings, "Evaluatee ratings CSV")->required();
    if (!schema_cmd) sub->add_flag("--lenient", opt.lenient, "Downgrade missing ratings to warnings");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto* sub = app.get_subcommands().front();
  int status = kExitOk;
  try {
    const auto text = dispatch(sub->get_name(), opt, err, status);
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoFailure("cannot write '" + opt.out + "'");
      file << text;
      if (!file) throw IoFailure("write to '" + opt.out + "' failed");
    }
    return status;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FindingsFailure&) {
    return kExitDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace teacheval::cli
