#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teacheval/error.hpp"

namespace teacheval {

struct ScaleLevel {
  int level = 0;
  std::string label;

  bool operator==(const ScaleLevel&) const = default;
};

// Five-point importance scale, levels 1..5 in increasing order.
struct FuzzyScale {
  std::vector<ScaleLevel> levels;
  std::string description;

  int min_level() const { return levels.empty() ? 0 : levels.front().level; }
  int max_level() const { return levels.empty() ? 0 : levels.back().level; }

  bool operator==(const FuzzyScale&) const = default;
};

struct Item {
  std::string item_id;  // "<group>.<ordinal>", e.g. "1.7"
  std::string label;
  std::optional<std::string> gloss;
  // Number as printed on the original instrument, when it differs from or
  // should be traced alongside item_id.
  std::optional<std::string> paper_alias;

  bool operator==(const Item&) const = default;
};

struct FactorGroup {
  int group_id = 0;
  std::string name;
  std::vector<Item> items;

  bool operator==(const FactorGroup&) const = default;
};

enum class RevisionKind { add_item, delete_item, move_item, edit_item };

std::string_view to_string(RevisionKind kind);

// One edit to the instrument.
//   add_item:    target is the fresh id; group_id, label, gloss describe it.
//   delete_item: target only.
//   move_item:   target moves (id unchanged) to the end of group_id.
//   edit_item:   target gets label (if nonempty) and gloss.
struct RevisionOp {
  RevisionKind kind = RevisionKind::delete_item;
  std::string target;
  int group_id = 0;
  std::string label;
  std::optional<std::string> gloss;
  // Schema version this op produced; 0 until applied.
  int applied_in_version = 0;

  bool operator==(const RevisionOp&) const = default;
};

struct QuestionnaireSchema {
  int version = 1;
  FuzzyScale scale;
  std::vector<FactorGroup> groups;
  std::vector<RevisionOp> revision_log;

  std::size_t item_count() const;
  const FactorGroup* find_group(int group_id) const;
  const Item* find_item(std::string_view item_id) const;
  // Group id owning `item_id`, or 0.
  int group_of(std::string_view item_id) const;

  bool operator==(const QuestionnaireSchema&) const = default;
};

// The final 15-group, 99-item teacher-performance instrument.
const QuestionnaireSchema& canonical_schema();

// Scale with the short anchor wording (5 = critically important ... 1 = do
// not affect).
FuzzyScale canonical_scale();

QuestionnaireSchema parse_schema(std::string_view document);
// Structural parse only: no invariant checks, so validate_schema can report
// every violation of a malformed instrument.
QuestionnaireSchema parse_schema_structure(std::string_view document);
std::string serialize_schema(const QuestionnaireSchema& schema);

ValidationReport validate_schema(const QuestionnaireSchema& schema);

// Applies `revisions` in order to a copy of `schema`. Either every op applies
// and the result is valid, or Error is thrown and nothing changes.
QuestionnaireSchema apply_revisions(const QuestionnaireSchema& schema,
                                    std::span<const RevisionOp> revisions);

// Re-applies a revision log to its base schema, one batch per recorded
// version.
QuestionnaireSchema replay_revisions(const QuestionnaireSchema& base,
                                     std::span<const RevisionOp> log);

std::vector<RevisionOp> parse_revisions(std::string_view document);

}  // namespace teacheval
