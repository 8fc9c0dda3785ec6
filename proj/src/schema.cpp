#include "teacheval/schema.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace teacheval {

using nlohmann::json;

std::string_view to_string(RevisionKind kind) {
  switch (kind) {
    case RevisionKind::add_item: return "AddItem";
    case RevisionKind::delete_item: return "DeleteItem";
    case RevisionKind::move_item: return "MoveItem";
    case RevisionKind::edit_item: return "EditItem";
  }
  return "?";
}

std::size_t QuestionnaireSchema::item_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.items.size();
  return n;
}

const FactorGroup* QuestionnaireSchema::find_group(int group_id) const {
  for (const auto& g : groups)
    if (g.group_id == group_id) return &g;
  return nullptr;
}

const Item* QuestionnaireSchema::find_item(std::string_view item_id) const {
  for (const auto& g : groups)
    for (const auto& it : g.items)
      if (it.item_id == item_id) return &it;
  return nullptr;
}

int QuestionnaireSchema::group_of(std::string_view item_id) const {
  for (const auto& g : groups)
    for (const auto& it : g.items)
      if (it.item_id == item_id) return g.group_id;
  return 0;
}

// ---------------------------------------------------------------- validation

ValidationReport validate_schema(const QuestionnaireSchema& schema) {
  ValidationReport report;
  auto add = [&](ErrorCode code, std::string location, std::string message) {
    report.findings.push_back(
        {Severity::error, code, std::move(location), std::move(message)});
  };

  const auto& levels = schema.scale.levels;
  if (levels.size() != 5) {
    add(ErrorCode::malformed_scale, "/scale",
        "expected 5 levels, found " + std::to_string(levels.size()));
  } else {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i].level != static_cast<int>(i) + 1)
        add(ErrorCode::malformed_scale, "/scale/" + std::to_string(i),
            "levels must be 1..5 in increasing order");
      if (levels[i].label.empty())
        add(ErrorCode::malformed_scale, "/scale/" + std::to_string(i),
            "level " + std::to_string(levels[i].level) + " has no anchor label");
    }
  }

  if (schema.groups.empty()) add(ErrorCode::empty_group, "/groups", "schema has no groups");

  bool contiguous = true;
  for (std::size_t i = 0; i < schema.groups.size(); ++i)
    contiguous = contiguous && schema.groups[i].group_id == static_cast<int>(i) + 1;
  if (!contiguous) {
    std::string ids;
    for (const auto& g : schema.groups)
      ids += (ids.empty() ? "" : ",") + std::to_string(g.group_id);
    add(ErrorCode::group_numbering, "/groups",
        "group ids must run 1.." + std::to_string(schema.groups.size()) +
            " in order, found (" + ids + ")");
  }

  std::set<std::string> seen;
  for (const auto& g : schema.groups) {
    const std::string where = "group " + std::to_string(g.group_id);
    if (g.name.empty()) add(ErrorCode::invalid_field, where, "group name is empty");
    if (g.items.empty()) add(ErrorCode::empty_group, where, "group has no items");
    for (const auto& it : g.items) {
      if (it.item_id.empty()) {
        add(ErrorCode::invalid_field, where, "item with empty id");
        continue;
      }
      if (!seen.insert(it.item_id).second)
        add(ErrorCode::duplicate_id, "item " + it.item_id, "item id appears more than once");
      if (it.label.empty())
        add(ErrorCode::invalid_field, "item " + it.item_id, "item label is empty");
    }
  }
  return report;
}

namespace {

void throw_first(const ValidationReport& report) {
  if (report.clean()) return;
  const auto& f = report.findings.front();
  throw Error(f.code, f.location, f.message);
}

// ------------------------------------------------------------- JSON helpers

std::string pointer(const json::json_pointer& p) { return p.to_string().empty() ? "/" : p.to_string(); }

const json& require(const json& obj, const char* key, const json::json_pointer& at) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::unreadable_document, pointer(at), std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const json::json_pointer& at) {
  const auto& v = require(obj, key, at);
  if (!v.is_string())
    throw Error(ErrorCode::unreadable_document, pointer(at / key), "expected a string");
  return v.get<std::string>();
}

int require_int(const json& obj, const char* key, const json::json_pointer& at) {
  const auto& v = require(obj, key, at);
  if (!v.is_number_integer())
    throw Error(ErrorCode::unreadable_document, pointer(at / key), "expected an integer");
  return v.get<int>();
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const json::json_pointer& at) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  if (!obj.at(key).is_string())
    throw Error(ErrorCode::unreadable_document, pointer(at / key), "expected a string or null");
  return obj.at(key).get<std::string>();
}

json optional_json(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

RevisionKind parse_kind(const std::string& s, const json::json_pointer& at) {
  for (auto k : {RevisionKind::add_item, RevisionKind::delete_item, RevisionKind::move_item,
                 RevisionKind::edit_item})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::unreadable_document, pointer(at), "unknown revision kind '" + s + "'");
}

RevisionOp revision_from_json(const json& j, const json::json_pointer& at) {
  RevisionOp op;
  op.kind = parse_kind(require_string(j, "kind", at), at / "kind");
  op.target = require_string(j, "target", at);
  if (j.contains("group_id")) op.group_id = require_int(j, "group_id", at);
  if (j.contains("label")) op.label = require_string(j, "label", at);
  op.gloss = optional_string(j, "gloss", at);
  if (j.contains("applied_in_version"))
    op.applied_in_version = require_int(j, "applied_in_version", at);
  return op;
}

json revision_to_json(const RevisionOp& op) {
  json j = json::object();
  j["kind"] = std::string(to_string(op.kind));
  j["target"] = op.target;
  j["group_id"] = op.group_id;
  j["label"] = op.label;
  j["gloss"] = optional_json(op.gloss);
  j["applied_in_version"] = op.applied_in_version;
  return j;
}

json parse_json(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::unreadable_document, "byte " + std::to_string(e.byte), e.what());
  }
}

}  // namespace

// ------------------------------------------------------------ serialization

QuestionnaireSchema parse_schema_structure(std::string_view document) {
  const json root = parse_json(document);
  const json::json_pointer top;
  if (!root.is_object())
    throw Error(ErrorCode::unreadable_document, "/", "schema document must be a JSON object");

  QuestionnaireSchema schema;
  schema.version = require_int(root, "version", top);
  if (schema.version < 1)
    throw Error(ErrorCode::invalid_field, "/version", "version must be >= 1");

  const auto& scale = require(root, "scale", top);
  if (!scale.is_array())
    throw Error(ErrorCode::malformed_scale, "/scale", "scale must be a list of {level, label}");
  for (std::size_t i = 0; i < scale.size(); ++i) {
    const auto at = json::json_pointer("/scale") / i;
    if (!scale[i].is_object() || !scale[i].contains("level") || !scale[i].contains("label") ||
        !scale[i]["level"].is_number_integer() || !scale[i]["label"].is_string())
      throw Error(ErrorCode::malformed_scale, pointer(at), "expected {level: int, label: string}");
    schema.scale.levels.push_back({scale[i]["level"].get<int>(), scale[i]["label"].get<std::string>()});
  }
  schema.scale.description = optional_string(root, "scale_description", top).value_or("");

  const auto& groups = require(root, "groups", top);
  if (!groups.is_array())
    throw Error(ErrorCode::unreadable_document, "/groups", "groups must be a list");
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto gat = json::json_pointer("/groups") / gi;
    FactorGroup g;
    g.group_id = require_int(groups[gi], "group_id", gat);
    g.name = require_string(groups[gi], "name", gat);
    const auto& items = require(groups[gi], "items", gat);
    if (!items.is_array())
      throw Error(ErrorCode::unreadable_document, pointer(gat / "items"), "items must be a list");
    for (std::size_t ii = 0; ii < items.size(); ++ii) {
      const auto iat = gat / "items" / ii;
      Item it;
      it.item_id = require_string(items[ii], "item_id", iat);
      it.label = require_string(items[ii], "label", iat);
      it.gloss = optional_string(items[ii], "gloss", iat);
      it.paper_alias = optional_string(items[ii], "paper_alias", iat);
      g.items.push_back(std::move(it));
    }
    schema.groups.push_back(std::move(g));
  }

  if (root.contains("revisions")) {
    const auto& revs = root.at("revisions");
    if (!revs.is_array())
      throw Error(ErrorCode::unreadable_document, "/revisions", "revisions must be a list");
    for (std::size_t i = 0; i < revs.size(); ++i)
      schema.revision_log.push_back(revision_from_json(revs[i], json::json_pointer("/revisions") / i));
  }

  return schema;
}

QuestionnaireSchema parse_schema(std::string_view document) {
  auto schema = parse_schema_structure(document);
  throw_first(validate_schema(schema));
  return schema;
}

std::string serialize_schema(const QuestionnaireSchema& schema) {
  json root = json::object();
  root["version"] = schema.version;
  json scale = json::array();
  for (const auto& l : schema.scale.levels) scale.push_back({{"level", l.level}, {"label", l.label}});
  root["scale"] = std::move(scale);
  root["scale_description"] = schema.scale.description;
  json groups = json::array();
  for (const auto& g : schema.groups) {
    json items = json::array();
    for (const auto& it : g.items)
      items.push_back({{"item_id", it.item_id},
                       {"label", it.label},
                       {"gloss", optional_json(it.gloss)},
                       {"paper_alias", optional_json(it.paper_alias)}});
    groups.push_back({{"group_id", g.group_id}, {"name", g.name}, {"items", std::move(items)}});
  }
  root["groups"] = std::move(groups);
  json revs = json::array();
  for (const auto& op : schema.revision_log) revs.push_back(revision_to_json(op));
  root["revisions"] = std::move(revs);
  return root.dump(2) + "\n";
}

std::vector<RevisionOp> parse_revisions(std::string_view document) {
  const json root = parse_json(document);
  if (!root.is_array())
    throw Error(ErrorCode::unreadable_document, "/", "revisions document must be a JSON list");
  std::vector<RevisionOp> ops;
  for (std::size_t i = 0; i < root.size(); ++i)
    ops.push_back(revision_from_json(root[i], json::json_pointer() / i));
  return ops;
}

// ---------------------------------------------------------------- revisions

namespace {

struct ItemPos {
  std::size_t group = 0;
  std::size_t index = 0;
};

std::optional<ItemPos> locate(const QuestionnaireSchema& s, std::string_view id) {
  for (std::size_t g = 0; g < s.groups.size(); ++g)
    for (std::size_t i = 0; i < s.groups[g].items.size(); ++i)
      if (s.groups[g].items[i].item_id == id) return ItemPos{g, i};
  return std::nullopt;
}

std::optional<std::size_t> locate_group(const QuestionnaireSchema& s, int group_id) {
  for (std::size_t g = 0; g < s.groups.size(); ++g)
    if (s.groups[g].group_id == group_id) return g;
  return std::nullopt;
}

void apply_one(QuestionnaireSchema& s, const RevisionOp& op, std::size_t index) {
  const std::string where = "revision " + std::to_string(index) + " (" +
                            std::string(to_string(op.kind)) + " " + op.target + ")";
  const auto pos = locate(s, op.target);

  if (op.kind == RevisionKind::add_item) {
    if (op.target.empty()) throw Error(ErrorCode::invalid_field, where, "new item needs an id");
    if (pos) throw Error(ErrorCode::duplicate_id, where, "item id already exists");
    if (op.label.empty()) throw Error(ErrorCode::invalid_field, where, "new item needs a label");
    const auto g = locate_group(s, op.group_id);
    if (!g)
      throw Error(ErrorCode::unresolved_target, where,
                  "no group " + std::to_string(op.group_id));
    s.groups[*g].items.push_back({op.target, op.label, op.gloss, std::nullopt});
    return;
  }

  if (!pos) throw Error(ErrorCode::unresolved_target, where, "no such item");
  auto& items = s.groups[pos->group].items;

  switch (op.kind) {
    case RevisionKind::delete_item:
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(pos->index));
      break;
    case RevisionKind::move_item: {
      const auto g = locate_group(s, op.group_id);
      if (!g)
        throw Error(ErrorCode::unresolved_target, where,
                    "no group " + std::to_string(op.group_id));
      Item moved = std::move(items[pos->index]);
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(pos->index));
      s.groups[*g].items.push_back(std::move(moved));
      break;
    }
    case RevisionKind::edit_item: {
      auto& it = items[pos->index];
      if (!op.label.empty()) it.label = op.label;
      it.gloss = op.gloss;
      break;
    }
    case RevisionKind::add_item:
      break;
  }
}

}  // namespace

QuestionnaireSchema apply_revisions(const QuestionnaireSchema& schema,
                                    std::span<const RevisionOp> revisions) {
  QuestionnaireSchema next = schema;
  next.version = schema.version + 1;
  for (std::size_t i = 0; i < revisions.size(); ++i) {
    apply_one(next, revisions[i], i);
    RevisionOp logged = revisions[i];
    logged.applied_in_version = next.version;
    next.revision_log.push_back(std::move(logged));
  }
  const auto report = validate_schema(next);
  if (!report.clean()) {
    const auto& f = report.findings.front();
    throw Error(f.code, f.location, "revisions leave an invalid schema: " + f.message);
  }
  return next;
}

QuestionnaireSchema replay_revisions(const QuestionnaireSchema& base,
                                     std::span<const RevisionOp> log) {
  QuestionnaireSchema current = base;
  std::size_t start = 0;
  while (start < log.size()) {
    std::size_t end = start + 1;
    while (end < log.size() && log[end].applied_in_version == log[start].applied_in_version) ++end;
    current = apply_revisions(current, log.subspan(start, end - start));
    start = end;
  }
  return current;
}

}  // namespace teacheval
