#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "teacheval/schema.hpp"

using namespace teacheval;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected teacheval::Error";
  return ErrorCode::invalid_field;
}

RevisionOp del(std::string id) { return {RevisionKind::delete_item, std::move(id)}; }

}  // namespace

TEST(CanonicalSchema, DimensionsMatchTheInstrument) {
  const auto& s = canonical_schema();
  EXPECT_EQ(s.groups.size(), 15u);
  EXPECT_EQ(s.item_count(), 99u);
  EXPECT_EQ(s.version, 1);

  // Appendix-I rows counted by hand per group.
  const std::vector<std::size_t> expected = {15, 13, 6, 10, 4, 6, 6, 4, 4, 6, 3, 5, 6, 5, 6};
  std::size_t sum = 0;
  for (std::size_t g = 0; g < expected.size(); ++g) {
    EXPECT_EQ(s.groups[g].items.size(), expected[g]) << "group " << g + 1;
    EXPECT_EQ(s.groups[g].group_id, static_cast<int>(g) + 1);
    sum += expected[g];
  }
  EXPECT_EQ(sum, 99u);
  EXPECT_EQ(s.groups[0].name, "Personal Abilities");
  EXPECT_EQ(s.groups[10].name, "Promotion Factors");
  EXPECT_EQ(s.groups[10].items.size(), 3u);
}

TEST(CanonicalSchema, IsDeterministicAndValid) {
  EXPECT_EQ(&canonical_schema(), &canonical_schema());
  EXPECT_TRUE(validate_schema(canonical_schema()).clean());
}

TEST(CanonicalSchema, NumberingDefectsAreAliased) {
  const auto& s = canonical_schema();
  const auto* fairness = s.find_item("2.13");
  ASSERT_NE(fairness, nullptr);
  EXPECT_EQ(fairness->label, "Fairness in marking");
  EXPECT_EQ(fairness->paper_alias, "2.14");
  EXPECT_EQ(s.find_item("2.14"), nullptr);

  const auto* religion = s.find_item("15.5");
  ASSERT_NE(religion, nullptr);
  EXPECT_EQ(religion->label, "Religious Belief");
  EXPECT_EQ(religion->paper_alias, "15.4");
  EXPECT_EQ(s.find_item("15.4")->paper_alias, "15.4");

  EXPECT_EQ(s.find_item("1.7")->label, "Problem Solving Skills");
}

TEST(CanonicalSchema, ScaleUsesShortAnchors) {
  const auto& scale = canonical_schema().scale;
  ASSERT_EQ(scale.levels.size(), 5u);
  EXPECT_EQ(scale.levels[4].label, "critically important");
  EXPECT_EQ(scale.levels[3].label, "important");
  EXPECT_EQ(scale.levels[0].level, 1);
  EXPECT_NE(scale.description.find("Critical to Teacher's Performance"), std::string::npos);
}

TEST(CanonicalSchema, ShippedDataFileMatchesEmbeddedSchema) {
  const auto text = slurp(std::string(TEACHEVAL_DATA) + "/canonical_schema.json");
  EXPECT_EQ(text, serialize_schema(canonical_schema()));
  EXPECT_EQ(parse_schema(text), canonical_schema());
}

TEST(ParseSchema, RoundTripIsIdentity) {
  const auto text = serialize_schema(canonical_schema());
  const auto parsed = parse_schema(text);
  EXPECT_EQ(parsed, canonical_schema());
  EXPECT_EQ(serialize_schema(parsed), text);

  // Including a revision log.
  const std::vector<RevisionOp> ops = {del("3.2"), {RevisionKind::move_item, "5.4", 6}};
  const auto revised = apply_revisions(canonical_schema(), ops);
  EXPECT_EQ(parse_schema(serialize_schema(revised)), revised);
}

TEST(ParseSchema, DuplicateItemIdIsRejected) {
  auto s = canonical_schema();
  s.groups[2].items[0].item_id = "3.2";
  const auto text = serialize_schema(s);
  try {
    parse_schema(text);
    FAIL() << "expected duplicate-id error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::duplicate_id);
    EXPECT_EQ(e.location(), "item 3.2");
  }
}

TEST(ParseSchema, FourLevelScaleIsMalformed) {
  auto s = canonical_schema();
  s.scale.levels.pop_back();
  EXPECT_EQ(code_of([&] { parse_schema(serialize_schema(s)); }), ErrorCode::malformed_scale);
}

TEST(ParseSchema, EmptyGroupIsRejected) {
  auto s = canonical_schema();
  s.groups[4].items.clear();
  EXPECT_EQ(code_of([&] { parse_schema(serialize_schema(s)); }), ErrorCode::empty_group);
}

TEST(ParseSchema, UnreadableDocumentsReportLocation) {
  try {
    parse_schema("{\"version\": 1, \"scale\": [");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unreadable_document);
    EXPECT_NE(e.location().find("byte"), std::string::npos);
  }
  try {
    parse_schema(R"({"version": 1, "scale": [], "groups": [{"group_id": 1, "name": "x"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unreadable_document);
    EXPECT_EQ(e.location(), "/groups/0");
  }
  EXPECT_EQ(code_of([] { parse_schema("[]"); }), ErrorCode::unreadable_document);
}

TEST(ValidateSchema, OneFindingPerViolation) {
  auto gap = canonical_schema();
  gap.groups.resize(4);
  gap.groups[2].group_id = 4;
  gap.groups.pop_back();
  auto report = validate_schema(gap);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].code, ErrorCode::group_numbering);

  auto empty = canonical_schema();
  empty.groups[7].items.clear();
  report = validate_schema(empty);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].code, ErrorCode::empty_group);

  auto label = canonical_schema();
  label.groups[0].items[0].label.clear();
  label.scale.levels[2].label.clear();
  report = validate_schema(label);
  EXPECT_EQ(report.findings.size(), 2u);
}

TEST(ApplyRevisions, DeleteUnknownLeavesSchemaUnchanged) {
  const auto before = canonical_schema();
  const std::vector<RevisionOp> ops = {del("1.1"), del("9.9")};
  try {
    apply_revisions(before, ops);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unresolved_target);
  }
  EXPECT_EQ(before, canonical_schema());
  EXPECT_EQ(before.item_count(), 99u);
}

TEST(ApplyRevisions, MoveConservesItemCount) {
  const std::vector<RevisionOp> ops = {{RevisionKind::move_item, "5.4", 6}};
  const auto after = apply_revisions(canonical_schema(), ops);
  EXPECT_EQ(after.item_count(), 99u);
  EXPECT_EQ(after.find_group(5)->items.size(), 3u);
  EXPECT_EQ(after.find_group(6)->items.size(), 7u);
  EXPECT_EQ(after.group_of("5.4"), 6);
  EXPECT_EQ(after.version, 2);
  ASSERT_EQ(after.revision_log.size(), 1u);
  EXPECT_EQ(after.revision_log[0].applied_in_version, 2);
}

TEST(ApplyRevisions, ErrorKinds) {
  const auto& s = canonical_schema();
  auto one = [&](RevisionOp op) {
    return code_of([&] { apply_revisions(s, std::vector<RevisionOp>{op}); });
  };
  EXPECT_EQ(one({RevisionKind::add_item, "1.1", 1, "dup"}), ErrorCode::duplicate_id);
  EXPECT_EQ(one({RevisionKind::move_item, "1.1", 16}), ErrorCode::unresolved_target);
  EXPECT_EQ(one({RevisionKind::add_item, "16.1", 16, "x"}), ErrorCode::unresolved_target);
  EXPECT_EQ(one({RevisionKind::edit_item, "0.0", 0, "x"}), ErrorCode::unresolved_target);

  // Emptying a group violates the schema invariants, so nothing applies.
  std::vector<RevisionOp> drain = {del("11.1"), del("11.2"), del("11.3")};
  EXPECT_EQ(code_of([&] { apply_revisions(s, drain); }), ErrorCode::empty_group);
}

TEST(ApplyRevisions, EditAndAdd) {
  const std::vector<RevisionOp> ops = {
      {RevisionKind::edit_item, "1.7", 0, "Problem Solving", std::nullopt},
      {RevisionKind::add_item, "15.7", 15, "Community Service", "outside work"}};
  const auto after = apply_revisions(canonical_schema(), ops);
  EXPECT_EQ(after.find_item("1.7")->label, "Problem Solving");
  EXPECT_FALSE(after.find_item("1.7")->gloss.has_value());
  EXPECT_EQ(after.find_group(15)->items.back().item_id, "15.7");
  EXPECT_EQ(after.item_count(), 100u);
}

TEST(ApplyRevisions, PropertyCountConservationAndPurity) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    auto schema = canonical_schema();
    std::vector<RevisionOp> ops;
    long expected = static_cast<long>(schema.item_count());
    auto probe = schema;
    int fresh = 0;
    for (int k = 0; k < 12; ++k) {
      std::vector<std::string> ids;
      for (const auto& g : probe.groups)
        for (const auto& it : g.items) ids.push_back(it.item_id);
      const auto pick = ids[rng() % ids.size()];
      const int group = 1 + static_cast<int>(rng() % probe.groups.size());
      RevisionOp op;
      switch (rng() % 4) {
        case 0:
          op = {RevisionKind::add_item, "n." + std::to_string(fresh++), group, "new"};
          ++expected;
          break;
        case 1:
          if (probe.find_group(probe.group_of(pick))->items.size() < 2) continue;
          op = del(pick);
          --expected;
          break;
        case 2:
          if (probe.find_group(probe.group_of(pick))->items.size() < 2) continue;
          op = {RevisionKind::move_item, pick, group};
          break;
        default:
          op = {RevisionKind::edit_item, pick, 0, "edited", "g"};
      }
      probe = apply_revisions(probe, std::vector<RevisionOp>{op});
      ops.push_back(op);
    }
    const auto a = apply_revisions(schema, ops);
    const auto b = apply_revisions(schema, ops);
    EXPECT_EQ(a, b);
    EXPECT_EQ(static_cast<long>(a.item_count()), expected);
    EXPECT_TRUE(validate_schema(a).clean());
    EXPECT_EQ(schema, canonical_schema());
  }
}

TEST(ReplayRevisions, MultiBatchLogReplaysExactly) {
  const auto& base = canonical_schema();
  const auto v2 = apply_revisions(base, std::vector<RevisionOp>{del("1.1"), del("2.2")});
  const auto v3 = apply_revisions(v2, std::vector<RevisionOp>{{RevisionKind::move_item, "3.1", 4}});
  EXPECT_EQ(v3.version, 3);
  EXPECT_EQ(replay_revisions(base, v3.revision_log), v3);
}

TEST(ParseRevisions, ReadsKindsAndRejectsUnknown) {
  const auto ops = parse_revisions(
      R"([{"kind":"MoveItem","target":"5.4","group_id":6},{"kind":"DeleteItem","target":"1.1"}])");
  ASSERT_EQ(ops.size(), 2u);
  EXPECT_EQ(ops[0].kind, RevisionKind::move_item);
  EXPECT_EQ(ops[0].group_id, 6);
  EXPECT_EQ(code_of([] { parse_revisions(R"([{"kind":"Rename","target":"1.1"}])"); }),
            ErrorCode::unreadable_document);
}
