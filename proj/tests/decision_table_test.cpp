#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "fixtures.hpp"
#include "rreduct/decision_table.hpp"
#include "rreduct/generator.hpp"

using namespace rreduct;

TEST_CASE("parse_table encodes columns in first-seen order") {
  const auto t = fixtures::jobs();
  CHECK(t.feature_count() == 4);
  CHECK(t.row_count() == 8);
  CHECK(t.feature_names() ==
        std::vector<std::string>{"Diploma", "Experience", "French", "Reference"});
  CHECK(t.decision_column_name() == "Decision");

  CHECK(t.find_value(0, "MBA") == 0);
  CHECK(t.find_value(0, "MCE") == 1);
  CHECK(t.find_value(0, "MSC") == 2);
  CHECK(t.find_decision("Accept") == 0);
  CHECK(t.find_decision("Reject") == 1);

  // x3 is MCE,Low,Yes,Good -> Reject
  CHECK(t.value_text(0, t.code(2, 0)) == "MCE");
  CHECK(t.decision_text(t.decision(2)) == "Reject");
}

TEST_CASE("parse_table handles a minimal single-row table") {
  const auto t = parse_table("f,d\nx,1\n");
  CHECK(t.row_count() == 1);
  CHECK(t.feature_count() == 1);
  CHECK(t.value_count(0) == 1);
  CHECK(t.decision_count() == 1);
}

TEST_CASE("parse_table keeps numeric strings opaque") {
  const auto t = fixtures::sample();
  CHECK(t.row_count() == 5);
  CHECK(t.feature_count() == 4);
  CHECK(t.decision_count() == 3);
  // column F4 first-seen order: 3, 1, 0, 2
  CHECK(t.find_value(3, "3") == 0);
  CHECK(t.find_value(3, "1") == 1);
  CHECK(t.find_value(3, "0") == 2);
  CHECK(t.find_value(3, "2") == 3);
}

TEST_CASE("parse_table accepts CRLF and a decision column by name") {
  const auto t = parse_table("d,f\r\n1,x\r\n0,y\r\n", "d");
  CHECK(t.feature_count() == 1);
  CHECK(t.feature_name(0) == "f");
  CHECK(t.decision_column_name() == "d");
  CHECK(t.row_count() == 2);
}

TEST_CASE("parse_table rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_table("f,d\nx,1\ny\n"),
                       doctest::Contains("row 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_table("f,d\nx,1\n,0\n"),
                       doctest::Contains("column 'f'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_table("f,d\nx,1\n", "nope"),
                       doctest::Contains("nope"), ParseError);
  CHECK_THROWS_WITH_AS(parse_table("f,f\nx,1\n"),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_AS(parse_table(""), ParseError);
  CHECK_THROWS_AS(parse_table("f,d\n"), ParseError);
  CHECK_THROWS_AS(parse_table("only\nx\n"), ParseError);

  std::string wide = "c1";
  for (int i = 2; i <= 34; ++i) wide += ",c" + std::to_string(i);
  wide += "\n";
  for (int i = 1; i <= 34; ++i) wide += i == 1 ? "v" : ",v";
  wide += "\n";
  CHECK_THROWS_WITH_AS(parse_table(wide), doctest::Contains("33"), ParseError);
}

TEST_CASE("to_csv round-trips the parsed text") {
  CHECK(to_csv(fixtures::sample()) == fixtures::kSampleCsv);
  CHECK(to_csv(fixtures::jobs()) == fixtures::kJobsCsv);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto csv = gen_csv({.rows = 15, .features = 5, .seed = seed});
    CHECK(to_csv(parse_table(csv)) == csv);
  }
}

TEST_CASE("indiscernibility_partition groups value-equal objects") {
  const auto dup = fixtures::duplicated();
  const auto p = indiscernibility_partition(dup, FeatureSubset::full(4));
  REQUIRE(p.blocks.size() == 3);
  CHECK(p.blocks[0] == std::vector<ObjectId>{0, 2});
  CHECK(p.blocks[1] == std::vector<ObjectId>{1});
  CHECK(p.blocks[2] == std::vector<ObjectId>{3, 4});

  const auto sample = fixtures::sample();
  const auto by_f1 = indiscernibility_partition(sample, FeatureSubset::of({0}));
  REQUIRE(by_f1.blocks.size() == 2);
  CHECK(by_f1.blocks[0] == std::vector<ObjectId>{0, 1, 3, 4});
  CHECK(by_f1.blocks[1] == std::vector<ObjectId>{2});

  // all rows distinct: full basis yields singletons
  const auto all = indiscernibility_partition(sample, FeatureSubset::full(4));
  CHECK(all.blocks.size() == 5);

  // empty basis: one universal block
  const auto none = indiscernibility_partition(sample, {});
  REQUIRE(none.blocks.size() == 1);
  CHECK(none.blocks[0].size() == 5);

  CHECK_THROWS_AS(indiscernibility_partition(sample, FeatureSubset::of({4})),
                  std::invalid_argument);
}

TEST_CASE("partition refinement: a larger basis refines a smaller one") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto t = gen_table({.rows = 25, .features = 6, .values_per_feature = 3,
                              .seed = seed});
    SplitMix64 rng{seed * 977};
    const auto small = FeatureSubset::from_mask(
        static_cast<std::uint32_t>(rng.next()) & 0x3fu);
    const auto large = FeatureSubset::from_mask(
        small.mask() | (static_cast<std::uint32_t>(rng.next()) & 0x3fu));
    const auto coarse = indiscernibility_partition(t, small);
    const auto fine = indiscernibility_partition(t, large);
    for (const auto& block : fine.blocks) {
      const bool inside_some = std::any_of(
          coarse.blocks.begin(), coarse.blocks.end(), [&](const auto& super) {
            return std::includes(super.begin(), super.end(), block.begin(),
                                 block.end());
          });
      CHECK(inside_some);
    }
  }
}

TEST_CASE("find_conflicts reports value-equal groups with mixed decisions") {
  CHECK(find_conflicts(fixtures::sample()).empty());
  CHECK(find_conflicts(parse_table("f,d\nx,1\n")).empty());

  const auto t = parse_table("f,g,d\na,b,0\na,b,1\na,c,0\n");
  const auto report = find_conflicts(t);
  REQUIRE(report.groups.size() == 1);
  CHECK(report.groups[0] == std::vector<ObjectId>{0, 1});
}

TEST_CASE("merge_indiscernible collapses duplicate rows") {
  const auto merged = merge_indiscernible(fixtures::duplicated());
  REQUIRE(merged.row_count() == 3);
  CHECK(merged.object_ids(0) == std::vector<ObjectId>{0, 2});
  CHECK(merged.object_ids(1) == std::vector<ObjectId>{1});
  CHECK(merged.object_ids(2) == std::vector<ObjectId>{3, 4});
  CHECK(to_csv(merged) ==
        "F1,F2,F3,F4,Decision\n"
        "1,2,1,3,1\n"
        "1,1,1,1,0\n"
        "3,3,1,1,1\n");
  CHECK(merged.rows_distinct());
  CHECK(find_conflicts(merged).empty());

  // object ids jointly cover the original rows
  std::size_t covered = 0;
  for (int i = 0; i < merged.row_count(); ++i)
    covered += merged.object_ids(static_cast<ObjectId>(i)).size();
  CHECK(covered == 5);

  // idempotent
  CHECK(to_csv(merge_indiscernible(merged)) == to_csv(merged));

  // an already-distinct table passes through unchanged
  CHECK(to_csv(merge_indiscernible(fixtures::sample())) == fixtures::kSampleCsv);
}

TEST_CASE("merge_indiscernible raises on conflicts unless asked to drop them") {
  const auto t = parse_table("f,g,d\na,b,0\na,b,1\na,c,0\n");
  try {
    merge_indiscernible(t);
    FAIL("expected ConflictError");
  } catch (const ConflictError& e) {
    REQUIRE(e.report().groups.size() == 1);
    CHECK(e.report().groups[0] == std::vector<ObjectId>{0, 1});
  }

  const auto dropped = merge_indiscernible(t, /*drop_conflicts=*/true);
  REQUIRE(dropped.row_count() == 1);
  CHECK(dropped.value_text(1, dropped.code(0, 1)) == "c");

  const auto all_bad = parse_table("f,d\na,0\na,1\n");
  CHECK_THROWS_AS(merge_indiscernible(all_bad, true), ConflictError);
}

TEST_CASE("fingerprint tracks table content") {
  CHECK(fixtures::sample().fingerprint() == fixtures::sample().fingerprint());
  CHECK(fixtures::sample().fingerprint() != fixtures::jobs().fingerprint());
}
