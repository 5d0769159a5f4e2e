// Copyright 2026 The Qasida Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace qasida {
namespace {

using testing::seed_db;
namespace oracle = testing::oracle;

BinaryPattern P(std::string_view s) { return BinaryPattern(s); }

const std::string kTaweel = "11010110101011010110110";

// Rolling-row prefix DP, independent of the suffix table used by the library.
std::size_t prefix_levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0u : 1u)});
      diag = up;
    }
  }
  return row[b.size()];
}

// Values produced by Python's difflib.SequenceMatcher(None, a, b).ratio().
TEST(SimilarityTest, FrozenReferenceRatios) {
  struct Case {
    std::string a, b;
    double ratio;
  };
  std::string flipped = kTaweel;
  flipped.back() = '1';
  const std::vector<Case> cases{
      {"11010", "11011", 0.8},
      {kTaweel, flipped, 0.9565217391304348},
      {"1010", "0101", 0.75},
      {"110100", "11010", 0.9090909090909091},
      {"111000111", "000111000", 0.6666666666666666},
      {"1", "0", 0.0},
      {"", "1", 0.0},
      {"1101101", "1011011", 0.8571428571428571},
      {std::string(23, '1'), kTaweel, 0.43478260869565216},
  };
  for (const auto& c : cases) {
    EXPECT_DOUBLE_EQ(similarity(c.a, c.b), c.ratio) << c.a << " " << c.b;
  }
}

TEST(SimilarityTest, IdentityAndEmpty) {
  EXPECT_EQ(similarity(kTaweel, kTaweel), 1.0);
  EXPECT_EQ(similarity("", ""), 1.0);
  EXPECT_EQ(similarity(P("11010"), P("11011")), 0.8);
}

TEST(SimilarityTest, ExhaustiveAgreementUpToEight) {
  const auto all = testing::all_bits_upto(8);
  std::size_t checked = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      ASSERT_EQ(similarity(a, b), oracle::gestalt(a, b)) << a << " " << b;
      ++checked;
    }
  }
  EXPECT_EQ(checked, all.size() * all.size());
}

TEST(SimilarityTest, RandomAgreementUpToSixtyFour) {
  std::mt19937_64 rng(20260101);
  for (int n = 0; n < 1000; ++n) {
    const auto a = testing::random_bits(rng, 64), b = testing::random_bits(rng, 64);
    ASSERT_EQ(similarity(a, b), oracle::gestalt(a, b)) << a << " " << b;
  }
}

TEST(EditScriptTest, PrintedFlipExample) {
  const auto s = edit_script(P("11011"), P("11010"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.ops[0], (EditOp{EditKind::Flip, 4, '0'}));
}

TEST(EditScriptTest, TrailingDelete) {
  const auto s = edit_script(P("110100"), P("11010"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.ops[0], (EditOp{EditKind::Delete, 5, '\0'}));
}

TEST(EditScriptTest, InsertAndEmptyScripts) {
  EXPECT_TRUE(edit_script(P(kTaweel), P(kTaweel)).empty());
  const auto s = edit_script(P("1101"), P("11010"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.ops[0], (EditOp{EditKind::Insert, 4, '0'}));
  EXPECT_EQ(edit_script(P(""), P("10")).size(), 2u);
  EXPECT_EQ(edit_script(P("10"), P("")).size(), 2u);
}

TEST(EditScriptTest, FlipPreferredOverInsertDeletePair) {
  // "10" -> "01" is reachable by two flips or a delete plus an insert.
  const auto s = edit_script(P("10"), P("01"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.ops[0].kind, EditKind::Flip);
  EXPECT_EQ(s.ops[1].kind, EditKind::Flip);
}

TEST(EditScriptTest, ApplyRejectsBadScripts) {
  auto code = [](const BinaryPattern& p, EditScript s) {
    try {
      apply_script(p, s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  EXPECT_EQ(apply_script(P("101"), {}), P("101"));
  EXPECT_EQ(code(P("101"), {{{EditKind::Delete, 3, '\0'}}}), Errc::invalid_position);
  EXPECT_EQ(code(P("101"), {{{EditKind::Insert, 4, '1'}}}), Errc::invalid_position);
  EXPECT_EQ(code(P("101"), {{{EditKind::Flip, 0, '1'}}}), Errc::invalid_position);
  EXPECT_EQ(code(P("101"), {{{EditKind::Flip, 2, '0'}, {EditKind::Flip, 1, '1'}}}),
            Errc::invalid_position);
  EXPECT_EQ(apply_script(P("101"), {{{EditKind::Insert, 3, '0'}}}), P("1010"));
}

TEST(EditScriptTest, OpsSerialize) {
  const auto j = to_json(edit_script(P("110100"), P("11011")));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["kind"], "flip");
  EXPECT_EQ(j[0]["pos"], 4);
  EXPECT_EQ(j[0]["bit"], "1");
  EXPECT_EQ(j[1]["kind"], "delete");
  EXPECT_FALSE(j[1].contains("bit"));
}

TEST(EditScriptProperty, ExhaustiveUpToTwelve) {
  const auto all = testing::all_bits_upto(12);
  for (const auto& a : all) {
    const BinaryPattern pa(a);
    for (const auto& b : all) {
      const auto s = edit_script(pa, BinaryPattern(b));
      ASSERT_EQ(s.size(), prefix_levenshtein(a, b)) << a << " " << b;
      ASSERT_EQ(apply_script(pa, s).str(), b) << a << " " << b;
    }
  }
}

TEST(EditScriptProperty, RecursiveOracleOnRandomLongerPairs) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 10000; ++n) {
    const auto a = testing::random_bits(rng, 40, 11), b = testing::random_bits(rng, 40, 11);
    const auto s = edit_script(BinaryPattern(a), BinaryPattern(b));
    ASSERT_EQ(s.size(), oracle::levenshtein(a, b)) << a << " " << b;
    ASSERT_EQ(apply_script(BinaryPattern(a), s).str(), b);
    for (const auto& op : s.ops) {
      ASSERT_LE(op.position, a.size());
      if (op.kind == EditKind::Flip) {
        ASSERT_NE(op.bit, a[op.position]);
      }
    }
  }
}

TEST(BestMatchTest, CanonicalIsExact) {
  const auto r = best_match(P(kTaweel), seed_db());
  ASSERT_EQ(r.size(), 16u);
  EXPECT_EQ(r.front().meter, 0);
  EXPECT_EQ(r.front().similarity, 1.0);
  EXPECT_TRUE(r.front().script.empty());
}

TEST(BestMatchTest, LastBitFlipped) {
  std::string flipped = kTaweel;
  flipped.back() = '1';
  const auto r = best_match(P(flipped), seed_db());
  EXPECT_EQ(r.front().meter, 0);
  EXPECT_GE(r.front().similarity, 2.0 * 22 / 46);
  EXPECT_LE(r.front().script.size(), 1u);
  EXPECT_EQ(r.front().similarity, similarity(P(flipped), r.front().variant));
  EXPECT_EQ(apply_script(P(flipped), r.front().script), r.front().variant);
}

TEST(BestMatchTest, CandidatesRestrictTheSearch) {
  const std::vector<int> only{4, 2};
  const auto r = best_match(P(kTaweel), seed_db(), only);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& m : r) EXPECT_TRUE(m.meter == 2 || m.meter == 4);
  const std::vector<int> bad{16};
  EXPECT_THROW(best_match(P(kTaweel), seed_db(), bad), Error);
  EXPECT_THROW(best_match(P(""), seed_db()), Error);
}

TEST(BestMatchTest, ResultSerializes) {
  const auto j = to_json(best_match(P(kTaweel), seed_db()).front());
  EXPECT_EQ(j["meter"], 0);
  EXPECT_EQ(j["variant"], kTaweel);
  EXPECT_EQ(j["similarity"], 1.0);
  EXPECT_TRUE(j["ops"].empty());
}

TEST(MatcherProperty, RangeAndIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    const auto a = testing::random_bits(rng, 30), b = testing::random_bits(rng, 30);
    for (const double s : {similarity(a, b), similarity(b, a)}) {
      ASSERT_GE(s, 0.0);
      ASSERT_LE(s, 1.0);
      if (!a.empty() || !b.empty()) {
        ASSERT_EQ(s == 1.0, a == b);
      }
    }
    ASSERT_EQ(similarity(b, a), oracle::gestalt(b, a));
  }
}

// The gestalt ratio is neither symmetric nor monotone under shared suffixes.
// Reference values from difflib.
TEST(MatcherProperty, GestaltAsymmetryIsReproduced) {
  EXPECT_EQ(similarity("0010", "1000"), 0.75);
  EXPECT_EQ(similarity("1000", "0010"), 0.5);
  EXPECT_DOUBLE_EQ(similarity("0", "01"), 0.6666666666666666);
  EXPECT_DOUBLE_EQ(similarity("000", "0100"), 0.5714285714285714);
}

TEST(MatcherProperty, FilterNeverBeatsFullSearch) {
  std::mt19937_64 rng(13);
  const auto& db = seed_db();
  for (int n = 0; n < 200; ++n) {
    const BinaryPattern obs(testing::random_bits(rng, 40, 10));
    std::vector<int> subset;
    for (int m = 0; m < 16; ++m) {
      if (rng() % 3 == 0) subset.push_back(m);
    }
    if (subset.empty()) subset.push_back(static_cast<int>(rng() % 16));
    const auto full = best_match(obs, db);
    const auto part = best_match(obs, db, subset);
    ASSERT_GE(full.front().similarity, part.front().similarity);
    for (std::size_t k = 1; k < full.size(); ++k) {
      ASSERT_TRUE(full[k - 1].similarity > full[k].similarity ||
                  (full[k - 1].similarity == full[k].similarity && full[k - 1].meter < full[k].meter));
    }
    // Each result's variant is the best of its meter.
    for (const auto& r : part) {
      for (const auto& v : db.variants(r.meter)) ASSERT_LE(similarity(obs, v), r.similarity);
    }
  }
}

}  // namespace
}  // namespace qasida
