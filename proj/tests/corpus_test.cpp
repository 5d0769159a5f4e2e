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

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace qasida {
namespace {

using testing::poem_of;
using testing::random_poem;
using testing::seed_db;

const std::string kTaweelFeet = "فَعُوْلُنْ مَفَاعِيْلُنْ فَعُوْلُنْ مَفَاعِلُنْ";

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

std::string utf8(char32_t c) { return detail::to_utf8(c); }

TEST(JsonlTest, RoundTripKeepsUnknownFields) {
  const std::string text =
      R"({"id":"a","poet":"x","era":"pre-islamic","meter":3,"baits":[["h1","h2"]],"source":"web"})"
      "\n"
      R"({"id":"b","poet":"y","era":250,"theme":4,"title":"t","baits":[]})"
      "\n";
  const auto poems = parse_jsonl(text).poems;
  ASSERT_EQ(poems.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<PreIslamic>(*poems[0].era));
  EXPECT_EQ(poems[0].extra["source"], "web");
  EXPECT_EQ(std::get<int>(*poems[1].era), 250);
  EXPECT_EQ(parse_jsonl(dump_jsonl(poems)).poems, poems);
  EXPECT_EQ(dump_jsonl(parse_jsonl(dump_jsonl(poems)).poems), dump_jsonl(poems));
  EXPECT_TRUE(parse_jsonl("").poems.empty());
  EXPECT_TRUE(parse_jsonl("\n  \n").poems.empty());
}

TEST(JsonlTest, MalformedLineIsCited) {
  const std::string text = "{\"id\":\"a\",\"baits\":[]}\n{\"id\":\"b\",\"baits\":[]}\n{oops\n{\"id\":\"d\",\"baits\":[]}\n";
  try {
    parse_jsonl(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    EXPECT_EQ(e.positions(), std::vector<std::size_t>{3});
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  const auto r = parse_jsonl(text, LoadMode::SkipAndReport);
  EXPECT_EQ(r.poems.size(), 3u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 3u);
  EXPECT_EQ(code_of([] { parse_jsonl("{\"baits\":[[1,2]]}"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_jsonl("{\"baits\":[],\"era\":\"late\"}"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { load_jsonl("/nonexistent/poems.jsonl"); }), Errc::io_error);
}

TEST(JsonlTest, FileRoundTrip) {
  std::mt19937_64 rng(1);
  std::vector<Poem> poems;
  for (int i = 0; i < 20; ++i) poems.push_back(random_poem(rng, i));
  const std::string path = ::testing::TempDir() + "qasida_corpus_roundtrip.jsonl";
  write_jsonl(poems, path);
  EXPECT_EQ(load_jsonl(path), poems);
  std::remove(path.c_str());
}

TEST(CleanTest, EachFixtureFallsToItsRule) {
  std::vector<Poem> poems;
  poems.push_back(poem_of({{kTaweelFeet, kTaweelFeet}}, 0));                    // kept
  Poem odd = poem_of({{kTaweelFeet, kTaweelFeet}});                              // 3 hemistiches
  odd.baits.push_back({kTaweelFeet});
  poems.push_back(odd);
  poems.push_back(poem_of({{kTaweelFeet, "مَا"}}));                              // 2 letters
  poems.push_back(poem_of({{kTaweelFeet, kTaweelFeet}}, 16));                   // 17th class
  poems.push_back(poem_of({{"َكَتَبَ قَلَمٌ", kTaweelFeet}}));            // orphan mark
  const auto r = clean(poems);
  EXPECT_EQ(r.report.input, 5u);
  EXPECT_EQ(r.report.kept, 1u);
  EXPECT_EQ(r.report.removed_by(CleanRule::Normalize), 1u);
  EXPECT_EQ(r.report.removed_by(CleanRule::OddVerses), 1u);
  EXPECT_EQ(r.report.removed_by(CleanRule::ShortVerse), 1u);
  EXPECT_EQ(r.report.removed_by(CleanRule::UnknownMeter), 1u);
  EXPECT_EQ(r.report.kept + r.report.total_removed(), r.report.input);
  const auto j = to_json(r.report);
  EXPECT_EQ(j["removed"]["odd_verses"], 1);
}

TEST(CleanTest, FirstFailingRuleTakesTheBlame) {
  Poem both = poem_of({{"مَا", kTaweelFeet}}, 20);
  both.baits.push_back({"لَا"});
  const auto r = clean({both});
  EXPECT_EQ(r.report.removed_by(CleanRule::OddVerses), 1u);
  EXPECT_EQ(r.report.total_removed(), 1u);
}

TEST(CleanProperty, IdempotentAndConserving) {
  std::mt19937_64 rng(2);
  std::vector<Poem> poems;
  for (int i = 0; i < 300; ++i) {
    Poem p = random_poem(rng, i);
    switch (rng() % 5) {
      case 0: p.baits.back().pop_back(); break;
      case 1: p.baits[0][0] = "بَ"; break;
      case 2: p.meter = 16 + static_cast<int>(rng() % 3); break;
      case 3: p.baits[0][1] = "بﻻ" + p.baits[0][1]; break;  // ligature to fold
      default: break;
    }
    poems.push_back(p);
  }
  const auto once = clean(poems);
  EXPECT_EQ(once.report.kept + once.report.total_removed(), poems.size());
  const auto twice = clean(once.kept);
  EXPECT_EQ(twice.kept, once.kept);
  EXPECT_EQ(twice.report.total_removed(), 0u);
}

TEST(CoverageFilterTest, HandCountedFixture) {
  // Coverage of the second hemistich in each poem, counted by hand.
  const std::vector<std::pair<std::string, bool>> fixture{
      {"قِفَا نَبْكِ مِنْ ذِكْرَى", true},                                      // 8/8
      {"عَلَى الْهَوَى", true},                                                   // bare alef, maqsura skipped
      {"قفا نبك من ذكرى", false},                                               // 0/8
      {"قِفَا نَبْكِ مِنْ ذِكْرَى حَبِيبٍ وَمَنْزِلِ بِسِقْطِ", true},         // 22/23
      {"قِفَا نَبْكِ مِنْ ذِكْرَى حَبِيبٍ وَمَنْزِلِ", false},                 // 18/19
      {"كَتَبَ", true},                                                          // 3/3
      {"كَتَبَه", false},                                                        // 3/4
      {"كَتَبَ الْقَلَمُ", true},                                                // 7/7
      {"كَتَبَ القَلَمُ", false},                                                // 6/7
      {"ـ", false},                                                              // no eligible letter
  };
  std::vector<Poem> poems;
  std::size_t want = 0;
  for (const auto& [h, keep] : fixture) {
    poems.push_back(poem_of({{"كَتَبَ", h}}));
    want += keep;
  }
  const auto kept = filter_by_coverage(poems, 0.95);
  EXPECT_EQ(kept.size(), want);
  std::size_t k = 0;
  for (std::size_t i = 0; i < fixture.size(); ++i) {
    if (fixture[i].second) {
      EXPECT_EQ(kept.at(k++), poems[i]) << i;
    }
  }
  EXPECT_EQ(filter_by_coverage(poems, 0.0).size(), 10u);
  EXPECT_EQ(filter_by_coverage(poems, 1.0).size(), 4u);
  EXPECT_THROW(filter_by_coverage(poems, 1.5), std::invalid_argument);
}

TEST(AugmentTest, SwapIsSeededAndKeepsSpacing) {
  std::vector<std::string> verses;
  for (int i = 0; i < 1000; ++i) verses.push_back("A" + std::to_string(i) + " # B" + std::to_string(i));
  const auto a = augment_swap(verses, 42);
  EXPECT_EQ(a, augment_swap(verses, 42));
  EXPECT_NE(a, augment_swap(verses, 43));
  std::size_t swapped = 0;
  for (std::size_t i = 0; i < verses.size(); ++i) {
    const std::string s = "B" + std::to_string(i) + " # A" + std::to_string(i);
    ASSERT_TRUE(a[i] == verses[i] || a[i] == s) << a[i];
    swapped += a[i] == s;
  }
  EXPECT_GT(swapped, 430u);
  EXPECT_LT(swapped, 570u);
  // Per-verse streams: a prefix of the input gives a prefix of the output.
  const auto head = augment_swap(std::span(verses).first(10), 42);
  EXPECT_TRUE(std::equal(head.begin(), head.end(), a.begin()));
  const std::vector<std::string> bad{"A#B", "no separator"};
  try {
    augment_swap(bad, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_separator);
    EXPECT_EQ(e.positions(), std::vector<std::size_t>{1});
  }
  EXPECT_EQ(code_of([] { augment_swap(std::vector<std::string>{"a#b#c"}, 1); }), Errc::missing_separator);
}

TEST(AugmentTest, DropoutIsSeeded) {
  const std::vector<std::string> verses(50, kTaweelFeet);
  const auto a = augment_dropout(verses, 0.3, 9);
  EXPECT_EQ(a, augment_dropout(verses, 0.3, 9));
  EXPECT_NE(a, augment_dropout(verses, 0.3, 10));
  EXPECT_EQ(augment_dropout(verses, 0.0, 9), verses);
  for (const auto& v : augment_dropout(verses, 1.0, 9)) {
    EXPECT_EQ(v, strip_diacritics(normalize_unicode(kTaweelFeet)).to_string());
  }
}

TEST(DedupeTest, DiacriticsAndSpacingDoNotHideDuplicates) {
  const auto test = std::vector<Poem>{poem_of({{"قِفَا نَبْكِ", "مِنْ ذِكْرَى"}})};
  const std::vector<Poem> train{poem_of({{"قفا  نبك", "شيء آخر"}}), poem_of({{"لا", "علاقة"}}),
                                poem_of({{"شيء", "مِنْ ذِكْرَى"}})};
  const auto kept = dedupe_against(train, test);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], train[1]);
  EXPECT_EQ(dedupe_against(train, std::vector<Poem>{}).size(), 3u);
}

TEST(CapTest, KeepsFirstPerEra) {
  std::vector<Poem> poems;
  for (int i = 0; i < 10; ++i) {
    Poem p = poem_of({{"a", "b"}});
    p.id = std::to_string(i);
    if (i < 6) p.era = 100 + i;  // bucket 1
    else if (i < 9) p.era = 900;  // bucket 4
    poems.push_back(p);
  }
  const auto kept = cap_per_era(poems, 2);
  ASSERT_EQ(kept.size(), 4u);
  EXPECT_EQ(kept[0].id, "0");
  EXPECT_EQ(kept[1].id, "1");
  EXPECT_EQ(kept[2].id, "6");
  EXPECT_EQ(kept[3].id, "7");
}

TEST(VocabTest, FiftyOneReservedTokens) {
  const SpecialTokenVocab v;
  EXPECT_EQ(v.specials().size(), 51u);
  EXPECT_EQ(v.size(), 51u);
  EXPECT_EQ(v.specials()[0], "<|psep|>");
  EXPECT_EQ(v.specials()[1], "</|psep|>");
  EXPECT_EQ(v.specials()[4], "<|vsep|>");
  EXPECT_EQ(v.specials().back(), "<|endoftext|>");
  std::set<std::string> distinct(v.specials().begin(), v.specials().end());
  EXPECT_EQ(distinct.size(), 51u);
  // No reserved token contains another, apart from the closing forms.
  for (const auto& a : v.specials()) {
    for (const auto& b : v.specials()) {
      if (a == b || a.find(b) == std::string::npos) continue;
      ADD_FAILURE() << b << " inside " << a;
    }
  }
  EXPECT_EQ(build_vocab(std::vector<Poem>{}).size(), 51u);
}

TEST(VocabTest, SeventyCharacterCorpusGives121) {
  // 68 distinct non-space characters; with the space and the newline of the
  // prompt layout the inventory holds 70.
  std::vector<char32_t> chars;
  for (char32_t c = 0x0621; c <= 0x063A; ++c) chars.push_back(c);
  for (char32_t c = 0x0641; c <= 0x0652; ++c) chars.push_back(c);
  for (char32_t c = 0x0660; c <= 0x0669; ++c) chars.push_back(c);
  for (char32_t c = U'a'; c <= U'n'; ++c) chars.push_back(c);
  ASSERT_EQ(chars.size(), 68u);
  std::vector<Poem> corpus;
  for (std::size_t i = 0; i < chars.size(); i += 4) {
    std::string h1, h2;
    for (std::size_t k = i; k < std::min(i + 2, chars.size()); ++k) h1 += utf8(chars[k]) + " ";
    for (std::size_t k = i + 2; k < std::min(i + 4, chars.size()); ++k) h2 += utf8(chars[k]);
    corpus.push_back(poem_of({{h1, h2}}));
  }
  const auto v = build_vocab(corpus);
  EXPECT_EQ(v.characters().size(), 70u);
  EXPECT_EQ(v.size(), 121u);
  EXPECT_EQ(v.specials().size(), 51u);
  EXPECT_EQ(build_vocab(corpus).tokens(), v.tokens());
  EXPECT_EQ(*v.id("<|psep|>"), 0u);
  EXPECT_EQ(*v.id("\n"), 51u);
  EXPECT_EQ(*v.id(" "), 52u);
  EXPECT_EQ(SpecialTokenVocab::parse(v.serialize()), v);
  EXPECT_EQ(SpecialTokenVocab::parse(v.serialize()).tokens(), v.tokens());
  EXPECT_EQ(code_of([] { SpecialTokenVocab::parse("<|psep|>\n"); }), Errc::parse_error);
}

TEST(EncodeTest, PrintedTemplate) {
  Poem p = poem_of({{"قَلْبِي", "هَوَاكَا"}}, 0);
  p.theme = 3;
  const auto v = build_vocab(std::vector<Poem>{p});
  const std::string want =
      "<|meter_0|> ك <|theme_3|>\n<|psep|><|bsep|>قَلْبِي<|vsep|>هَوَاكَا</|bsep|></|psep|>";
  EXPECT_EQ(encode(p, v), want);
  const auto d = decode(want, v);
  EXPECT_EQ(d.meter, 0);
  EXPECT_EQ(d.theme, 3);
  EXPECT_EQ(d.qafiyah, "ك");
  EXPECT_EQ(d.baits, p.baits);
  EXPECT_EQ(tokenize(want, v), encode_tokens(p, v));
}

TEST(EncodeTest, DefaultsAndErrors) {
  Poem p = poem_of({{"قَلْبِي", "هَوَاكَا"}}, 2);
  const auto v = build_vocab(std::vector<Poem>{p});
  EXPECT_EQ(encode(p, v).rfind("<|meter_2|> ك <|theme_17|>\n", 0), 0u);
  Poem unlabeled = p;
  unlabeled.meter.reset();
  EXPECT_EQ(code_of([&] { encode(unlabeled, v); }), Errc::validation_error);
  Poem foreign = p;
  foreign.baits[0][0] = "قَلْبِيz";
  try {
    encode(foreign, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unencodable_character);
    EXPECT_EQ(e.positions(), std::vector<std::size_t>{14});
  }
}

TEST(DecodeTest, MalformedTemplatesNameTheMissingPiece) {
  Poem p = poem_of({{"قَلْبِي", "هَوَاكَا"}}, 0);
  const auto v = build_vocab(std::vector<Poem>{p});
  const std::string good = encode(p, v);
  auto message = [&](const std::string& text) -> std::string {
    try {
      decode(text, v);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::malformed_template);
      return e.what();
    }
    return "no error";
  };
  EXPECT_NE(message(good.substr(0, good.size() - 9)).find("</|psep|>"), std::string::npos);
  auto no_vsep = good;
  no_vsep.erase(no_vsep.find("<|vsep|>"), 8);
  EXPECT_NE(message(no_vsep).find("<|vsep|>"), std::string::npos);
  EXPECT_NE(message("<|meter_99|> ك <|theme_3|>\n<|psep|></|psep|>").find("meter index"), std::string::npos);
  EXPECT_NE(message(good + "x").find("end of record"), std::string::npos);
}

TEST(EncodeProperty, ThousandPoemsRoundTrip) {
  std::mt19937_64 rng(4);
  std::vector<Poem> poems;
  for (int i = 0; i < 1000; ++i) poems.push_back(random_poem(rng, i));
  const auto v = build_vocab(poems);
  for (const auto& p : poems) {
    const auto text = encode(p, v);
    const auto d = decode(text, v);
    ASSERT_EQ(d.baits, p.baits);
    ASSERT_EQ(d.meter, *p.meter);
    ASSERT_EQ(d.theme, p.theme.value_or(kUnknownTheme));
    ASSERT_EQ(d.qafiyah, extract_qafiyah(p).rawiy);
    Poem back = p;
    back.baits = d.baits;
    back.meter = d.meter;
    back.theme = d.theme;
    ASSERT_EQ(encode(back, v), text);
    ASSERT_EQ(tokenize(text, v), encode_tokens(p, v));
  }
}

TEST(EncodeCorpusTest, LabelsAreCheckedAndBackFilled) {
  const Poem agrees = poem_of({{kTaweelFeet, kTaweelFeet}}, 0);
  const Poem disagrees = poem_of({{kTaweelFeet, kTaweelFeet}}, 4);
  const Poem unlabeled = poem_of({{kTaweelFeet, kTaweelFeet}});
  const Poem unscannable = poem_of({{"قفا نبك من", "ذكرى حبيب"}});
  const std::vector<Poem> poems{agrees, disagrees, unlabeled, unscannable};
  const auto v = build_vocab(poems);
  const auto r = encode_corpus(poems, v, seed_db());
  EXPECT_EQ(r.encoded, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(r.excluded.size(), 2u);
  EXPECT_EQ(r.excluded[0].first, 1u);
  EXPECT_EQ(r.excluded[1].first, 3u);
  const auto records = split_records(r.text);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0], records[1]);
  EXPECT_EQ(decode(records[1], v).meter, 0);
  EXPECT_EQ(encode_corpus(poems, v, seed_db(), {}, 4).text, r.text);
  EXPECT_EQ(code_of([] { split_records("abc"); }), Errc::malformed_template);
}

}  // namespace
}  // namespace qasida
