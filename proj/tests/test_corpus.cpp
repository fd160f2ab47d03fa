#include <doctest.h>

#include <algorithm>
#include <random>

#include "stylo/errors.hpp"
#include "stylo/frequency.hpp"
#include "stylo/lexicon.hpp"
#include "stylo/play.hpp"
#include "stylo/tokenize.hpp"
#include "oracles.hpp"

using namespace stylo;

TEST_CASE("tokenize strips punctuation and lowercases") {
  CHECK(tokenize("The King, and I.") ==
        std::vector<std::string>{"the", "king", "and", "i"});
}

TEST_CASE("tokenize keeps leading apostrophes") {
  CHECK(tokenize("'Tis well -- 'tis well") ==
        std::vector<std::string>{"'tis", "well", "'tis", "well"});
}

TEST_CASE("tokenize of empty input is empty") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \t \n ").empty());
  CHECK(tokenize("-- ?! ...").empty());
}

TEST_CASE("tokenize keeps digits and interior characters") {
  CHECK(tokenize("1599 anno") == std::vector<std::string>{"1599", "anno"});
  CHECK(tokenize("well-known don't") ==
        std::vector<std::string>{"well-known", "don't"});
}

TEST_CASE("tokenize is idempotent on its own output") {
  std::mt19937_64 rng(42);
  const std::string alphabet = "abC'’-.,;:!?(){}0123456789 \t";
  for (int round = 0; round < 200; ++round) {
    std::string text;
    const int length = oracles::uniform_int(rng, 0, 60);
    for (int i = 0; i < length; ++i) {
      text.push_back(alphabet[static_cast<std::size_t>(
          oracles::uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1))]);
    }
    auto once = tokenize(text);
    std::string joined;
    for (const auto& token : once) {
      if (!joined.empty()) joined.push_back(' ');
      joined += token;
    }
    CHECK(tokenize(joined) == once);
  }
}

TEST_CASE("parse_play reads the structured markup") {
  auto doc = parse_play("<ACT 1>\n<SCENE 1>\n<SPEAKER Anne> An apple.",
                        ParseMode::Structured);
  REQUIRE(doc.acts.size() == 1);
  REQUIRE(doc.acts[0].scenes.size() == 1);
  REQUIRE(doc.acts[0].scenes[0].speeches.size() == 1);
  const auto& speech = doc.acts[0].scenes[0].speeches[0];
  CHECK(speech.speaker == "Anne");
  CHECK(speech.tokens == std::vector<std::string>{"an", "apple"});
}

TEST_CASE("flat mode puts each line into its own speech") {
  auto doc = parse_play("a b\nc d", ParseMode::Flat);
  REQUIRE(doc.acts.size() == 1);
  REQUIRE(doc.acts[0].scenes.size() == 1);
  REQUIRE(doc.acts[0].scenes[0].speeches.size() == 2);
  CHECK(doc.acts[0].scenes[0].speeches[0].tokens ==
        std::vector<std::string>{"a", "b"});
  CHECK(doc.acts[0].scenes[0].speeches[1].tokens ==
        std::vector<std::string>{"c", "d"});
}

TEST_CASE("markup errors carry line numbers") {
  CHECK_THROWS_AS(parse_play("<SCENE 1>\ntext", ParseMode::Structured),
                  MalformedMarkup);
  CHECK_THROWS_AS(parse_play("<ACT 1>\n<VERSE 1>", ParseMode::Structured),
                  MalformedMarkup);
  CHECK_THROWS_AS(
      parse_play("<ACT 1>\n<SCENE 1>\nx\n<ACT 1>", ParseMode::Structured),
      MalformedMarkup);
  CHECK_THROWS_AS(parse_play("loose text", ParseMode::Structured),
                  MalformedMarkup);
  try {
    parse_play("<ACT 1>\n<SCENE 1>\nok\n<SCENE 1>", ParseMode::Structured);
    FAIL("expected MalformedMarkup");
  } catch (const MalformedMarkup& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("speaker text may follow the directive on the same line or after") {
  auto doc = parse_play(
      "<TITLE T>\n<ACT 1>\n<SCENE 1>\n<SPEAKER A>\nFirst line\nSecond line\n"
      "<SPEAKER B> Inline text\nMore",
      ParseMode::Structured);
  const auto& speeches = doc.acts[0].scenes[0].speeches;
  REQUIRE(speeches.size() == 2);
  CHECK(speeches[0].tokens ==
        std::vector<std::string>{"first", "line", "second", "line"});
  CHECK(speeches[1].tokens ==
        std::vector<std::string>{"inline", "text", "more"});
  CHECK(doc.title == "T");
}

static PlayDocument random_play(std::mt19937_64& rng, int acts) {
  PlayDocument doc;
  doc.title = "Play " + std::to_string(oracles::uniform_int(rng, 1, 999));
  if (oracles::uniform01(rng) < 0.5) doc.author_label = "Someone";
  auto words = oracles::numbered_words(12);
  for (int a = 1; a <= acts; ++a) {
    Act act;
    act.number = a;
    const int scenes = oracles::uniform_int(rng, 1, 3);
    for (int s = 1; s <= scenes; ++s) {
      Scene scene;
      scene.number = s;
      const int speeches = oracles::uniform_int(rng, 1, 4);
      for (int k = 0; k < speeches; ++k) {
        Speech speech;
        speech.speaker = "Speaker" + std::to_string(oracles::uniform_int(rng, 1, 5));
        const int tokens = oracles::uniform_int(rng, 0, 12);
        for (int t = 0; t < tokens; ++t) {
          speech.tokens.push_back(words[static_cast<std::size_t>(
              oracles::uniform_int(rng, 0, 11))]);
        }
        scene.speeches.push_back(std::move(speech));
      }
      act.scenes.push_back(std::move(scene));
    }
    doc.acts.push_back(std::move(act));
  }
  return doc;
}

static bool same_document(const PlayDocument& a, const PlayDocument& b) {
  if (a.title != b.title || a.author_label != b.author_label) return false;
  if (a.acts.size() != b.acts.size()) return false;
  for (std::size_t i = 0; i < a.acts.size(); ++i) {
    if (a.acts[i].number != b.acts[i].number) return false;
    if (a.acts[i].scenes.size() != b.acts[i].scenes.size()) return false;
    for (std::size_t j = 0; j < a.acts[i].scenes.size(); ++j) {
      const auto& sa = a.acts[i].scenes[j];
      const auto& sb = b.acts[i].scenes[j];
      if (sa.number != sb.number) return false;
      if (sa.speeches.size() != sb.speeches.size()) return false;
      for (std::size_t k = 0; k < sa.speeches.size(); ++k) {
        if (sa.speeches[k].speaker != sb.speeches[k].speaker) return false;
        if (sa.speeches[k].tokens != sb.speeches[k].tokens) return false;
      }
    }
  }
  return true;
}

TEST_CASE("markup round-trips documents exactly") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    PlayDocument doc = random_play(rng, oracles::uniform_int(rng, 1, 5));
    PlayDocument reparsed =
        parse_play(serialize_play(doc), ParseMode::Structured);
    CHECK(same_document(doc, reparsed));
  }
}

TEST_CASE("token multiset does not depend on segmentation") {
  std::string text_a =
      "<ACT 1>\n<SCENE 1>\n<SPEAKER X> one two three\n<SPEAKER Y> four five";
  std::string text_b =
      "<ACT 1>\n<SCENE 1>\n<SPEAKER X> one two\n<SCENE 2>\n"
      "<SPEAKER X> three\n<ACT 2>\n<SCENE 1>\n<SPEAKER Y> four five";
  auto collect = [](const PlayDocument& doc) {
    std::vector<std::string> all;
    for (const auto& act : doc.acts)
      for (const auto& scene : act.scenes)
        for (const auto& speech : scene.speeches)
          all.insert(all.end(), speech.tokens.begin(), speech.tokens.end());
    std::sort(all.begin(), all.end());
    return all;
  };
  CHECK(collect(parse_play(text_a, ParseMode::Structured)) ==
        collect(parse_play(text_b, ParseMode::Structured)));
}

TEST_CASE("frequency_vector counts lexicon words and all tokens") {
  auto lexicon = FunctionWordLexicon::from_words({"a", "the"});
  std::vector<std::string> tokens{"a", "the", "a"};
  std::vector<TokenUnit> units{TokenUnit(tokens)};
  auto fv = frequency_vector(units, lexicon, 2);
  CHECK(fv.counts[0] == 2);
  CHECK(fv.counts[1] == 1);
  CHECK(fv.total_tokens == 3);
  CHECK(fv.relative[0] == doctest::Approx(2.0 / 3.0));
  CHECK(fv.relative[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("frequency_vector with no lexicon hits is all zero") {
  auto lexicon = FunctionWordLexicon::from_words({"a", "the"});
  std::vector<std::string> tokens{"king", "queen"};
  std::vector<TokenUnit> units{TokenUnit(tokens)};
  auto fv = frequency_vector(units, lexicon, 2);
  CHECK(fv.counts.sum() == 0);
  CHECK(fv.relative.cwiseAbs().sum() == 0.0);
  CHECK(fv.total_tokens == 2);
}

TEST_CASE("frequency_vector rejects n = 0") {
  auto lexicon = FunctionWordLexicon::from_words({"a"});
  std::vector<std::string> tokens{"a"};
  std::vector<TokenUnit> units{TokenUnit(tokens)};
  CHECK_THROWS_AS(frequency_vector(units, lexicon, 0), InvalidParameter);
}

TEST_CASE("frequency_vector agrees with an independent counting pass") {
  std::mt19937_64 rng(11);
  auto words = oracles::numbered_words(10);
  auto lexicon = FunctionWordLexicon::from_words(words);
  auto units = oracles::random_units(rng, words, 25, 80, 0.2);
  // pad to roughly 1000 tokens
  std::vector<TokenUnit> spans;
  std::size_t total = 0;
  for (const auto& unit : units) {
    spans.emplace_back(unit);
    total += unit.size();
  }
  auto fv = frequency_vector(spans, lexicon, 10);
  auto reference = oracles::count_tokens(units);
  std::size_t reference_total = 0;
  for (const auto& [token, count] : reference) {
    reference_total += static_cast<std::size_t>(count);
  }
  CHECK(fv.total_tokens == static_cast<std::int64_t>(reference_total));
  CHECK(static_cast<std::size_t>(fv.total_tokens) == total);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const int expected =
        reference.count(words[k]) ? reference.at(words[k]) : 0;
    CHECK(fv.counts[static_cast<Eigen::Index>(k)] == expected);
  }
}

TEST_CASE("the shipped lexicon has 100 words, 76 act- and 55 scene-flagged") {
  auto lexicon = load_lexicon(std::string(STYLO_DATA_DIR) + "/function_words.txt");
  CHECK(lexicon.size() == 100);
  CHECK(lexicon.act_count() == 76);
  CHECK(lexicon.scene_count() == 55);
  CHECK(lexicon.index_of("the").has_value());
  CHECK(lexicon.index_of("bar").has_value());
  // Sub-lexicons are prefixes of the shipped ordering.
  CHECK(lexicon.sub_lexicon(SubLexicon::Scene) == lexicon.prefix(55));
  CHECK(lexicon.sub_lexicon(SubLexicon::Act) == lexicon.prefix(76));
}

TEST_CASE("lexicon files preserve order and reject duplicates") {
  auto lexicon = parse_lexicon("a\nthe\n");
  REQUIRE(lexicon.size() == 2);
  CHECK(lexicon.word(0) == "a");
  CHECK(lexicon.word(1) == "the");
  CHECK_THROWS_AS(parse_lexicon("a\na\n"), DuplicateLexiconEntry);
}

TEST_CASE("lexicon flags and comments parse") {
  auto lexicon = parse_lexicon("# comment\nthe as\nof a\nand s\nwhat\n");
  CHECK(lexicon.size() == 4);
  CHECK(lexicon.entries()[0].act);
  CHECK(lexicon.entries()[0].scene);
  CHECK(lexicon.entries()[1].act);
  CHECK_FALSE(lexicon.entries()[1].scene);
  CHECK_FALSE(lexicon.entries()[2].act);
  CHECK(lexicon.entries()[2].scene);
  CHECK_FALSE(lexicon.entries()[3].act);
  CHECK_THROWS_AS(parse_lexicon("the x\n"), InvalidParameter);
}

TEST_CASE("prefix size checks") {
  auto lexicon = FunctionWordLexicon::from_words({"a", "b", "c"});
  CHECK(lexicon.prefix(2).size() == 2);
  CHECK_THROWS_AS(lexicon.prefix(0), InvalidParameter);
  CHECK_THROWS_AS(lexicon.prefix(4), InvalidParameter);
}
