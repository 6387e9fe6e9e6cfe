#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lch/morphism.hpp"
#include "lch/parse.hpp"
#include "lch/serialize.hpp"

using namespace lch;

#ifndef LCH_FIXTURES_DIR
#define LCH_FIXTURES_DIR "tests/fixtures"
#endif

namespace {

std::string readFixture(const std::string& name) {
  const std::filesystem::path path = std::filesystem::path(LCH_FIXTURES_DIR) / name;
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << "missing fixture " << path;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Word word(std::initializer_list<const char*> names) {
  std::vector<ChordName> factors;
  for (const char* n : names) factors.emplace_back(n);
  return Word(std::move(factors));
}

}  // namespace

TEST(ParseDga, BasicDocument) {
  const auto parsed = parseDga(
      "ring Z\n"
      "chord a 1\nchord b 0\nchord c 0\n"
      "disk a -> b c sign -1\n");
  EXPECT_TRUE(parsed.warnings.empty());
  const Dga dga = parsed.document.toDga();
  EXPECT_EQ(dga.diffOf("a"), Element::term(word({"b", "c"}), -1));
  EXPECT_TRUE(dga.diffOf("b").isZero());
}

TEST(ParseDga, EmptyNegativeWordIsUnit) {
  const auto parsed = parseDga("ring Z\nchord a 1\ndisk a -> sign 1\n");
  EXPECT_EQ(parsed.document.toDga().diffOf("a"), Element::unit(1));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(ParseDga, CommentsCrlfAndWhitespace) {
  const auto parsed = parseDga(
      "# a comment line\r\n"
      "ring Z\r\n"
      "  chord   a   1  # trailing\r\n"
      "\r\n"
      "chord b 0\nchord c 0\n"
      "disk a -> b c sign 2\r\n");
  EXPECT_EQ(parsed.document.toDga().diffOf("a"), Element::term(word({"b", "c"}), 2));
}

TEST(ParseDga, DuplicateRecordsMerge) {
  const auto parsed = parseDga(
      "ring Z\nchord a 1\nchord b 0\nchord c 0\n"
      "disk a -> b c sign 1\ndisk a -> b c sign 2\n");
  ASSERT_EQ(parsed.document.records.size(), 1u);
  EXPECT_EQ(parsed.document.records[0].count, Int(3));
}

TEST(ParseDga, Z2DocumentsLiftTo01) {
  const auto parsed = parseDga(readFixture("z2_example.dga"));
  EXPECT_EQ(parsed.document.ring, RingTag::Z2);
  const Dga dga = parsed.document.toDga();
  // The two b*c records cancel mod 2; the count 3 lifts to 1.
  EXPECT_EQ(dga.diffOf("a"), Element::unit(1));
}

TEST(ParseDga, DimensionWarnings) {
  const auto parsed = parseDga(
      "ring Z\nchord a 2\nchord b 0\n"
      "disk a -> b sign 1\n");  // dimension |a| - |b| - 1 = 1
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_EQ(parsed.warnings[0].positive, "a");
  EXPECT_EQ(parsed.warnings[0].dimension, 1);
  EXPECT_EQ(parsed.warnings[0].line, 4);
}

TEST(ParseDga, ErrorsCarryLineAndColumn) {
  try {
    parseDga("ring Z\nchord a 1\ndisk a -> zz sign 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 11);
    EXPECT_NE(std::string(e.what()).find("undefined chord"), std::string::npos);
  }

  try {
    parseDga("ring Z\nchord a 1\nchord a 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 7);
  }

  EXPECT_THROW(parseDga("ring Q\n"), ParseError);
  EXPECT_THROW(parseDga("chord a 1\n"), ParseError);              // ring must come first
  EXPECT_THROW(parseDga("ring Z\nchord a 1\ndisk a -> sign 0\n"), ParseError);
  EXPECT_THROW(parseDga("ring Z\nchord a 1\ndisk a -> sign x\n"), ParseError);
  EXPECT_THROW(parseDga("ring Z\nchord disk 1\n"), ParseError);   // reserved word
  EXPECT_THROW(parseDga("ring Z\nchord a 1\ndisk a b sign 1\n"), ParseError);
  EXPECT_THROW(parseDga("ring Z\nbogus\n"), ParseError);
  EXPECT_THROW(parseDga(""), ParseError);
}

TEST(ParseDga, FuzzNeverCrashes) {
  std::mt19937_64 rng(117);
  const std::string alphabet = "abc 01-> sign\n\r\t#dk";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string input;
    const int length = int(rng() % 160);
    for (int i = 0; i < length; ++i) {
      if (rng() % 8 == 0)
        input.push_back(char(rng() % 256));
      else
        input.push_back(alphabet[rng() % alphabet.size()]);
    }
    try {
      parseDga(input);
    } catch (const ParseError&) {
      // structured failure is the contract
    }
  }
}

TEST(Serialize, CanonicalFormExamples) {
  EXPECT_EQ(serializeDga(Dga()), "ring Z\n");
  // d(a) = b*c - c*b gives two records in lexicographic word order.
  Dga dga({{"a", 1}, {"b", 0}, {"c", 0}},
          {{"a", Element::term(word({"b", "c"}), 1) - Element::term(word({"c", "b"}), 1)}});
  EXPECT_EQ(serializeDga(dga),
            "ring Z\n"
            "chord a 1\nchord b 0\nchord c 0\n"
            "disk a -> b c sign 1\n"
            "disk a -> c b sign -1\n");
}

TEST(Serialize, RoundTripOnFixtureCorpus) {
  for (const char* name : {"dga0.dga", "dga1.dga", "dga2.dga", "simple.dga",
                           "unit_disk.dga", "failing.dga", "stab_pair.dga",
                           "z2_example.dga"}) {
    const std::string text = readFixture(name);
    const auto parsed = parseDga(text);
    const std::string serialized = serializeDga(parsed.document);
    // parse o serialize is the identity on documents.
    EXPECT_EQ(parseDga(serialized).document, parsed.document) << name;
    // serialize o parse is idempotent on text.
    EXPECT_EQ(serializeDga(parseDga(serialized).document), serialized) << name;
  }
}

TEST(Serialize, RandomDocumentRoundTrip) {
  std::mt19937_64 rng(246);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Chord> chords;
    const int chordCount = 2 + int(rng() % 5);
    for (int c = 0; c < chordCount; ++c)
      chords.push_back({"g" + std::to_string(c), int(rng() % 5) - 2});
    std::map<ChordName, Element> diff;
    for (int r = 0; r < 6; ++r) {
      const auto& positive = chords[rng() % chords.size()].name;
      std::vector<ChordName> negatives;
      for (int i = int(rng() % 3); i > 0; --i)
        negatives.push_back(chords[rng() % chords.size()].name);
      diff[positive] += Int(int(rng() % 7) - 3) * Element::term(Word(negatives), 1);
    }
    std::erase_if(diff, [](const auto& e) { return e.second.isZero(); });
    const Dga dga(chords, diff);
    const std::string text = serializeDga(dga);
    EXPECT_EQ(parseDga(text).document.toDga(), dga);
    EXPECT_EQ(serializeDga(parseDga(text).document), text);
  }
}

TEST(ParseCobordism, IdentityAndDiagonalTables) {
  const Dga dga = parseDga(readFixture("dga0.dga")).document.toDga();
  const std::string identityTable =
      "ring Z\n"
      "disk a -> a sign 1\ndisk b -> b sign 1\ndisk c -> c sign 1\ndisk d -> d sign 1\n";
  const auto parsed = parseCobordism(identityTable, dga, dga);
  EXPECT_EQ(parsed.morphism, identityMorphism(dga));
  EXPECT_TRUE(parsed.warnings.empty());

  const auto diagonal =
      parseCobordism("disk a -> a sign -1\ndisk b -> b sign 1\ndisk c -> c sign 1\n"
                     "disk d -> d sign 1\n",
                     dga, dga);
  EXPECT_EQ(diagonal.morphism.imageOf("a"), -Element::chord("a"));
}

TEST(ParseCobordism, NamespacePrefixes) {
  const Dga dga = parseDga(readFixture("dga0.dga")).document.toDga();
  const auto parsed = parseCobordism(
      "disk src.a -> tgt.a sign 1\ndisk b -> b sign 1\ndisk c -> c sign 1\n"
      "disk d -> d sign 1\n",
      dga, dga);
  EXPECT_EQ(parsed.morphism, identityMorphism(dga));

  EXPECT_THROW(parseCobordism("disk tgt.a -> a sign 1\n", dga, dga), ParseError);
  EXPECT_THROW(parseCobordism("disk a -> src.b sign 1\n", dga, dga), ParseError);
  EXPECT_THROW(parseCobordism("disk a -> zz sign 1\n", dga, dga), ParseError);
  EXPECT_THROW(parseCobordism("disk zz -> b sign 1\n", dga, dga), ParseError);
}

TEST(ParseCobordism, MissingChordsMapToZero) {
  const Dga dga = parseDga(readFixture("dga0.dga")).document.toDga();
  const auto parsed = parseCobordism("disk b -> b sign 1\n", dga, dga);
  EXPECT_TRUE(parsed.morphism.imageOf("a").isZero());
  EXPECT_EQ(parsed.morphism.imageOf("b"), Element::chord("b"));
}

TEST(ParseCobordism, ComposedFixturePipeline) {
  const Dga dga0 = parseDga(readFixture("dga0.dga")).document.toDga();
  const Dga dga1 = parseDga(readFixture("dga1.dga")).document.toDga();
  const Dga dga2 = parseDga(readFixture("dga2.dga")).document.toDga();
  const auto phi01 = parseCobordism(readFixture("phi01.cob"), dga0, dga1);
  const auto phi12 = parseCobordism(readFixture("phi12.cob"), dga1, dga2);
  ASSERT_TRUE(checkChainMap(phi01.morphism).ok);
  ASSERT_TRUE(checkChainMap(phi12.morphism).ok);

  const DgaMorphism composed = compose(phi12.morphism, phi01.morphism);
  const std::string serialized = serializeMorphism(composed, "dga0.dga", "dga2.dga");
  EXPECT_EQ(serialized, readFixture("phi02.cob"));

  // Round-trip through the parser keeps the chain-map property.
  const auto reparsed = parseCobordism(serialized, dga0, dga2);
  EXPECT_TRUE(checkChainMap(reparsed.morphism).ok);
  EXPECT_EQ(reparsed.morphism, composed);
}

TEST(ParseCobordism, DegreeWarnings) {
  const Dga dga = parseDga(readFixture("dga0.dga")).document.toDga();
  // a has grading 1, b grading 0: dimension 1 - 0 = 1 under a cobordism.
  const auto parsed = parseCobordism("disk a -> b sign 1\n", dga, dga);
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_EQ(parsed.warnings[0].dimension, 1);
}

TEST(ParseAugmentation, ValuesAndErrors) {
  const Dga dga = parseDga(readFixture("unit_disk.dga")).document.toDga();
  const Augmentation aug = parseAugmentation(readFixture("unit_disk.aug"), dga);
  EXPECT_EQ(aug.valueOf("b"), Int(1));
  EXPECT_EQ(aug.valueOf("c"), Int(-1));
  EXPECT_THROW(parseAugmentation("aug zz 1\n", dga), ParseError);
  EXPECT_THROW(parseAugmentation("aug a 1\n", dga), ParseError);  // |a| = 1
  EXPECT_THROW(parseAugmentation("aug b 1\naug b 2\n", dga), ParseError);
  EXPECT_EQ(parseAugmentation("aug a 0\n", dga).valueOf("a"), Int(0));
}

TEST(AlternativeConvention, RescalesByGrading) {
  const Dga dga = parseDga(readFixture("dga0.dga")).document.toDga();
  // n = 1 makes the factor trivial.
  EXPECT_EQ(applyAlternativeSignConvention(dga, 1), dga);
  // n = 2: factor (-1)^{|a|+1} = +1 for |a| = 1.
  EXPECT_EQ(applyAlternativeSignConvention(dga, 2), dga);
  Dga even({{"e", 2}, {"f", 1}}, {{"e", Element::chord("f")}});
  // |e| = 2: factor (-1)^{(2-1)(2+1)} = -1.
  EXPECT_EQ(applyAlternativeSignConvention(even, 2).diffOf("e"), -Element::chord("f"));
}
