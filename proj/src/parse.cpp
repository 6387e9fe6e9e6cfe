#include "lch/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace lch {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Whitespace-separated tokens per line; '#' comments; CR tolerated.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1, column = 1;
  std::string word;
  int wordColumn = 1;
  bool comment = false;

  auto flushWord = [&]() {
    if (!word.empty()) {
      current.push_back({word, line, wordColumn});
      word.clear();
    }
  };
  auto flushLine = [&]() {
    flushWord();
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };

  for (char c : text) {
    if (c == '\n') {
      flushLine();
      ++line;
      column = 1;
      comment = false;
      continue;
    }
    if (!comment) {
      if (c == '#') {
        comment = true;
        flushWord();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        flushWord();
      } else {
        if (word.empty()) wordColumn = column;
        word.push_back(c);
      }
    }
    ++column;
  }
  flushLine();
  return lines;
}

const std::set<std::string> kReservedWords{"ring", "chord", "disk",  "sign",
                                           "source", "target", "aug", "->"};

bool validChordToken(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !kReservedWords.count(name);
}

int parseInt(const Token& token, const char* what) {
  const std::string& s = token.text;
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(token.line, token.column,
                     std::string(what) + " must be an integer, got '" + s + "'");
  return value;
}

long long parseCount(const Token& token) {
  const std::string& s = token.text;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(token.line, token.column,
                     "sign token must be a nonzero integer, got '" + s + "'");
  if (value == 0)
    throw ParseError(token.line, token.column, "sign token must be a nonzero integer");
  return value;
}

void expectArity(const std::vector<Token>& line, std::size_t count, const char* usage) {
  if (line.size() != count) {
    const Token& at = line.size() > count ? line[count] : line.back();
    throw ParseError(at.line, at.column + (line.size() < count ? int(at.text.size()) : 0),
                     std::string("expected ") + usage);
  }
}

RingTag parseRingLine(const std::vector<Token>& line) {
  expectArity(line, 2, "'ring Z' or 'ring Z2'");
  if (line[1].text == "Z") return RingTag::Z;
  if (line[1].text == "Z2") return RingTag::Z2;
  throw ParseError(line[1].line, line[1].column,
                   "unknown ring '" + line[1].text + "' (expected Z or Z2)");
}

Int normalizeCount(RingTag ring, long long raw) {
  if (ring == RingTag::Z) return Int(raw);
  return Int(((raw % 2) + 2) % 2);  // lifted to Z with coefficients in {0,1}
}

// disk <pos> -> <neg>* sign <int>
struct RawDisk {
  Token positive;
  std::vector<Token> negatives;
  long long count = 0;
  int line = 0;
};

RawDisk parseDiskLine(const std::vector<Token>& line) {
  if (line.size() < 5)
    throw ParseError(line[0].line, line[0].column,
                     "expected 'disk <pos> -> <neg>* sign <int>'");
  RawDisk disk;
  disk.line = line[0].line;
  disk.positive = line[1];
  if (line[2].text != "->")
    throw ParseError(line[2].line, line[2].column, "expected '->' after the positive chord");
  std::size_t i = 3;
  while (i < line.size() && line[i].text != "sign") disk.negatives.push_back(line[i++]);
  if (i + 2 != line.size()) {
    const Token& at = line[std::min(i, line.size() - 1)];
    throw ParseError(at.line, at.column, "expected 'sign <int>' to end the disk record");
  }
  disk.count = parseCount(line[i + 1]);
  return disk;
}

void sortRecords(std::vector<DiskRecord>& records) {
  std::sort(records.begin(), records.end(), [](const DiskRecord& a, const DiskRecord& b) {
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.negatives < b.negatives;
  });
}

// Merge duplicate (positive, word) records by adding counts.
void mergeRecords(std::vector<DiskRecord>& records, RingTag ring) {
  sortRecords(records);
  std::vector<DiskRecord> merged;
  for (auto& record : records) {
    if (!merged.empty() && merged.back().positive == record.positive &&
        merged.back().negatives == record.negatives) {
      merged.back().count += record.count;
    } else {
      merged.push_back(std::move(record));
    }
  }
  if (ring == RingTag::Z2)
    for (auto& record : merged) record.count = ((record.count % 2) + 2) % 2;
  std::erase_if(merged, [](const DiskRecord& r) { return r.count == 0; });
  records = std::move(merged);
}

}  // namespace

Dga DgaDocument::toDga() const {
  std::map<ChordName, Element> diff;
  for (const auto& record : records) {
    std::vector<ChordName> factors = record.negatives;
    diff[record.positive] += record.count * Element::term(Word(std::move(factors)), 1);
  }
  std::erase_if(diff, [](const auto& entry) { return entry.second.isZero(); });
  return Dga(chords, std::move(diff));
}

ParsedDga parseDga(const std::string& text) {
  ParsedDga out;
  bool sawRing = false;
  std::map<ChordName, int> gradings;
  std::vector<DiskRecord> records;

  for (const auto& line : tokenize(text)) {
    const Token& head = line[0];
    if (head.text == "ring") {
      if (sawRing) throw ParseError(head.line, head.column, "duplicate ring directive");
      out.document.ring = parseRingLine(line);
      sawRing = true;
    } else if (head.text == "chord") {
      if (!sawRing)
        throw ParseError(head.line, head.column, "ring directive must come first");
      expectArity(line, 3, "'chord <name> <grading>'");
      if (!validChordToken(line[1].text))
        throw ParseError(line[1].line, line[1].column,
                         "invalid chord name '" + line[1].text + "'");
      if (gradings.count(line[1].text))
        throw ParseError(line[1].line, line[1].column,
                         "duplicate chord '" + line[1].text + "'");
      gradings.emplace(line[1].text, parseInt(line[2], "grading"));
    } else if (head.text == "disk") {
      if (!sawRing)
        throw ParseError(head.line, head.column, "ring directive must come first");
      RawDisk raw = parseDiskLine(line);
      auto resolve = [&](const Token& token) -> ChordName {
        if (!gradings.count(token.text))
          throw ParseError(token.line, token.column,
                           "undefined chord '" + token.text + "'");
        return token.text;
      };
      DiskRecord record;
      record.positive = resolve(raw.positive);
      for (const auto& token : raw.negatives) record.negatives.push_back(resolve(token));
      record.count = normalizeCount(out.document.ring, raw.count);
      // Rigid-disk dimension |a| - sum|b_i| - 1.
      int dimension = gradings.at(record.positive) - 1;
      for (const auto& name : record.negatives) dimension -= gradings.at(name);
      if (dimension != 0)
        out.warnings.push_back({raw.line, record.positive, dimension});
      if (record.count != 0) records.push_back(std::move(record));
    } else {
      throw ParseError(head.line, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!sawRing) throw ParseError(1, 1, "missing ring directive");

  for (const auto& [name, grading] : gradings)
    out.document.chords.push_back({name, grading});
  mergeRecords(records, out.document.ring);
  out.document.records = std::move(records);
  return out;
}

CobordismDocument parseCobordismHeader(const std::string& text) {
  CobordismDocument doc;
  bool sawRing = false;
  for (const auto& line : tokenize(text)) {
    const Token& head = line[0];
    if (head.text == "ring") {
      if (sawRing) throw ParseError(head.line, head.column, "duplicate ring directive");
      doc.ring = parseRingLine(line);
      sawRing = true;
    } else if (head.text == "source" || head.text == "target") {
      expectArity(line, 2, head.text == "source" ? "'source <ref>'" : "'target <ref>'");
      auto& slot = head.text == "source" ? doc.sourceRef : doc.targetRef;
      if (slot)
        throw ParseError(head.line, head.column, "duplicate " + head.text + " directive");
      slot = line[1].text;
    } else if (head.text == "disk") {
      parseDiskLine(line);  // syntax only at header stage
    } else {
      throw ParseError(head.line, head.column, "unknown directive '" + head.text + "'");
    }
  }
  return doc;
}

ParsedCobordism parseCobordism(const std::string& text, const Dga& source, const Dga& target) {
  ParsedCobordism out;
  out.document = parseCobordismHeader(text);

  auto stripPrefix = [](const std::string& name, const char* prefix) -> std::optional<std::string> {
    const std::string p(prefix);
    if (name.rfind(p, 0) == 0) return name.substr(p.size());
    return std::nullopt;
  };

  std::vector<DiskRecord> records;
  for (const auto& line : tokenize(text)) {
    if (line[0].text != "disk") continue;
    RawDisk raw = parseDiskLine(line);

    DiskRecord record;
    {
      const Token& token = raw.positive;
      std::string name = token.text;
      if (auto bare = stripPrefix(name, "tgt."))
        throw ParseError(token.line, token.column,
                         "positive chord '" + *bare + "' must come from the source");
      if (auto bare = stripPrefix(name, "src.")) name = *bare;
      if (!validChordToken(name))
        throw ParseError(token.line, token.column, "invalid chord name '" + name + "'");
      if (!source.hasChord(name))
        throw ParseError(token.line, token.column,
                         "chord '" + name + "' is not in the source DGA");
      record.positive = name;
    }
    for (const Token& token : raw.negatives) {
      std::string name = token.text;
      if (auto bare = stripPrefix(name, "src."))
        throw ParseError(token.line, token.column,
                         "negative chord '" + *bare + "' must come from the target");
      if (auto bare = stripPrefix(name, "tgt.")) name = *bare;
      if (!validChordToken(name))
        throw ParseError(token.line, token.column, "invalid chord name '" + name + "'");
      if (!target.hasChord(name))
        throw ParseError(token.line, token.column,
                         "chord '" + name + "' is not in the target DGA");
      record.negatives.push_back(name);
    }
    record.count = normalizeCount(out.document.ring, raw.count);

    // Cobordism rigidity: |a| - sum|b_i| = 0.
    int dimension = source.grading(record.positive);
    for (const auto& name : record.negatives) dimension -= target.grading(name);
    if (dimension != 0) out.warnings.push_back({raw.line, record.positive, dimension});
    if (record.count != 0) records.push_back(std::move(record));
  }
  mergeRecords(records, out.document.ring);
  out.document.records = records;

  std::map<ChordName, Element> images;
  for (const auto& chord : source.chords()) images.emplace(chord.name, Element::zero());
  for (const auto& record : records) {
    std::vector<ChordName> factors = record.negatives;
    images[record.positive] += record.count * Element::term(Word(std::move(factors)), 1);
  }
  out.morphism = DgaMorphism(source, target, std::move(images));
  return out;
}

Augmentation parseAugmentation(const std::string& text, const Dga& dga) {
  Augmentation aug;
  for (const auto& line : tokenize(text)) {
    const Token& head = line[0];
    if (head.text != "aug")
      throw ParseError(head.line, head.column, "unknown directive '" + head.text + "'");
    expectArity(line, 3, "'aug <chord> <int>'");
    if (!dga.hasChord(line[1].text))
      throw ParseError(line[1].line, line[1].column,
                       "unknown chord '" + line[1].text + "'");
    if (aug.values.count(line[1].text))
      throw ParseError(line[1].line, line[1].column,
                       "duplicate augmentation value for '" + line[1].text + "'");
    const int value = parseInt(line[2], "augmentation value");
    if (value != 0 && dga.grading(line[1].text) != 0)
      throw ParseError(line[1].line, line[1].column,
                       "augmentation must vanish on '" + line[1].text +
                           "' (grading " + std::to_string(dga.grading(line[1].text)) + ")");
    aug.values.emplace(line[1].text, value);
  }
  return aug;
}

Dga applyAlternativeSignConvention(const Dga& dga, int n) {
  std::map<ChordName, Element> rescaled;
  for (const auto& [name, element] : dga.diff()) {
    const Sign factor = signPow((long long)(n - 1) * (dga.grading(name) + 1));
    rescaled.emplace(name, factor * element);
  }
  return Dga(dga.chords(), std::move(rescaled));
}

}  // namespace lch
