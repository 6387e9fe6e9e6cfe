#include "lch/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace lch {

namespace {

void appendRecord(std::ostringstream& os, const DiskRecord& record) {
  os << "disk " << record.positive << " ->";
  for (const auto& name : record.negatives) os << " " << name;
  os << " sign " << record.count.str() << "\n";
}

std::vector<DiskRecord> recordsFromDiff(const std::map<ChordName, Element>& diff) {
  std::vector<DiskRecord> records;
  for (const auto& [name, element] : diff)
    for (const auto& [word, coeff] : element.terms())
      records.push_back({name, word.factors(), coeff});
  std::sort(records.begin(), records.end(), [](const DiskRecord& a, const DiskRecord& b) {
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.negatives < b.negatives;
  });
  return records;
}

}  // namespace

DgaDocument documentFromDga(const Dga& dga, RingTag ring) {
  DgaDocument doc;
  doc.ring = ring;
  doc.chords = dga.chords();
  std::sort(doc.chords.begin(), doc.chords.end());
  if (ring == RingTag::Z2) {
    doc.records = recordsFromDiff(dga.mod2().diff());
  } else {
    doc.records = recordsFromDiff(dga.diff());
  }
  return doc;
}

std::string serializeDga(const DgaDocument& document) {
  std::ostringstream os;
  os << "ring " << (document.ring == RingTag::Z ? "Z" : "Z2") << "\n";
  for (const auto& chord : document.chords)
    os << "chord " << chord.name << " " << chord.grading << "\n";
  for (const auto& record : document.records) appendRecord(os, record);
  return os.str();
}

std::string serializeDga(const Dga& dga, RingTag ring) {
  return serializeDga(documentFromDga(dga, ring));
}

std::string serializeMorphism(const DgaMorphism& phi, std::optional<std::string> sourceRef,
                              std::optional<std::string> targetRef) {
  std::ostringstream os;
  os << "ring Z\n";
  if (sourceRef) os << "source " << *sourceRef << "\n";
  if (targetRef) os << "target " << *targetRef << "\n";
  for (const auto& record : recordsFromDiff(phi.images())) appendRecord(os, record);
  return os.str();
}

}  // namespace lch
