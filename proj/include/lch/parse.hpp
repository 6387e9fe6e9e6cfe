#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lch/augmentation.hpp"
#include "lch/dga.hpp"
#include "lch/morphism.hpp"

namespace lch {

/// A parse failure with its 1-based position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class RingTag { Z, Z2 };

/// A dimension-constraint warning: the record's formal disk dimension is
/// nonzero, so the count cannot come from a rigid moduli space.
struct DimensionWarning {
  int line = 0;
  ChordName positive;
  int dimension = 0;
};

/// One `disk` directive: positive chord, ordered negative word, count.
struct DiskRecord {
  ChordName positive;
  std::vector<ChordName> negatives;
  Int count;
  friend bool operator==(const DiskRecord&, const DiskRecord&) = default;
};

/// Parsed, merged and canonically ordered DGA presentation.
struct DgaDocument {
  RingTag ring = RingTag::Z;
  std::vector<Chord> chords;        // sorted by name
  std::vector<DiskRecord> records;  // sorted by (positive, word); merged counts

  Dga toDga() const;
  friend bool operator==(const DgaDocument&, const DgaDocument&) = default;
};

struct ParsedDga {
  DgaDocument document;
  std::vector<DimensionWarning> warnings;
};

/// Parses the one-directive-per-line DGA format:
///   ring Z|Z2
///   chord <name> <grading>
///   disk <pos> -> <neg>* sign <nonzero int>
/// '#' starts a comment; CRLF input is accepted. Z2 documents are lifted to
/// Z with coefficients in {0,1}. Errors carry line and column.
ParsedDga parseDga(const std::string& text);

/// Cobordism disk-count table between two already-loaded DGAs. Chord
/// tokens may carry `src.` / `tgt.` prefixes; unprefixed positives resolve
/// in the source, unprefixed negatives in the target.
struct CobordismDocument {
  RingTag ring = RingTag::Z;
  std::optional<std::string> sourceRef;
  std::optional<std::string> targetRef;
  std::vector<DiskRecord> records;  // canonical order, prefix-free names
  friend bool operator==(const CobordismDocument&, const CobordismDocument&) = default;
};

struct ParsedCobordism {
  CobordismDocument document;
  DgaMorphism morphism;
  std::vector<DimensionWarning> warnings;
};

/// Parses `source <ref>` / `target <ref>` headers plus disk records and
/// builds the induced algebra map over the target.
ParsedCobordism parseCobordism(const std::string& text, const Dga& source, const Dga& target);

/// Reads only the source/target references (for resolving files before the
/// DGAs are loaded).
CobordismDocument parseCobordismHeader(const std::string& text);

/// Augmentation files: `aug <chord> <int>` directives.
Augmentation parseAugmentation(const std::string& text, const Dga& dga);

/// Optional rescaling of ingested counts by (-1)^{(n-1)(|a|+1)}, the
/// convention difference documented for the projection setting. Off by
/// default everywhere; exposed for cross-checking against tables produced
/// under the other convention.
Dga applyAlternativeSignConvention(const Dga& dga, int n);

}  // namespace lch
