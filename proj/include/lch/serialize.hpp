#pragma once

#include <optional>
#include <string>

#include "lch/parse.hpp"

namespace lch {

/// Canonical text form: ring first, chords by name, disk records by
/// positive chord then word lexicographically, LF line endings. Parsing the
/// output reproduces the document byte for byte.
std::string serializeDga(const DgaDocument& document);
std::string serializeDga(const Dga& dga, RingTag ring = RingTag::Z);

/// Morphisms serialize as their disk-count table, with optional source and
/// target references so the file round-trips through parseCobordism.
std::string serializeMorphism(const DgaMorphism& phi,
                              std::optional<std::string> sourceRef = {},
                              std::optional<std::string> targetRef = {});

DgaDocument documentFromDga(const Dga& dga, RingTag ring = RingTag::Z);

}  // namespace lch
