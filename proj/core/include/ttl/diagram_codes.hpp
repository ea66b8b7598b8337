#pragma once

#include <string>
#include <string_view>

#include "ttl/braid.hpp"

namespace ttl {

enum class DiagramFormat { BraidWord, Gauss, Pd };

/// "braid-word", "gauss" or "pd"; throws Error(Parse) otherwise.
DiagramFormat parse_format(std::string_view name);
std::string_view to_string(DiagramFormat format) noexcept;

/// Text encodings of the braid closure. Every line ends in '\n'.
///
/// braid-word: one line "N | i1 i2 ...", or "N |" for the empty word.
///
/// gauss: one line per component, components ordered by smallest strand.
///   Each visit is "O" (over) or "U" (under), then the crossing sign and the
///   1-based crossing id in word order, e.g. "O+1 U+2". A component without
///   crossings is an empty line.
///
/// pd: one "X[a,b,c,d]" line per crossing in word order. Arcs are numbered
///   from 1 along a single traversal of each component in turn (components
///   ordered by smallest strand, starting at the top of that strand), so the
///   arc entering the v-th visit of a component is its v-th label. a is the
///   incoming under-arc, then counterclockwise: a positive crossing is
///   X[under in, over out, under out, over in] and a negative one
///   X[under in, over in, under out, over out]. Components with no crossings
///   have no arcs and produce no lines.
std::string export_code(const BraidWord& word, DiagramFormat format);

/// Inverse of the braid-word encoding; throws Error(Parse) on malformed text
/// and Error(OutOfRange) on an invalid word.
BraidWord parse_braid_word(std::string_view text);

}  // namespace ttl
