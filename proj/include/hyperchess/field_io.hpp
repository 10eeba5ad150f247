#pragma once

#include <iosfwd>

#include "hyperchess/search.hpp"

namespace hyperchess {
namespace field_io {

// Binary distance-field dump, version 1:
//   "HCDF" | version u8 (=1) | k u8 | n u32le | piece u8 | source u64le |
//   n^k distance bytes in ordinal order (0xFF = unreachable).
// Fields containing a finite distance >= 255 cannot be dumped (DumpFormatError).
void write(const DistanceField& field, std::ostream& out);
DistanceField read(std::istream& in);

} // namespace field_io
} // namespace hyperchess
