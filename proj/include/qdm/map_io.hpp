#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "qdm/maps.hpp"

namespace qdm {

class MapFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed map exchange file: an A-form or B-form map.
using MapFile = std::variant<StochasticMap, DynamicalMap>;

/// Exchange format: {"d": int, "kind": "A"|"B", "re": [[...]], "im": [[...]]}
/// with re/im given as d^2 x d^2 row-major nested arrays. Throws
/// MapFormatError on malformed JSON, unknown kind, non-square or mismatched
/// shapes, and non-finite entries.
MapFile read_map(std::istream& in);
MapFile read_map_file(const std::string& path);

std::string write_map(const MapFile& map);
void write_map_file(const MapFile& map, const std::string& path);

}  // namespace qdm
