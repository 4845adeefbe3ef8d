#include "qdm/map_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qdm {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> parse_plane(const json& j,
                                             const std::string& key,
                                             std::size_t expected) {
  if (!j.contains(key) || !j[key].is_array())
    throw MapFormatError("map file: missing or non-array '" + key + "'");
  const json& plane = j[key];
  if (plane.size() != expected)
    throw MapFormatError("map file: '" + key + "' has " +
                         std::to_string(plane.size()) + " rows, expected " +
                         std::to_string(expected));
  std::vector<std::vector<double>> rows;
  rows.reserve(expected);
  for (const json& row : plane) {
    if (!row.is_array() || row.size() != expected)
      throw MapFormatError("map file: '" + key + "' is not square");
    std::vector<double> values;
    values.reserve(expected);
    for (const json& v : row) {
      if (!v.is_number())
        throw MapFormatError("map file: non-numeric entry in '" + key + "'");
      const double x = v.get<double>();
      if (!std::isfinite(x))
        throw MapFormatError("map file: non-finite entry in '" + key + "'");
      values.push_back(x);
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

}  // namespace

MapFile read_map(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw MapFormatError(std::string("map file: invalid JSON (") + e.what() +
                         ")");
  }
  if (!j.is_object()) throw MapFormatError("map file: top level must be an object");
  if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<int>() < 1)
    throw MapFormatError("map file: 'd' must be a positive integer");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw MapFormatError("map file: missing 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "A" && kind != "B")
    throw MapFormatError("map file: kind must be \"A\" or \"B\"");

  const auto d = static_cast<std::size_t>(j["d"].get<int>());
  const std::size_t n = d * d;
  const auto re = parse_plane(j, "re", n);
  const auto im = parse_plane(j, "im", n);

  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      entries[i * n + k] = Complex{re[i][k], im[i][k]};

  ComplexMatrix matrix(n, std::move(entries));
  if (kind == "A") return StochasticMap(d, std::move(matrix));
  return DynamicalMap(d, std::move(matrix));
}

MapFile read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapFormatError("map file: cannot open '" + path + "'");
  return read_map(in);
}

std::string write_map(const MapFile& map) {
  const auto [d, matrix, kind] = std::visit(
      [](const auto& m) -> std::tuple<std::size_t, const ComplexMatrix*,
                                      std::string> {
        using T = std::decay_t<decltype(m)>;
        return {m.d, &m.matrix,
                std::is_same_v<T, StochasticMap> ? "A" : "B"};
      },
      map);

  const std::size_t n = d * d;
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      re_row.push_back((*matrix)(i, k).real());
      im_row.push_back((*matrix)(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json out;
  out["d"] = d;
  out["kind"] = kind;
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out.dump(2) + "\n";
}

void write_map_file(const MapFile& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MapFormatError("map file: cannot write '" + path + "'");
  out << write_map(map);
  if (!out) throw MapFormatError("map file: write failed for '" + path + "'");
}

}  // namespace qdm
