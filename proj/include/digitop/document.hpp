#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "digitop/mapkit.hpp"
#include "digitop/metric.hpp"
#include "digitop/space.hpp"

namespace digitop {

/// Malformed or invalid space document.  `where` is a line ("line 4") for
/// syntax errors or a JSON pointer ("/maps/0/pairs/1") for field errors.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct MapEntry {
  std::string name;
  std::variant<std::vector<std::pair<RawPoint, RawPoint>>, AffineMapZ> body;

  bool is_affine() const { return std::holds_alternative<AffineMapZ>(body); }
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

/// The on-disk description of a digital metric space and named maps:
///
///   { "dimension": 1,
///     "points": [[0], [1], [2]],          or  "domain": "Z"
///     "adjacency": {"type": "cu", "u": 1},
///     "metric": {"type": "lp", "p": "1"}  or  {"type": "shortest_path"},
///     "maps": [ {"name": "T", "pairs": [[[0], [1]], [[1], [1]], ...]},
///               {"name": "G", "affine": {"p": 1, "q": 1}} ] }
///
/// Rationals are integers or "num/den" strings.  A one-dimensional point may
/// be written as a bare number.  Affine maps are legal only with "domain": "Z".
struct SpaceDocument {
  std::size_t dimension = 1;
  bool integer_line = false;  // "domain": "Z"
  std::vector<Point> points;  // as written; empty when integer_line
  int adjacency_u = 1;
  MetricSpec metric = MetricSpec::lp(1);
  std::vector<MapEntry> maps;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

SpaceDocument parse_document(const std::string& text);
SpaceDocument parse_document(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const SpaceDocument& doc);

/// A document turned into library objects, every finite map validated.
struct LoadedSpace {
  std::optional<DigitalMetricSpace> space;  // absent for "domain": "Z"
  std::map<std::string, SelfMap> maps;
  std::map<std::string, AffineMapZ> affine_maps;
};

/// Throws DocumentError naming the map and entry for any map rejection.
LoadedSpace load(const SpaceDocument& doc);

/// "1,2" -> (1,2).  Throws std::invalid_argument.
Point parse_point(std::string_view text);
/// "0,0;1,1" -> [(0,0), (1,1)]
std::vector<Point> parse_point_list(std::string_view text);

}  // namespace digitop
