#include "digitop/document.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace digitop {

namespace mp = boost::multiprecision;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) { throw DocumentError(where, message); }

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

Rational exact_from_double(double x, const std::string& where) {
  if (!std::isfinite(x)) fail(where, "non-finite number");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 significant bits are enough to hold any double mantissa exactly.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational q(scaled);
  Integer power = Integer(1) << std::abs(exponent);
  return exponent >= 0 ? Rational(q * Rational(power)) : Rational(q / Rational(power));
}

Rational rational_field(const json& v, const std::string& where, bool allow_float) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    if (!allow_float) fail(where, "expected an integer or a \"num/den\" string, got a float literal");
    return exact_from_double(v.get<double>(), where);
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"num/den\" string");
}

long long integer_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<long long>();
}

RawPoint raw_point(const json& v, std::size_t dimension, const std::string& where) {
  RawPoint out;
  if (!v.is_array()) {
    if (dimension != 1) fail(where, "expected an array of " + std::to_string(dimension) + " coordinates");
    out.push_back(rational_field(v, where, true));
    return out;
  }
  if (v.size() != dimension)
    fail(where, "expected " + std::to_string(dimension) + " coordinates, got " + std::to_string(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_field(v[i], where + "/" + std::to_string(i), true));
  return out;
}

Point lattice_point(const json& v, std::size_t dimension, const std::string& where) {
  std::vector<Point::Coordinate> coords;
  if (!v.is_array()) {
    if (dimension != 1) fail(where, "expected an array of " + std::to_string(dimension) + " coordinates");
    coords.push_back(integer_field(v, where));
    return Point(std::move(coords));
  }
  if (v.size() != dimension)
    fail(where, "expected " + std::to_string(dimension) + " coordinates, got " + std::to_string(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(integer_field(v[i], where + "/" + std::to_string(i)));
  return Point(std::move(coords));
}

ordered_json rational_json(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).convert_to<long long>();
  return to_string(q);
}

}  // namespace

SpaceDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
    fail("line " + std::to_string(line), "malformed JSON");
  }
  return parse_document(doc);
}

SpaceDocument parse_document(const json& doc) {
  if (!doc.is_object()) fail("/", "document must be a JSON object");
  SpaceDocument out;

  const long long dim = integer_field(field(doc, "dimension", "/"), "/dimension");
  if (dim < 1) fail("/dimension", "dimension must be >= 1");
  out.dimension = static_cast<std::size_t>(dim);

  if (auto it = doc.find("domain"); it != doc.end()) {
    if (*it != "Z") fail("/domain", "the only symbolic domain is \"Z\"");
    if (doc.contains("points")) fail("/points", "points and \"domain\": \"Z\" are exclusive");
    if (out.dimension != 1) fail("/dimension", "\"domain\": \"Z\" requires dimension 1");
    out.integer_line = true;
  } else {
    const json& points = field(doc, "points", "/");
    if (!points.is_array() || points.empty()) fail("/points", "expected a nonempty array of points");
    for (std::size_t i = 0; i < points.size(); ++i)
      out.points.push_back(lattice_point(points[i], out.dimension, "/points/" + std::to_string(i)));
  }

  const json& adjacency = field(doc, "adjacency", "/");
  if (field(adjacency, "type", "/adjacency") != "cu") fail("/adjacency/type", "only \"cu\" adjacency is supported");
  const long long u = integer_field(field(adjacency, "u", "/adjacency"), "/adjacency/u");
  if (u < 1 || static_cast<std::size_t>(u) > out.dimension)
    fail("/adjacency/u", "u must satisfy 1 <= u <= dimension");
  out.adjacency_u = static_cast<int>(u);

  const json& metric = field(doc, "metric", "/");
  const json& kind = field(metric, "type", "/metric");
  if (kind == "lp") {
    Rational p = rational_field(field(metric, "p", "/metric"), "/metric/p", false);
    if (p < 1) fail("/metric/p", "p must be >= 1");
    out.metric = MetricSpec::lp(p);
  } else if (kind == "shortest_path") {
    if (out.integer_line) fail("/metric/type", "shortest_path needs a finite point set");
    out.metric = MetricSpec::shortest_path();
  } else {
    fail("/metric/type", "expected \"lp\" or \"shortest_path\"");
  }

  if (auto it = doc.find("maps"); it != doc.end()) {
    if (!it->is_array()) fail("/maps", "expected an array");
    for (std::size_t m = 0; m < it->size(); ++m) {
      const std::string where = "/maps/" + std::to_string(m);
      const json& entry = (*it)[m];
      if (!entry.is_object()) fail(where, "expected an object");
      const json& name = field(entry, "name", where);
      if (!name.is_string() || name.get<std::string>().empty()) fail(where + "/name", "expected a nonempty string");
      MapEntry map{name.get<std::string>(), {}};
      for (const auto& other : out.maps)
        if (other.name == map.name) fail(where + "/name", "duplicate map name \"" + map.name + "\"");
      const bool has_pairs = entry.contains("pairs");
      const bool has_affine = entry.contains("affine");
      if (has_pairs == has_affine) fail(where, "a map needs exactly one of \"pairs\" or \"affine\"");
      if (has_affine) {
        if (!out.integer_line) fail(where + "/affine", "affine maps require \"domain\": \"Z\"");
        const json& a = entry["affine"];
        map.body = AffineMapZ{integer_field(field(a, "p", where + "/affine"), where + "/affine/p"),
                              integer_field(field(a, "q", where + "/affine"), where + "/affine/q")};
      } else {
        if (out.integer_line) fail(where + "/pairs", "maps on \"domain\": \"Z\" must be affine");
        const json& pairs = entry["pairs"];
        if (!pairs.is_array()) fail(where + "/pairs", "expected an array of [argument, value] pairs");
        std::vector<std::pair<RawPoint, RawPoint>> table;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const std::string pw = where + "/pairs/" + std::to_string(k);
          if (!pairs[k].is_array() || pairs[k].size() != 2) fail(pw, "expected [argument, value]");
          table.emplace_back(raw_point(pairs[k][0], out.dimension, pw + "/0"),
                             raw_point(pairs[k][1], out.dimension, pw + "/1"));
        }
        map.body = std::move(table);
      }
      out.maps.push_back(std::move(map));
    }
  }
  return out;
}

ordered_json to_json(const SpaceDocument& doc) {
  ordered_json out;
  out["dimension"] = doc.dimension;
  if (doc.integer_line) {
    out["domain"] = "Z";
  } else {
    ordered_json points = ordered_json::array();
    for (const auto& p : doc.points) points.push_back(p.coords());
    out["points"] = std::move(points);
  }
  out["adjacency"] = {{"type", "cu"}, {"u", doc.adjacency_u}};
  if (doc.metric.kind() == MetricSpec::Kind::ShortestPath)
    out["metric"] = {{"type", "shortest_path"}};
  else
    out["metric"] = {{"type", "lp"}, {"p", to_string(doc.metric.p())}};
  ordered_json maps = ordered_json::array();
  for (const auto& m : doc.maps) {
    ordered_json entry;
    entry["name"] = m.name;
    if (const auto* a = std::get_if<AffineMapZ>(&m.body)) {
      entry["affine"] = {{"p", a->slope}, {"q", a->intercept}};
    } else {
      ordered_json pairs = ordered_json::array();
      for (const auto& [arg, value] : std::get<0>(m.body)) {
        ordered_json a = ordered_json::array();
        ordered_json v = ordered_json::array();
        for (const auto& c : arg) a.push_back(rational_json(c));
        for (const auto& c : value) v.push_back(rational_json(c));
        pairs.push_back({std::move(a), std::move(v)});
      }
      entry["pairs"] = std::move(pairs);
    }
    maps.push_back(std::move(entry));
  }
  out["maps"] = std::move(maps);
  return out;
}

LoadedSpace load(const SpaceDocument& doc) {
  LoadedSpace out;
  if (!doc.integer_line) {
    std::shared_ptr<const DigitalImage> img;
    try {
      img = std::make_shared<const DigitalImage>(doc.points, Adjacency(doc.adjacency_u));
      out.space.emplace(img, doc.metric);
    } catch (const std::invalid_argument& e) {
      fail("/points", e.what());
    }
    for (std::size_t m = 0; m < doc.maps.size(); ++m) {
      const auto& entry = doc.maps[m];
      auto result = validate_selfmap(img, std::get<0>(entry.body));
      if (auto* rejection = std::get_if<MapRejection>(&result)) {
        std::string where = "/maps/" + std::to_string(m);
        const auto& raw = std::get<0>(entry.body);
        for (std::size_t k = 0; k < raw.size(); ++k)
          if (raw[k].first == rejection->point && rejection->reason != MapRejection::Reason::Partial) {
            where += "/pairs/" + std::to_string(k);
            break;
          }
        fail(where, "map \"" + entry.name + "\": " + rejection->message);
      }
      out.maps.emplace(entry.name, std::get<SelfMap>(std::move(result)));
    }
  } else {
    for (const auto& entry : doc.maps) out.affine_maps.emplace(entry.name, std::get<AffineMapZ>(entry.body));
  }
  return out;
}

Point parse_point(std::string_view text) {
  std::vector<Point::Coordinate> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!part.empty() && (part.front() == ' ' || part.front() == '(')) part.remove_prefix(1);
    while (!part.empty() && (part.back() == ' ' || part.back() == ')')) part.remove_suffix(1);
    Rational q = parse_rational(part);
    if (mp::denominator(q) != 1) throw std::invalid_argument("coordinate '" + std::string(part) + "' is not an integer");
    coords.push_back(mp::numerator(q).convert_to<Point::Coordinate>());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Point(std::move(coords));
}

std::vector<Point> parse_point_list(std::string_view text) {
  std::vector<Point> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (!part.empty()) out.push_back(parse_point(part));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace digitop
