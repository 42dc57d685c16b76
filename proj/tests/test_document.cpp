#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "digitop/document.hpp"

using namespace digitop;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(DIGITOP_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where_of(const std::string& text) {
  try {
    load(parse_document(text));
  } catch (const DocumentError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("sample documents load") {
  auto interval = load(parse_document(read("interval.json")));
  REQUIRE(interval.space);
  CHECK(interval.space->size() == 4);
  CHECK(interval.maps.count("T") == 1);
  CHECK(interval.maps.at("Flip")(Point{0}) == Point{3});

  auto square = load(parse_document(read("square.json")));
  CHECK(square.space->image().dimension() == 2);
  CHECK(square.space->metric() == MetricSpec::lp(2));

  auto affine = load(parse_document(read("affine.json")));
  CHECK_FALSE(affine.space);
  CHECK(affine.affine_maps.at("G") == AffineMapZ{1, 1});
}

TEST_CASE("non-integer map values are rejected naming the entry") {
  try {
    load(parse_document(read("halving.json")));
    FAIL("expected a rejection");
  } catch (const DocumentError& e) {
    CHECK(e.where() == "/maps/0/pairs/1");
    CHECK(std::string(e.what()).find("value (3/2) at (1) is not a lattice point") != std::string::npos);
  }
  // A float literal is read exactly, so 1.5 is rejected the same way.
  auto text = read("halving.json");
  text.replace(text.find("\"3/2\""), 5, "1.5");
  CHECK(where_of(text) == "/maps/0/pairs/1");
}

TEST_CASE("syntax errors report a line") {
  CHECK(where_of("{\n  \"dimension\": 1,\n  \"points\": [0, 1,,]\n}") == "line 3");
}

TEST_CASE("field errors report a JSON pointer") {
  const std::string base = R"({"dimension": 1, "points": [0, 1], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "lp", "p": 1})";
  CHECK(where_of(base + "}").empty());
  CHECK(where_of(R"({"points": [0], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "lp", "p": 1}})") == "/");
  CHECK(where_of(R"({"dimension": 1, "points": [0, 1], "adjacency": {"type": "cu", "u": 2}, "metric": {"type": "lp", "p": 1}})") ==
        "/adjacency/u");
  CHECK(where_of(R"({"dimension": 1, "points": [0, 1], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "lp", "p": 1.5}})") ==
        "/metric/p");
  CHECK(where_of(R"({"dimension": 1, "points": [0, 0.5], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "lp", "p": 1}})") ==
        "/points/1");
  CHECK(where_of(R"({"dimension": 1, "points": [0, 0], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "lp", "p": 1}})") ==
        "/points");
  CHECK(where_of(base + R"(, "maps": [{"name": "A", "affine": {"p": 1, "q": 0}}]})") == "/maps/0/affine");
  CHECK(where_of(base + R"(, "maps": [{"name": "A", "pairs": [[0, 0]]}]})") == "/maps/0");
  CHECK(where_of(base + R"(, "maps": [{"name": "A", "pairs": [[0, 0], [1, 1]]}, {"name": "A", "pairs": []}]})") ==
        "/maps/1/name");
  CHECK(where_of(R"({"dimension": 1, "points": [0, 1], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "shortest_path"}})").empty());
  CHECK(where_of(R"({"dimension": 1, "points": [0, 2], "adjacency": {"type": "cu", "u": 1}, "metric": {"type": "shortest_path"}})") ==
        "/points");
}

TEST_CASE("point arguments") {
  CHECK(parse_point("1,2") == Point{1, 2});
  CHECK(parse_point("(3)") == Point{3});
  CHECK(parse_point("-4") == Point{-4});
  CHECK_THROWS_AS(parse_point("1/2"), std::invalid_argument);
  CHECK(parse_point_list("0,0;1,1") == std::vector<Point>{{0, 0}, {1, 1}});
}

namespace {

// Random valid documents: a few distinct points in a small box, a metric and
// a couple of total maps.
SpaceDocument random_document(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim_d(1, 3), coord(-2, 2), count(1, 5), coin(0, 1);
  SpaceDocument doc;
  doc.dimension = static_cast<std::size_t>(dim_d(rng));
  std::set<Point> pts;
  const int want = count(rng);
  while (static_cast<int>(pts.size()) < want) {
    std::vector<Point::Coordinate> c;
    for (std::size_t i = 0; i < doc.dimension; ++i) c.push_back(coord(rng));
    pts.insert(Point(c));
  }
  doc.points.assign(pts.begin(), pts.end());
  std::shuffle(doc.points.begin(), doc.points.end(), rng);
  doc.adjacency_u = std::uniform_int_distribution<int>(1, static_cast<int>(doc.dimension))(rng);
  doc.metric = coin(rng) ? MetricSpec::lp(1) : MetricSpec::lp(Rational(std::uniform_int_distribution<int>(2, 7)(rng), 2));
  for (int m = 0; m < 2; ++m) {
    std::vector<std::pair<RawPoint, RawPoint>> table;
    std::uniform_int_distribution<std::size_t> pick(0, doc.points.size() - 1);
    for (const auto& p : doc.points) table.emplace_back(to_raw(p), to_raw(doc.points[pick(rng)]));
    doc.maps.push_back({"M" + std::to_string(m), std::move(table)});
  }
  return doc;
}

}  // namespace

TEST_CASE("property: serialize then parse is the identity on valid documents") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    SpaceDocument doc = random_document(rng);
    const auto text = to_json(doc).dump();
    SpaceDocument back = parse_document(text);
    REQUIRE(back == doc);
    REQUIRE(to_json(back).dump() == text);
    auto loaded = load(back);
    REQUIRE(loaded.maps.size() == 2);
  }
  auto affine = parse_document(read("affine.json"));
  CHECK(parse_document(to_json(affine).dump()) == affine);
}
