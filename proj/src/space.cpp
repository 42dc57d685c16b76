#include "digitop/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace digitop {

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

Adjacency::Adjacency(int u) : u_(u) {
  if (u < 1) throw std::invalid_argument("c_u adjacency requires u >= 1");
}

namespace {

void check_adjacency_fits(std::size_t n, Adjacency adj) {
  if (static_cast<std::size_t>(adj.u()) > n)
    throw std::invalid_argument("c_" + std::to_string(adj.u()) + " adjacency is undefined in Z^" +
                                std::to_string(n));
}

bool adjacent_unchecked(const Point& x, const Point& y, int u) {
  int differing = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    auto delta = x[i] - y[i];
    if (delta == 0) continue;
    if (delta != 1 && delta != -1) return false;
    if (++differing > u) return false;
  }
  return differing > 0;
}

}  // namespace

bool adjacent(const Point& x, const Point& y, Adjacency adj) {
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("adjacency between points of different dimension");
  check_adjacency_fits(x.dimension(), adj);
  return adjacent_unchecked(x, y, adj.u());
}

DigitalImage::DigitalImage(std::vector<Point> points, Adjacency adjacency)
    : points_(std::move(points)), adjacency_(adjacency) {
  if (points_.empty()) throw std::invalid_argument("digital image must be nonempty");
  const std::size_t n = points_.front().dimension();
  if (n == 0) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : points_) {
    if (p.dimension() != n) throw std::invalid_argument("points of mixed dimension " + p.to_string());
  }
  check_adjacency_fits(n, adjacency_);
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw std::invalid_argument("duplicate point " + dup->to_string());
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t DigitalImage::require_index(const Point& p) const {
  auto idx = index_of(p);
  if (!idx) throw std::out_of_range("point " + p.to_string() + " is not in the image");
  return *idx;
}

bool DigitalImage::adjacent(std::size_t i, std::size_t j) const {
  return adjacent_unchecked(points_.at(i), points_.at(j), adjacency_.u());
}

std::vector<std::size_t> DigitalImage::neighbors(std::size_t i) const {
  const Point& x = points_.at(i);
  const std::size_t n = dimension();
  std::vector<std::size_t> out;

  std::size_t offsets = 1;
  bool enumerate = true;
  for (std::size_t k = 0; k < n && enumerate; ++k) {
    offsets *= 3;
    enumerate = offsets < points_.size();
  }
  if (!enumerate) {
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (adjacent_unchecked(x, points_[j], adjacency_.u())) out.push_back(j);
    }
    return out;
  }
  // Walk the offset vectors in {-1,0,1}^n as a base-3 odometer.
  std::vector<int> digit(n, 0);
  for (std::size_t step = 0; step < offsets; ++step) {
    std::vector<Point::Coordinate> c = x.coords();
    int moved = 0;
    for (std::size_t k = 0; k < n; ++k) {
      c[k] += digit[k] - 1;
      moved += digit[k] != 1;
    }
    if (moved >= 1 && moved <= adjacency_.u()) {
      if (auto j = index_of(Point(std::move(c)))) out.push_back(*j);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (++digit[k] < 3) break;
      digit[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DigitalImage::is_connected() const { return components(*this).size() == 1; }

std::vector<std::vector<Point>> components(const DigitalImage& img) {
  const std::size_t size = img.size();
  std::vector<std::size_t> label(size, size);
  std::vector<std::vector<Point>> blocks;
  for (std::size_t seed = 0; seed < size; ++seed) {
    if (label[seed] != size) continue;
    const std::size_t id = blocks.size();
    std::vector<std::size_t> members{seed};
    label[seed] = id;
    std::queue<std::size_t> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
      auto i = frontier.front();
      frontier.pop();
      for (auto j : img.neighbors(i)) {
        if (label[j] == size) {
          label[j] = id;
          members.push_back(j);
          frontier.push(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Point> block;
    block.reserve(members.size());
    for (auto i : members) block.push_back(img.point(i));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

PathCheck is_path(const DigitalImage& img, std::span<const Point> seq) {
  if (seq.empty()) throw std::invalid_argument("a path needs at least one point");
  std::vector<std::size_t> idx;
  idx.reserve(seq.size());
  for (const auto& p : seq) idx.push_back(img.require_index(p));
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    if (!img.adjacent(idx[i], idx[i + 1])) return {false, 0, i};
  }
  return {true, seq.size() - 1, std::nullopt};
}

DigitalImage digital_interval(Point::Coordinate a, Point::Coordinate b) {
  if (a > b) throw std::invalid_argument("digital interval needs a <= b");
  std::vector<Point> points;
  for (auto t = a; t <= b; ++t) points.push_back(Point{t});
  return DigitalImage(std::move(points), Adjacency(1));
}

DigitalImage grid(Point::Coordinate width, Point::Coordinate height, Adjacency adjacency) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid sides must be positive");
  std::vector<Point> points;
  for (Point::Coordinate x = 0; x < width; ++x)
    for (Point::Coordinate y = 0; y < height; ++y) points.push_back(Point{x, y});
  return DigitalImage(std::move(points), adjacency);
}

}  // namespace digitop
