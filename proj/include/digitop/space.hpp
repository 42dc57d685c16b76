#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace digitop {

/// A lattice point of Z^n.  Ordered lexicographically.
class Point {
 public:
  using Coordinate = std::int64_t;

  Point() = default;
  explicit Point(std::vector<Coordinate> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coordinate> coords) : coords_(coords) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  Coordinate operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Coordinate>& coords() const noexcept { return coords_; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

  /// "(1,2)"
  std::string to_string() const;

 private:
  std::vector<Coordinate> coords_;
};

/// c_u adjacency: points differ by at most 1 in every coordinate, and by
/// exactly 1 in between 1 and u coordinates.
class Adjacency {
 public:
  explicit Adjacency(int u);
  static Adjacency cu(int u) { return Adjacency(u); }

  int u() const noexcept { return u_; }
  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  int u_;
};

/// Throws std::invalid_argument on dimension mismatch or u outside [1, n].
bool adjacent(const Point& x, const Point& y, Adjacency adj);

/// A finite digital image (X, kappa).  Points are stored in lexicographic
/// order; that order is the canonical index order used by every map table.
class DigitalImage {
 public:
  /// Throws std::invalid_argument if points is empty, mixes dimensions,
  /// repeats a point, or u is out of range for the dimension.
  DigitalImage(std::vector<Point> points, Adjacency adjacency);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return points_.front().dimension(); }
  Adjacency adjacency() const noexcept { return adjacency_; }
  std::span<const Point> points() const noexcept { return points_; }
  const Point& point(std::size_t index) const { return points_.at(index); }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }
  /// Throws std::out_of_range if p is not in the image.
  std::size_t require_index(const Point& p) const;

  bool adjacent(std::size_t i, std::size_t j) const;
  /// Indices of the kappa-neighbours of point i, ascending.
  std::vector<std::size_t> neighbors(std::size_t i) const;
  bool is_connected() const;

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.adjacency_ == b.adjacency_ && a.points_ == b.points_;
  }

 private:
  std::vector<Point> points_;
  Adjacency adjacency_;
};

/// Partition into kappa-components.  Blocks are sorted, and listed in order
/// of their least point.
std::vector<std::vector<Point>> components(const DigitalImage& img);

struct PathCheck {
  bool is_path = false;
  std::size_t length = 0;                 // valid when is_path
  std::optional<std::size_t> bad_index;   // i such that seq[i], seq[i+1] are not adjacent
};

/// Throws std::invalid_argument for an empty sequence and std::out_of_range
/// for a point outside the image.  Non-adjacent steps are reported, not thrown.
PathCheck is_path(const DigitalImage& img, std::span<const Point> seq);

/// ({a, ..., b}, c_1) in Z.  Throws std::invalid_argument if a > b.
DigitalImage digital_interval(Point::Coordinate a, Point::Coordinate b);

/// The width x height rectangle [0,width-1] x [0,height-1] in Z^2.
DigitalImage grid(Point::Coordinate width, Point::Coordinate height, Adjacency adjacency);

}  // namespace digitop
