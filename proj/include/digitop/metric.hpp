#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "digitop/exact.hpp"
#include "digitop/space.hpp"

namespace digitop {

class MetricSpec {
 public:
  enum class Kind { Lp, ShortestPath };

  /// Throws std::invalid_argument unless p >= 1.
  static MetricSpec lp(Rational p);
  static MetricSpec shortest_path() { return MetricSpec(Kind::ShortestPath, Rational(0)); }

  Kind kind() const noexcept { return kind_; }
  /// Meaningful only for Kind::Lp.
  const Rational& p() const noexcept { return p_; }
  /// "l1", "l2", "l3/2", "shortest-path"
  std::string name() const;

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;

 private:
  MetricSpec(Kind kind, Rational p) : kind_(kind), p_(std::move(p)) {}
  Kind kind_;
  Rational p_;
};

/// l_p distance between two points of equal dimension.  Exact for p = 1,
/// p = 2, and for any p when the points differ in at most one coordinate;
/// otherwise an approximation (see Real::kApproxTolerance).
Real lp_distance(const Point& x, const Point& y, const Rational& p);

/// (X, d, kappa).  The image is shared and immutable; the all-pairs distance
/// table is built once on first use and safe to read concurrently.
class DigitalMetricSpace {
 public:
  /// Throws std::invalid_argument for the shortest-path metric on a
  /// disconnected image.
  DigitalMetricSpace(std::shared_ptr<const DigitalImage> image, MetricSpec metric);
  DigitalMetricSpace(DigitalImage image, MetricSpec metric)
      : DigitalMetricSpace(std::make_shared<const DigitalImage>(std::move(image)), std::move(metric)) {}

  const DigitalImage& image() const noexcept { return *image_; }
  const std::shared_ptr<const DigitalImage>& image_ptr() const noexcept { return image_; }
  const MetricSpec& metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return image_->size(); }

  /// Distance between points given by canonical index.
  const Real& distance(std::size_t i, std::size_t j) const;
  /// Throws std::out_of_range if either point is outside the space.
  Real distance(const Point& x, const Point& y) const;

 private:
  struct Table {
    std::once_flag once;
    std::vector<Real> values;
  };
  void build_table() const;

  std::shared_ptr<const DigitalImage> image_;
  MetricSpec metric_;
  std::shared_ptr<Table> table_;
};

/// Positive lower bound on distances between distinct points; epsilon = 1 by
/// convention for a singleton.
struct DiscretenessCertificate {
  Real epsilon;
};

DiscretenessCertificate discreteness_certificate(const DigitalMetricSpace& space);

/// Hausdorff distance between nonempty subsets of the space.  Throws
/// std::invalid_argument for an empty subset, std::out_of_range for a point
/// outside the space.
Real hausdorff(const DigitalMetricSpace& space, std::span<const Point> a, std::span<const Point> b);

}  // namespace digitop
