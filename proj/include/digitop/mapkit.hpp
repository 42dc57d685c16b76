#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digitop/exact.hpp"
#include "digitop/space.hpp"

namespace digitop {

/// A total self-map of a finite digital image, stored as a dense table over
/// the image's canonical point order.
class SelfMap {
 public:
  /// Table entry i is the index of f(point(i)).  Throws std::invalid_argument
  /// if the table is not total or points outside the image.
  SelfMap(std::shared_ptr<const DigitalImage> domain, std::vector<std::size_t> table);

  static SelfMap identity(std::shared_ptr<const DigitalImage> domain);
  /// Throws std::out_of_range if value is not in the domain.
  static SelfMap constant(std::shared_ptr<const DigitalImage> domain, const Point& value);

  const DigitalImage& domain() const noexcept { return *domain_; }
  const std::shared_ptr<const DigitalImage>& domain_ptr() const noexcept { return domain_; }
  std::size_t size() const noexcept { return table_.size(); }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::size_t operator()(std::size_t index) const { return table_[index]; }
  /// Throws std::out_of_range if x is not in the domain.
  const Point& operator()(const Point& x) const;

  bool is_constant() const;
  /// this o other (apply other first).
  SelfMap compose(const SelfMap& other) const;
  /// "{(0)->(1), (1)->(1)}"
  std::string to_string() const;

  friend bool operator==(const SelfMap& a, const SelfMap& b) {
    return a.table_ == b.table_ && *a.domain_ == *b.domain_;
  }

 private:
  std::shared_ptr<const DigitalImage> domain_;
  std::vector<std::size_t> table_;
};

/// Two self-maps over one domain.
struct MapPair {
  MapPair(SelfMap first, SelfMap second);
  SelfMap first;
  SelfMap second;
};

/// A point whose coordinates are arbitrary rationals, as read from user input
/// before lattice validation.
using RawPoint = std::vector<Rational>;

RawPoint to_raw(const Point& p);
std::string to_string(const RawPoint& p);

struct MapRejection {
  enum class Reason { DomainPointNotInImage, NonLatticePoint, ValueOutsideDomain, DuplicateAssignment, Partial };
  Reason reason;
  RawPoint point;                 // the argument concerned
  std::optional<RawPoint> value;  // the offending value, when there is one
  std::string message;
};

/// Either a validated map or the first rejection found (entries are examined
/// in input order, then totality is checked in canonical order).
using MapValidation = std::variant<SelfMap, MapRejection>;

MapValidation validate_selfmap(std::shared_ptr<const DigitalImage> img,
                               const std::vector<std::pair<RawPoint, RawPoint>>& raw);

struct ContinuityVerdict {
  bool continuous = true;
  std::optional<std::pair<Point, Point>> witness;  // adjacent x, y with f(x), f(y) neither equal nor adjacent
};

ContinuityVerdict is_continuous(const SelfMap& f);

std::vector<Point> fixed_points(const SelfMap& f);

struct OrbitReport {
  enum class Kind { EventuallyConstant, EventuallyPeriodic, Truncated };

  std::vector<Point> orbit;
  Kind kind = Kind::Truncated;
  std::size_t settle_index = 0;  // EventuallyConstant: orbit[settle_index] is the fixed value
  std::size_t period = 0;        // EventuallyPeriodic: > 1

  const Point& settled_value() const { return orbit.at(settle_index); }
  std::string describe() const;
};

/// Picard iteration x_{n+1} = f(x_n) from x0 until a point repeats or
/// max_steps applications have been made.  The recorded orbit ends with the
/// first repeated point.
OrbitReport orbit(const SelfMap& f, const Point& x0, std::size_t max_steps);
/// max_steps = |X| + 1, which always suffices.
OrbitReport orbit(const SelfMap& f, const Point& x0);

struct FppVerdict {
  bool has_fpp = true;
  std::optional<SelfMap> witness;  // a fixed-point-free map when has_fpp is false
};

inline constexpr std::size_t kFppMaxPoints = 6;

/// Whether every (continuous, if restrict_continuous) self-map of img has a
/// fixed point.  Throws BudgetExceeded beyond kFppMaxPoints points.
FppVerdict has_fpp(std::shared_ptr<const DigitalImage> img, bool restrict_continuous);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x -> slope * x + intercept on all of Z.
struct AffineMapZ {
  std::int64_t slope = 1;
  std::int64_t intercept = 0;

  std::int64_t operator()(std::int64_t x) const { return slope * x + intercept; }
  std::string to_string() const;
  friend bool operator==(const AffineMapZ&, const AffineMapZ&) = default;
};

struct AffineFixedPoints {
  enum class Kind { None, All, Single };
  Kind kind = Kind::None;
  std::int64_t point = 0;  // Kind::Single
};

AffineFixedPoints affine_analyze(const AffineMapZ& m);

struct AffineDomination {
  bool dominates = false;       // |H x - H y| <= rho |G x - G y| for all x, y
  bool range_included = false;  // H(Z) subset of G(Z)
};

/// Decided symbolically under the metric |x - y|.  Throws
/// std::invalid_argument unless 0 <= rho < 1.
AffineDomination affine_dominates(const AffineMapZ& h, const AffineMapZ& g, const Rational& rho);

}  // namespace digitop
