#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/exact.hpp"
#include "digitop/mapkit.hpp"
#include "digitop/metric.hpp"

namespace digitop {

/// Least parameter value for which a contractive inequality holds on every
/// pair, or NonePossible when some pair has a zero right-hand side under a
/// positive left-hand side.
struct MinimalConstant {
  enum class Status { Value, NonePossible };
  Status status = Status::Value;
  Ratio value;

  bool possible() const noexcept { return status == Status::Value; }
  std::string to_string() const { return possible() ? value.to_string() : "none possible"; }
};

/// Verdict of checking one contractive condition over all ordered pairs
/// (x, y), diagonal included.  The witness is the lexicographically least
/// violating pair.
struct ConditionReport {
  std::string condition;
  bool holds = true;
  std::optional<std::pair<Point, Point>> witness;
  std::optional<MinimalConstant> minimal_constant;
  /// Pairs where the condition's expression is 0/0 (rational condition only).
  std::vector<std::pair<Point, Point>> undefined_pairs;
  bool ill_defined() const noexcept { return !undefined_pairs.empty(); }
};

/// A pointwise property of a pair of maps; witness is the least failing x.
struct PointwiseVerdict {
  bool holds = true;
  std::optional<Point> witness;
  std::string method;
};

/// d(fx, fy) <= k d(x, y).  Parameters outside their legal range (k >= 0;
/// a, b >= 0; 0 <= r, rho, xi < 1) throw std::invalid_argument.
ConditionReport check_banach(const DigitalMetricSpace& space, const SelfMap& f, const Ratio& k);
/// max over distinct pairs of d(fx, fy) / d(x, y); 0 on a singleton.
Ratio lipschitz_min(const DigitalMetricSpace& space, const SelfMap& f);

/// d(Tx, Ty) <= a[d(x,Tx) + d(y,Ty)] + b[d(x,Ty) + d(Tx,y)].  The minimal
/// constant is the least scale factor s such that (s a, s b) satisfies the
/// inequality.
ConditionReport check_kannan(const DigitalMetricSpace& space, const SelfMap& t, const Rational& a,
                             const Rational& b);

/// d(Tx, Ty) <= r max{d(x,y), d(x,Tx), d(y,Ty)}
ConditionReport check_quasi(const DigitalMetricSpace& space, const SelfMap& t, const Rational& r);

/// d(Tx, Ty) <= r max{d(x,y), d(x,Tx), d(y,Ty), d(x,Ty), d(Tx,y)}
ConditionReport check_ciric5(const DigitalMetricSpace& space, const SelfMap& t, const Rational& r);

struct DominationReport {
  ConditionReport inequality;  // d(Hx, Hy) <= rho d(Gx, Gy)
  bool range_included = false; // H(X) subset of G(X)
};

DominationReport check_pair_domination(const DigitalMetricSpace& space, const SelfMap& g, const SelfMap& h,
                                       const Rational& rho);

struct SumDominationReport {
  ConditionReport inequality;  // d(Ju, Jq) + d(Ku, Kq) <= xi d(Ku, Kq)
  bool both_constant = false;
};

SumDominationReport check_saluja(const DigitalMetricSpace& space, const SelfMap& j, const SelfMap& k,
                                 const Rational& xi);

/// d(Tx, Sy) <= [d(x,Tx) d(x,Sy) + d(y,Sy) d(y,Tx)] / [d(x,Sy) + d(y,Tx)],
/// evaluated only where the denominator is nonzero; the rest are reported
/// as undefined pairs.
ConditionReport parv_rational_check(const DigitalMetricSpace& space, const SelfMap& t, const SelfMap& s);

/// d(S(T(x)), T(S(x))) <= d(S(x), T(x)) for all x.
PointwiseVerdict weakly_commutative(const DigitalMetricSpace& space, const SelfMap& s, const SelfMap& t);

/// Compatibility reduced to finite spaces: S(T(x)) = T(S(x)) at every
/// coincidence point S(x) = T(x).
PointwiseVerdict compatible(const DigitalMetricSpace& space, const SelfMap& s, const SelfMap& t);

}  // namespace digitop
