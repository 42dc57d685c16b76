#pragma once

#include <optional>
#include <string>
#include <vector>

#include "digitop/contracts.hpp"
#include "digitop/mapkit.hpp"
#include "digitop/metric.hpp"

namespace digitop {

struct TheoremReport {
  enum class Conclusion { ConfirmsTheorem, RefutesAssertion, HypothesisFails };

  ConditionReport hypothesis;
  std::optional<Point> fixed_point;  // the fixed point, when there is exactly one
  std::vector<Point> fixed_points;   // full scan of Fix(f)
  bool unique = false;
  std::vector<OrbitReport> orbits;   // one per starting point, canonical order
  Conclusion conclusion = Conclusion::HypothesisFails;
  std::optional<Point> refutation_start;  // the start whose evidence breaks the theorem
  std::string refutation;                 // what broke, when conclusion is RefutesAssertion
};

std::string to_string(TheoremReport::Conclusion c);

/// Uniformly discrete Banach principle on a finite space: computes the least
/// Lipschitz constant k; if k < 1, checks that Fix(f) is a single point that
/// every Picard orbit reaches and that d(x_{n+1}, x_n) <= k d(x_n, x_{n-1})
/// along each orbit.
TheoremReport banach_verify(const DigitalMetricSpace& space, const SelfMap& f);

/// Kannan-type theorem.  Throws std::invalid_argument unless a, b >= 0 and
/// a + b < 1/2.  When the inequality holds, checks uniqueness of the fixed
/// point, convergence of every orbit to it, and the estimate
/// d(x_n, x_{n+1}) <= A^n d(x_0, x_1) with A = (a+b)/(1-(a+b)).
TheoremReport kannan_verify(const DigitalMetricSpace& space, const SelfMap& t, const Rational& a,
                            const Rational& b);

/// x_{2n+1} = T x_{2n}, x_{2n+2} = S x_{2n+1}.  Repetition is detected on
/// (point, parity) states; the classification refers to the point sequence.
/// When S and T coincide this is the Picard orbit of T.
OrbitReport alternating_orbit(const SelfMap& s, const SelfMap& t, const Point& x0, std::size_t max_steps);
/// max_steps = 2|X| + 1.
OrbitReport alternating_orbit(const SelfMap& s, const SelfMap& t, const Point& x0);

struct StabilityVerdict {
  Point target;
  bool all_orbits_converge = true;
  std::optional<OrbitReport> deviating_orbit;
};

/// T-stability of the Picard procedure at the fixed point p.  On a finite
/// uniformly discrete space, perturbations tending to 0 vanish eventually, so
/// stability reduces to every Picard orbit settling at p.  Throws
/// std::invalid_argument if p is not a fixed point of T.
StabilityVerdict t_stability_verdict(const DigitalMetricSpace& space, const SelfMap& t, const Point& p);

}  // namespace digitop
