#include "digitop/mapkit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace digitop {

namespace mp = boost::multiprecision;

SelfMap::SelfMap(std::shared_ptr<const DigitalImage> domain, std::vector<std::size_t> table)
    : domain_(std::move(domain)), table_(std::move(table)) {
  if (!domain_) throw std::invalid_argument("self-map needs a domain");
  if (table_.size() != domain_->size()) throw std::invalid_argument("self-map table is not total");
  for (auto v : table_) {
    if (v >= domain_->size()) throw std::invalid_argument("self-map value outside the domain");
  }
}

SelfMap SelfMap::identity(std::shared_ptr<const DigitalImage> domain) {
  std::vector<std::size_t> table(domain->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return SelfMap(std::move(domain), std::move(table));
}

SelfMap SelfMap::constant(std::shared_ptr<const DigitalImage> domain, const Point& value) {
  auto v = domain->require_index(value);
  std::vector<std::size_t> table(domain->size(), v);
  return SelfMap(std::move(domain), std::move(table));
}

const Point& SelfMap::operator()(const Point& x) const {
  return domain_->point(table_[domain_->require_index(x)]);
}

bool SelfMap::is_constant() const {
  return std::adjacent_find(table_.begin(), table_.end(), std::not_equal_to<>()) == table_.end();
}

SelfMap SelfMap::compose(const SelfMap& other) const {
  if (!(*domain_ == other.domain())) throw std::invalid_argument("composition across different domains");
  std::vector<std::size_t> table(table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = table_[other(i)];
  return SelfMap(domain_, std::move(table));
}

std::string SelfMap::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i > 0) out += ", ";
    out += domain_->point(i).to_string() + "->" + domain_->point(table_[i]).to_string();
  }
  return out + "}";
}

MapPair::MapPair(SelfMap f, SelfMap s) : first(std::move(f)), second(std::move(s)) {
  if (!(first.domain() == second.domain())) throw std::invalid_argument("map pair needs a shared domain");
}

RawPoint to_raw(const Point& p) {
  RawPoint out;
  for (auto c : p.coords()) out.emplace_back(c);
  return out;
}

std::string to_string(const RawPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(p[i]);
  }
  return out + ")";
}

namespace {

std::optional<Point> to_lattice(const RawPoint& raw) {
  std::vector<Point::Coordinate> coords;
  for (const auto& c : raw) {
    if (mp::denominator(c) != 1) return std::nullopt;
    coords.push_back(mp::numerator(c).convert_to<Point::Coordinate>());
  }
  return Point(std::move(coords));
}

}  // namespace

MapValidation validate_selfmap(std::shared_ptr<const DigitalImage> img,
                               const std::vector<std::pair<RawPoint, RawPoint>>& raw) {
  using Reason = MapRejection::Reason;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(img->size(), kUnset);

  for (const auto& [arg, value] : raw) {
    auto x = to_lattice(arg);
    if (!x || x->dimension() != img->dimension())
      return MapRejection{Reason::NonLatticePoint, arg, std::nullopt,
                          "argument " + to_string(arg) + " is not a lattice point of Z^" +
                              std::to_string(img->dimension())};
    auto xi = img->index_of(*x);
    if (!xi)
      return MapRejection{Reason::DomainPointNotInImage, arg, std::nullopt,
                          "argument " + to_string(arg) + " is not in the image"};
    auto y = to_lattice(value);
    if (!y || y->dimension() != img->dimension())
      return MapRejection{Reason::NonLatticePoint, arg, value,
                          "value " + to_string(value) + " at " + to_string(arg) +
                              " is not a lattice point (map is not integer-valued)"};
    auto yi = img->index_of(*y);
    if (!yi)
      return MapRejection{Reason::ValueOutsideDomain, arg, value,
                          "value " + to_string(value) + " at " + to_string(arg) + " lies outside the image"};
    if (table[*xi] != kUnset)
      return MapRejection{Reason::DuplicateAssignment, arg, value,
                          "argument " + to_string(arg) + " is assigned more than once"};
    table[*xi] = *yi;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kUnset) {
      auto p = to_raw(img->point(i));
      return MapRejection{Reason::Partial, p, std::nullopt, "map is not defined at " + to_string(p)};
    }
  }
  return SelfMap(std::move(img), std::move(table));
}

ContinuityVerdict is_continuous(const SelfMap& f) {
  const DigitalImage& img = f.domain();
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (auto j : img.neighbors(i)) {
      if (j < i) continue;
      if (f(i) != f(j) && !img.adjacent(f(i), f(j))) return {false, std::pair{img.point(i), img.point(j)}};
    }
  }
  return {};
}

std::vector<Point> fixed_points(const SelfMap& f) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(i) == i) out.push_back(f.domain().point(i));
  }
  return out;
}

std::string OrbitReport::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? " " : "") << orbit[i].to_string();
  switch (kind) {
    case Kind::EventuallyConstant:
      os << " => eventually constant at " << settled_value().to_string() << " from index " << settle_index;
      break;
    case Kind::EventuallyPeriodic:
      os << " => eventually periodic with period " << period;
      break;
    case Kind::Truncated:
      os << " => truncated";
      break;
  }
  return os.str();
}

OrbitReport orbit(const SelfMap& f, const Point& x0, std::size_t max_steps) {
  const DigitalImage& img = f.domain();
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_seen(img.size(), kUnseen);
  OrbitReport report;
  std::size_t x = img.require_index(x0);
  for (std::size_t step = 0;; ++step) {
    report.orbit.push_back(img.point(x));
    if (first_seen[x] != kUnseen) {
      std::size_t cycle = step - first_seen[x];
      if (cycle == 1) {
        report.kind = OrbitReport::Kind::EventuallyConstant;
        report.settle_index = first_seen[x];
      } else {
        report.kind = OrbitReport::Kind::EventuallyPeriodic;
        report.period = cycle;
      }
      return report;
    }
    first_seen[x] = step;
    if (step == max_steps) break;
    x = f(x);
  }
  report.kind = OrbitReport::Kind::Truncated;
  return report;
}

OrbitReport orbit(const SelfMap& f, const Point& x0) { return orbit(f, x0, f.size() + 1); }

FppVerdict has_fpp(std::shared_ptr<const DigitalImage> img, bool restrict_continuous) {
  const std::size_t n = img->size();
  if (n > kFppMaxPoints)
    throw BudgetExceeded("FPP enumeration is limited to " + std::to_string(kFppMaxPoints) + " points, image has " +
                         std::to_string(n));
  std::vector<std::size_t> table(n, 0);
  while (true) {
    bool fixed = false;
    for (std::size_t i = 0; i < n && !fixed; ++i) fixed = table[i] == i;
    if (!fixed) {
      SelfMap f(img, table);
      if (!restrict_continuous || is_continuous(f).continuous) return {false, std::move(f)};
    }
    // Lexicographic odometer, first point most significant.
    std::size_t k = n;
    while (k > 0 && ++table[k - 1] == n) table[--k] = 0;
    if (k == 0) break;
  }
  return {};
}

std::string AffineMapZ::to_string() const {
  return "x -> " + std::to_string(slope) + "*x + " + std::to_string(intercept);
}

AffineFixedPoints affine_analyze(const AffineMapZ& m) {
  // x = p x + q  <=>  (1 - p) x = q
  if (m.slope == 1) return {m.intercept == 0 ? AffineFixedPoints::Kind::All : AffineFixedPoints::Kind::None, 0};
  const std::int64_t denom = 1 - m.slope;
  if (m.intercept % denom != 0) return {AffineFixedPoints::Kind::None, 0};
  return {AffineFixedPoints::Kind::Single, m.intercept / denom};
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AffineDomination affine_dominates(const AffineMapZ& h, const AffineMapZ& g, const Rational& rho) {
  if (rho < 0 || rho >= 1) throw std::invalid_argument("rho must satisfy 0 <= rho < 1");
  // |H x - H y| = |p_H| |x - y| and likewise for G, so domination over all
  // pairs is a single comparison of slopes.
  AffineDomination out;
  const auto ph = h.slope < 0 ? -h.slope : h.slope;
  const auto pg = g.slope < 0 ? -g.slope : g.slope;
  out.dominates = Rational(ph) <= rho * Rational(pg);

  if (pg == 0) {
    out.range_included = h.slope == 0 && h.intercept == g.intercept;
  } else if (pg == 1) {
    out.range_included = true;
  } else {
    // G(Z) is the residue class of q_G mod |p_G|.
    out.range_included = floor_mod(h.slope, pg) == 0 && floor_mod(h.intercept - g.intercept, pg) == 0;
  }
  return out;
}

}  // namespace digitop
