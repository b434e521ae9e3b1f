#include "tightspan/primitives.hpp"

#include <stdexcept>
#include <utility>

namespace tightspan {

std::string format_point(const Point& p) {
  return "(" + format_rational(p.x) + "," + format_rational(p.y) + ")";
}

Rational d1(const Point& p, const Point& q) { return abs(p.x - q.x) + abs(p.y - q.y); }

AxisSegment AxisSegment::horizontal(Rational y, Rational x0, Rational x1) {
  if (x1 < x0) std::swap(x0, x1);
  return {Orientation::kHorizontal, std::move(y), std::move(x0), std::move(x1)};
}

AxisSegment AxisSegment::vertical(Rational x, Rational y0, Rational y1) {
  if (y1 < y0) std::swap(y0, y1);
  return {Orientation::kVertical, std::move(x), std::move(y0), std::move(y1)};
}

AxisSegment AxisSegment::between(const Point& a, const Point& b) {
  if (a.y == b.y) return horizontal(a.y, a.x, b.x);
  if (a.x == b.x) return vertical(a.x, a.y, b.y);
  throw std::invalid_argument("points " + format_point(a) + " and " + format_point(b) +
                              " are not axis-aligned");
}

Point AxisSegment::start() const {
  return orientation == Orientation::kHorizontal ? Point{lo, anchor} : Point{anchor, lo};
}

Point AxisSegment::end() const {
  return orientation == Orientation::kHorizontal ? Point{hi, anchor} : Point{anchor, hi};
}

bool AxisSegment::contains(const Point& p) const {
  if (orientation == Orientation::kHorizontal) return p.y == anchor && lo <= p.x && p.x <= hi;
  return p.x == anchor && lo <= p.y && p.y <= hi;
}

AxisSegment AxisSegment::transposed() const {
  return {orientation == Orientation::kHorizontal ? Orientation::kVertical : Orientation::kHorizontal,
          anchor, lo, hi};
}

std::array<Point, 4> Rect::corners() const {
  return {Point{x_lo, y_lo}, Point{x_hi, y_lo}, Point{x_lo, y_hi}, Point{x_hi, y_hi}};
}

std::strong_ordering operator<=>(const Rect& a, const Rect& b) {
  if (auto c = a.x_lo <=> b.x_lo; c != 0) return c;
  if (auto c = a.y_lo <=> b.y_lo; c != 0) return c;
  if (auto c = a.x_hi <=> b.x_hi; c != 0) return c;
  return a.y_hi <=> b.y_hi;
}

std::string quadrant_name(Quadrant q) {
  switch (q) {
    case Quadrant::kPlusPlus: return "++";
    case Quadrant::kMinusPlus: return "-+";
    case Quadrant::kPlusMinus: return "+-";
    case Quadrant::kMinusMinus: return "--";
  }
  return "?";
}

bool in_quadrant(const Point& p, const Point& q, Quadrant which) {
  const int sx = (which == Quadrant::kPlusPlus || which == Quadrant::kPlusMinus) ? 1 : -1;
  const int sy = (which == Quadrant::kPlusPlus || which == Quadrant::kMinusPlus) ? 1 : -1;
  return sx * (q.x - p.x).sign() >= 0 && sy * (q.y - p.y).sign() >= 0;
}

std::vector<Quadrant> quadrant(const Point& p, const Point& q) {
  std::vector<Quadrant> out;
  for (Quadrant c : {Quadrant::kPlusPlus, Quadrant::kMinusPlus, Quadrant::kPlusMinus,
                     Quadrant::kMinusMinus}) {
    if (in_quadrant(p, q, c)) out.push_back(c);
  }
  return out;
}

}  // namespace tightspan
