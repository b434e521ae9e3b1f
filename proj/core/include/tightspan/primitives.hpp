#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tightspan/rational.hpp"

namespace tightspan {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic by (x, y).
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

std::string format_point(const Point& p);

// Manhattan distance |dx| + |dy|.
Rational d1(const Point& p, const Point& q);

enum class Orientation { kHorizontal, kVertical };

// A closed axis-parallel segment. `anchor` is the fixed coordinate (y for a
// horizontal segment, x for a vertical one) and [lo, hi] the varying range.
// lo == hi is a single point.
struct AxisSegment {
  Orientation orientation = Orientation::kHorizontal;
  Rational anchor;
  Rational lo;
  Rational hi;

  // Normalizes lo/hi ordering.
  static AxisSegment horizontal(Rational y, Rational x0, Rational x1);
  static AxisSegment vertical(Rational x, Rational y0, Rational y1);
  // Segment between two points sharing a coordinate. Throws
  // std::invalid_argument for points that differ in both.
  static AxisSegment between(const Point& a, const Point& b);

  bool degenerate() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  Point start() const;
  Point end() const;
  bool contains(const Point& p) const;
  // Swaps the roles of x and y.
  AxisSegment transposed() const;

  friend bool operator==(const AxisSegment&, const AxisSegment&) = default;
  friend std::strong_ordering operator<=>(const AxisSegment&, const AxisSegment&) = default;
};

// Closed axis-parallel rectangle.
struct Rect {
  Rational x_lo;
  Rational x_hi;
  Rational y_lo;
  Rational y_hi;

  Rational area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
  bool contains(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  std::array<Point, 4> corners() const;
  Rect transposed() const { return {y_lo, y_hi, x_lo, x_hi}; }

  friend bool operator==(const Rect&, const Rect&) = default;
  // Canonical order (x_lo, y_lo, x_hi, y_hi).
  friend std::strong_ordering operator<=>(const Rect& a, const Rect& b);
};

// Quadrant code: signs of (q.x - p.x, q.y - p.y) allowed by the quadrant.
enum class Quadrant { kPlusPlus, kMinusPlus, kPlusMinus, kMinusMinus };

std::string quadrant_name(Quadrant q);

// All quadrants of `p` containing `q`. Boundaries are inclusive, so points
// on the axes through p belong to two quadrants and p itself to all four.
std::vector<Quadrant> quadrant(const Point& p, const Point& q);
bool in_quadrant(const Point& p, const Point& q, Quadrant which);

}  // namespace tightspan
