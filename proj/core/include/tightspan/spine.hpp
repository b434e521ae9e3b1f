#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tightspan/primitives.hpp"

namespace tightspan {

// Raised when an operation needs at least one point.
class EmptyPointSetError : public std::invalid_argument {
 public:
  EmptyPointSetError() : std::invalid_argument("empty point set") {}
};

// Nonempty finite set of distinct points. Input order is preserved for
// reporting; duplicates are dropped on construction.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Number of duplicates removed on construction.
  std::size_t duplicates_removed() const { return duplicates_removed_; }
  bool contains(const Point& p) const;

  // Same points regardless of order.
  bool same_set(const PointSet& other) const;

 private:
  std::vector<Point> points_;
  std::size_t duplicates_removed_ = 0;
};

enum class StepCase { kDone, kCaseI, kCaseII, kCaseIII };

std::string step_case_name(StepCase c);

// One pass through the cursor update loop.
struct SpineStep {
  StepCase step_case;
  Rational t;
  Point cursor_before;
  Point cursor_after;

  friend bool operator==(const SpineStep&, const SpineStep&) = default;
};

// y-monotone staircase. vertices[i] and vertices[i+1] are joined by
// segments[i]; trace[i] records how that segment was produced.
struct Spine {
  std::vector<Point> vertices;
  std::vector<AxisSegment> segments;
  std::vector<SpineStep> trace;

  friend bool operator==(const Spine&, const Spine&) = default;
};

// Point minimizing (y, x) lexicographically.
Point lowest_point(const PointSet& points);

// What the loop does next from cursor (a, b): stop when nothing lies above
// b; case I when points above exist with x >= a and with x <= a (a point
// with x == a counts for both); case II when all points above have x > a;
// case III when all have x < a.
StepCase classify_step(const Rational& a, const Rational& b, const PointSet& points);

// Step length for the given case:
//   I:   min(max{y-b : y>b, x>=a}, max{y-b : y>b, x<=a})  (move up)
//   II:  min{x-a : y>b, x>=a}                              (move right)
//   III: min{a-x : y>b, x<=a}                              (move left)
// Throws std::invalid_argument for kDone or a case that does not apply.
Rational step_t(const Rational& a, const Rational& b, const PointSet& points, StepCase step_case);

// Upper bound on the number of loop iterations for n points.
inline std::size_t spine_iteration_bound(std::size_t n) { return 2 * n + 1; }

// Runs the loop from lowest_point until nothing lies above the cursor.
Spine build_spine(const PointSet& points);

}  // namespace tightspan
