#include "tightspan/spine.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tightspan {

PointSet::PointSet(std::vector<Point> points) {
  if (points.empty()) throw EmptyPointSetError();
  std::set<Point> seen;
  points_.reserve(points.size());
  for (auto& p : points) {
    if (seen.insert(p).second) {
      points_.push_back(std::move(p));
    } else {
      ++duplicates_removed_;
    }
  }
}

bool PointSet::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool PointSet::same_set(const PointSet& other) const {
  if (size() != other.size()) return false;
  std::vector<Point> a(points_.begin(), points_.end());
  std::vector<Point> b(other.begin(), other.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string step_case_name(StepCase c) {
  switch (c) {
    case StepCase::kDone: return "done";
    case StepCase::kCaseI: return "i";
    case StepCase::kCaseII: return "ii";
    case StepCase::kCaseIII: return "iii";
  }
  return "?";
}

Point lowest_point(const PointSet& points) {
  const auto it = std::min_element(points.begin(), points.end(), [](const Point& p, const Point& q) {
    return p.y != q.y ? p.y < q.y : p.x < q.x;
  });
  return *it;
}

StepCase classify_step(const Rational& a, const Rational& b, const PointSet& points) {
  bool right = false;
  bool left = false;
  for (const auto& p : points) {
    if (p.y <= b) continue;
    if (p.x >= a) right = true;
    if (p.x <= a) left = true;
  }
  if (right && left) return StepCase::kCaseI;
  if (right) return StepCase::kCaseII;
  if (left) return StepCase::kCaseIII;
  return StepCase::kDone;
}

Rational step_t(const Rational& a, const Rational& b, const PointSet& points, StepCase step_case) {
  std::optional<Rational> rise_right;  // max{y-b : x >= a}
  std::optional<Rational> rise_left;   // max{y-b : x <= a}
  std::optional<Rational> run_right;   // min{x-a : x >= a}
  std::optional<Rational> run_left;    // min{a-x : x <= a}
  for (const auto& p : points) {
    if (p.y <= b) continue;
    const Rational rise = p.y - b;
    if (p.x >= a) {
      if (!rise_right || *rise_right < rise) rise_right = rise;
      const Rational run = p.x - a;
      if (!run_right || run < *run_right) run_right = run;
    }
    if (p.x <= a) {
      if (!rise_left || *rise_left < rise) rise_left = rise;
      const Rational run = a - p.x;
      if (!run_left || run < *run_left) run_left = run;
    }
  }

  switch (step_case) {
    case StepCase::kCaseI:
      if (rise_right && rise_left) return min(*rise_right, *rise_left);
      break;
    case StepCase::kCaseII:
      if (run_right && !rise_left) return *run_right;
      break;
    case StepCase::kCaseIII:
      if (run_left && !rise_right) return *run_left;
      break;
    case StepCase::kDone:
      break;
  }
  throw std::invalid_argument("step case '" + step_case_name(step_case) +
                              "' does not apply at cursor " + format_point({a, b}));
}

Spine build_spine(const PointSet& points) {
  Spine spine;
  Point cursor = lowest_point(points);
  spine.vertices.push_back(cursor);

  const std::size_t bound = spine_iteration_bound(points.size());
  for (std::size_t iteration = 0;; ++iteration) {
    const StepCase c = classify_step(cursor.x, cursor.y, points);
    if (c == StepCase::kDone) break;
    if (iteration >= bound) {
      throw std::logic_error("spine construction exceeded " + std::to_string(bound) + " iterations");
    }
    Rational t = step_t(cursor.x, cursor.y, points, c);
    Point next = cursor;
    switch (c) {
      case StepCase::kCaseI: next.y += t; break;
      case StepCase::kCaseII: next.x += t; break;
      case StepCase::kCaseIII: next.x -= t; break;
      case StepCase::kDone: break;
    }
    spine.segments.push_back(AxisSegment::between(cursor, next));
    spine.trace.push_back({c, std::move(t), cursor, next});
    spine.vertices.push_back(next);
    cursor = std::move(next);
  }
  return spine;
}

}  // namespace tightspan
