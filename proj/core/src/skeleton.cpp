#include "tightspan/skeleton.hpp"

#include <optional>
#include <stdexcept>

namespace tightspan {

std::vector<AxisSegment> Skeleton::segments() const {
  std::vector<AxisSegment> out = spine.segments;
  if (out.empty()) {
    const Point& v = spine.vertices.front();
    out.push_back(AxisSegment::horizontal(v.y, v.x, v.x));
  }
  for (const auto& c : connectors) {
    if (!c.degenerate()) out.push_back(c.segment);
  }
  return out;
}

Interval spine_cross_section(const Spine& spine, const Rational& c) {
  std::optional<Interval> found;
  auto extend = [&](const Rational& lo, const Rational& hi) {
    if (!found) {
      found = Interval{lo, hi};
      return;
    }
    if (lo < found->lo) found->lo = lo;
    if (found->hi < hi) found->hi = hi;
  };
  for (const auto& v : spine.vertices) {
    if (v.y == c) extend(v.x, v.x);
  }
  for (const auto& s : spine.segments) {
    if (s.orientation == Orientation::kHorizontal) {
      if (s.anchor == c) extend(s.lo, s.hi);
    } else if (s.lo <= c && c <= s.hi) {
      extend(s.anchor, s.anchor);
    }
  }
  if (!found) {
    throw std::out_of_range("ordinate " + format_rational(c) + " outside the spine's y-range");
  }
  return *found;
}

Skeleton build_skeleton(const PointSet& points, const Spine& spine, AttachRule rule) {
  Skeleton skeleton{spine, {}};
  skeleton.connectors.reserve(points.size());
  for (const auto& p : points) {
    const Interval section = spine_cross_section(spine, p.y);
    Rational x;
    if (rule == AttachRule::kNearest) {
      x = max(section.lo, min(p.x, section.hi));
    } else {
      x = (p.x - section.lo) < (section.hi - p.x) ? section.hi : section.lo;
    }
    Point attach{std::move(x), p.y};
    AxisSegment segment = AxisSegment::between(p, attach);
    skeleton.connectors.push_back({p, std::move(attach), std::move(segment)});
  }
  return skeleton;
}

}  // namespace tightspan
