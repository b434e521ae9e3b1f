#pragma once

#include <vector>

#include "tightspan/spine.hpp"

namespace tightspan {

// Closed x-interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Horizontal link from an input point to the spine. `segment` is degenerate
// when the point already lies on the spine.
struct Connector {
  Point point;
  Point attach;
  AxisSegment segment;

  bool degenerate() const { return segment.degenerate(); }
  friend bool operator==(const Connector&, const Connector&) = default;
};

struct Skeleton {
  Spine spine;
  std::vector<Connector> connectors;  // input point order

  // Spine segments followed by nondegenerate connectors, plus the lone spine
  // vertex as a point segment when the spine has no segments.
  std::vector<AxisSegment> segments() const;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// {x : (x, c) on the spine}. Throws std::out_of_range when c lies outside
// the spine's y-range.
Interval spine_cross_section(const Spine& spine, const Rational& c);

// Which end of the cross-section a connector attaches to.
enum class AttachRule {
  kNearest,  // clamp p.x into the interval
  kFarthest  // the interval end farther from p.x
};

Skeleton build_skeleton(const PointSet& points, const Spine& spine,
                        AttachRule rule = AttachRule::kNearest);

}  // namespace tightspan
