#pragma once

#include <span>
#include <vector>

#include "tightspan/primitives.hpp"

namespace tightspan {

// A closed planar set made of rectangles and axis segments, in canonical
// x-slab form:
//  * rects have positive area, pairwise disjoint interiors, and no two
//    share a y-range while abutting in x;
//  * segs are the 1-dimensional remainder, sorted by (orientation, anchor,
//    lo, hi); a degenerate seg is an isolated point;
//  * rects are sorted by (x_lo, y_lo, x_hi, y_hi).
// Two canonical geometries describe the same point set iff their rects and
// segs are equal.
struct TightSpanGeometry {
  std::vector<Rect> rects;
  std::vector<AxisSegment> segs;
  std::vector<Point> source_points;

  bool empty() const { return rects.empty() && segs.empty(); }
};

// Point-set equality (ignores source_points).
bool same_point_set(const TightSpanGeometry& a, const TightSpanGeometry& b);

struct Measure {
  Rational area;
  Rational length_1d;

  friend bool operator==(const Measure&, const Measure&) = default;
};

// Brings an arbitrary finite union of closed rectangles and segments into
// canonical form. Degenerate rectangles are accepted.
TightSpanGeometry canonicalize(std::span<const Rect> rects, std::span<const AxisSegment> segs);

// Vertical hatching: replaces every vertical cross-section of the union by
// the smallest closed segment containing it.
TightSpanGeometry hatch_y(std::span<const AxisSegment> segments);
// Horizontal hatching, the mirror of hatch_y.
TightSpanGeometry hatch_x(std::span<const AxisSegment> segments);

// Segments whose hatchings in either direction agree with those of the
// geometry: rectangle boundaries plus the 1-dimensional pieces.
std::vector<AxisSegment> to_segment_union(const TightSpanGeometry& g);

bool contains(const TightSpanGeometry& g, const Point& p);
Measure measure(const TightSpanGeometry& g);

}  // namespace tightspan
