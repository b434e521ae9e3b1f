#pragma once

#include "tightspan/hatching.hpp"
#include "tightspan/skeleton.hpp"

namespace tightspan {

// Everything produced on the way from a point set to its tight span.
struct TightSpanResult {
  Skeleton skeleton;
  TightSpanGeometry geometry;
  Measure measure;

  const Spine& spine() const { return skeleton.spine; }
};

// Spine, skeleton, then vertical hatching of the skeleton.
TightSpanResult compute_tight_span(const PointSet& points);

}  // namespace tightspan
