#include "tightspan/pipeline.hpp"

namespace tightspan {

TightSpanResult compute_tight_span(const PointSet& points) {
  TightSpanResult result{build_skeleton(points, build_spine(points)), {}, {}};
  const auto segments = result.skeleton.segments();
  result.geometry = hatch_y(segments);
  result.geometry.source_points.assign(points.begin(), points.end());
  result.measure = measure(result.geometry);
  return result;
}

}  // namespace tightspan
