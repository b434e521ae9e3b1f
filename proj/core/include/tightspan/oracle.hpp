#pragma once

#include <cstddef>
#include <vector>

#include "tightspan/hatching.hpp"
#include "tightspan/spine.hpp"

namespace tightspan {

// A function A -> Q>=0, stored in the PointSet's order.
struct DistanceVector {
  std::vector<Rational> values;

  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;
};

// q -> d1(x, q) for every q in A.
DistanceVector dist_vector(const Point& x, const PointSet& points);

// f(u) + f(v) >= d1(u, v) for all u, v (u == v included, so f >= 0).
bool is_admissible(const DistanceVector& f, const PointSet& points);

// Admissible, and every u has a v with f(u) + f(v) == d1(u, v). For finite
// A this is exactly pointwise minimality.
bool is_extremal(const DistanceVector& f, const PointSet& points);

// Sweeps f(u) <- max(0, max_{v != u} d1(u, v) - f(v)) in input order until
// a sweep changes nothing. The result is extremal and pointwise <= f.
// Throws std::invalid_argument if f is not admissible and std::logic_error
// if more than |A| + 2 sweeps are needed.
DistanceVector minimize_to_extremal(const DistanceVector& f, const PointSet& points);

// sup_u |f(u) - g(u)|. Throws std::invalid_argument on a domain mismatch.
Rational dinf(const DistanceVector& f, const DistanceVector& g);

struct VerificationParams {
  Rational grid_step{1, 20};
  std::size_t seed_count = 200;
  Rational surjectivity_tolerance{1, 20};
  // Isometry is checked on all sample pairs up to this many samples, and
  // against a fixed pivot subset of this size beyond it.
  std::size_t max_isometry_pivots = 1500;
  // Guard against grids too fine for the geometry.
  std::size_t max_samples = 400000;
  // Witnesses kept per check (counts are always exact).
  std::size_t max_witnesses = 20;
};

// x lies in the geometry but some u has no equality partner.
struct ExtremalityFailure {
  Point sample;
  Point unmatched;

  friend bool operator==(const ExtremalityFailure&, const ExtremalityFailure&) = default;
};

struct IsometryFailure {
  Point x;
  Point y;
  Rational dinf;
  Rational d1;

  friend bool operator==(const IsometryFailure&, const IsometryFailure&) = default;
};

struct SurjectivityFailure {
  Point seed;
  DistanceVector target;
  Rational distance;  // to the nearest sample

  friend bool operator==(const SurjectivityFailure&, const SurjectivityFailure&) = default;
};

struct VerificationReport {
  VerificationParams params;
  std::size_t sample_count = 0;
  std::size_t pair_count = 0;
  std::size_t seeds_checked = 0;

  std::size_t extremality_failure_count = 0;
  std::size_t isometry_failure_count = 0;
  std::size_t surjectivity_failure_count = 0;
  std::vector<ExtremalityFailure> extremality_failures;
  std::vector<IsometryFailure> isometry_failures;
  std::vector<SurjectivityFailure> surjectivity_failures;

  bool passed() const {
    return extremality_failure_count == 0 && isometry_failure_count == 0 &&
           surjectivity_failure_count == 0;
  }
};

// Sample points of the geometry: piece corners and endpoints plus every
// point of the grid_step lattice on a piece, with the lattice lines through
// piece boundaries added so neighbouring samples are at most one step apart.
std::vector<Point> sample_points(const TightSpanGeometry& g, const Rational& grid_step);

// Sampled falsification test that the geometry is an isometric copy of T(A):
//  N1 every sample x has an extremal dist_vector(x);
//  N2 dinf(dist_vector(x), dist_vector(y)) == d1(x, y) on sample pairs;
//  N3 for seed_count seeds z over the bounding box inflated by diam(A),
//     minimize_to_extremal(dist_vector(z)) lies within
//     surjectivity_tolerance of some sample.
// Exact throughout. Failures are reported, not thrown.
VerificationReport verify_tight_span(const TightSpanGeometry& g, const PointSet& points,
                                     const VerificationParams& params = {});

}  // namespace tightspan
