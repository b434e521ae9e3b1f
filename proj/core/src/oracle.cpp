#include "tightspan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace tightspan {

namespace {

// The checks below are written once over a value type T and run either on
// Rational or, when every coordinate fits a common integer lattice, on
// int64_t multiples of 1/D. Both are exact.

template <typename T>
T absdiff(const T& a, const T& b) {
  return a < b ? b - a : a - b;
}

template <typename T>
struct PlanarSet {
  std::vector<T> x;
  std::vector<T> y;
  std::size_t size() const { return x.size(); }
};

template <typename T>
std::vector<T> distance_matrix(const PlanarSet<T>& a) {
  const std::size_t n = a.size();
  std::vector<T> d(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) d[u * n + v] = absdiff(a.x[u], a.x[v]) + absdiff(a.y[u], a.y[v]);
  }
  return d;
}

template <typename T>
void fill_dist(const T& x, const T& y, const PlanarSet<T>& a, T* out) {
  for (std::size_t q = 0; q < a.size(); ++q) out[q] = absdiff(x, a.x[q]) + absdiff(y, a.y[q]);
}

template <typename T>
bool admissible(const T* f, const std::vector<T>& d, std::size_t n) {
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (f[u] + f[v] < d[u * n + v]) return false;
    }
  }
  return true;
}

// First u with no v such that f(u) + f(v) == d(u, v).
template <typename T>
std::optional<std::size_t> first_unmatched(const T* f, const std::vector<T>& d, std::size_t n) {
  for (std::size_t u = 0; u < n; ++u) {
    bool matched = false;
    for (std::size_t v = 0; v < n && !matched; ++v) matched = (f[u] + f[v] == d[u * n + v]);
    if (!matched) return u;
  }
  return std::nullopt;
}

// In-place coordinate sweeps. Returns false if the sweep cap was hit.
template <typename T>
bool minimize(T* f, const std::vector<T>& d, std::size_t n) {
  const std::size_t cap = n + 2;
  for (std::size_t sweep = 0; sweep < cap; ++sweep) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      T best{};  // the u == v term forces f(u) >= 0
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u) continue;
        T candidate = d[u * n + v] - f[v];
        if (best < candidate) best = std::move(candidate);
      }
      if (!(best == f[u])) {
        f[u] = std::move(best);
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

template <typename T>
T sup_distance(const T* f, const T* g, std::size_t n) {
  T best{};
  for (std::size_t q = 0; q < n; ++q) {
    T diff = absdiff(f[q], g[q]);
    if (best < diff) best = std::move(diff);
  }
  return best;
}

PlanarSet<Rational> to_planar(std::span<const Point> pts) {
  PlanarSet<Rational> out;
  out.x.reserve(pts.size());
  out.y.reserve(pts.size());
  for (const auto& p : pts) {
    out.x.push_back(p.x);
    out.y.push_back(p.y);
  }
  return out;
}

template <typename T>
struct CheckInput {
  PlanarSet<T> points;
  PlanarSet<T> samples;
  PlanarSet<T> seeds;
  T tolerance;
};

template <typename T, typename ToRational>
void run_checks(const CheckInput<T>& in, std::span<const Point> sample_pts,
                std::span<const Point> seed_pts, ToRational to_rational, VerificationReport& report) {
  const auto& params = report.params;
  const std::size_t n = in.points.size();
  const std::size_t m = in.samples.size();
  const std::vector<T> d = distance_matrix(in.points);

  std::vector<T> fs(m * n);
  for (std::size_t i = 0; i < m; ++i) fill_dist(in.samples.x[i], in.samples.y[i], in.points, &fs[i * n]);

  // N1: extremality of every sample's distance vector.
  for (std::size_t i = 0; i < m; ++i) {
    const T* f = &fs[i * n];
    std::optional<std::size_t> bad;
    if (!admissible(f, d, n)) {
      bad = 0;
    } else {
      bad = first_unmatched(f, d, n);
    }
    if (!bad) continue;
    ++report.extremality_failure_count;
    if (report.extremality_failures.size() < params.max_witnesses) {
      report.extremality_failures.push_back({sample_pts[i], Point{to_rational(in.points.x[*bad]),
                                                                  to_rational(in.points.y[*bad])}});
    }
  }

  // N2: sup distance of distance vectors equals d1 on sample pairs.
  std::vector<std::size_t> pivots;
  const bool all_pairs = m <= params.max_isometry_pivots;
  if (all_pairs) {
    pivots.resize(m);
    for (std::size_t i = 0; i < m; ++i) pivots[i] = i;
  } else {
    const std::size_t k = params.max_isometry_pivots;
    for (std::size_t j = 0; j < k; ++j) pivots.push_back(j * m / k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : pivots) {
      if (all_pairs ? j <= i : j == i) continue;
      ++report.pair_count;
      const T lhs = sup_distance(&fs[i * n], &fs[j * n], n);
      const T rhs = absdiff(in.samples.x[i], in.samples.x[j]) + absdiff(in.samples.y[i], in.samples.y[j]);
      if (lhs == rhs) continue;
      ++report.isometry_failure_count;
      if (report.isometry_failures.size() < params.max_witnesses) {
        report.isometry_failures.push_back({sample_pts[i], sample_pts[j], to_rational(lhs), to_rational(rhs)});
      }
    }
  }

  // N3: every extremal function reached from a seed is near some sample.
  std::vector<T> g(n);
  for (std::size_t s = 0; s < in.seeds.size(); ++s) {
    fill_dist(in.seeds.x[s], in.seeds.y[s], in.points, g.data());
    if (!minimize(g.data(), d, n)) {
      throw std::logic_error("coordinate descent exceeded its sweep cap");
    }
    ++report.seeds_checked;
    std::optional<T> best;
    for (std::size_t i = 0; i < m; ++i) {
      T dist = sup_distance(&fs[i * n], g.data(), n);
      if (!best || dist < *best) best = std::move(dist);
      if (!(in.tolerance < *best)) break;
    }
    if (best && !(in.tolerance < *best)) continue;
    ++report.surjectivity_failure_count;
    if (report.surjectivity_failures.size() < params.max_witnesses) {
      DistanceVector target;
      for (const auto& v : g) target.values.push_back(to_rational(v));
      report.surjectivity_failures.push_back(
          {seed_pts[s], std::move(target), best ? to_rational(*best) : Rational(-1)});
    }
  }
}

// Seeds on a k-by-k lattice over the box, snapped down to multiples of step.
std::vector<Point> seed_points(const std::vector<Point>& samples, const PointSet& points,
                               const VerificationParams& params) {
  std::vector<Point> out;
  if (params.seed_count == 0) return out;
  Rational x_lo = points[0].x, x_hi = points[0].x, y_lo = points[0].y, y_hi = points[0].y;
  auto include = [&](const Point& p) {
    x_lo = min(x_lo, p.x);
    x_hi = max(x_hi, p.x);
    y_lo = min(y_lo, p.y);
    y_hi = max(y_hi, p.y);
  };
  for (const auto& p : samples) include(p);
  for (const auto& p : points) include(p);
  Rational diameter;
  for (const auto& p : points) {
    for (const auto& q : points) diameter = max(diameter, d1(p, q));
  }
  x_lo -= diameter;
  x_hi += diameter;
  y_lo -= diameter;
  y_hi += diameter;

  const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(params.seed_count))));
  auto coordinate = [&](const Rational& lo, const Rational& hi, std::size_t i) {
    Rational v = k == 1 ? (lo + hi) / Rational(2)
                        : lo + (hi - lo) * Rational(static_cast<long>(i)) / Rational(static_cast<long>(k - 1));
    return floor(v / params.grid_step) * params.grid_step;
  };
  const std::size_t cells = k * k;
  for (std::size_t j = 0; j < params.seed_count; ++j) {
    const std::size_t idx = j * cells / params.seed_count;
    out.push_back({coordinate(x_lo, x_hi, idx % k), coordinate(y_lo, y_hi, idx / k)});
  }
  return out;
}

mpz_class lcm_of_denominators(std::initializer_list<std::span<const Point>> groups, const Rational& extra) {
  mpz_class l = extra.raw().get_den();
  for (auto group : groups) {
    for (const auto& p : group) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.x.raw().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.raw().get_den_mpz_t());
    }
  }
  return l;
}

}  // namespace

DistanceVector dist_vector(const Point& x, const PointSet& points) {
  DistanceVector f;
  f.values.reserve(points.size());
  for (const auto& q : points) f.values.push_back(d1(x, q));
  return f;
}

namespace {

void check_domain(const DistanceVector& f, const PointSet& points) {
  if (f.values.size() != points.size()) {
    throw std::invalid_argument("distance vector has " + std::to_string(f.values.size()) +
                                " entries for " + std::to_string(points.size()) + " points");
  }
}

}  // namespace

bool is_admissible(const DistanceVector& f, const PointSet& points) {
  check_domain(f, points);
  const auto d = distance_matrix(to_planar(points.points()));
  return admissible(f.values.data(), d, points.size());
}

bool is_extremal(const DistanceVector& f, const PointSet& points) {
  check_domain(f, points);
  const auto d = distance_matrix(to_planar(points.points()));
  return admissible(f.values.data(), d, points.size()) &&
         !first_unmatched(f.values.data(), d, points.size());
}

DistanceVector minimize_to_extremal(const DistanceVector& f, const PointSet& points) {
  check_domain(f, points);
  const auto d = distance_matrix(to_planar(points.points()));
  if (!admissible(f.values.data(), d, points.size())) {
    throw std::invalid_argument("minimize_to_extremal needs an admissible function");
  }
  DistanceVector g = f;
  if (!minimize(g.values.data(), d, points.size())) {
    throw std::logic_error("coordinate descent exceeded " + std::to_string(points.size() + 2) + " sweeps");
  }
  return g;
}

Rational dinf(const DistanceVector& f, const DistanceVector& g) {
  if (f.values.size() != g.values.size()) {
    throw std::invalid_argument("distance vectors over different domains");
  }
  return sup_distance(f.values.data(), g.values.data(), f.values.size());
}

std::vector<Point> sample_points(const TightSpanGeometry& g, const Rational& grid_step) {
  if (grid_step <= Rational(0)) throw std::invalid_argument("grid step must be positive");
  // {lo, hi} plus lattice multiples of the step strictly between them.
  auto axis = [&](const Rational& lo, const Rational& hi) {
    std::vector<Rational> v{lo};
    for (Rational t = floor(lo / grid_step) * grid_step + grid_step; t < hi; t += grid_step) {
      if (lo < t) v.push_back(t);
    }
    if (lo < hi) v.push_back(hi);
    return v;
  };
  std::vector<Point> out;
  for (const auto& r : g.rects) {
    const auto xs = axis(r.x_lo, r.x_hi);
    const auto ys = axis(r.y_lo, r.y_hi);
    for (const auto& x : xs) {
      for (const auto& y : ys) out.push_back({x, y});
    }
  }
  for (const auto& s : g.segs) {
    for (const auto& t : axis(s.lo, s.hi)) {
      out.push_back(s.orientation == Orientation::kHorizontal ? Point{t, s.anchor} : Point{s.anchor, t});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport verify_tight_span(const TightSpanGeometry& g, const PointSet& points,
                                     const VerificationParams& params) {
  VerificationReport report;
  report.params = params;

  const std::vector<Point> samples = sample_points(g, params.grid_step);
  if (samples.size() > params.max_samples) {
    throw std::invalid_argument("grid step " + format_rational(params.grid_step) + " yields " +
                                std::to_string(samples.size()) + " samples (limit " +
                                std::to_string(params.max_samples) + "); use a coarser step");
  }
  report.sample_count = samples.size();
  const std::vector<Point> seeds = seed_points(samples, points, params);

  // Common lattice 1/D for every coordinate that enters the checks.
  const mpz_class scale =
      lcm_of_denominators({points.points(), samples, seeds}, params.surjectivity_tolerance);
  const mpz_class limit = mpz_class(1) << 56;
  bool fits = true;
  auto scaled = [&](const Rational& v) {
    mpz_class s = v.raw().get_num() * (scale / v.raw().get_den());
    if (::abs(s) >= limit) fits = false;
    return fits ? s.get_si() : 0L;
  };
  CheckInput<std::int64_t> fast;
  auto load = [&](std::span<const Point> pts, PlanarSet<std::int64_t>& dst) {
    for (const auto& p : pts) {
      dst.x.push_back(scaled(p.x));
      dst.y.push_back(scaled(p.y));
    }
  };
  load(points.points(), fast.points);
  load(samples, fast.samples);
  load(seeds, fast.seeds);
  fast.tolerance = scaled(params.surjectivity_tolerance);

  if (fits) {
    const Rational denom{mpq_class(scale)};
    run_checks(fast, samples, seeds,
               [&](std::int64_t v) { return Rational(static_cast<long>(v)) / denom; }, report);
  } else {
    CheckInput<Rational> exact{to_planar(points.points()), to_planar(samples), to_planar(seeds),
                               params.surjectivity_tolerance};
    run_checks(exact, samples, seeds, [](const Rational& v) { return v; }, report);
  }

  std::sort(report.extremality_failures.begin(), report.extremality_failures.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.sample, a.unmatched) < std::tie(b.sample, b.unmatched);
            });
  std::sort(report.isometry_failures.begin(), report.isometry_failures.end(),
            [](const auto& a, const auto& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  std::sort(report.surjectivity_failures.begin(), report.surjectivity_failures.end(),
            [](const auto& a, const auto& b) { return a.seed < b.seed; });
  return report;
}

}  // namespace tightspan
