#pragma once

// Shared fixtures, generators and brute-force oracles for the test suites.
// Nothing here calls the sweep or the canonicalizer, so the oracles stay
// independent of the code they check.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tightspan/hatching.hpp"
#include "tightspan/primitives.hpp"
#include "tightspan/rational.hpp"
#include "tightspan/spine.hpp"

namespace tightspan::testing {

inline Rational Q(std::string_view s) { return parse_rational(s); }
inline Point P(std::string_view x, std::string_view y) { return {Q(x), Q(y)}; }

inline PointSet example1() { return PointSet({P("-1", "0"), P("0", "-2"), P("3/2", "1")}); }

// Five points whose hatching produces two rectangles.
inline PointSet five_point() {
  return PointSet({P("0", "-1/2"), P("-1", "3"), P("3/2", "5/2"), P("2", "0"), P("-1/2", "1/2")});
}

inline PointSet square_corners() { return PointSet({P("0", "0"), P("3", "0"), P("0", "3"), P("3", "3")}); }

#ifdef TIGHTSPAN_FIXTURE_DIR
inline std::string fixture_path(std::string_view name) {
  return std::string(TIGHTSPAN_FIXTURE_DIR) + "/" + std::string(name);
}
#endif

// Rational coordinates num/den with |num/den| <= range and den drawn from a
// small set, so ties between coordinates are common.
class RandomPoints {
 public:
  explicit RandomPoints(std::uint64_t seed, long range = 4, std::vector<long> denominators = {1, 2, 3, 4})
      : rng_(seed), range_(range), denominators_(std::move(denominators)) {}

  Rational coordinate() {
    const long den = denominators_[pick(denominators_.size())];
    std::uniform_int_distribution<long> num(-range_ * den, range_ * den);
    return Rational(num(rng_), den);
  }

  Point point() { return {coordinate(), coordinate()}; }

  // `n` distinct points.
  PointSet set(std::size_t n) {
    std::set<Point> seen;
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p = point();
      if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    return PointSet(std::move(pts));
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::vector<AxisSegment> segments(std::size_t n) {
    std::vector<AxisSegment> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick(2) == 0) {
        out.push_back(AxisSegment::horizontal(coordinate(), coordinate(), coordinate()));
      } else {
        out.push_back(AxisSegment::vertical(coordinate(), coordinate(), coordinate()));
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
  long range_;
  std::vector<long> denominators_;
};

// Membership in L_y(S) straight from the definition: the vertical line
// through p meets S in a set whose min/max bracket p.y.
inline bool in_vertical_hatching(std::span<const AxisSegment> segments, const Point& p) {
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& a, const Rational& b) {
    if (!lo || a < *lo) lo = a;
    if (!hi || *hi < b) hi = b;
  };
  for (const auto& s : segments) {
    if (s.orientation == Orientation::kHorizontal) {
      if (s.lo <= p.x && p.x <= s.hi) take(s.anchor, s.anchor);
    } else if (s.anchor == p.x) {
      take(s.lo, s.hi);
    }
  }
  return lo && *lo <= p.y && p.y <= *hi;
}

inline bool in_horizontal_hatching(std::span<const AxisSegment> segments, const Point& p) {
  std::vector<AxisSegment> swapped;
  for (const auto& s : segments) swapped.push_back(s.transposed());
  return in_vertical_hatching(swapped, Point{p.y, p.x});
}

inline bool in_segments(std::span<const AxisSegment> segments, const Point& p) {
  return std::any_of(segments.begin(), segments.end(), [&](const AxisSegment& s) { return s.contains(p); });
}

// Coordinates worth probing along one axis: every breakpoint, the midpoint
// of each gap, and a point beyond each end.
inline std::vector<Rational> probe_axis(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Rational> out;
  if (v.empty()) return out;
  out.push_back(v.front() - Rational(1));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / Rational(2));
  }
  out.push_back(v.back() + Rational(1));
  return out;
}

// Probe grid for sets whose pieces have coordinates among those of
// `segments`. Membership on this grid determines such a set.
inline std::vector<Point> probe_grid(std::span<const AxisSegment> segments) {
  std::vector<Rational> xs, ys;
  for (const auto& s : segments) {
    const Point a = s.start(), b = s.end();
    xs.push_back(a.x);
    xs.push_back(b.x);
    ys.push_back(a.y);
    ys.push_back(b.y);
  }
  std::vector<Point> out;
  for (const auto& x : probe_axis(xs)) {
    for (const auto& y : probe_axis(ys)) out.push_back({x, y});
  }
  return out;
}

// The eight linear isometries of the L1 plane that fix the origin.
struct Symmetry {
  std::string name;
  std::function<Point(const Point&)> apply;
};

inline std::vector<Symmetry> l1_symmetries() {
  return {
      {"identity", [](const Point& p) { return p; }},
      {"flip-x", [](const Point& p) { return Point{-p.x, p.y}; }},
      {"flip-y", [](const Point& p) { return Point{p.x, -p.y}; }},
      {"rotate-180", [](const Point& p) { return Point{-p.x, -p.y}; }},
      {"rotate-90", [](const Point& p) { return Point{-p.y, p.x}; }},
      {"rotate-270", [](const Point& p) { return Point{p.y, -p.x}; }},
      {"transpose", [](const Point& p) { return Point{p.y, p.x}; }},
      {"anti-transpose", [](const Point& p) { return Point{-p.y, -p.x}; }},
  };
}

inline PointSet transform(const PointSet& points, const Symmetry& s) {
  std::vector<Point> out;
  for (const auto& p : points) out.push_back(s.apply(p));
  return PointSet(std::move(out));
}

// Planar graph of the 1-dimensional pieces of a geometry, split at every
// endpoint and crossing.
struct SegmentGraph {
  std::vector<Point> vertices;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adjacency;
  std::size_t edge_count = 0;

  std::optional<std::size_t> index(const Point& p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
  std::size_t degree(std::size_t v) const { return adjacency[v].size(); }

  bool connected() const {
    if (vertices.empty()) return true;
    std::vector<bool> seen(vertices.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertices.size();
  }

  bool is_tree() const { return connected() && edge_count + 1 == vertices.size(); }

  // Path length between two vertices of a tree.
  std::optional<Rational> tree_distance(std::size_t from, std::size_t to) const {
    std::vector<std::optional<Rational>> dist(vertices.size());
    std::vector<std::size_t> stack{from};
    dist[from] = Rational(0);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adjacency[v]) {
        if (!dist[w]) {
          dist[w] = *dist[v] + len;
          stack.push_back(w);
        }
      }
    }
    return dist[to];
  }
};

inline SegmentGraph segment_graph(std::span<const AxisSegment> segs) {
  SegmentGraph g;
  std::map<Point, std::size_t> ids;
  auto id = [&](const Point& p) {
    auto [it, inserted] = ids.emplace(p, g.vertices.size());
    if (inserted) {
      g.vertices.push_back(p);
      g.adjacency.emplace_back();
    }
    return it->second;
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& s : segs) {
    std::vector<Rational> cuts{s.lo, s.hi};
    for (const auto& o : segs) {
      for (const Point& q : {o.start(), o.end()}) {
        if (s.contains(q)) cuts.push_back(s.orientation == Orientation::kHorizontal ? q.x : q.y);
      }
      if (o.orientation != s.orientation) {
        const Point cross = s.orientation == Orientation::kHorizontal ? Point{o.anchor, s.anchor}
                                                                      : Point{s.anchor, o.anchor};
        if (s.contains(cross) && o.contains(cross)) {
          cuts.push_back(s.orientation == Orientation::kHorizontal ? cross.x : cross.y);
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto at = [&](const Rational& t) {
      return s.orientation == Orientation::kHorizontal ? Point{t, s.anchor} : Point{s.anchor, t};
    };
    if (cuts.size() == 1) id(at(cuts[0]));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const auto a = id(at(cuts[i]));
      const auto b = id(at(cuts[i + 1]));
      if (edges.insert({std::min(a, b), std::max(a, b)}).second) {
        const Rational len = cuts[i + 1] - cuts[i];
        g.adjacency[a].push_back({b, len});
        g.adjacency[b].push_back({a, len});
        ++g.edge_count;
      }
    }
  }
  return g;
}

// (d(i,j) + d(i,k) - d(j,k)) / 2, the arm length of i in a three-point space.
inline Rational gromov_product(const Point& i, const Point& j, const Point& k) {
  return (d1(i, j) + d1(i, k) - d1(j, k)) / Rational(2);
}

}  // namespace tightspan::testing

// Readable gtest failure output.
namespace tightspan {
inline void PrintTo(const Rational& r, std::ostream* os) { *os << format_rational(r); }
inline void PrintTo(const Point& p, std::ostream* os) { *os << format_point(p); }
inline void PrintTo(const AxisSegment& s, std::ostream* os) {
  *os << (s.orientation == Orientation::kHorizontal ? "H y=" : "V x=") << format_rational(s.anchor) << " ["
      << format_rational(s.lo) << "," << format_rational(s.hi) << "]";
}
inline void PrintTo(const Rect& r, std::ostream* os) {
  *os << "[" << format_rational(r.x_lo) << "," << format_rational(r.x_hi) << "]x[" << format_rational(r.y_lo) << ","
      << format_rational(r.y_hi) << "]";
}
}  // namespace tightspan
