#include "tightspan/hatching.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace tightspan {

namespace {

struct Span1d {
  Rational lo;
  Rational hi;

  friend bool operator==(const Span1d&, const Span1d&) = default;
};

// Sorted, pairwise disjoint closed intervals covering the input.
std::vector<Span1d> merge_spans(std::vector<Span1d> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const Span1d& a, const Span1d& b) { return a.lo < b.lo; });
  std::vector<Span1d> out;
  for (auto& s : spans) {
    if (!out.empty() && s.lo <= out.back().hi) {
      if (out.back().hi < s.hi) out.back().hi = std::move(s.hi);
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool covered(const std::vector<Span1d>& spans, const Rational& y) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const Span1d& s) { return s.lo <= y && y <= s.hi; });
}

// Parts of `column` not covered by `cover` (both sorted and disjoint).
// Nondegenerate parts are returned as their closures; a point component is
// returned only when nothing covers it.
std::vector<Span1d> subtract(const Span1d& column, const std::vector<Span1d>& cover) {
  if (column.lo == column.hi) {
    if (covered(cover, column.lo)) return {};
    return {column};
  }
  std::vector<Span1d> out;
  Rational cursor = column.lo;
  for (const auto& c : cover) {
    if (c.hi < cursor) continue;
    if (column.hi <= c.lo) break;
    if (cursor < c.lo) out.push_back({cursor, c.lo});
    if (cursor < c.hi) cursor = c.hi;
    if (column.hi <= cursor) break;
  }
  if (cursor < column.hi) out.push_back({cursor, column.hi});
  return out;
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct RawPieces {
  std::vector<Rect> rects;
  std::vector<AxisSegment> segs;
};

// Slab and column pieces of the vertical hatching, before canonicalization.
RawPieces hatch_y_pieces(std::span<const AxisSegment> segments) {
  std::vector<Rational> xs;
  for (const auto& s : segments) {
    if (s.orientation == Orientation::kHorizontal) {
      xs.push_back(s.lo);
      xs.push_back(s.hi);
    } else {
      xs.push_back(s.anchor);
    }
  }
  xs = sorted_unique(std::move(xs));

  RawPieces raw;
  auto widen = [](std::optional<Span1d>& acc, const Rational& lo, const Rational& hi) {
    if (!acc) {
      acc = Span1d{lo, hi};
      return;
    }
    if (lo < acc->lo) acc->lo = lo;
    if (acc->hi < hi) acc->hi = hi;
  };

  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Rational& x = xs[k];
    std::optional<Span1d> column;
    for (const auto& s : segments) {
      if (s.orientation == Orientation::kHorizontal) {
        if (s.lo <= x && x <= s.hi) widen(column, s.anchor, s.anchor);
      } else if (s.anchor == x) {
        widen(column, s.lo, s.hi);
      }
    }
    if (column) raw.segs.push_back(AxisSegment::vertical(x, column->lo, column->hi));

    if (k + 1 == xs.size()) break;
    const Rational& next = xs[k + 1];
    std::optional<Span1d> slab;
    for (const auto& s : segments) {
      if (s.orientation == Orientation::kHorizontal && s.lo <= x && next <= s.hi) {
        widen(slab, s.anchor, s.anchor);
      }
    }
    if (!slab) continue;
    if (slab->lo == slab->hi) {
      raw.segs.push_back(AxisSegment::horizontal(slab->lo, x, next));
    } else {
      raw.rects.push_back({x, next, slab->lo, slab->hi});
    }
  }
  return raw;
}

}  // namespace

bool same_point_set(const TightSpanGeometry& a, const TightSpanGeometry& b) {
  return a.rects == b.rects && a.segs == b.segs;
}

TightSpanGeometry canonicalize(std::span<const Rect> rects_in, std::span<const AxisSegment> segs_in) {
  std::vector<Rect> rects;
  std::vector<AxisSegment> segs(segs_in.begin(), segs_in.end());
  for (const auto& r : rects_in) {
    if (r.x_lo < r.x_hi && r.y_lo < r.y_hi) {
      rects.push_back(r);
    } else if (r.x_lo == r.x_hi) {
      segs.push_back(AxisSegment::vertical(r.x_lo, r.y_lo, r.y_hi));
    } else {
      segs.push_back(AxisSegment::horizontal(r.y_lo, r.x_lo, r.x_hi));
    }
  }

  std::vector<Rational> xs;
  for (const auto& r : rects) {
    xs.push_back(r.x_lo);
    xs.push_back(r.x_hi);
  }
  for (const auto& s : segs) {
    if (s.orientation == Orientation::kHorizontal) {
      xs.push_back(s.lo);
      xs.push_back(s.hi);
    } else {
      xs.push_back(s.anchor);
    }
  }
  xs = sorted_unique(std::move(xs));

  TightSpanGeometry out;
  if (xs.empty()) return out;

  // Cross-section components of each open interval (xs[k], xs[k+1]).
  std::vector<std::vector<Span1d>> slabs(xs.size() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    std::vector<Span1d> items;
    for (const auto& r : rects) {
      if (r.x_lo <= xs[k] && xs[k + 1] <= r.x_hi) items.push_back({r.y_lo, r.y_hi});
    }
    for (const auto& s : segs) {
      if (s.orientation == Orientation::kHorizontal && s.lo <= xs[k] && xs[k + 1] <= s.hi) {
        items.push_back({s.anchor, s.anchor});
      }
    }
    slabs[k] = merge_spans(std::move(items));
  }

  // Column remainders not covered by the closures of adjacent slabs.
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Rational& x = xs[k];
    std::vector<Span1d> items;
    for (const auto& r : rects) {
      if (r.x_lo <= x && x <= r.x_hi) items.push_back({r.y_lo, r.y_hi});
    }
    for (const auto& s : segs) {
      if (s.orientation == Orientation::kHorizontal) {
        if (s.lo <= x && x <= s.hi) items.push_back({s.anchor, s.anchor});
      } else if (s.anchor == x) {
        items.push_back({s.lo, s.hi});
      }
    }
    std::vector<Span1d> cover;
    if (k > 0) cover = slabs[k - 1];
    if (k + 1 < xs.size()) cover.insert(cover.end(), slabs[k].begin(), slabs[k].end());
    cover = merge_spans(std::move(cover));
    for (const auto& component : merge_spans(std::move(items))) {
      for (const auto& piece : subtract(component, cover)) {
        out.segs.push_back(AxisSegment::vertical(x, piece.lo, piece.hi));
      }
    }
  }

  // Merge slab components with equal y-range across consecutive intervals.
  std::map<std::pair<Rational, Rational>, Rational> open_runs;  // (lo, hi) -> run start x
  auto close_run = [&out](const std::pair<Rational, Rational>& key, const Rational& x0,
                          const Rational& x1) {
    if (key.first == key.second) {
      out.segs.push_back(AxisSegment::horizontal(key.first, x0, x1));
    } else {
      out.rects.push_back({x0, x1, key.first, key.second});
    }
  };
  for (std::size_t k = 0; k < slabs.size(); ++k) {
    std::map<std::pair<Rational, Rational>, Rational> next_runs;
    for (const auto& c : slabs[k]) {
      auto key = std::make_pair(c.lo, c.hi);
      auto it = open_runs.find(key);
      if (it != open_runs.end()) {
        next_runs.emplace(key, std::move(it->second));
        open_runs.erase(it);
      } else {
        next_runs.emplace(key, xs[k]);
      }
    }
    for (const auto& [key, start] : open_runs) close_run(key, start, xs[k]);
    open_runs = std::move(next_runs);
  }
  for (const auto& [key, start] : open_runs) close_run(key, start, xs.back());

  std::sort(out.rects.begin(), out.rects.end());
  std::sort(out.segs.begin(), out.segs.end());
  return out;
}

TightSpanGeometry hatch_y(std::span<const AxisSegment> segments) {
  const RawPieces raw = hatch_y_pieces(segments);
  return canonicalize(raw.rects, raw.segs);
}

TightSpanGeometry hatch_x(std::span<const AxisSegment> segments) {
  std::vector<AxisSegment> swapped;
  swapped.reserve(segments.size());
  for (const auto& s : segments) swapped.push_back(s.transposed());
  RawPieces raw = hatch_y_pieces(swapped);
  for (auto& r : raw.rects) r = r.transposed();
  for (auto& s : raw.segs) s = s.transposed();
  return canonicalize(raw.rects, raw.segs);
}

std::vector<AxisSegment> to_segment_union(const TightSpanGeometry& g) {
  std::vector<AxisSegment> out;
  out.reserve(4 * g.rects.size() + g.segs.size());
  for (const auto& r : g.rects) {
    out.push_back(AxisSegment::horizontal(r.y_lo, r.x_lo, r.x_hi));
    out.push_back(AxisSegment::horizontal(r.y_hi, r.x_lo, r.x_hi));
    out.push_back(AxisSegment::vertical(r.x_lo, r.y_lo, r.y_hi));
    out.push_back(AxisSegment::vertical(r.x_hi, r.y_lo, r.y_hi));
  }
  out.insert(out.end(), g.segs.begin(), g.segs.end());
  return out;
}

bool contains(const TightSpanGeometry& g, const Point& p) {
  return std::any_of(g.rects.begin(), g.rects.end(), [&](const Rect& r) { return r.contains(p); }) ||
         std::any_of(g.segs.begin(), g.segs.end(),
                     [&](const AxisSegment& s) { return s.contains(p); });
}

Measure measure(const TightSpanGeometry& g) {
  Measure m;
  for (const auto& r : g.rects) m.area += r.area();
  for (const auto& s : g.segs) m.length_1d += s.length();
  return m;
}

}  // namespace tightspan
