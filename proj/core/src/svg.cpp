#include "tightspan/svg.hpp"

#include <set>
#include <sstream>

namespace tightspan {

namespace {

// Fixed palette and sizes; sizes are fractions of the drawing extent.
struct Style {
  const char* point_fill = "#c0392b";
  const char* aux_vertex_fill = "#f1948a";
  const char* spine_stroke = "#1f3a93";
  const char* connector_stroke = "#5dade2";
  const char* hatch_fill = "#5dade2";
  const char* hatch_opacity = "0.35";
  const char* span_stroke = "#1f3a93";
  Rational point_radius{3, 250};
  Rational aux_radius{9, 1000};
  Rational spine_width{3, 250};
  Rational connector_width{1, 200};
  Rational span_width{3, 500};
  Rational padding{1, 10};
};

const Style kStyle;

class SvgWriter {
 public:
  SvgWriter(const OutputDocument& doc, Stage stage) {
    bool first = true;
    auto include = [&](const Point& p) {
      if (first) {
        x_lo_ = x_hi_ = p.x;
        y_lo_ = y_hi_ = p.y;
        first = false;
        return;
      }
      x_lo_ = min(x_lo_, p.x);
      x_hi_ = max(x_hi_, p.x);
      y_lo_ = min(y_lo_, p.y);
      y_hi_ = max(y_hi_, p.y);
    };
    for (const auto& p : doc.input) include(p);
    if (doc.spine) {
      for (const auto& v : doc.spine->vertices) include(v);
    }
    if (doc.tightspan) {
      for (const auto& r : doc.tightspan->rects) {
        include({r.x_lo, r.y_lo});
        include({r.x_hi, r.y_hi});
      }
      for (const auto& s : doc.tightspan->segs) {
        include(s.start());
        include(s.end());
      }
    }
    extent_ = max(x_hi_ - x_lo_, y_hi_ - y_lo_);
    if (extent_ == Rational(0)) extent_ = Rational(1);
    const Rational pad = extent_ * kStyle.padding;

    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x_lo_ - pad) << ' '
         << num(-(y_hi_ + pad)) << ' ' << num(x_hi_ - x_lo_ + pad * Rational(2)) << ' '
         << num(y_hi_ - y_lo_ + pad * Rational(2)) << "\">\n";
    out_ << "<title>" << escape(doc.label.value_or("tight span")) << " - " << stage_name(stage) << "</title>\n";
  }

  static std::string num(const Rational& r) { return format_decimal(r, 12); }

  void rect(const Rect& r) {
    out_ << "<rect x=\"" << num(r.x_lo) << "\" y=\"" << num(-r.y_hi) << "\" width=\"" << num(r.x_hi - r.x_lo)
         << "\" height=\"" << num(r.y_hi - r.y_lo) << "\" fill=\"" << kStyle.hatch_fill << "\" fill-opacity=\""
         << kStyle.hatch_opacity << "\" stroke=\"none\"/>\n";
  }

  void line(const AxisSegment& s, const char* color, const Rational& width) {
    if (s.degenerate()) return;
    const Point a = s.start();
    const Point b = s.end();
    out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
         << num(-b.y) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width * extent_)
         << "\" stroke-linecap=\"round\"/>\n";
  }

  void marker(const Point& p, const char* color, const Rational& radius) {
    out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(radius * extent_)
         << "\" fill=\"" << color << "\"/>\n";
  }

  void group(const char* id) { out_ << "<g id=\"" << id << "\">\n"; }
  void end_group() { out_ << "</g>\n"; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
      }
    }
    return out;
  }

  std::ostringstream out_;
  Rational x_lo_, x_hi_, y_lo_, y_hi_;
  Rational extent_;
};

void require(bool present, Stage stage, const char* what) {
  if (!present) {
    throw MissingStageError("stage '" + stage_name(stage) + "' needs " + what + ", which the document lacks");
  }
}

}  // namespace

std::string stage_name(Stage stage) {
  switch (stage) {
    case Stage::kPoints: return "points";
    case Stage::kSpine: return "spine";
    case Stage::kSkeleton: return "skeleton";
    case Stage::kHatching: return "hatching";
    case Stage::kTightSpan: return "tightspan";
  }
  return "?";
}

std::optional<Stage> parse_stage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (stage_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string render_svg(const OutputDocument& doc, Stage stage) {
  const bool spine_stroked = stage == Stage::kSpine || stage == Stage::kSkeleton || stage == Stage::kHatching;
  const bool connectors_stroked = stage == Stage::kSkeleton || stage == Stage::kHatching;
  const bool rects_filled = stage == Stage::kHatching || stage == Stage::kTightSpan;
  if (spine_stroked) require(doc.spine.has_value(), stage, "the spine");
  if (connectors_stroked) require(doc.connectors.has_value(), stage, "the skeleton connectors");
  if (rects_filled) require(doc.tightspan.has_value(), stage, "the hatched geometry");

  SvgWriter svg(doc, stage);
  if (rects_filled) {
    svg.group("hatching");
    for (const auto& r : doc.tightspan->rects) svg.rect(r);
    svg.end_group();
  }
  if (stage == Stage::kTightSpan) {
    svg.group("tightspan");
    for (const auto& s : doc.tightspan->segs) svg.line(s, kStyle.span_stroke, kStyle.span_width);
    svg.end_group();
  }
  if (connectors_stroked) {
    svg.group("connectors");
    for (const auto& c : *doc.connectors) svg.line(c.segment, kStyle.connector_stroke, kStyle.connector_width);
    svg.end_group();
  }
  if (spine_stroked) {
    svg.group("spine");
    for (const auto& s : doc.spine->segments) svg.line(s, kStyle.spine_stroke, kStyle.spine_width);
    const std::set<Point> inputs(doc.input.begin(), doc.input.end());
    for (const auto& v : doc.spine->vertices) {
      if (!inputs.contains(v)) svg.marker(v, kStyle.aux_vertex_fill, kStyle.aux_radius);
    }
    svg.end_group();
  }
  svg.group("points");
  for (const auto& p : doc.input) svg.marker(p, kStyle.point_fill, kStyle.point_radius);
  svg.end_group();
  return svg.finish();
}

}  // namespace tightspan
