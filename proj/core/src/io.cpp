#include "tightspan/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tightspan {

namespace {

using Json = nlohmann::ordered_json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

Rational rational_from_json(const Json& j, std::string_view what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    // Go through the shortest decimal text so 0.1 stays 1/10.
    return parse_rational(j.dump());
  }
  throw ParseError("expected a number for " + std::string(what) + ", got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json point_json(const Point& p) { return Json::array({format_rational(p.x), format_rational(p.y)}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a point must be a two-element array, got " + j.dump());
  // Named locals: g++ 11 leaks earlier members when a later braced-init element throws.
  Rational x = rational_from_json(j[0], "x");
  Rational y = rational_from_json(j[1], "y");
  return {std::move(x), std::move(y)};
}

Json segment_json(const AxisSegment& s) {
  Json j;
  j["orientation"] = s.orientation == Orientation::kHorizontal ? "horizontal" : "vertical";
  j["anchor"] = format_rational(s.anchor);
  j["lo"] = format_rational(s.lo);
  j["hi"] = format_rational(s.hi);
  return j;
}

AxisSegment segment_from_json(const Json& j) {
  const auto orientation = field(j, "orientation").get<std::string>();
  if (orientation != "horizontal" && orientation != "vertical") {
    throw ParseError("unknown orientation '" + orientation + "'");
  }
  AxisSegment s;
  s.orientation = orientation == "horizontal" ? Orientation::kHorizontal : Orientation::kVertical;
  s.anchor = rational_from_json(field(j, "anchor"), "anchor");
  s.lo = rational_from_json(field(j, "lo"), "lo");
  s.hi = rational_from_json(field(j, "hi"), "hi");
  if (s.hi < s.lo) throw ParseError("segment with lo > hi");
  return s;
}

Json rect_json(const Rect& r) {
  Json j;
  j["x_lo"] = format_rational(r.x_lo);
  j["x_hi"] = format_rational(r.x_hi);
  j["y_lo"] = format_rational(r.y_lo);
  j["y_hi"] = format_rational(r.y_hi);
  return j;
}

Rect rect_from_json(const Json& j) {
  Rect r;
  r.x_lo = rational_from_json(field(j, "x_lo"), "x_lo");
  r.x_hi = rational_from_json(field(j, "x_hi"), "x_hi");
  r.y_lo = rational_from_json(field(j, "y_lo"), "y_lo");
  r.y_hi = rational_from_json(field(j, "y_hi"), "y_hi");
  if (r.x_hi < r.x_lo || r.y_hi < r.y_lo) throw ParseError("rectangle with inverted bounds");
  return r;
}

StepCase step_case_from_name(const std::string& name) {
  for (StepCase c : {StepCase::kCaseI, StepCase::kCaseII, StepCase::kCaseIII}) {
    if (step_case_name(c) == name) return c;
  }
  throw ParseError("unknown spine step case '" + name + "'");
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json params;
  params["grid_step"] = format_rational(r.params.grid_step);
  params["seed_count"] = r.params.seed_count;
  params["surjectivity_tolerance"] = format_rational(r.params.surjectivity_tolerance);
  params["max_isometry_pivots"] = r.params.max_isometry_pivots;
  j["parameters"] = params;
  j["samples"] = r.sample_count;
  j["pairs"] = r.pair_count;
  j["seeds_checked"] = r.seeds_checked;

  Json ext = Json::array();
  for (const auto& w : r.extremality_failures) {
    ext.push_back({{"sample", point_json(w.sample)}, {"unmatched", point_json(w.unmatched)}});
  }
  j["extremality_failures"] = {{"count", r.extremality_failure_count}, {"witnesses", ext}};

  Json iso = Json::array();
  for (const auto& w : r.isometry_failures) {
    iso.push_back({{"x", point_json(w.x)},
                   {"y", point_json(w.y)},
                   {"dinf", format_rational(w.dinf)},
                   {"d1", format_rational(w.d1)}});
  }
  j["isometry_failures"] = {{"count", r.isometry_failure_count}, {"witnesses", iso}};

  Json sur = Json::array();
  for (const auto& w : r.surjectivity_failures) {
    Json target = Json::array();
    for (const auto& v : w.target.values) target.push_back(format_rational(v));
    sur.push_back({{"seed", point_json(w.seed)}, {"target", target}, {"distance", format_rational(w.distance)}});
  }
  j["surjectivity_failures"] = {{"count", r.surjectivity_failure_count}, {"witnesses", sur}};
  return j;
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport r;
  const Json& params = field(j, "parameters");
  r.params.grid_step = rational_from_json(field(params, "grid_step"), "grid_step");
  r.params.seed_count = field(params, "seed_count").get<std::size_t>();
  r.params.surjectivity_tolerance = rational_from_json(field(params, "surjectivity_tolerance"), "tolerance");
  r.params.max_isometry_pivots = field(params, "max_isometry_pivots").get<std::size_t>();
  r.sample_count = field(j, "samples").get<std::size_t>();
  r.pair_count = field(j, "pairs").get<std::size_t>();
  r.seeds_checked = field(j, "seeds_checked").get<std::size_t>();

  const Json& ext = field(j, "extremality_failures");
  r.extremality_failure_count = field(ext, "count").get<std::size_t>();
  for (const auto& w : field(ext, "witnesses")) {
    ExtremalityFailure f;
    f.sample = point_from_json(field(w, "sample"));
    f.unmatched = point_from_json(field(w, "unmatched"));
    r.extremality_failures.push_back(std::move(f));
  }
  const Json& iso = field(j, "isometry_failures");
  r.isometry_failure_count = field(iso, "count").get<std::size_t>();
  for (const auto& w : field(iso, "witnesses")) {
    IsometryFailure f;
    f.x = point_from_json(field(w, "x"));
    f.y = point_from_json(field(w, "y"));
    f.dinf = rational_from_json(field(w, "dinf"), "dinf");
    f.d1 = rational_from_json(field(w, "d1"), "d1");
    r.isometry_failures.push_back(std::move(f));
  }
  const Json& sur = field(j, "surjectivity_failures");
  r.surjectivity_failure_count = field(sur, "count").get<std::size_t>();
  for (const auto& w : field(sur, "witnesses")) {
    DistanceVector target;
    for (const auto& v : field(w, "target")) target.values.push_back(rational_from_json(v, "target"));
    SurjectivityFailure f;
    f.seed = point_from_json(field(w, "seed"));
    f.target = std::move(target);
    f.distance = rational_from_json(field(w, "distance"), "distance");
    r.surjectivity_failures.push_back(std::move(f));
  }
  return r;
}

InputDocument read_json_points(std::string_view bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::optional<std::string> label;
  if (j.is_object() && j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("'label' must be a string");
    label = j["label"].get<std::string>();
  }
  // A full output document carries its points under input.points.
  const Json& holder = (j.is_object() && j.contains("input") && !j.contains("points")) ? j["input"] : j;
  if (!label && holder.is_object() && holder.contains("label") && holder["label"].is_string()) {
    label = holder["label"].get<std::string>();
  }
  const Json& arr = field(holder, "points");
  if (!arr.is_array()) throw ParseError("'points' must be an array");
  std::vector<Point> pts;
  for (const auto& p : arr) pts.push_back(point_from_json(p));
  return {label, PointSet(std::move(pts))};
}

InputDocument read_csv_points(std::string_view bytes) {
  std::vector<Point> pts;
  std::istringstream in{std::string(bytes)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x,y', got '" + line + "'");
    }
    try {
      Rational x = parse_rational(std::string_view(line).substr(0, comma));
      Rational y = parse_rational(std::string_view(line).substr(comma + 1));
      pts.push_back({std::move(x), std::move(y)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return {std::nullopt, PointSet(std::move(pts))};
}

}  // namespace

InputFormat format_for_path(std::string_view path) {
  const std::string p = lower(path);
  if (p.ends_with(".csv") || p.ends_with(".txt")) return InputFormat::kCsv;
  return InputFormat::kJson;
}

InputDocument read_points(std::string_view bytes, InputFormat format) {
  return format == InputFormat::kJson ? read_json_points(bytes) : read_csv_points(bytes);
}

OutputDocument make_document(const InputDocument& input, const TightSpanResult& result) {
  OutputDocument doc;
  doc.label = input.label;
  doc.input.assign(input.points.begin(), input.points.end());
  doc.spine = result.spine();
  doc.connectors = result.skeleton.connectors;
  doc.tightspan = result.geometry;
  doc.measures = result.measure;
  return doc;
}

std::string write_output(const OutputDocument& doc) {
  Json j;
  Json input;
  if (doc.label) input["label"] = *doc.label;
  input["points"] = Json::array();
  for (const auto& p : doc.input) input["points"].push_back(point_json(p));
  j["input"] = input;

  if (doc.spine) {
    Json spine;
    spine["vertices"] = Json::array();
    for (const auto& v : doc.spine->vertices) spine["vertices"].push_back(point_json(v));
    spine["segments"] = Json::array();
    for (const auto& s : doc.spine->segments) spine["segments"].push_back(segment_json(s));
    spine["trace"] = Json::array();
    for (const auto& step : doc.spine->trace) {
      Json s;
      s["case"] = step_case_name(step.step_case);
      s["t"] = format_rational(step.t);
      s["from"] = point_json(step.cursor_before);
      s["to"] = point_json(step.cursor_after);
      spine["trace"].push_back(s);
    }
    j["spine"] = spine;
  }
  if (doc.connectors) {
    Json connectors = Json::array();
    for (const auto& c : *doc.connectors) {
      Json cj;
      cj["point"] = point_json(c.point);
      cj["attach"] = point_json(c.attach);
      cj["segment"] = segment_json(c.segment);
      connectors.push_back(cj);
    }
    j["skeleton"] = {{"connectors", connectors}};
  }
  if (doc.tightspan) {
    Json ts;
    ts["rects"] = Json::array();
    for (const auto& r : doc.tightspan->rects) ts["rects"].push_back(rect_json(r));
    ts["segs"] = Json::array();
    for (const auto& s : doc.tightspan->segs) ts["segs"].push_back(segment_json(s));
    j["tightspan"] = ts;
  }
  if (doc.measures) {
    j["measures"] = {{"area", format_rational(doc.measures->area)},
                     {"length_1d", format_rational(doc.measures->length_1d)}};
  }
  if (doc.verification) j["verification"] = verification_json(*doc.verification);
  return j.dump(2) + "\n";
}

OutputDocument parse_output(std::string_view bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  OutputDocument doc;
  try {
    const Json& input = field(j, "input");
    if (input.contains("label")) doc.label = input["label"].get<std::string>();
    for (const auto& p : field(input, "points")) doc.input.push_back(point_from_json(p));

    if (j.contains("spine")) {
      const Json& sj = j["spine"];
      Spine spine;
      for (const auto& v : field(sj, "vertices")) spine.vertices.push_back(point_from_json(v));
      for (const auto& s : field(sj, "segments")) spine.segments.push_back(segment_from_json(s));
      for (const auto& s : field(sj, "trace")) {
        SpineStep step;
        step.step_case = step_case_from_name(field(s, "case").get<std::string>());
        step.t = rational_from_json(field(s, "t"), "t");
        step.cursor_before = point_from_json(field(s, "from"));
        step.cursor_after = point_from_json(field(s, "to"));
        spine.trace.push_back(std::move(step));
      }
      doc.spine = std::move(spine);
    }
    if (j.contains("skeleton")) {
      std::vector<Connector> connectors;
      for (const auto& c : field(j["skeleton"], "connectors")) {
        Connector k;
        k.point = point_from_json(field(c, "point"));
        k.attach = point_from_json(field(c, "attach"));
        k.segment = segment_from_json(field(c, "segment"));
        connectors.push_back(std::move(k));
      }
      doc.connectors = std::move(connectors);
    }
    if (j.contains("tightspan")) {
      TightSpanGeometry g;
      for (const auto& r : field(j["tightspan"], "rects")) g.rects.push_back(rect_from_json(r));
      for (const auto& s : field(j["tightspan"], "segs")) g.segs.push_back(segment_from_json(s));
      g.source_points = doc.input;
      doc.tightspan = std::move(g);
    }
    if (j.contains("measures")) {
      doc.measures = Measure{rational_from_json(field(j["measures"], "area"), "area"),
                             rational_from_json(field(j["measures"], "length_1d"), "length_1d")};
    }
    if (j.contains("verification")) doc.verification = verification_from_json(j["verification"]);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

}  // namespace tightspan
