#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tightspan/oracle.hpp"
#include "tightspan/pipeline.hpp"

namespace tightspan {

enum class InputFormat { kJson, kCsv };

// Picks CSV for ".csv"/".txt" paths and JSON otherwise.
InputFormat format_for_path(std::string_view path);

struct InputDocument {
  std::optional<std::string> label;
  PointSet points;
};

// JSON: {"label"?: string, "points": [[x, y], ...]} where coordinates are
// rational strings (integers are accepted too).
// CSV: one "x,y" pair per line; blank lines and lines starting with '#' are
// skipped. Duplicates are dropped (see PointSet::duplicates_removed).
// Throws ParseError on malformed input and EmptyPointSetError when no
// points remain.
InputDocument read_points(std::string_view bytes, InputFormat format);

// Serialized pipeline state. Every stage after the input is optional so
// partial documents can be read back.
struct OutputDocument {
  std::optional<std::string> label;
  std::vector<Point> input;
  std::optional<Spine> spine;
  std::optional<std::vector<Connector>> connectors;
  std::optional<TightSpanGeometry> tightspan;
  std::optional<Measure> measures;
  std::optional<VerificationReport> verification;
};

OutputDocument make_document(const InputDocument& input, const TightSpanResult& result);

// Canonical JSON with fixed key order: input, spine, skeleton, tightspan,
// measures, verification. Absent stages are omitted.
std::string write_output(const OutputDocument& doc);

// Inverse of write_output. Throws ParseError on malformed documents.
OutputDocument parse_output(std::string_view bytes);

}  // namespace tightspan
