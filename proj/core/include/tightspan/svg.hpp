#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tightspan/io.hpp"

namespace tightspan {

// One panel of the construction, in pipeline order.
enum class Stage { kPoints, kSpine, kSkeleton, kHatching, kTightSpan };

inline constexpr std::array<Stage, 5> kAllStages = {Stage::kPoints, Stage::kSpine, Stage::kSkeleton,
                                                    Stage::kHatching, Stage::kTightSpan};

std::string stage_name(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

// The document lacks the data a stage draws.
class MissingStageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Standalone SVG 1.1 drawing of one stage. Coordinates are the exact values
// rounded to 12 significant digits, with y flipped so up is up. Output is a
// pure function of (doc, stage).
std::string render_svg(const OutputDocument& doc, Stage stage);

}  // namespace tightspan
