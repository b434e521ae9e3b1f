#include <gtest/gtest.h>

#include <regex>

#include "support/test_support.hpp"
#include "tightspan/io.hpp"
#include "tightspan/pipeline.hpp"
#include "tightspan/svg.hpp"

namespace tightspan {
namespace {

using testing::P;

OutputDocument document_for(const PointSet& points) {
  return make_document(InputDocument{std::nullopt, points}, compute_tight_span(points));
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

TEST(StageNames, RoundTrip) {
  for (Stage s : kAllStages) EXPECT_EQ(parse_stage(stage_name(s)), s);
  EXPECT_FALSE(parse_stage("bogus").has_value());
}

TEST(RenderSvg, Example1TightSpan) {
  const std::string svg = render_svg(document_for(testing::example1()), Stage::kTightSpan);
  EXPECT_EQ(count(svg, "<line "), 3u);
  EXPECT_EQ(count(svg, "<circle "), 3u);
  EXPECT_EQ(count(svg, "<rect "), 0u);
}

TEST(RenderSvg, Example1Skeleton) {
  const std::string svg = render_svg(document_for(testing::example1()), Stage::kSkeleton);
  // Three spine segments, one nondegenerate connector, three inputs and
  // the auxiliary vertices (0,0) and (3/2,0).
  EXPECT_EQ(count(svg, "<line "), 4u);
  EXPECT_EQ(count(svg, "<circle "), 5u);
}

TEST(RenderSvg, FivePointHatchingHasTwoFills) {
  const std::string svg = render_svg(document_for(testing::five_point()), Stage::kHatching);
  EXPECT_EQ(count(svg, "<rect "), 2u);
  EXPECT_EQ(count(svg, "fill-opacity=\"0.35\""), 2u);
  // Fills go underneath the skeleton strokes.
  EXPECT_LT(svg.find("<rect "), svg.find("<line "));
}

TEST(RenderSvg, SingletonIsOneMarker) {
  const auto doc = document_for(PointSet({P("2", "-7")}));
  for (Stage s : kAllStages) {
    const std::string svg = render_svg(doc, s);
    EXPECT_EQ(count(svg, "<circle "), 1u) << stage_name(s);
    EXPECT_EQ(count(svg, "<line "), 0u) << stage_name(s);
    EXPECT_EQ(count(svg, "<rect "), 0u) << stage_name(s);
  }
}

TEST(RenderSvg, ViewBoxIsPaddedBoundingBox) {
  // Example 1 spans x in [-1, 3/2], y in [-2, 1]; extent 3, padding 3/10.
  const std::string svg = render_svg(document_for(testing::example1()), Stage::kPoints);
  EXPECT_NE(svg.find("viewBox=\"-1.3 -1.3 3.1 3.6\""), std::string::npos) << svg;
}

TEST(RenderSvg, NumbersHaveAtMostTwelveSignificantDigits) {
  const auto doc = document_for(PointSet({P("0", "0"), P("1/3", "2/7"), P("-5/11", "1")}));
  const std::string svg = render_svg(doc, Stage::kTightSpan);
  const std::regex number(R"(-?\d+(\.\d+)?)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it) {
    std::string digits;
    for (char c : it->str()) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    }
    digits.erase(0, digits.find_first_not_of('0'));
    EXPECT_LE(digits.size(), 13u) << it->str();  // a leading "0." plus twelve
  }
}

TEST(RenderSvg, MissingStageData) {
  OutputDocument doc;
  doc.input = {P("0", "0")};
  EXPECT_NO_THROW(render_svg(doc, Stage::kPoints));
  EXPECT_THROW(render_svg(doc, Stage::kSpine), MissingStageError);
  EXPECT_THROW(render_svg(doc, Stage::kTightSpan), MissingStageError);
}

TEST(RenderSvg, DeterministicAndLabelEscaped) {
  auto doc = document_for(testing::five_point());
  doc.label = "a<b & \"c\"";
  for (Stage s : kAllStages) EXPECT_EQ(render_svg(doc, s), render_svg(doc, s));
  EXPECT_NE(render_svg(doc, Stage::kPoints).find("a&lt;b &amp; &quot;c&quot;"), std::string::npos);
}

}  // namespace
}  // namespace tightspan
