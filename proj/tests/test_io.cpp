#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>

#include "minsurf/errors.hpp"
#include "minsurf/families.hpp"
#include "minsurf/serialize.hpp"
#include "minsurf/svg.hpp"

using namespace minsurf;

namespace {

std::string tmp_path(const std::string& name) {
  std::filesystem::create_directories(MINSURF_TEST_TMP);
  return std::string(MINSURF_TEST_TMP) + "/" + name;
}

}  // namespace

TEST(Serialize, DataRoundTripIsExact) {
  for (const auto& d : {figure_eight({0.3, 0.1}, {1.7, -0.2}), perturbed_two_cover({1.0, 0.1}, 0.05),
                        catenoid_cover(3, 2.0, 0.5).data, catenoid_cover(2, 1.0).data.with_height_offset(0.25)}) {
    const std::string text = data_to_json(d).dump();
    const WeierstrassData back = data_from_json(parse_json(text, "test"));
    EXPECT_TRUE(back == d);
    EXPECT_EQ(data_to_json(back).dump(), text);
  }
}

TEST(Serialize, StrictSchema) {
  Json j = data_to_json(figure_eight(1.0, 1.0));
  Json extra = j;
  extra["color"] = "red";
  EXPECT_THROW(data_from_json(extra), SchemaError);
  Json missing = j;
  missing.erase("window");
  EXPECT_THROW(data_from_json(missing), SchemaError);
  Json parity = j;
  parity["parity"] = "sideways";
  EXPECT_THROW(data_from_json(parity), SchemaError);
  Json order = j;
  order["g_minus"] = Json::array({Json::array({1, 1.0, 0.0}), Json::array({-1, 1.0, 0.0})});
  EXPECT_THROW(data_from_json(order), SchemaError);
  EXPECT_THROW(parse_json("{not json", "inline"), SchemaError);
}

TEST(Serialize, FamilySpecBuild) {
  const Json spec = Json::parse(R"({"family": "figure_eight", "params": {"a_m1": [1, 0], "a_1": 1}})");
  const WeierstrassData d = build_family(family_spec_from_json(spec));
  EXPECT_TRUE(d == figure_eight(1.0, 1.0));
  EXPECT_THROW(build_family(family_spec_from_json(Json::parse(R"({"family": "torus"})"))), SchemaError);
  EXPECT_THROW(family_spec_from_json(Json::parse(R"({"family": "catenoid", "size": 3})")), SchemaError);
  const FamilySpec s = family_spec_from_json(spec);
  EXPECT_EQ(family_spec_from_json(family_spec_to_json(s)).family, "figure_eight");
}

TEST(Serialize, CsvHeaderAndRows) {
  const LevelCurve c = trace_level(catenoid_cover(1, 2.0 * std::numbers::pi).data, 0.0, {64, Exec::Serial, 1e-10});
  const std::string csv = level_curve_csv(c);
  EXPECT_EQ(csv.rfind("theta,r,x1,x2,x3\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
}

TEST(Serialize, AtomicWriteAndRead) {
  const std::string p = tmp_path("atomic.txt");
  write_file_atomic(p, "hello\n");
  EXPECT_EQ(read_file(p), "hello\n");
  EXPECT_THROW(write_file_atomic("/nonexistent-dir/x.txt", "x"), IoError);
  EXPECT_THROW(read_file("/nonexistent-dir/x.txt"), IoError);
}

TEST(Svg, DeterministicWithCrossingMarker) {
  const WeierstrassData d = figure_eight(1.0, 1.0);
  const LevelCurve c = trace_level(d, 0.02, {1024, Exec::Parallel, 1e-10});
  const std::string a = svg_document({c}, length_profile(d, 32));
  const std::string b = svg_document({c}, length_profile(d, 32));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("class=\"crossing\""), std::string::npos);
  EXPECT_NE(a.find("id=\"profile\""), std::string::npos);
}

TEST(Svg, CatenoidWaistIsCircleWithPaddedView) {
  const LevelCurve c = trace_level(catenoid_cover(1, 2.0 * std::numbers::pi).data, 0.0, {256, Exec::Serial, 1e-10});
  const std::string s = svg_document({c}, std::nullopt);
  EXPECT_EQ(s.find("crossing"), std::string::npos);
  EXPECT_NE(s.find("viewBox=\"0 0 640.000 640.000\""), std::string::npos);
  // Diameter 2 spans 640 / 1.1 pixels, so the rightmost point sits at 320 + 290.909.
  EXPECT_NE(s.find("610.909,320.000"), std::string::npos);
}

TEST(Svg, EmptyInputRejected) {
  EXPECT_THROW(svg_document({}, std::nullopt), DomainError);
  EXPECT_THROW(render_svg({}, std::nullopt, tmp_path("x.svg")), DomainError);
}
