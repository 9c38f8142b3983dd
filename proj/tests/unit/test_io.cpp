// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "radial/error.hpp"
#include "radial/io.hpp"

namespace {

using namespace radial;
using radial::io::json;

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("radial_io_" + name)).string();
}

SampledProfile random_profile(Domain d) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> v(17);
  for (auto& z : v) z = {u(rng), u(rng)};
  return SampledProfile(RadialGrid(3.4, 17), v, d);
}

void expect_same(const SampledProfile& a, const SampledProfile& b) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.domain(), b.domain());
  EXPECT_EQ(a.grid().n_points(), b.grid().n_points());
  EXPECT_NEAR(a.grid().r_max(), b.grid().r_max(), 1e-12);
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(ProfileIo, CsvRoundTrip) {
  for (Domain d : {Domain::radial, Domain::spectral}) {
    const auto p = random_profile(d);
    expect_same(p, io::parse_profile_csv(io::format_profile_csv(p)));
  }
}

TEST(ProfileIo, JsonRoundTripThroughFiles) {
  const auto p = random_profile(Domain::radial);
  for (const char* ext : {".json", ".csv"}) {
    const auto path = temp_path(std::string("profile") + ext);
    io::save_profile(path, p);
    expect_same(p, io::load_profile(path));
    std::remove(path.c_str());
  }
}

TEST(ProfileIo, BuiltinDocument) {
  const json doc{{"schema", 1}, {"kind", "radial"}, {"builtin", "gaussian"}, {"grid", {{"r_max", 4.0}, {"n_points", 8}}}};
  const auto p = io::profile_from_json(doc);
  EXPECT_NEAR(p[0].real(), std::exp(-0.5 * 0.0625), 1e-15);
}

TEST(ProfileIo, SchemaErrors) {
  EXPECT_THROW(io::parse_profile_csv(""), SchemaError);
  EXPECT_THROW(io::parse_profile_csv("x,re,im\n0.5,1,0\n1.5,1,0\n"), SchemaError);
  EXPECT_THROW(io::parse_profile_csv("r,re,im\n0.5,1,0\n"), SchemaError);
  EXPECT_THROW(io::parse_profile_csv("r,re,im\n0.5,1,0\n1.7,1,0\n"), SchemaError);
  EXPECT_THROW(io::parse_profile_csv("r,re,im\n0.5,1,zero\n1.5,1,0\n"), SchemaError);
  EXPECT_THROW(io::parse_profile_csv("r,re,im\n0.5,1\n1.5,1,0\n"), SchemaError);
  EXPECT_THROW(io::profile_from_json(json{{"kind", "radial"}}), SchemaError);
  EXPECT_THROW(io::profile_from_json(json{{"schema", 2}, {"kind", "radial"}}), SchemaError);
  EXPECT_THROW(io::profile_from_json(json{{"schema", 1}, {"kind", "polar"}, {"grid", {{"r_max", 1.0}, {"n_points", 2}}}}),
               SchemaError);
  EXPECT_THROW(io::profile_from_json(json{{"schema", 1}, {"kind", "radial"}, {"grid", {{"r_max", 1.0}, {"n_points", 2}}},
                                          {"values", {{1.0, 0.0}}}}),
               SchemaError);
  EXPECT_THROW(io::profile_from_json(json::array()), SchemaError);
}

TEST(FileIo, EmptyAndMissingFiles) {
  const auto path = temp_path("empty.json");
  io::write_text(path, "  \n");
  EXPECT_THROW(io::read_json(path), SchemaError);
  io::write_text(path, "{not json");
  EXPECT_THROW(io::read_json(path), SchemaError);
  std::remove(path.c_str());
  EXPECT_THROW(io::read_text(temp_path("does_not_exist")), SchemaError);
}

TEST(FilterIo, CsvRoundTrip) {
  const CosineFilter g({Complex(0.5, 0.1), Complex(0.25, -0.3), Complex(1e-17, 2.0)});
  const auto back = io::parse_filter_csv(io::format_filter_csv(g));
  ASSERT_EQ(back.order(), g.order());
  for (int n = 0; n <= g.order(); ++n) EXPECT_EQ(back.g(n), g.g(n));
  EXPECT_THROW(io::parse_filter_csv("n,g_re,g_im\n1,0,0\n"), SchemaError);
  EXPECT_THROW(io::parse_filter_csv("n,g_re,g_im\n"), SchemaError);
  EXPECT_THROW(io::parse_filter_csv("n,re,im\n0,0,0\n"), SchemaError);
}

TEST(PyramidIo, RoundTrip) {
  CoefficientPyramid p;
  p.j_top = 3;
  p.lengths = {6, 4, 3};
  p.details = {{1.0, Complex(0, 2), 3.0, 4.0}, {5.0, 6.0, Complex(7, -1)}};
  p.coarse = {8.0, 9.0, 10.0};
  const auto back = io::pyramid_from_json(io::pyramid_to_json(p));
  EXPECT_EQ(back.j_top, p.j_top);
  EXPECT_EQ(back.lengths, p.lengths);
  EXPECT_EQ(back.details, p.details);
  EXPECT_EQ(back.coarse, p.coarse);

  CoefficientPyramid flat;
  flat.lengths = {2};
  flat.coarse = {1.0, 2.0};
  EXPECT_EQ(io::pyramid_from_json(io::pyramid_to_json(flat)).coarse, flat.coarse);

  auto doc = io::pyramid_to_json(p);
  doc["K"] = 7;
  EXPECT_THROW(io::pyramid_from_json(doc), SchemaError);
  doc = io::pyramid_to_json(p);
  doc["levels"].erase(0);
  EXPECT_THROW(io::pyramid_from_json(doc), SchemaError);
  doc = io::pyramid_to_json(p);
  doc["levels"][0]["d"][0] = json::array({1.0});
  EXPECT_THROW(io::pyramid_from_json(doc), SchemaError);
}

TEST(CoefficientIo, BareAndWrapped) {
  const std::vector<Complex> c{1.0, Complex(0.0, -2.0)};
  EXPECT_EQ(io::coefficients_from_json(io::complex_array(c)), c);
  EXPECT_EQ(io::coefficients_from_json(json{{"schema", 1}, {"c", io::complex_array(c)}}), c);
  EXPECT_THROW(io::coefficients_from_json(json{{"schema", 1}}), SchemaError);
  EXPECT_THROW(io::coefficients_from_json(json::array({"a"})), SchemaError);
}

TEST(ScalingIo, RoundTrip) {
  const auto doc = io::scaling_to_json(shannon_scaling());
  const auto phi = io::scaling_from_json(doc);
  EXPECT_TRUE(phi.orthonormal());
  for (double l : {0.2, 0.9, 1.1}) EXPECT_EQ(phi.hat(l), shannon_scaling().hat(l));
  EXPECT_THROW(io::scaling_from_json(json{{"schema", 1}, {"type", "scaling"}, {"kind", "nope"}}), SchemaError);
  EXPECT_THROW(io::scaling_from_json(json{{"schema", 1}, {"type", "wavelet"}, {"kind", "shannon"}}), SchemaError);
}

TEST(CwtGridIo, Parses) {
  const json doc{{"schema", 1}, {"r_max", 10.0}, {"n_r", 16}, {"a_min", 0.5}, {"a_max", 2.0}, {"n_a", 4}};
  const auto g = io::cwt_grid_from_json(doc, kRadial3D);
  EXPECT_EQ(g.r.size(), 16u);
  EXPECT_EQ(g.a.size(), 4u);
  auto bad = doc;
  bad["a_min"] = 4.0;
  EXPECT_THROW(io::cwt_grid_from_json(bad, kRadial3D), SchemaError);
}

TEST(Tolerances, DefaultsAndOverride) {
  const io::Tolerances t;
  const auto path = temp_path("tol.json");
  io::write_json(path, json{{"schema", 1}, {"filter_identity", 1e-4}});
  const auto loaded = io::Tolerances::load(path);
  EXPECT_EQ(loaded.filter_identity, 1e-4);
  EXPECT_EQ(loaded.two_scale, t.two_scale);
  io::write_json(path, t.to_json());
  EXPECT_EQ(io::Tolerances::load(path).frame_ratio, t.frame_ratio);
  io::write_json(path, json{{"filter_identity", 1e-4}});
  EXPECT_THROW(io::Tolerances::load(path), SchemaError);
  std::remove(path.c_str());
}

}  // namespace
