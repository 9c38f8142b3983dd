// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "radial/cosine_filter.hpp"
#include "radial/cwt.hpp"
#include "radial/fwt.hpp"
#include "radial/mra.hpp"
#include "radial/profile.hpp"

namespace radial::io {

using nlohmann::json;

/// Every JSON document carries "schema": kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

/// Whole file as text; SchemaError when missing or empty.
std::string read_text(const std::string& path);
json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const json& doc);

/// CSV with header `r,re,im` (radial) or `lambda,re,im` (spectral). Abscissae
/// must be the midpoints of a uniform grid starting at half a spacing.
SampledProfile parse_profile_csv(const std::string& text);
std::string format_profile_csv(const SampledProfile& p);

/// {schema, grid: {r_max, n_points}, kind: "radial"|"spectral", values: [[re, im], ...]}
/// or {schema, builtin: name, kind, grid} for a sampled closed form.
SampledProfile profile_from_json(const json& doc);
json profile_to_json(const SampledProfile& p);

/// Loads a profile from .csv or .json by extension.
SampledProfile load_profile(const std::string& path);
void save_profile(const std::string& path, const SampledProfile& p);

/// Spectrum of a profile document for index alpha. Builtins use their
/// spectral closed form; radial samples are transformed (dual grid at 1/2).
EvenFunction spectrum_from_json(const json& doc, const HypergroupIndex& alpha);

json scaling_to_json(const ScalingFunction& phi);
ScalingFunction scaling_from_json(const json& doc);

/// CSV `n,g_re,g_im`, rows n = 0..N in order.
CosineFilter parse_filter_csv(const std::string& text);
std::string format_filter_csv(const CosineFilter& g);

/// Coefficient vectors as [[re, im], ...].
json complex_array(const std::vector<Complex>& v);
std::vector<Complex> complex_vector(const json& arr, const char* what);

/// {schema, c: [[re, im], ...]} or a bare array.
std::vector<Complex> coefficients_from_json(const json& doc);

/// {schema, j_top, depth, K, lengths, levels: [{c, d}, ...]}; levels[i] holds
/// d^(j_top-1-i), and the last level also holds the coarsest c.
json pyramid_to_json(const CoefficientPyramid& p);
CoefficientPyramid pyramid_from_json(const json& doc);

json report_to_json(const MraReport& r);

/// {schema, r_max, n_r, a_min, a_max, n_a}.
CwtGrid cwt_grid_from_json(const json& doc, const HypergroupIndex& alpha);
std::string format_cwt_csv(const CwtGrid& grid, const std::vector<Complex>& psi);

/// Default tolerances, overridable from a tolerances.json file.
struct Tolerances {
  double filter_identity = 1e-6;
  double two_scale = 1e-6;
  double riesz_floor = 1e-12;
  double orthonormality = 1e-5;
  double frame_ratio = 0.01;

  static Tolerances load(const std::string& path);
  json to_json() const;
};

}  // namespace radial::io
