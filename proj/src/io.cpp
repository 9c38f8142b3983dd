// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#include "radial/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "radial/error.hpp"
#include "radial/hankel.hpp"

namespace radial::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  return out;
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(std::string("malformed number in ") + what + ": '" + s + "'");
  }
}

// Data rows of a CSV with the expected header; blank lines ignored.
std::vector<std::vector<double>> csv_rows(const std::string& text, const std::vector<std::string>& header,
                                          std::string* first_column) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split(line, ',');
    if (!seen_header) {
      if (fields.size() != header.size()) throw SchemaError("CSV header must be '" + fields.front() + ",...'");
      for (std::size_t i = first_column ? 1 : 0; i < header.size(); ++i) {
        if (fields[i] != header[i]) throw SchemaError("unexpected CSV column '" + fields[i] + "'");
      }
      if (first_column) *first_column = fields[0];
      seen_header = true;
      continue;
    }
    if (fields.size() != header.size()) throw SchemaError("CSV row has " + std::to_string(fields.size()) + " fields");
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(to_double(f, "CSV"));
    rows.push_back(std::move(row));
  }
  if (!seen_header) throw SchemaError("empty CSV input");
  return rows;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(17) << v;
  return o.str();
}

void require_schema(const json& doc) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  if (!doc.contains("schema")) throw SchemaError("missing \"schema\" field");
  if (doc["schema"] != kSchemaVersion) throw SchemaError("unsupported schema version");
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Domain domain_from(const std::string& kind) {
  if (kind == "radial") return Domain::radial;
  if (kind == "spectral") return Domain::spectral;
  throw SchemaError("kind must be \"radial\" or \"spectral\"");
}

RadialGrid grid_from(const json& g) {
  try {
    return RadialGrid(field<double>(g, "r_max"), field<int>(g, "n_points"));
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw SchemaError("empty input file '" + path + "'");
  return text;
}

json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

SampledProfile parse_profile_csv(const std::string& text) {
  std::string x_name;
  const auto rows = csv_rows(text, {"x", "re", "im"}, &x_name);
  if (x_name != "r" && x_name != "lambda") throw SchemaError("profile CSV must start with column r or lambda");
  if (rows.size() < 2) throw SchemaError("profile CSV needs at least two rows");
  const int n = static_cast<int>(rows.size());
  const double h = 2.0 * rows[0][0];
  if (!(h > 0.0)) throw SchemaError("profile abscissae must start at half a spacing");
  std::vector<Complex> v;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(rows[i][0] - (i + 0.5) * h) > 1e-9 * (i + 1) * h) {
      throw SchemaError("profile abscissae are not uniform midpoints");
    }
    v.emplace_back(rows[i][1], rows[i][2]);
  }
  try {
    return SampledProfile(RadialGrid(n * h, n), std::move(v), x_name == "r" ? Domain::radial : Domain::spectral);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

std::string format_profile_csv(const SampledProfile& p) {
  std::ostringstream o;
  o << (p.domain() == Domain::radial ? "r" : "lambda") << ",re,im\n";
  for (int i = 0; i < p.size(); ++i) o << fmt(p.grid()[i]) << ',' << fmt(p[i].real()) << ',' << fmt(p[i].imag()) << '\n';
  return o.str();
}

json complex_array(const std::vector<Complex>& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::vector<Complex> complex_vector(const json& arr, const char* what) {
  if (!arr.is_array()) throw SchemaError(std::string(what) + " must be an array of [re, im] pairs");
  std::vector<Complex> v;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw SchemaError(std::string(what) + " entries must be [re, im] pairs");
    }
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

SampledProfile profile_from_json(const json& doc) {
  require_schema(doc);
  const Domain d = domain_from(field<std::string>(doc, "kind"));
  if (!doc.contains("grid")) throw SchemaError("missing field \"grid\"");
  const RadialGrid grid = grid_from(doc["grid"]);
  try {
    if (doc.contains("builtin")) return sample(builtin(field<std::string>(doc, "builtin"), d), grid, d);
    return SampledProfile(grid, complex_vector(doc.contains("values") ? doc["values"] : json(), "values"), d);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  } catch (const GridMismatchError& e) {
    throw SchemaError(e.what());
  }
}

json profile_to_json(const SampledProfile& p) {
  return {{"schema", kSchemaVersion},
          {"kind", to_string(p.domain())},
          {"grid", {{"r_max", p.grid().r_max()}, {"n_points", p.grid().n_points()}}},
          {"values", complex_array(p.values())}};
}

namespace {
bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

SampledProfile load_profile(const std::string& path) {
  if (ends_with(path, ".json")) return profile_from_json(read_json(path));
  return parse_profile_csv(read_text(path));
}

void save_profile(const std::string& path, const SampledProfile& p) {
  if (ends_with(path, ".json")) {
    write_json(path, profile_to_json(p));
  } else {
    write_text(path, format_profile_csv(p));
  }
}

EvenFunction spectrum_from_json(const json& doc, const HypergroupIndex& alpha) {
  require_schema(doc);
  const Domain d = domain_from(doc.value("kind", std::string("spectral")));
  if (doc.contains("builtin")) {
    const auto name = field<std::string>(doc, "builtin");
    try {
      if (d == Domain::spectral) return builtin(name, Domain::spectral);
      // The radial closed forms are the 3-D ones; their spectra are the builtin spectra.
      if (alpha.value() == 0.5) return builtin(name, Domain::spectral);
    } catch (const DomainError& e) {
      throw SchemaError(e.what());
    }
    if (!doc.contains("grid")) throw SchemaError("radial builtin for alpha != 1/2 needs a grid");
  }
  const SampledProfile p = profile_from_json(doc);
  if (p.domain() == Domain::spectral) return as_function(p);
  const RadialGrid out = dual_grid(p.grid());
  return as_function(alpha.value() == 0.5 ? hankel_half(p, out) : hankel_general(alpha, p, out));
}

json scaling_to_json(const ScalingFunction& phi) {
  const auto& r = phi.recipe();
  json doc{{"schema", kSchemaVersion},
           {"type", "scaling"},
           {"kind", r.kind},
           {"orthogonalized", r.orthogonalized},
           {"n_max", r.n_max},
           {"orthonormal", phi.orthonormal()}};
  if (r.classical_spectrum) doc["classical_spectrum"] = profile_to_json(*r.classical_spectrum);
  return doc;
}

ScalingFunction scaling_from_json(const json& doc) {
  require_schema(doc);
  if (doc.value("type", std::string()) != "scaling") throw SchemaError("expected \"type\": \"scaling\"");
  const auto kind = field<std::string>(doc, "kind");
  try {
    ScalingFunction phi = kind == "tabulated"
                              ? from_classical(profile_from_json(field<json>(doc, "classical_spectrum")))
                              : scaling_builtin(kind);
    if (doc.value("orthogonalized", false)) phi = orthogonalize(phi, doc.value("n_max", 0));
    return phi;
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

CosineFilter parse_filter_csv(const std::string& text) {
  const auto rows = csv_rows(text, {"n", "g_re", "g_im"}, nullptr);
  std::vector<Complex> g;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][0] != static_cast<double>(i)) throw SchemaError("filter rows must list n = 0, 1, 2, ... in order");
    g.emplace_back(rows[i][1], rows[i][2]);
  }
  if (g.empty()) throw SchemaError("filter CSV has no coefficients");
  return CosineFilter(std::move(g));
}

std::string format_filter_csv(const CosineFilter& g) {
  std::ostringstream o;
  o << "n,g_re,g_im\n";
  for (int n = 0; n <= g.order(); ++n) o << n << ',' << fmt(g.g(n).real()) << ',' << fmt(g.g(n).imag()) << '\n';
  return o.str();
}

std::vector<Complex> coefficients_from_json(const json& doc) {
  if (doc.is_array()) return complex_vector(doc, "coefficients");
  require_schema(doc);
  if (!doc.contains("c")) throw SchemaError("missing field \"c\"");
  return complex_vector(doc["c"], "c");
}

json pyramid_to_json(const CoefficientPyramid& p) {
  json levels = json::array();
  for (int i = 0; i < p.depth(); ++i) {
    const bool last = i + 1 == p.depth();
    levels.push_back({{"c", complex_array(last ? p.coarse : std::vector<Complex>{})},
                      {"d", complex_array(p.details[i])}});
  }
  json doc{{"schema", kSchemaVersion},
           {"j_top", p.j_top},
           {"depth", p.depth()},
           {"K", p.lengths.front()},
           {"lengths", p.lengths},
           {"levels", levels}};
  if (p.depth() == 0) doc["c"] = complex_array(p.coarse);
  return doc;
}

CoefficientPyramid pyramid_from_json(const json& doc) {
  require_schema(doc);
  CoefficientPyramid p;
  p.j_top = field<int>(doc, "j_top");
  const int depth = field<int>(doc, "depth");
  p.lengths = field<std::vector<int>>(doc, "lengths");
  if (static_cast<int>(p.lengths.size()) != depth + 1) throw SchemaError("lengths must have depth + 1 entries");
  if (field<int>(doc, "K") != p.lengths.front()) throw SchemaError("K disagrees with lengths[0]");
  if (depth == 0) {
    p.coarse = complex_vector(field<json>(doc, "c"), "c");
    return p;
  }
  const auto levels = field<json>(doc, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != depth) throw SchemaError("levels must have depth entries");
  for (int i = 0; i < depth; ++i) {
    p.details.push_back(complex_vector(field<json>(levels[i], "d"), "d"));
    if (i + 1 == depth) p.coarse = complex_vector(field<json>(levels[i], "c"), "c");
  }
  return p;
}

json report_to_json(const MraReport& r) {
  json doc{{"schema", kSchemaVersion},
           {"riesz", {{"A", r.riesz.A}, {"B", r.riesz.B}, {"satisfied", r.riesz.satisfied()}}},
           {"two_scale_residual", r.two_scale_residual},
           {"phi_hat_at_zero", r.phi_hat_at_zero},
           {"generates_mra", r.generates_mra},
           {"unit_at_zero", r.unit_at_zero}};
  doc["gram_deviation"] = r.gram_deviation ? json(*r.gram_deviation) : json(nullptr);
  return doc;
}

CwtGrid cwt_grid_from_json(const json& doc, const HypergroupIndex& alpha) {
  require_schema(doc);
  try {
    return CwtGrid::log_uniform(alpha, field<double>(doc, "r_max"), field<int>(doc, "n_r"),
                                field<double>(doc, "a_min"), field<double>(doc, "a_max"), field<int>(doc, "n_a"));
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

std::string format_cwt_csv(const CwtGrid& grid, const std::vector<Complex>& psi) {
  std::ostringstream o;
  o << "r,a,re,im\n";
  const std::size_t nr = grid.r.size();
  for (std::size_t m = 0; m < grid.a.size(); ++m) {
    for (std::size_t i = 0; i < nr; ++i) {
      const auto z = psi[m * nr + i];
      o << fmt(grid.r[i]) << ',' << fmt(grid.a[m]) << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << '\n';
    }
  }
  return o.str();
}

Tolerances Tolerances::load(const std::string& path) {
  Tolerances t;
  const json doc = read_json(path);
  require_schema(doc);
  t.filter_identity = doc.value("filter_identity", t.filter_identity);
  t.two_scale = doc.value("two_scale", t.two_scale);
  t.riesz_floor = doc.value("riesz_floor", t.riesz_floor);
  t.orthonormality = doc.value("orthonormality", t.orthonormality);
  t.frame_ratio = doc.value("frame_ratio", t.frame_ratio);
  return t;
}

json Tolerances::to_json() const {
  return {{"schema", kSchemaVersion},         {"filter_identity", filter_identity}, {"two_scale", two_scale},
          {"riesz_floor", riesz_floor},       {"orthonormality", orthonormality},   {"frame_ratio", frame_ratio}};
}

}  // namespace radial::io
