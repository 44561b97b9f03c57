// Copyright 2026 The discord-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discord/report_io.h"

#include <charconv>
#include <cmath>
#include <system_error>

#include "json.hpp"

namespace discord {

namespace {

using Json = nlohmann::ordered_json;

bool is_space(char ch) {
  return ch == ' ' || ch == '\t';
}

Json vec_json(const Vec3 &v) {
  return Json::array({v[0], v[1], v[2]});
}

Vec3 json_vec(const Json &j, const char *key) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(std::string("'") + key + "' must be an array of 3 numbers", 0);
  }
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number()) {
      throw ParseError(std::string("'") + key + "[" + std::to_string(i) + "]' is not a number", 0);
    }
    out[i] = j[i].get<double>();
  }
  return out;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

const Json &require(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing key '") + key + "'", 0);
  }
  return *it;
}

}  // namespace

ParseError::ParseError(const std::string &message, std::size_t position)
    : Error(message + " (at position " + std::to_string(position) + ")"),
      detail_(message),
      position_(position) {}

namespace {

template <std::size_t N>
std::array<double, N> parse_list(std::string_view text, char sep, const char *what) {
  std::array<double, N> out{};
  const std::string expected =
      std::string("expected ") + what + " (" + std::to_string(N) + " numbers separated by '" + sep + "')";
  std::size_t pos = 0;
  for (std::size_t i = 0; i < N; ++i) {
    while (pos < text.size() && is_space(text[pos])) {
      ++pos;
    }
    if (pos >= text.size()) {
      throw ParseError(expected + ", found " + std::to_string(i), pos);
    }
    const char *first = text.data() + pos;
    const char *last = text.data() + text.size();
    if (*first == '+') {
      ++first;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || !std::isfinite(value)) {
      throw ParseError("expected a finite number", pos);
    }
    out[i] = value;
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && is_space(text[pos])) {
      ++pos;
    }
    if (i + 1 < N) {
      if (pos >= text.size()) {
        throw ParseError(expected + ", found " + std::to_string(i + 1), pos);
      }
      if (text[pos] != sep) {
        throw ParseError(std::string("expected '") + sep + "'", pos);
      }
      ++pos;
    } else if (pos != text.size()) {
      throw ParseError("unexpected trailing characters", pos);
    }
  }
  return out;
}

}  // namespace

Vec3 parse_triple(std::string_view text) {
  return parse_list<3>(text, ',', "x,y,z");
}

std::array<double, 3> parse_grid_spec(std::string_view text) {
  return parse_list<3>(text, ':', "start:stop:step");
}

StateSpec parse_state_json(std::string_view text) {
  Json j = parse_json_text(text);
  if (!j.is_object()) {
    throw ParseError("state file must hold a JSON object", 0);
  }
  StateSpec spec;
  if (j.contains("r")) {
    spec.r = json_vec(j["r"], "r");
  }
  if (j.contains("s")) {
    spec.s = json_vec(j["s"], "s");
  }
  if (j.contains("c")) {
    spec.c = json_vec(j["c"], "c");
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw ParseError("'label' must be a string", 0);
    }
    spec.label = j["label"].get<std::string>();
  }
  return spec;
}

std::string format_double(double x) {
  if (x == 0.0) {
    x = 0.0;  // no "-0"
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

ReportDocument make_document(const StateSpec &spec, const DiscordReport &report) {
  ReportDocument doc;
  doc.label = spec.label;
  doc.params = spec.params();
  doc.spectrum = report.spectrum;
  doc.mutual_info = report.mutual_info;
  doc.classical_corr = report.classical_corr;
  doc.discord = report.discord;
  doc.argmax_axis = report.argmax_axis.z();
  doc.method = std::string(method_name(report.method));
  return doc;
}

std::string render_report_json(const ReportDocument &doc) {
  Json j;
  j["label"] = doc.label;
  j["params"] = Json{{"r", vec_json(doc.params.r)},
                     {"s", vec_json(doc.params.s)},
                     {"c", vec_json(doc.params.c)}};
  j["spectrum"] = Json::array({doc.spectrum[0], doc.spectrum[1], doc.spectrum[2], doc.spectrum[3]});
  j["mutual_info"] = doc.mutual_info;
  j["classical_corr"] = doc.classical_corr;
  j["discord"] = doc.discord;
  j["argmax_axis"] = vec_json(doc.argmax_axis);
  j["method"] = doc.method;
  return j.dump(2) + "\n";
}

ReportDocument parse_report_json(std::string_view text) {
  Json j = parse_json_text(text);
  if (!j.is_object()) {
    throw ParseError("report must be a JSON object", 0);
  }
  ReportDocument doc;
  doc.label = require(j, "label").get<std::string>();
  const Json &params = require(j, "params");
  doc.params.r = json_vec(require(params, "r"), "r");
  doc.params.s = json_vec(require(params, "s"), "s");
  doc.params.c = json_vec(require(params, "c"), "c");
  const Json &spectrum = require(j, "spectrum");
  if (!spectrum.is_array() || spectrum.size() != 4) {
    throw ParseError("'spectrum' must be an array of 4 numbers", 0);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    doc.spectrum[i] = spectrum[i].get<double>();
  }
  doc.mutual_info = require(j, "mutual_info").get<double>();
  doc.classical_corr = require(j, "classical_corr").get<double>();
  doc.discord = require(j, "discord").get<double>();
  doc.argmax_axis = json_vec(require(j, "argmax_axis"), "argmax_axis");
  doc.method = require(j, "method").get<std::string>();
  return doc;
}

std::string render_report_csv(const ReportDocument &doc) {
  std::string out =
      "label,r1,r2,r3,s1,s2,s3,c1,c2,c3,lambda1,lambda2,lambda3,lambda4,"
      "mutual_info,classical_corr,discord,z1,z2,z3,method\n";
  out += doc.label;
  for (const Vec3 *v : {&doc.params.r, &doc.params.s, &doc.params.c}) {
    for (double x : *v) {
      out += "," + format_double(x);
    }
  }
  for (double x : doc.spectrum) {
    out += "," + format_double(x);
  }
  out += "," + format_double(doc.mutual_info);
  out += "," + format_double(doc.classical_corr);
  out += "," + format_double(doc.discord);
  for (double x : doc.argmax_axis) {
    out += "," + format_double(x);
  }
  out += "," + doc.method + "\n";
  return out;
}

std::string render_curve_csv(const std::vector<CurvePoint> &rows) {
  std::string out = "theta,G\n";
  for (const CurvePoint &row : rows) {
    out += format_double(row.theta) + "," + format_double(row.g) + "\n";
  }
  return out;
}

std::string render_spectrum_json(const std::string &label, const Spectrum &spectrum) {
  Json j;
  j["label"] = label;
  j["eigenvalues"] = Json::array();
  j["eigenvectors"] = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    j["eigenvalues"].push_back(spectrum.eigenvalues[k]);
    Json vec = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex &z = spectrum.eigenvectors[k][i];
      vec.push_back(Json::array({z.real(), z.imag()}));
    }
    j["eigenvectors"].push_back(vec);
  }
  return j.dump(2) + "\n";
}

std::string render_spectrum_csv(const Spectrum &spectrum) {
  std::string out = "index,eigenvalue";
  for (int i = 0; i < 4; ++i) {
    out += ",v" + std::to_string(i) + "_re,v" + std::to_string(i) + "_im";
  }
  out += "\n";
  for (std::size_t k = 0; k < 4; ++k) {
    out += std::to_string(k) + "," + format_double(spectrum.eigenvalues[k]);
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex &z = spectrum.eigenvectors[k][i];
      out += "," + format_double(z.real()) + "," + format_double(z.imag());
    }
    out += "\n";
  }
  return out;
}

std::string render_sweep_csv(const std::vector<SweepRow> &rows) {
  std::string out = "gamma,Q_damped,Q_gap\n";
  for (const SweepRow &row : rows) {
    out += format_double(row.gamma) + "," + format_double(row.discord) + "," +
           format_double(row.gap) + "\n";
  }
  return out;
}

}  // namespace discord
