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

#ifndef DISCORD_REPORT_IO_H
#define DISCORD_REPORT_IO_H

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "discord/channels.h"
#include "discord/density.h"
#include "discord/discord.h"
#include "discord/errors.h"

namespace discord {

/// Malformed user input. position() is the 0-based character offset of the
/// offending token in the text that was being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t position);

  std::size_t position() const {
    return position_;
  }
  /// The message without the position suffix.
  const std::string &detail() const {
    return detail_;
  }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Parses "x,y,z". Whitespace around numbers is allowed.
Vec3 parse_triple(std::string_view text);
/// Parses "start:stop:step".
std::array<double, 3> parse_grid_spec(std::string_view text);

struct StateSpec {
  Vec3 r{};
  Vec3 s{};
  Vec3 c{};
  std::string label;

  BlochParams params() const {
    return BlochParams{r, s, c};
  }
};

/// Reads {"r": [..], "s": [..], "c": [..], "label": ".."}; missing vectors are
/// zero. Throws ParseError.
StateSpec parse_state_json(std::string_view text);

/// %.17g formatting with a '.' decimal separator, independent of the C
/// locale.
std::string format_double(double x);

/// Plain data mirror of the JSON report.
struct ReportDocument {
  std::string label;
  BlochParams params;
  std::array<double, 4> spectrum{};
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  Vec3 argmax_axis{};
  std::string method;
};

ReportDocument make_document(const StateSpec &spec, const DiscordReport &report);
std::string render_report_json(const ReportDocument &doc);
/// Inverse of render_report_json. Throws ParseError.
ReportDocument parse_report_json(std::string_view text);
/// One header line and one data row.
std::string render_report_csv(const ReportDocument &doc);

struct CurvePoint {
  double theta = 0.0;
  double g = 0.0;
};

std::string render_curve_csv(const std::vector<CurvePoint> &rows);
std::string render_sweep_csv(const std::vector<SweepRow> &rows);

/// Eigenpairs as {label, eigenvalues:[4], eigenvectors:[4][4][re, im]}.
std::string render_spectrum_json(const std::string &label, const Spectrum &spectrum);
/// index,eigenvalue,v0_re,v0_im,...,v3_im; one row per eigenpair.
std::string render_spectrum_csv(const Spectrum &spectrum);

}  // namespace discord

#endif  // DISCORD_REPORT_IO_H
