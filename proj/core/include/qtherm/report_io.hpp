// Copyright 2026 The qtherm Authors
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

#pragma once

#include <string>

#include "qtherm/noise.hpp"
#include "qtherm/sweep.hpp"

namespace qtherm {

// Fixed-schema serialization of sweep reports. Floating-point values are
// written with 12 significant digits (%.12g) and '\n' line endings in both
// formats, so identical reports serialize byte-identically.

// CSV column order is frozen; see the header strings below.
extern const char kJarzynskiCsvHeader[];
extern const char kIntermediateCsvHeader[];
extern const char kEngineCsvHeader[];
extern const char kRotationCsvHeader[];

std::string report_to_csv(const SweepReport& report);

// JSON object with the run settings as top-level fields and one row object
// per grid cell under "rows", using the CSV column names as keys.
std::string report_to_json(const SweepReport& report);

// Renders in the format selected by report.config and writes it to
// report.config.out_path. Throws std::runtime_error on I/O failure.
void emit_report(const SweepReport& report);

// Rotation-curve table (angle, sigma_z, sigma_z_ideal), same conventions.
std::string rotation_curve_to_csv(const RotationCurve& curve);
std::string rotation_curve_to_json(const RotationCurve& curve);

// Parses an INI-style config file: [section] headers, key = value pairs,
// '#' or ';' comments, blank lines ignored. Unknown sections or keys and
// malformed values are errors naming the offending line. Settings not
// present keep their RunConfig defaults. Sections and keys:
//   [run]          experiment, protocol, shots, repetitions, seed, exact
//   [grid]         points, lo, hi, points2, lo2, hi2
//   [qubits]       omega1, omega2
//   [intermediate] steps
//   [noise]        damping, readout_flip, over_rotation, over_rotation_power
//   [output]       path, format
RunConfig parse_run_config(const std::string& path);

// Applies one "key = value" assignment using the same "section.key" names,
// e.g. "run.shots". Used for flag overrides on top of a parsed file.
void apply_config_override(RunConfig& config, const std::string& section_key,
                           const std::string& value);

const char* experiment_kind_name(ExperimentKind kind);
const char* protocol_name(Protocol protocol);

// Formats one double with 12 significant digits, the fixed report precision.
std::string format_number(double value);

}  // namespace qtherm
