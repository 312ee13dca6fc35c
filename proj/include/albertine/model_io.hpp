/*
 * Copyright 2026 The Albertine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "albertine/dynamics.hpp"
#include "albertine/variety.hpp"

namespace albertine {

/// Malformed or unreadable input files.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ModelFile {
  VarietyModel model;
  Endomorphism alpha;  // no factors when the file has no "endomorphism" key

  [[nodiscard]] bool has_endomorphism() const { return !alpha.factors.empty(); }
};

/// Parses the model format
///   {"characteristic": "zero"|"positive",
///    "factors": [{"type": "I".."IV", "dim_A", "n", "e0", "d"}],
///    "endomorphism": [[block, ...] per factor]}
/// with real blocks as int arrays, complex entries as [re, im] and
/// quaternion entries as [a, b, c, d]. Block shapes are checked against the
/// model only when the model itself is valid.
ModelFile parse_model(const nlohmann::json& doc);
ModelFile load_model(const std::filesystem::path& path);
nlohmann::json model_to_json(const VarietyModel& model, const Endomorphism& alpha);

/// A square matrix given as a JSON array of rows; entries are numbers or
/// [re, im] pairs.
MatC parse_matrix(const nlohmann::json& doc);
MatC load_matrix(const std::filesystem::path& path);

nlohmann::json load_json(const std::filesystem::path& path);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json int_to_json(const Int& x);

/// Deterministic serialization: keys in insertion order as stored by
/// nlohmann (sorted), two-space indent, floats as %.17g, non-finite floats
/// as null.
std::string dump_json(const nlohmann::json& doc);

/// CSV with header m,value,target.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);

}  // namespace albertine
