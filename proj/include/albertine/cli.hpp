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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "albertine/variety.hpp"

namespace albertine {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kInputError = 2 };

struct Tolerances {
  double pairing = 1e-7;
  double theorem_a = 1e-9;
  double dinh = 1e-7;
  double norm = 1e-7;
  double limit = 0.05;
};

/// "1e-6" sets every tolerance; "pairing=1e-6,theorem_a=1e-10" sets the
/// named ones. Throws InputError on anything else.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});
/// Defaults, overridden by ALBERTINE_TOL when it is set.
Tolerances tolerances_from_env();

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  bool random = false;
  std::uint64_t seed = 0;
  unsigned count = 0;
  unsigned m_max = 20;
  std::optional<std::filesystem::path> traces;  // directory for CSV traces
  Tolerances tol;
};

int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_albert(const RunConfig& cfg, std::ostream& out);
int cmd_degrees(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sv_limit(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command; input errors print to err and return 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Every identity check on one (model, alpha); sets pass.
nlohmann::json verify_case(const VarietyModel& model, const Endomorphism& alpha, const Tolerances& tol,
                           bool& pass);

}  // namespace albertine
