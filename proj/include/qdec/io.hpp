/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "qdec/avgham.hpp"
#include "qdec/codes.hpp"
#include "qdec/oa.hpp"
#include "qdec/phasemat.hpp"

namespace qdec::io {

/// Malformed input. Carries a 1-based line number when one applies.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line(line) {}
  int line;
};

/// "OA N n s t lambda" followed by n lines of N integers.
std::string write_oa(const oa::OrthogonalArray &a);
oa::OrthogonalArray read_oa(const std::string &text);

std::string write_code(const codes::LinearCode &c);
codes::LinearCode read_code(const std::string &text);

/// Strength and index of the array a family came from, when known.
struct OaClaim {
  int t = 0;
  long long lambda = 0;
};

struct FamilyFile {
  phasemat::PhaseMatrixFamily family;
  std::optional<OaClaim> oa;
};

std::string write_family(const phasemat::PhaseMatrixFamily &f,
                         const std::optional<OaClaim> &claim = {});
FamilyFile read_family(const std::string &text);

/// Three blank-line separated blocks (S_x, S_y, S_z). Rows are either a
/// run of '+'/'-' characters or whitespace-separated +1/-1 tokens. Lines
/// starting with '#' are ignored.
phasemat::SignMatrixTriple read_sign_triple(const std::string &text);
std::string write_sign_triple(const phasemat::SignMatrixTriple &t);

std::string write_schedule(const avgham::PulseSchedule &s);
avgham::PulseSchedule read_schedule(const std::string &text);

std::string write_report(const avgham::DecouplingReport &r);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &text);

} // namespace qdec::io
