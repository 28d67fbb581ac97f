/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <string>

#include "qdec/io.hpp"
#include "qdec/oa.hpp"
#include "qdec/phasemat.hpp"

namespace qdec::test {

inline std::string data_path(const std::string &name) {
  return std::string(QDEC_TEST_DATA) + "/" + name;
}

// The standard 5x16 strength-2 array over four symbols
// (symbols shifted to 0..3).
inline oa::OrthogonalArray reference_oa() {
  return io::read_oa(io::read_file(data_path("oa16_5_4_2.txt")));
}

inline phasemat::SignMatrixTriple sign_triple(const std::string &name) {
  return io::read_sign_triple(io::read_file(data_path(name)));
}

} // namespace qdec::test
