// Copyright 2026 The WalkForge Authors
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

// Circuit serialization.
//
// JSON, canonical field order, angles in radians with 17 significant digits:
//
//   {"wires":2,"gates":[{"kind":"phase2","wire":0,"params":[-1.0,1.0],
//                        "controls":[[1,0]]}, ...]}
//
// kind is one of h, x, phase2, gphase; gphase has "wire":null. A control is
// [wire, polarity] with polarity 1 = on-one and 0 = on-zero.
//
// Text dialect, one statement per line:
//
//   qreg q[2]
//   h q[0]
//   x q[1]
//   rz-pair(-1.0,1.0) q[0]
//   gphase(0.5)
//   ctrl- q[1] @ ctrl+ q[2] @ h q[0]
//
// Blank lines and lines starting with "//" are ignored. Both formats
// round-trip bit-exactly.

#pragma once

#include <string>

#include "walkforge/circuit.hpp"

namespace walkforge {

/// %.17g with a forced decimal point, so the value re-parses as a double.
std::string format_double(double x);

std::string to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

std::string to_qasm(const Circuit& c);
Circuit circuit_from_qasm(const std::string& text);

}  // namespace walkforge
