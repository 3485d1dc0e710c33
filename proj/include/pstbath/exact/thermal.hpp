// Copyright 2026 The pstbath Authors
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

// thermal.hpp — Fermi occupation of an independent two-level bath site (k_B = 1).

#pragma once

#include <cmath>
#include <string>

#include "pstbath/errors.hpp"

namespace pstbath {

inline double thermal_occupation(double omega, double temperature) {
    if (!(temperature >= 0.0)) throw DomainError("thermal_occupation: temperature must be >= 0, got " + std::to_string(temperature));
    if (temperature == 0.0) return omega > 0.0 ? 0.0 : (omega < 0.0 ? 1.0 : 0.5);
    const double x = omega / temperature;
    // e^{x} overflows past ~709; the occupation is already 0 to double precision there.
    if (x > 700.0) return 0.0;
    return 1.0 / (std::exp(x) + 1.0);
}

}  // namespace pstbath
