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


// Umbrella header.

#pragma once

#include "pstbath/core/bath.hpp"
#include "pstbath/core/chain.hpp"
#include "pstbath/core/coupling.hpp"
#include "pstbath/core/system_model.hpp"
#include "pstbath/core/wigner_d.hpp"
#include "pstbath/errors.hpp"
#include "pstbath/exact/oracle.hpp"
#include "pstbath/fidelity.hpp"
#include "pstbath/scenario/csv.hpp"
#include "pstbath/scenario/report.hpp"
#include "pstbath/scenario/scenario.hpp"
#include "pstbath/scenario/sweep.hpp"
#include "pstbath/weisskopf/decay_rates.hpp"
#include "pstbath/weisskopf/heisenberg.hpp"
#include "pstbath/weisskopf/solver.hpp"
