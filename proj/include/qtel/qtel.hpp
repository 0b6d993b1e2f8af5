// Copyright 2026 The qtel authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "bell.hpp"          // IWYU pragma: export
#include "channel.hpp"       // IWYU pragma: export
#include "common.hpp"        // IWYU pragma: export
#include "density_matrix.hpp"  // IWYU pragma: export
#include "gates.hpp"         // IWYU pragma: export
#include "linalg.hpp"        // IWYU pragma: export
#include "measurement.hpp"   // IWYU pragma: export
#include "protocol.hpp"      // IWYU pragma: export
#include "random.hpp"        // IWYU pragma: export
#include "report.hpp"        // IWYU pragma: export
#include "schmidt.hpp"       // IWYU pragma: export
#include "state_vector.hpp"  // IWYU pragma: export
