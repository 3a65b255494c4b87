// Copyright 2026 The pauliorder Authors
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

#include "pauliorder/coloring.hpp"
#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"
#include "pauliorder/harness.hpp"
#include "pauliorder/json_io.hpp"
#include "pauliorder/metrics.hpp"
#include "pauliorder/optimize.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/pauli_io.hpp"
#include "pauliorder/qaoa.hpp"
#include "pauliorder/reorder.hpp"
#include "pauliorder/simulator.hpp"
#include "pauliorder/trotter.hpp"
