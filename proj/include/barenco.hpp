// Copyright 2026 The Barenco Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "barenco/atoms.hpp"
#include "barenco/config.hpp"
#include "barenco/design.hpp"
#include "barenco/dynamics.hpp"
#include "barenco/errors.hpp"
#include "barenco/numerics.hpp"
#include "barenco/parallel.hpp"
#include "barenco/protocols.hpp"
#include "barenco/report.hpp"
#include "barenco/sweeps.hpp"
#include "barenco/units.hpp"
