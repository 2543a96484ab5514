// Copyright 2026 The Authors.
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

#include "pgfree/analysis.hpp"
#include "pgfree/constructions.hpp"
#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/io.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"
#include "pgfree/sweep.hpp"
#include "pgfree/version.hpp"
#include "pgfree/walsh.hpp"
