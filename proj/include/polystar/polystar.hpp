// Copyright 2026 The polystar Authors.
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

// Everything except the command-line front end.

#include "polystar/errors.hpp"
#include "polystar/linear.hpp"
#include "polystar/lyndon.hpp"
#include "polystar/polylog/discontinuity.hpp"
#include "polystar/polylog/lineg.hpp"
#include "polystar/polylog/numeric.hpp"
#include "polystar/polylog/reduce.hpp"
#include "polystar/polylog/symfun.hpp"
#include "polystar/projectors.hpp"
#include "polystar/rational.hpp"
#include "polystar/rewrite.hpp"
#include "polystar/shuffle.hpp"
#include "polystar/star_series.hpp"
#include "polystar/word.hpp"
