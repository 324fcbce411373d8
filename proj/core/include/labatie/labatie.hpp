// Copyright 2026 The Labatie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "labatie/bipoly.hpp"
#include "labatie/elimination.hpp"
#include "labatie/error.hpp"
#include "labatie/field.hpp"
#include "labatie/oracle.hpp"
#include "labatie/parser.hpp"
#include "labatie/random.hpp"
#include "labatie/solver.hpp"
#include "labatie/unipoly.hpp"
