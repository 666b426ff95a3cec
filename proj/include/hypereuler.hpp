// Copyright 2026 The hypereuler Authors
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

// Library headers without the CLI and its third-party dependencies.

#include "hypereuler/certify.hpp"
#include "hypereuler/derived.hpp"
#include "hypereuler/euler.hpp"
#include "hypereuler/generate.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"
#include "hypereuler/io.hpp"
#include "hypereuler/matching.hpp"
#include "hypereuler/oracle.hpp"
#include "hypereuler/structure.hpp"
#include "hypereuler/trail.hpp"
