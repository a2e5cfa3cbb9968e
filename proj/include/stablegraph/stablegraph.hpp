// Copyright 2026 The stablegraph Authors
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

#include "stablegraph/errors.hpp"
#include "stablegraph/generators.hpp"
#include "stablegraph/index.hpp"
#include "stablegraph/isomorphism.hpp"
#include "stablegraph/matching.hpp"
#include "stablegraph/serialization.hpp"
#include "stablegraph/shortest_paths.hpp"
#include "stablegraph/stable_graph.hpp"
#include "stablegraph/traversal.hpp"
