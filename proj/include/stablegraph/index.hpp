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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace stablegraph {

/// Underlying integer of node and edge indices. 64 bits wide so that graphs
/// past 2^32 elements never wrap.
using index_type = std::uint64_t;

template <class Tag>
struct StrongIndex {
  index_type value = 0;

  constexpr auto operator<=>(const StrongIndex&) const = default;
};

struct NodeTag;
struct EdgeTag;

/// Identifies a node slot. Stable for as long as the node is alive.
using NodeIndex = StrongIndex<NodeTag>;
/// Identifies an edge slot. Stable for as long as the edge is alive.
using EdgeIndex = StrongIndex<EdgeTag>;

inline std::ostream& operator<<(std::ostream& os, NodeIndex n) {
  return os << "N" << n.value;
}

inline std::ostream& operator<<(std::ostream& os, EdgeIndex e) {
  return os << "E" << e.value;
}

}  // namespace stablegraph

template <class Tag>
struct std::hash<stablegraph::StrongIndex<Tag>> {
  std::size_t operator()(stablegraph::StrongIndex<Tag> i) const noexcept {
    return std::hash<stablegraph::index_type>{}(i.value);
  }
};
