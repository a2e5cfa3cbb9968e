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

#include <cstddef>
#include <stdexcept>
#include <string>

#include "stablegraph/index.hpp"

namespace stablegraph {

/// Base class of every error thrown by the library.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A node or edge index that is out of range or refers to a vacant slot.
class InvalidIndexError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// An algorithm was handed the wrong kind of graph (e.g. undirected where a
/// DAG is required).
class WrongKindError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Two graphs that must agree on directedness do not.
class DirectednessMismatchError : public GraphError {
 public:
  using GraphError::GraphError;
};

class CycleError : public GraphError {
 public:
  explicit CycleError(NodeIndex witness)
      : GraphError("graph contains a cycle through node " +
                   std::to_string(witness.value)),
        witness_(witness) {}

  /// A node that lies on a directed cycle.
  NodeIndex witness() const noexcept { return witness_; }

 private:
  NodeIndex witness_;
};

class NegativeWeightError : public GraphError {
 public:
  NegativeWeightError(EdgeIndex edge, double weight)
      : GraphError("edge " + std::to_string(edge.value) +
                   " has negative weight " + std::to_string(weight)),
        edge_(edge) {}

  EdgeIndex edge() const noexcept { return edge_; }

 private:
  EdgeIndex edge_;
};

class NonFiniteWeightError : public GraphError {
 public:
  explicit NonFiniteWeightError(EdgeIndex edge)
      : GraphError("edge " + std::to_string(edge.value) +
                   " has a non-finite weight"),
        edge_(edge) {}

  EdgeIndex edge() const noexcept { return edge_; }

 private:
  EdgeIndex edge_;
};

/// Generator or algorithm parameter outside its documented domain.
class ParameterError : public GraphError {
 public:
  using GraphError::GraphError;
};

class SizeLimitError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Malformed graph document.
class SchemaError : public GraphError {
 public:
  using GraphError::GraphError;
};

class UnrepresentablePayloadError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number of the offending input line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stablegraph
