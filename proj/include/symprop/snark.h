// Copyright 2026 The Symprop Authors
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

// Flower snark graphs J_n and their 3-edge-coloring programs.
//
// Vertices a_i, b_i, c_i, d_i (i = 1..n) get ids i-1, n+i-1, 2n+i-1 and
// 3n+i-1. Edges are numbered: spokes a_ib_i, a_ic_i, a_id_i in i order,
// then the b-cycle edges b_ib_{i+1}, then the outer edges c_ic_{i+1},
// d_id_{i+1} for i < n followed by c_nd_1 and d_nc_1. Variable (e, k) has
// index 3e + k.

#ifndef SYMPROP_SNARK_H_
#define SYMPROP_SNARK_H_

#include <string>
#include <utility>
#include <vector>

#include "symprop/binary_program.h"
#include "symprop/permutation.h"

namespace symprop {

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vertex_names;
};

// Throws std::invalid_argument unless n is odd and >= 3.
Graph FlowerSnarkGraph(int n);

// The rotation of order 2n and the reflection, as vertex permutations.
std::vector<Permutation> FlowerSnarkAutomorphisms(int n);

// Edge permutation induced by a vertex automorphism. Throws
// ValidationError if some edge is not mapped onto an edge.
Permutation InducedEdgePermutation(const Graph& graph,
                                   const Permutation& vertex_perm);

// Packing and partition rows over colors, zero objective. Generators are
// the lifted automorphisms, then the color rotation and one color swap.
BinaryProgram EdgeColoringProgram(const Graph& graph,
                                  const std::vector<Permutation>& automorphisms,
                                  int colors = 3);

BinaryProgram GenerateSnark(int n);

}  // namespace symprop

#endif  // SYMPROP_SNARK_H_
