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

#include "symprop/snark.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symprop/errors.h"

namespace symprop {
namespace {

std::pair<int, int> Key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

Graph FlowerSnarkGraph(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("flower snark needs odd n >= 3, got " +
                                std::to_string(n));
  }
  auto a = [n](int i) { return i % n; };
  auto b = [n](int i) { return n + i % n; };
  auto c = [n](int i) { return 2 * n + i % n; };
  auto d = [n](int i) { return 3 * n + i % n; };
  Graph g;
  g.num_vertices = 4 * n;
  for (const char* prefix : {"a", "b", "c", "d"}) {
    for (int i = 1; i <= n; ++i) {
      g.vertex_names.push_back(prefix + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    g.edges.push_back({a(i), b(i)});
    g.edges.push_back({a(i), c(i)});
    g.edges.push_back({a(i), d(i)});
  }
  for (int i = 0; i < n; ++i) g.edges.push_back({b(i), b(i + 1)});
  // Outer cycle c_1 .. c_n d_1 .. d_n.
  for (int i = 0; i + 1 < n; ++i) {
    g.edges.push_back({c(i), c(i + 1)});
    g.edges.push_back({d(i), d(i + 1)});
  }
  g.edges.push_back({c(n - 1), d(0)});
  g.edges.push_back({d(n - 1), c(0)});
  return g;
}

std::vector<Permutation> FlowerSnarkAutomorphisms(int n) {
  FlowerSnarkGraph(n);
  std::vector<int> rotation(4 * n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    rotation[n + i] = n + (i + 1) % n;
  }
  // c_1 .. c_n d_1 .. d_n is a single cycle.
  for (int i = 0; i < 2 * n; ++i) rotation[2 * n + i] = 2 * n + (i + 1) % (2 * n);

  std::vector<int> reflection(4 * n);
  for (int v = 0; v < 4 * n; ++v) reflection[v] = v;
  reflection[2 * n] = 3 * n;
  reflection[3 * n] = 2 * n;
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    for (int block = 0; block < 4; ++block) {
      std::swap(reflection[block * n + i], reflection[block * n + n - i]);
    }
  }
  return {Permutation(std::move(rotation)), Permutation(std::move(reflection))};
}

Permutation InducedEdgePermutation(const Graph& graph,
                                   const Permutation& vertex_perm) {
  if (vertex_perm.size() != graph.num_vertices) {
    throw DimensionError("vertex permutation size differs from the graph");
  }
  std::map<std::pair<int, int>, int> index;
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    index[Key(graph.edges[e].first, graph.edges[e].second)] = e;
  }
  std::vector<int> image(graph.edges.size());
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    const auto [u, v] = graph.edges[e];
    const auto it = index.find(Key(vertex_perm(u), vertex_perm(v)));
    if (it == index.end()) {
      throw ValidationError("vertex permutation is not an automorphism");
    }
    image[e] = it->second;
  }
  return Permutation(std::move(image));
}

BinaryProgram EdgeColoringProgram(const Graph& graph,
                                  const std::vector<Permutation>& automorphisms,
                                  int colors) {
  if (colors < 2) throw std::invalid_argument("need at least two colors");
  const int m = static_cast<int>(graph.edges.size());
  auto var = [colors](int e, int k) { return colors * e + k; };

  BinaryProgram bp;
  bp.n = m * colors;
  bp.objective.assign(bp.n, 0.0);
  for (int e = 0; e < m; ++e) {
    const std::string edge = graph.vertex_names[graph.edges[e].first] +
                             graph.vertex_names[graph.edges[e].second];
    for (int k = 0; k < colors; ++k) {
      bp.variable_names.push_back("x_" + edge + "_" + std::to_string(k + 1));
    }
  }

  std::vector<std::vector<int>> incident(graph.num_vertices);
  for (int e = 0; e < m; ++e) {
    incident[graph.edges[e].first].push_back(e);
    incident[graph.edges[e].second].push_back(e);
  }
  for (int v = 0; v < graph.num_vertices; ++v) {
    const auto& edges = incident[v];
    for (size_t p = 0; p < edges.size(); ++p) {
      for (size_t q = p + 1; q < edges.size(); ++q) {
        for (int k = 0; k < colors; ++k) {
          bp.rows.push_back(MakeRow(
              {{var(edges[p], k), 1.0}, {var(edges[q], k), 1.0}},
              RowSense::kLessEqual, 1.0));
        }
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    std::vector<Term> terms;
    for (int k = 0; k < colors; ++k) terms.push_back({var(e, k), 1.0});
    bp.rows.push_back(MakeRow(std::move(terms), RowSense::kEqual, 1.0));
  }

  for (const Permutation& sigma : automorphisms) {
    const Permutation edge_perm = InducedEdgePermutation(graph, sigma);
    std::vector<int> image(bp.n);
    for (int e = 0; e < m; ++e) {
      for (int k = 0; k < colors; ++k) image[var(e, k)] = var(edge_perm(e), k);
    }
    bp.generators.emplace_back(std::move(image));
  }
  std::vector<int> rotate(bp.n);
  std::vector<int> swap(bp.n);
  for (int e = 0; e < m; ++e) {
    for (int k = 0; k < colors; ++k) {
      rotate[var(e, k)] = var(e, (k + 1) % colors);
      swap[var(e, k)] = var(e, k < 2 ? 1 - k : k);
    }
  }
  bp.generators.emplace_back(std::move(rotate));
  bp.generators.emplace_back(std::move(swap));
  return bp;
}

BinaryProgram GenerateSnark(int n) {
  const Graph g = FlowerSnarkGraph(n);
  BinaryProgram bp = EdgeColoringProgram(g, FlowerSnarkAutomorphisms(n));
  bp.name = "J" + std::to_string(n);
  return bp;
}

}  // namespace symprop
