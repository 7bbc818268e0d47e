#pragma once

// Small complexes and simplicial surjections used across the test suites.

#include <string>
#include <utility>
#include <vector>

#include "pfb/fibered.hpp"
#include "pfb/simplicial.hpp"

namespace pfb::corpus {

inline SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
}

inline SimplicialComplex filled_triangle() { return SimplicialComplex::from_simplices({{0, 1, 2}}); }

inline SimplicialComplex sphere2() {
  return SimplicialComplex::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SimplicialComplex polygon(int k, Vertex offset = 0) {
  std::vector<Simplex> edges;
  for (int i = 0; i < k; ++i) {
    Simplex e{offset + i, offset + (i + 1) % k};
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    edges.push_back(e);
  }
  return SimplicialComplex::from_simplices(edges);
}

/// Inner triangle a_i = i, outer triangle b_i = 3 + i.
inline SimplicialComplex annulus() {
  std::vector<Simplex> tri;
  for (Vertex i = 0; i < 3; ++i) {
    const Vertex j = (i + 1) % 3;
    tri.push_back({i, 3 + i, 3 + j});
    tri.push_back({i, j, 3 + j});
  }
  return SimplicialComplex::from_simplices(tri);
}

/// Triangulated torus on a 3 x 3 grid (vertex 3r + c).
inline SimplicialComplex torus() {
  std::vector<Simplex> tri;
  auto v = [](int r, int c) { return static_cast<Vertex>(3 * ((r + 3) % 3) + (c + 3) % 3); };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      tri.push_back({v(r, c), v(r + 1, c), v(r + 1, c + 1)});
      tri.push_back({v(r, c), v(r, c + 1), v(r + 1, c + 1)});
    }
  return SimplicialComplex::from_simplices(tri);
}

inline SimplicialMap make_map(SimplicialComplex source, SimplicialComplex target,
                              std::vector<std::pair<Vertex, Vertex>> pairs) {
  SimplicialMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  for (auto [v, w] : pairs) f.vertex_map[v] = w;
  f.validate();
  return f;
}

inline SimplicialMap identity(const SimplicialComplex& K) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v : K.vertices()) pairs.emplace_back(v, v);
  return make_map(K, K, pairs);
}

/// Two closed arcs over the hexagon y0..y5: a0..a3 over y0..y3 and
/// b3, b4, b5, b0 over y3, y4, y5, y0. They overlap over y0 and y3.
inline SimplicialMap arcs_over_circle() {
  const auto source = SimplicialComplex::from_simplices(
      {{0, 1}, {1, 2}, {2, 3}, {13, 14}, {14, 15}, {10, 15}});
  return make_map(source, polygon(6),
                  {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {13, 3}, {14, 4}, {15, 5}, {10, 0}});
}

/// The 12-gon wrapped twice around the hexagon.
inline SimplicialMap double_cover() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 12; ++i) pairs.emplace_back(i, i % 6);
  return make_map(polygon(12), polygon(6), pairs);
}

struct NamedMap {
  std::string name;
  SimplicialMap map;
};

/// Surjective simplicial maps for the descent inequality.
inline std::vector<NamedMap> surjections() {
  std::vector<NamedMap> out;
  out.push_back({"identity on hollow triangle", identity(hollow_triangle())});
  out.push_back({"identity on sphere", identity(sphere2())});
  out.push_back({"segment collapsed to a point",
                 make_map(SimplicialComplex::from_simplices({{0, 1}}),
                          SimplicialComplex::from_simplices({{0}}), {{0, 0}, {1, 0}})});
  out.push_back({"two points onto one",
                 make_map(SimplicialComplex::from_simplices({0, 1}, {}),
                          SimplicialComplex::from_simplices({{0}}), {{0, 0}, {1, 0}})});
  out.push_back({"circle collapsed to a point",
                 make_map(hollow_triangle(), SimplicialComplex::from_simplices({{0}}),
                          {{0, 0}, {1, 0}, {2, 0}})});
  out.push_back({"double cover of the hexagon", double_cover()});
  out.push_back({"arcs over circle", arcs_over_circle()});
  out.push_back({"folded path",
                 make_map(SimplicialComplex::from_simplices({{0, 1}, {1, 2}}),
                          SimplicialComplex::from_simplices({{0, 1}}), {{0, 0}, {1, 1}, {2, 0}})});
  out.push_back({"triangle folded onto an edge",
                 make_map(filled_triangle(), SimplicialComplex::from_simplices({{0, 1}}),
                          {{0, 0}, {1, 1}, {2, 1}})});
  out.push_back({"annulus onto its core circle",
                 make_map(annulus(), hollow_triangle(),
                          {{0, 0}, {1, 1}, {2, 2}, {3, 0}, {4, 1}, {5, 2}})});
  out.push_back({"sphere onto a filled triangle",
                 make_map(sphere2(), filled_triangle(), {{0, 0}, {1, 1}, {2, 2}, {3, 0}})});
  {
    // Strip [0,2] x [0,1] projected to the x axis; vertex 2x + y.
    const auto strip = SimplicialComplex::from_simplices({{0, 2, 3}, {0, 1, 3}, {2, 4, 5}, {2, 3, 5}});
    out.push_back({"strip projected to a segment",
                   make_map(strip, SimplicialComplex::from_simplices({{0, 1}, {1, 2}}),
                            {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}})});
  }
  {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < 9; ++v) pairs.emplace_back(v, v % 3);
    out.push_back({"torus onto a circle", make_map(torus(), hollow_triangle(), pairs)});
  }
  return out;
}

}  // namespace pfb::corpus
