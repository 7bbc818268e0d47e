#include "pfb/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t k = s.size();
  if (k > 30) throw InvalidComplex("simplex with more than 31 vertices");
  if (out.size() < k) out.resize(k);
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) face.push_back(s[i]);
    out[face.size() - 1].insert(std::move(face));
  }
}

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InvalidComplex("simplex with a repeated vertex");
  return s;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Vertex> vertices,
                                                    const std::vector<Simplex>& simplices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<std::set<Simplex>> faces;
  for (const auto& raw : simplices) {
    if (raw.empty()) continue;
    Simplex s = normalized(raw);
    for (Vertex v : s) {
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw InvalidComplex("simplex uses unlisted vertex " + std::to_string(v));
    }
    // Maximal simplices dominate the cost; skip ones already present.
    if (faces.size() >= s.size() && faces[s.size() - 1].count(s)) continue;
    add_faces(s, faces);
  }
  for (Vertex v : vertices) {
    if (faces.empty()) faces.resize(1);
    faces[0].insert(Simplex{v});
  }

  SimplicialComplex K;
  K.vertices_ = std::move(vertices);
  K.by_dim_.reserve(faces.size());
  for (auto& level : faces) K.by_dim_.emplace_back(level.begin(), level.end());
  return K;
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::vector<Vertex> vertices;
  for (const auto& s : simplices) vertices.insert(vertices.end(), s.begin(), s.end());
  return from_simplices(std::move(vertices), simplices);
}

std::span<const Simplex> SimplicialComplex::simplices(int k) const {
  if (k < 0 || k > dimension()) return {};
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& level = by_dim_[s.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    const auto c = static_cast<std::int64_t>(by_dim_[k].size());
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      if (!other.contains(s)) return false;
  return true;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    for (const auto& s : by_dim_[k]) {
      bool maximal = true;
      if (k + 1 < by_dim_.size()) {
        for (const auto& t : by_dim_[k + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Vertex> vertices(a.vertices());
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Simplex> all;
  for (const auto* K : {&a, &b})
    for (int k = K->dimension(); k >= 0; --k)
      for (const auto& s : K->simplices(k)) all.push_back(s);
  return SimplicialComplex::from_simplices(std::move(vertices), all);
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Vertex> vertices;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(vertices));
  std::vector<Simplex> common;
  for (int k = a.dimension(); k >= 0; --k)
    for (const auto& s : a.simplices(k))
      if (b.contains(s)) common.push_back(s);
  return SimplicialComplex::from_simplices(std::move(vertices), common);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::span<const Vertex> keep) {
  std::vector<Vertex> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  auto inside = [&](Vertex v) { return std::binary_search(kept.begin(), kept.end(), v); };
  std::vector<Vertex> vertices;
  for (Vertex v : K.vertices())
    if (inside(v)) vertices.push_back(v);
  std::vector<Simplex> chosen;
  for (int k = K.dimension(); k >= 1; --k)
    for (const auto& s : K.simplices(k))
      if (std::all_of(s.begin(), s.end(), inside)) chosen.push_back(s);
  return SimplicialComplex::from_simplices(std::move(vertices), chosen);
}

bool is_full_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& K) {
  return sub.is_subcomplex_of(K) && full_subcomplex(K, sub.vertices()) == sub;
}

void to_json(nlohmann::json& j, const SimplicialComplex& K) {
  j = nlohmann::json{{"vertices", K.vertices()}, {"simplices", K.maximal_simplices()}};
}

void from_json(const nlohmann::json& j, SimplicialComplex& K) {
  try {
    if (!j.is_object() || !j.contains("simplices"))
      throw InvalidComplex("complex must be an object with a \"simplices\" array");
    auto simplices = j.at("simplices").get<std::vector<Simplex>>();
    if (j.contains("vertices")) {
      K = SimplicialComplex::from_simplices(j.at("vertices").get<std::vector<Vertex>>(), simplices);
    } else {
      K = SimplicialComplex::from_simplices(simplices);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidComplex(std::string("malformed complex: ") + e.what());
  }
}

// Triangulated cube -------------------------------------------------------------

Vertex TriangulatedCube::vertex_of(std::span<const unsigned> doubled) const {
  if (doubled.size() != n) throw InvalidComplex("face coordinate count differs from n");
  Vertex id = 0;
  for (unsigned c : doubled) {
    if (c > 2 * m) throw InvalidComplex("face coordinate outside 0..2m");
    id = id * (2 * m + 1) + c;
  }
  return id;
}

std::vector<unsigned> TriangulatedCube::face_of(Vertex v) const {
  std::vector<unsigned> c(n);
  for (unsigned i = n; i-- > 0;) {
    c[i] = static_cast<unsigned>(v % (2 * m + 1));
    v /= (2 * m + 1);
  }
  return c;
}

std::vector<Vertex> TriangulatedCube::closed_face(std::span<const unsigned> doubled) const {
  std::vector<std::vector<unsigned>> choices;
  for (unsigned c : doubled) {
    if (c % 2 == 1)
      choices.push_back({c - 1, c, c + 1});
    else
      choices.push_back({c});
  }
  std::vector<Vertex> out;
  std::vector<unsigned> cur(n);
  auto rec = [&](auto&& self, unsigned i) -> void {
    if (i == n) {
      out.push_back(vertex_of(cur));
      return;
    }
    for (unsigned c : choices[i]) {
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

SimplicialComplex TriangulatedCube::cubical_subcomplex(
    const std::vector<std::vector<unsigned>>& faces) const {
  std::vector<Vertex> keep;
  for (const auto& f : faces) {
    auto closed = closed_face(f);
    keep.insert(keep.end(), closed.begin(), closed.end());
  }
  return full_subcomplex(complex, keep);
}

TriangulatedCube triangulated_cube(unsigned n, unsigned m) {
  if (n < 1 || m < 1) throw InvalidComplex("cube needs n >= 1 and m >= 1");
  TriangulatedCube cube;
  cube.n = n;
  cube.m = m;

  // Maximal chains run from a top cube (all coordinates odd) down to a grid
  // point, closing one coordinate per step.
  std::vector<Simplex> maximal;
  std::vector<unsigned> face(n);
  Simplex chain;
  auto descend = [&](auto&& self) -> void {
    chain.push_back(cube.vertex_of(face));
    bool closed = true;
    for (unsigned i = 0; i < n; ++i) {
      if (face[i] % 2 == 0) continue;
      closed = false;
      for (int step : {-1, 1}) {
        face[i] = static_cast<unsigned>(static_cast<int>(face[i]) + step);
        self(self);
        face[i] = static_cast<unsigned>(static_cast<int>(face[i]) - step);
      }
    }
    if (closed) maximal.push_back(chain);
    chain.pop_back();
  };
  std::vector<unsigned> top(n, 1);
  while (true) {
    face = top;
    descend(descend);
    unsigned i = 0;
    while (i < n && top[i] == 2 * m - 1) top[i++] = 1;
    if (i == n) break;
    top[i] += 2;
  }
  cube.complex = SimplicialComplex::from_simplices(maximal);

  std::vector<Vertex> on_boundary;
  for (Vertex v : cube.complex.vertices()) {
    auto c = cube.face_of(v);
    if (std::any_of(c.begin(), c.end(), [&](unsigned x) { return x == 0 || x == 2 * m; }))
      on_boundary.push_back(v);
  }
  cube.boundary = full_subcomplex(cube.complex, on_boundary);
  return cube;
}

}  // namespace pfb
