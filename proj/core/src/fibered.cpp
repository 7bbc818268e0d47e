#include "pfb/fibered.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <boost/pending/disjoint_sets.hpp>

#include "json_util.hpp"
#include "pfb/errors.hpp"

namespace pfb {

namespace {

Simplex image(const SimplicialMap& f, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(f(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void SimplicialMap::validate() const {
  for (Vertex v : source.vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
      throw InvalidComplex("source vertex " + std::to_string(v) + " is not mapped");
    if (!target.has_vertex(it->second))
      throw InvalidComplex("vertex " + std::to_string(v) + " maps outside the target");
  }
  for (const auto& [v, w] : vertex_map)
    if (!source.has_vertex(v))
      throw InvalidComplex("vertex_map names unknown source vertex " + std::to_string(v));
  for (int k = 1; k <= source.dimension(); ++k)
    for (const auto& s : source.simplices(k))
      if (!target.contains(image(*this, s)))
        throw InvalidComplex("a source simplex does not map to a target simplex");
}

bool SimplicialMap::surjective() const {
  std::set<Simplex> hit;
  for (int k = 0; k <= source.dimension(); ++k)
    for (const auto& s : source.simplices(k)) hit.insert(image(*this, s));
  for (int k = 0; k <= target.dimension(); ++k)
    for (const auto& t : target.simplices(k))
      if (!hit.count(t)) return false;
  return true;
}

void to_json(nlohmann::json& j, const SimplicialMap& f) {
  nlohmann::json vm = nlohmann::json::object();
  for (const auto& [v, w] : f.vertex_map) vm[std::to_string(v)] = w;
  j = nlohmann::json{{"source", f.source}, {"target", f.target}, {"vertex_map", vm}};
}

void from_json(const nlohmann::json& j, SimplicialMap& f) {
  try {
    f.source = j.at("source").get<SimplicialComplex>();
    f.target = j.at("target").get<SimplicialComplex>();
    f.vertex_map.clear();
    const auto& vm = j.at("vertex_map");
    if (vm.is_object()) {
      for (const auto& [key, value] : vm.items()) {
        std::size_t used = 0;
        const Vertex v = std::stoll(key, &used);
        if (used != key.size()) throw InvalidComplex("vertex_map key '" + key + "' is not an id");
        f.vertex_map[v] = value.get<Vertex>();
      }
    } else {
      for (const auto& pair : vm) f.vertex_map[pair.at(0).get<Vertex>()] = pair.at(1).get<Vertex>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidComplex(std::string("malformed map: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidComplex(std::string("malformed map: ") + e.what());
  }
  f.validate();
}

// Fibered products -------------------------------------------------------------------

FiberedProduct fibered_product(const SimplicialMap& f, std::size_t p,
                               std::optional<std::size_t> max_dim) {
  f.validate();
  if (!f.surjective()) throw NotSurjective("map misses a simplex of the target");
  const std::size_t width = p + 1;

  // Rank source vertices by (f(v), v); fibres are contiguous rank blocks.
  std::vector<Vertex> order(f.source.vertices());
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return std::pair(f(a), a) < std::pair(f(b), b); });
  std::map<Vertex, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::map<Vertex, std::vector<Vertex>> fibre;
  for (Vertex v : order) fibre[f(v)].push_back(v);

  FiberedProduct W;
  W.p = p;
  std::map<Vertex, std::pair<std::size_t, std::size_t>> block;  // y -> [first, last) tuple ids
  for (const auto& [y, vs] : fibre) {
    const std::size_t first = W.tuples.size();
    std::vector<std::size_t> digit(width, 0);
    while (true) {
      std::vector<Vertex> t(width);
      for (std::size_t i = 0; i < width; ++i) t[i] = vs[digit[i]];
      W.tuples.push_back(std::move(t));
      std::size_t i = width;
      while (i > 0 && digit[i - 1] + 1 == vs.size()) digit[--i] = 0;
      if (i == 0) break;
      ++digit[i - 1];
    }
    block[y] = {first, W.tuples.size()};
  }

  auto is_edge_or_equal = [&](Vertex a, Vertex b) {
    return a == b || f.source.contains(a < b ? Simplex{a, b} : Simplex{b, a});
  };
  // Successors of each tuple in the componentwise order, restricted to
  // tuples that share a simplex with it in every coordinate.
  std::vector<std::vector<std::size_t>> succ(W.tuples.size());
  for (const auto& [y, range] : block) {
    std::vector<Vertex> ys{y};
    for (const auto& [y2, r2] : block)
      if (y2 > y && f.target.contains(Simplex{y, y2})) ys.push_back(y2);
    for (std::size_t a = range.first; a < range.second; ++a) {
      const auto& ta = W.tuples[a];
      for (Vertex y2 : ys) {
        const auto [lo, hi] = block[y2];
        for (std::size_t b = lo; b < hi; ++b) {
          if (b == a) continue;
          const auto& tb = W.tuples[b];
          bool ok = true;
          for (std::size_t i = 0; i < width && ok; ++i)
            ok = rank[ta[i]] <= rank[tb[i]] && is_edge_or_equal(ta[i], tb[i]);
          if (ok) succ[a].push_back(b);
        }
      }
    }
  }

  std::vector<Simplex> chains;
  const std::size_t limit = max_dim ? *max_dim + 1 : std::numeric_limits<std::size_t>::max();
  std::vector<Simplex> coords(width);  // per coordinate: sorted vertex set of the chain
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    chains.push_back(chain);
    if (chain.size() >= limit) return;
    for (std::size_t next : succ[last]) {
      const auto& t = W.tuples[next];
      bool ok = true;
      std::vector<Simplex> grown(coords);
      for (std::size_t i = 0; i < width && ok; ++i) {
        auto& c = grown[i];
        if (!std::binary_search(c.begin(), c.end(), t[i])) {
          c.insert(std::upper_bound(c.begin(), c.end(), t[i]), t[i]);
          ok = f.source.contains(c);
        }
      }
      if (!ok) continue;
      std::swap(coords, grown);
      chain.push_back(static_cast<Vertex>(next));
      self(self, next);
      chain.pop_back();
      std::swap(coords, grown);
    }
  };
  for (std::size_t t = 0; t < W.tuples.size(); ++t) {
    for (std::size_t i = 0; i < width; ++i) coords[i] = Simplex{W.tuples[t][i]};
    chain = {static_cast<Vertex>(t)};
    extend(extend, t);
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });

  std::vector<Vertex> ids(W.tuples.size());
  for (std::size_t t = 0; t < ids.size(); ++t) ids[t] = static_cast<Vertex>(t);
  W.complex = SimplicialComplex::from_simplices(std::move(ids), chains);
  return W;
}

void to_json(nlohmann::json& j, const SpectralReport& r) {
  j = nlohmann::json{{"ok", r.ok}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"terms", r.terms}};
}

SpectralReport verify_spectral_inequality(const SimplicialMap& f, std::size_t k_max, Field field) {
  SpectralReport rep;
  const BettiVector by = betti(f.target, field);
  rep.lhs.resize(k_max + 1);
  rep.rhs.assign(k_max + 1, 0);
  for (std::size_t k = 0; k <= k_max; ++k) rep.lhs[k] = by[static_cast<int>(k)];
  for (std::size_t p = 0; p <= k_max; ++p) {
    // b_q for q <= k_max - p needs simplices up to dimension q + 1.
    const FiberedProduct W = fibered_product(f, p, k_max - p + 1);
    const BettiVector bw = betti_simplicial_set(W.simplicial_set(), field);
    std::vector<std::uint64_t> row;
    for (std::size_t q = 0; q + p <= k_max; ++q) {
      row.push_back(bw[static_cast<int>(q)]);
      rep.rhs[p + q] += row.back();
    }
    rep.terms.push_back(std::move(row));
  }
  for (std::size_t k = 0; k <= k_max; ++k)
    if (rep.lhs[k] > rep.rhs[k]) rep.ok = false;
  return rep;
}

// Expanded diagonal ----------------------------------------------------------------------

void to_json(nlohmann::json& j, const DiagonalSample& s) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : s.points) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : pt) row.push_back(detail::rational_to_json(c));
    pts.push_back(std::move(row));
  }
  nlohmann::json adj = nlohmann::json::array();
  for (const auto& [a, b] : s.adjacency) adj.push_back({a, b});
  j = nlohmann::json{{"points", pts}, {"adjacency", adj}, {"p", s.p},
                     {"delta", detail::rational_to_json(s.delta)}};
}

void from_json(const nlohmann::json& j, DiagonalSample& s) {
  try {
    s.points.clear();
    for (const auto& pt : j.at("points")) {
      std::vector<Rational> row;
      for (const auto& c : pt) row.push_back(detail::rational_from_json(c));
      s.points.push_back(std::move(row));
    }
    s.adjacency.clear();
    if (j.contains("adjacency"))
      for (const auto& e : j.at("adjacency"))
        s.adjacency.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    s.p = j.value("p", std::size_t{0});
    s.delta = j.contains("delta") ? detail::rational_from_json(j.at("delta")) : Rational(0);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidFormat(std::string("malformed diagonal sample: ") + e.what());
  }
}

std::uint64_t expanded_diagonal_components(const DiagonalSample& sample) {
  const std::size_t N = sample.points.size();
  if (sample.delta < 0) throw InvalidFormat("delta >= 0");
  for (const auto& pt : sample.points)
    if (pt.size() != sample.points.front().size())
      throw InvalidFormat("all sample points have the same dimension");
  std::vector<std::vector<std::size_t>> adj(N);
  for (const auto& [a, b] : sample.adjacency) {
    if (a >= N || b >= N) throw InvalidFormat("adjacency index out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (N == 0) return 0;

  std::vector<std::vector<Rational>> dist2(N, std::vector<Rational>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      Rational d = 0;
      for (std::size_t c = 0; c < sample.points[a].size(); ++c) {
        const Rational diff = sample.points[a][c] - sample.points[b][c];
        d += diff * diff;
      }
      dist2[a][b] = dist2[b][a] = d;
    }

  // Tuples with rho <= delta; partial sums only grow, so prune early.
  const std::size_t width = sample.p + 1;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> tuple;
  auto grow = [&](auto&& self, const Rational& rho) -> void {
    if (tuple.size() == width) {
      index.emplace(tuple, index.size());
      return;
    }
    for (std::size_t x = 0; x < N; ++x) {
      Rational r = rho;
      for (std::size_t y : tuple) r += dist2[x][y];
      if (r > sample.delta) continue;
      tuple.push_back(x);
      self(self, r);
      tuple.pop_back();
    }
  };
  grow(grow, Rational(0));

  boost::disjoint_sets_with_storage<> sets(index.size());
  for (const auto& [t, id] : index) {
    // Neighbours: every coordinate stays or takes one adjacency step.
    std::vector<std::size_t> cur(t);
    auto visit = [&](auto&& self, std::size_t i) -> void {
      if (i == width) {
        if (cur == t) return;
        auto it = index.find(cur);
        if (it != index.end()) sets.union_set(id, it->second);
        return;
      }
      cur[i] = t[i];
      self(self, i + 1);
      for (std::size_t nb : adj[t[i]]) {
        cur[i] = nb;
        self(self, i + 1);
      }
      cur[i] = t[i];
    };
    visit(visit, 0);
  }
  std::vector<std::size_t> all(index.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return sets.count_sets(all.begin(), all.end());
}

}  // namespace pfb
