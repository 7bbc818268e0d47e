#include "pfb/homology.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "pfb/bigint.hpp"
#include "pfb/errors.hpp"

namespace pfb {

Field parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return Field::Rational;
  if (name == "gf2" || name == "GF2") return Field::GF2;
  throw InvalidFormat("field must be q or gf2");
}

std::string to_string(Field f) { return f == Field::Rational ? "q" : "gf2"; }

std::uint64_t BettiVector::operator[](int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= b.size()) return 0;
  return b[static_cast<std::size_t>(k)];
}

std::uint64_t BettiVector::total() const { return std::accumulate(b.begin(), b.end(), std::uint64_t{0}); }

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const auto v = static_cast<std::int64_t>(b[k]);
    chi += (k % 2 == 0) ? v : -v;
  }
  return chi;
}

void to_json(nlohmann::json& j, const BettiVector& b) { j = b.b; }

BettiVector ChainComplexRanks::betti() const {
  BettiVector out;
  out.b.resize(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::uint64_t next = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    out.b[k] = dims[k] - ranks[k] - next;
  }
  return out;
}

// Rank -------------------------------------------------------------------------

namespace {

std::uint64_t rank_gf2(const SparseMatrix& columns) {
  std::map<std::size_t, std::vector<std::size_t>> pivots;  // low row -> reduced column
  std::uint64_t r = 0;
  for (const auto& col : columns) {
    std::map<std::size_t, std::int64_t> merged;  // repeated rows come from simplicial-set faces
    for (const auto& [row, coef] : col) merged[row] += coef;
    std::vector<std::size_t> c;
    for (const auto& [row, coef] : merged)
      if (coef % 2 != 0) c.push_back(row);
    while (!c.empty()) {
      auto it = pivots.find(c.back());
      if (it == pivots.end()) break;
      std::vector<std::size_t> sum;
      std::set_symmetric_difference(c.begin(), c.end(), it->second.begin(), it->second.end(),
                                    std::back_inserter(sum));
      c = std::move(sum);
    }
    if (!c.empty()) {
      pivots.emplace(c.back(), std::move(c));
      ++r;
    }
  }
  return r;
}

using BigColumn = std::vector<std::pair<std::size_t, Natural>>;

// Returns a*x - b*y, divided by the content of the result.
BigColumn combine(const BigColumn& x, const Natural& a, const BigColumn& y, const Natural& b) {
  BigColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      Natural v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  Natural g = 0;
  for (const auto& e : out) {
    g = boost::multiprecision::gcd(g, e.second);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& e : out) e.second /= g;
  return out;
}

std::uint64_t rank_q(const SparseMatrix& columns) {
  std::map<std::size_t, BigColumn> pivots;
  std::uint64_t r = 0;
  for (const auto& col : columns) {
    std::map<std::size_t, std::int64_t> merged;
    for (const auto& [row, coef] : col) merged[row] += coef;
    BigColumn c;
    for (const auto& [row, coef] : merged)
      if (coef != 0) c.emplace_back(row, Natural(coef));
    while (!c.empty()) {
      auto it = pivots.find(c.back().first);
      if (it == pivots.end()) break;
      const Natural& pc = it->second.back().second;
      const Natural& cc = c.back().second;
      const Natural g = boost::multiprecision::gcd(pc, cc);
      c = combine(c, pc / g, it->second, cc / g);
    }
    if (!c.empty()) {
      const std::size_t low = c.back().first;
      pivots.emplace(low, std::move(c));
      ++r;
    }
  }
  return r;
}

// Rank every matrix, in parallel when the work is large enough to matter.
std::vector<std::uint64_t> ranks_of(const std::vector<SparseMatrix>& mats, Field field) {
  std::size_t work = 0;
  for (const auto& m : mats) work += m.size();
  std::vector<std::uint64_t> out(mats.size(), 0);
  if (work < 4096 || mats.size() < 2) {
    for (std::size_t k = 0; k < mats.size(); ++k) out[k] = rank(mats[k], field);
    return out;
  }
  std::vector<std::future<std::uint64_t>> jobs;
  for (const auto& m : mats)
    jobs.push_back(std::async(std::launch::async, [&m, field] { return rank(m, field); }));
  for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k].get();
  return out;
}

}  // namespace

std::uint64_t rank(const SparseMatrix& columns, Field field) {
  return field == Field::GF2 ? rank_gf2(columns) : rank_q(columns);
}

// Complexes --------------------------------------------------------------------

std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& K) {
  std::vector<SparseMatrix> mats;
  for (int k = 1; k <= K.dimension(); ++k) {
    SparseMatrix d;
    d.reserve(K.count(k));
    for (const auto& s : K.simplices(k)) {
      SparseColumn col;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != i) face.push_back(s[t]);
        col.emplace_back(*K.index_of(face), i % 2 == 0 ? 1 : -1);
      }
      d.push_back(std::move(col));
    }
    mats.push_back(std::move(d));
  }
  return mats;
}

ChainComplexRanks chain_ranks(const SimplicialComplex& K, Field field) {
  ChainComplexRanks out;
  for (int k = 0; k <= K.dimension(); ++k) out.dims.push_back(K.count(k));
  out.ranks.push_back(0);
  for (auto r : ranks_of(boundary_matrices(K), field)) out.ranks.push_back(r);
  out.ranks.resize(out.dims.size());
  return out;
}

BettiVector betti(const SimplicialComplex& K, Field field) { return chain_ranks(K, field).betti(); }

// Simplicial sets ------------------------------------------------------------------

ChainComplexRanks chain_ranks(const SimplicialSet& S, Field field) {
  std::vector<SparseMatrix> mats;
  for (std::size_t k = 0; k < S.faces.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : S.count(k - 1);
    SparseMatrix d;
    for (std::size_t j = 0; j < S.faces[k].size(); ++j) {
      const auto& fl = S.faces[k][j];
      const std::size_t expected = k == 0 ? 0 : k + 1;
      if (fl.size() != expected)
        throw InconsistentFaces("simplex " + std::to_string(j) + " in degree " +
                                std::to_string(k) + " has " + std::to_string(fl.size()) +
                                " faces, expected " + std::to_string(expected));
      SparseColumn col;
      for (std::size_t i = 0; i < fl.size(); ++i) {
        if (fl[i] == SimplicialSet::kDegenerate) continue;
        if (fl[i] >= below)
          throw InconsistentFaces("face index out of range in degree " + std::to_string(k));
        col.emplace_back(fl[i], i % 2 == 0 ? 1 : -1);
      }
      if (k > 0) d.push_back(std::move(col));
    }
    if (k > 0) mats.push_back(std::move(d));
  }

  // d_{k-1} d_k = 0, checked over the integers.
  for (std::size_t k = 1; k < mats.size(); ++k) {
    for (std::size_t j = 0; j < mats[k].size(); ++j) {
      std::map<std::size_t, std::int64_t> acc;
      for (const auto& [row, coef] : mats[k][j])
        for (const auto& [row2, coef2] : mats[k - 1][row]) acc[row2] += coef * coef2;
      for (const auto& [row, v] : acc)
        if (v != 0)
          throw InconsistentFaces("boundary does not square to zero on simplex " +
                                  std::to_string(j) + " of degree " + std::to_string(k + 1));
    }
  }

  ChainComplexRanks out;
  for (std::size_t k = 0; k < S.faces.size(); ++k) out.dims.push_back(S.count(k));
  out.ranks.push_back(0);
  for (auto r : ranks_of(mats, field)) out.ranks.push_back(r);
  out.ranks.resize(out.dims.size());
  return out;
}

BettiVector betti_simplicial_set(const SimplicialSet& S, Field field) {
  return chain_ranks(S, field).betti();
}

SimplicialSet to_simplicial_set(const SimplicialComplex& K) {
  SimplicialSet S;
  for (int k = 0; k <= K.dimension(); ++k) {
    std::vector<std::vector<std::size_t>> level;
    for (const auto& s : K.simplices(k)) {
      std::vector<std::size_t> fl;
      if (k > 0) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face(s);
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          fl.push_back(*K.index_of(face));
        }
      }
      level.push_back(std::move(fl));
    }
    S.faces.push_back(std::move(level));
  }
  return S;
}

// Inequality checks -------------------------------------------------------------

void to_json(nlohmann::json& j, const InequalityReport& r) {
  j = nlohmann::json{{"ok", r.ok}, {"violations", r.violations}, {"detail", r.detail}};
}

namespace {

int top_degree(std::span<const BettiVector> vs) {
  int top = 0;
  for (const auto& v : vs) top = std::max(top, static_cast<int>(v.b.size()));
  return top;
}

}  // namespace

InequalityReport mayer_vietoris_check(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                      Field field) {
  const BettiVector b1 = betti(K1, field), b2 = betti(K2, field);
  const BettiVector bu = betti(unite(K1, K2), field), bi = betti(intersect(K1, K2), field);
  InequalityReport rep;
  rep.detail = {{"K1", b1}, {"K2", b2}, {"union", bu}, {"intersection", bi}};
  const BettiVector all[] = {b1, b2, bu, bi};
  const int top = top_degree(all) + 1;
  for (int i = 0; i <= top; ++i) {
    if (b1[i] + b2[i] > bu[i] + bi[i]) {
      rep.ok = false;
      rep.violations.push_back("MV1 fails in degree " + std::to_string(i));
    }
    if (bu[i] > b1[i] + b2[i] + bi[i - 1]) {
      rep.ok = false;
      rep.violations.push_back("MV2 fails in degree " + std::to_string(i));
    }
  }
  return rep;
}

InequalityReport mayer_vietoris_check(std::span<const SimplicialComplex> parts, Field field) {
  const std::size_t m = parts.size();
  if (m < 1 || m > 4) throw InvalidFormat("1 <= m <= 4 parts");
  const unsigned subsets = 1u << m;
  std::vector<BettiVector> meet(subsets), join(subsets);
  std::vector<int> card(subsets, 0);
  for (unsigned J = 1; J < subsets; ++J) {
    SimplicialComplex u, n;
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (!(J & (1u << j))) continue;
      ++card[J];
      if (first) {
        u = n = parts[j];
        first = false;
      } else {
        u = unite(u, parts[j]);
        n = intersect(n, parts[j]);
      }
    }
    meet[J] = betti(n, field);
    join[J] = betti(u, field);
  }

  InequalityReport rep;
  const unsigned all = subsets - 1;
  std::vector<BettiVector> every(meet.begin() + 1, meet.end());
  every.insert(every.end(), join.begin() + 1, join.end());
  const int top = top_degree(every) + static_cast<int>(m);
  for (int i = 0; i <= top; ++i) {
    std::uint64_t rhs1 = 0, rhs2 = 0;
    for (unsigned J = 1; J < subsets; ++J) {
      rhs1 += meet[J][i - card[J] + 1];
      rhs2 += join[J][i + card[J] - 1];
    }
    if (join[all][i] > rhs1) {
      rep.ok = false;
      rep.violations.push_back("generalised MV (union) fails in degree " + std::to_string(i));
    }
    if (meet[all][i] > rhs2) {
      rep.ok = false;
      rep.violations.push_back("generalised MV (intersection) fails in degree " +
                               std::to_string(i));
    }
  }
  nlohmann::json unions = nlohmann::json::object(), inters = nlohmann::json::object();
  for (unsigned J = 1; J < subsets; ++J) {
    unions[std::to_string(J)] = join[J];
    inters[std::to_string(J)] = meet[J];
  }
  rep.detail = {{"m", m}, {"union_betti", unions}, {"intersection_betti", inters}};
  return rep;
}

void to_json(nlohmann::json& j, const DualityReport& r) {
  const char* status = r.status == DualityStatus::Holds      ? "holds"
                       : r.status == DualityStatus::Mismatch ? "mismatch"
                                                             : "inconclusive";
  j = nlohmann::json{{"status", status},
                     {"complement_betti", r.complement_betti},
                     {"dual_betti", r.dual_betti}};
  if (!r.note.empty()) j["note"] = r.note;
}

DualityReport alexander_cube_check(const TriangulatedCube& cube, const SimplicialComplex& X,
                                   Field field) {
  if (!X.is_subcomplex_of(cube.complex))
    throw InvalidComplex("X is not a subcomplex of the triangulated cube");
  std::vector<Vertex> outside;
  for (Vertex v : cube.complex.vertices())
    if (!X.has_vertex(v)) outside.push_back(v);
  const BettiVector comp = betti(full_subcomplex(cube.complex, outside), field);
  const BettiVector closed = betti(unite(X, cube.boundary), field);

  DualityReport rep;
  const int n = static_cast<int>(cube.n);
  for (int q = 0; q < n; ++q) {
    rep.complement_betti.push_back(comp[q]);
    const int deg = n - q - 1;
    std::uint64_t dual = closed[deg];
    if (deg == 0) dual -= 1;  // reduced; X u dI^n is never empty
    rep.dual_betti.push_back(dual);
  }
  const bool equal = rep.complement_betti == rep.dual_betti;
  if (!is_full_subcomplex(X, cube.complex)) {
    rep.status = DualityStatus::Inconclusive;
    rep.note = "X is not a full subcomplex; the complement model is not a deformation retract";
  } else {
    rep.status = equal ? DualityStatus::Holds : DualityStatus::Mismatch;
  }
  return rep;
}

}  // namespace pfb
