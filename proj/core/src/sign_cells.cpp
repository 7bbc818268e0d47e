#include "pfb/sign_cells.hpp"

#include <algorithm>
#include <thread>

#include <boost/pending/disjoint_sets.hpp>

#include "json_util.hpp"
#include "pfb/errors.hpp"
#include "pfb/formats.hpp"

namespace pfb {

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    unsigned td = 0;
    for (unsigned e : t.exponents) td += e;
    d = std::max(d, td);
  }
  return d;
}

Rational Polynomial::operator()(const std::vector<Rational>& x) const {
  Rational value = 0;
  for (const auto& t : terms) {
    Rational m = t.coefficient;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) m *= pow(x.at(i), t.exponents[i]);
    value += m;
  }
  return value;
}

void PolynomialSystem::validate() const {
  if (n < 1 || n > 3) throw InvalidFormat("1 <= n <= 3");
  if (box.size() != n) throw InvalidFormat("box has one interval per variable");
  for (const auto& [lo, hi] : box)
    if (!(lo < hi)) throw InvalidFormat("box sides satisfy lo < hi");
  for (const auto& p : polys)
    for (const auto& t : p.terms)
      if (t.exponents.size() != n) throw InvalidFormat("every exponent vector has n entries");
}

unsigned PolynomialSystem::max_degree() const {
  unsigned d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

void to_json(nlohmann::json& j, const PolynomialSystem& s) {
  nlohmann::json box = nlohmann::json::array();
  for (const auto& [lo, hi] : s.box) box.push_back({to_string(lo), to_string(hi)});
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : s.polys) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms) terms.push_back({t.exponents, to_string(t.coefficient)});
    polys.push_back(std::move(terms));
  }
  j = nlohmann::json{{"n", s.n}, {"box", box}, {"polys", polys}};
}

void from_json(const nlohmann::json& j, PolynomialSystem& s) {
  try {
    s.n = j.at("n").get<unsigned>();
    s.box.clear();
    for (const auto& side : j.at("box"))
      s.box.emplace_back(detail::rational_from_json(side.at(0)),
                         detail::rational_from_json(side.at(1)));
    s.polys.clear();
    for (const auto& pj : j.at("polys")) {
      Polynomial p;
      for (const auto& tj : pj)
        p.terms.push_back({tj.at(0).get<std::vector<unsigned>>(), detail::rational_from_json(tj.at(1))});
      s.polys.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidFormat(std::string("malformed polynomial system: ") + e.what());
  }
  s.validate();
}

void to_json(nlohmann::json& j, const SignCellReport& r) {
  j = nlohmann::json{{"resolution", r.resolution},
                     {"nodes", r.nodes},
                     {"realized", r.realized},
                     {"components_per_sign", r.components_per_sign},
                     {"total_components", count_components(r)}};
  if (!r.notes.empty()) j["notes"] = r.notes;
}

std::uint64_t count_components(const SignCellReport& report) {
  std::uint64_t total = 0;
  for (const auto& [sigma, c] : report.components_per_sign) total += c;
  return total;
}

namespace {

// p(lo + h k) as an integer polynomial in the grid indices k, scaled by a
// positive constant so signs are preserved.
struct GridPolynomial {
  std::vector<std::vector<unsigned>> exponents;
  std::vector<Natural> coefficients;
  std::vector<std::int64_t> small;  // same coefficients when all fit in int64
  bool all_small = true;
};

GridPolynomial to_grid(const Polynomial& p, const PolynomialSystem& sys, std::uint64_t R) {
  const unsigned n = sys.n;
  std::map<std::vector<unsigned>, Rational> acc;
  for (const auto& t : p.terms) {
    // Expand prod_i (lo_i + h_i k_i)^{e_i} binomially.
    std::map<std::vector<unsigned>, Rational> part{{std::vector<unsigned>(n, 0), t.coefficient}};
    for (unsigned i = 0; i < n; ++i) {
      const Rational lo = sys.box[i].first;
      const Rational h = (sys.box[i].second - sys.box[i].first) / R;
      const unsigned e = t.exponents[i];
      std::map<std::vector<unsigned>, Rational> next;
      for (const auto& [ex, c] : part) {
        for (unsigned a = 0; a <= e; ++a) {
          auto ex2 = ex;
          ex2[i] = a;
          next[ex2] += c * Rational(binomial(e, a)) * pow(h, a) * pow(lo, e - a);
        }
      }
      part = std::move(next);
    }
    for (auto& [ex, c] : part) acc[ex] += c;
  }
  Natural lcm = 1;
  for (const auto& [ex, c] : acc)
    if (c != 0) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  GridPolynomial g;
  for (const auto& [ex, c] : acc) {
    if (c == 0) continue;
    Natural v = boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c));
    g.exponents.push_back(ex);
    if (v > Natural(std::numeric_limits<std::int64_t>::max()) ||
        v < Natural(std::numeric_limits<std::int64_t>::min()))
      g.all_small = false;
    g.small.push_back(g.all_small ? v.convert_to<std::int64_t>() : 0);
    g.coefficients.push_back(std::move(v));
  }
  return g;
}

int sign_at(const GridPolynomial& g, const std::vector<std::uint64_t>& k) {
  if (g.all_small) {
    std::int64_t total = 0;
    bool overflow = false;
    for (std::size_t t = 0; t < g.exponents.size() && !overflow; ++t) {
      std::int64_t m = g.small[t];
      for (std::size_t i = 0; i < k.size() && !overflow; ++i)
        for (unsigned e = 0; e < g.exponents[t][i] && !overflow; ++e)
          overflow = __builtin_mul_overflow(m, static_cast<std::int64_t>(k[i]), &m);
      if (!overflow) overflow = __builtin_add_overflow(total, m, &total);
    }
    if (!overflow) return total > 0 ? 1 : (total < 0 ? -1 : 0);
  }
  Natural total = 0;
  for (std::size_t t = 0; t < g.exponents.size(); ++t) {
    Natural m = g.coefficients[t];
    for (std::size_t i = 0; i < k.size(); ++i) m *= pow(Natural(k[i]), g.exponents[t][i]);
    total += m;
  }
  return total > 0 ? 1 : (total < 0 ? -1 : 0);
}

char symbol(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

}  // namespace

SignCellReport enumerate_signs(const PolynomialSystem& sys, std::uint64_t resolution) {
  sys.validate();
  if (resolution < 2) throw InvalidFormat("resolution >= 2");
  const unsigned n = sys.n;
  const std::uint64_t side = resolution + 1;
  std::uint64_t nodes = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (nodes > kMaxGridNodes / side) throw InvalidFormat("grid nodes <= 10^7");
    nodes *= side;
  }
  const std::size_t s = sys.polys.size();

  std::vector<GridPolynomial> grid;
  for (const auto& p : sys.polys) grid.push_back(to_grid(p, sys, resolution));

  auto coords = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> k(n);
    for (unsigned i = 0; i < n; ++i) {
      k[i] = idx % side;
      idx /= side;
    }
    return k;
  };

  // Node sign vectors, evaluated in parallel over contiguous node ranges.
  std::vector<std::string> sigma(nodes, std::string(s, '+'));
  {
    const unsigned workers =
        nodes < 20000 ? 1u : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    auto work = [&](std::uint64_t from, std::uint64_t to) {
      for (std::uint64_t idx = from; idx < to; ++idx) {
        const auto k = coords(idx);
        for (std::size_t j = 0; j < s; ++j) sigma[idx][j] = symbol(sign_at(grid[j], k));
      }
    };
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (nodes + workers - 1) / workers;
    for (unsigned w = 1; w < workers; ++w)
      pool.emplace_back(work, std::min(nodes, w * chunk), std::min(nodes, (w + 1) * chunk));
    work(0, std::min(nodes, chunk));
    for (auto& t : pool) t.join();
  }

  std::uint64_t boxes = 1;
  for (unsigned i = 0; i < n; ++i) boxes *= resolution;

  // Elements: nodes [0, nodes) and boxes [nodes, nodes + boxes).
  boost::disjoint_sets_with_storage<> sets(nodes + boxes);
  std::vector<std::string> box_sigma(boxes);
  std::vector<std::uint64_t> stride(n, 1);
  for (unsigned i = 1; i < n; ++i) stride[i] = stride[i - 1] * side;

  auto is_open = [](const std::string& sg) { return sg.find('0') == std::string::npos; };

  for (std::uint64_t idx = 0; idx < nodes; ++idx) {
    if (!is_open(sigma[idx])) continue;
    const auto k = coords(idx);
    for (unsigned i = 0; i < n; ++i)
      if (k[i] + 1 < side && sigma[idx + stride[i]] == sigma[idx]) sets.union_set(idx, idx + stride[i]);
  }

  const unsigned corners = 1u << n;
  std::vector<std::uint64_t> corner_nodes(corners);
  for (std::uint64_t b = 0; b < boxes; ++b) {
    std::uint64_t base = 0, rest = b;
    for (unsigned i = 0; i < n; ++i) {
      base += (rest % resolution) * stride[i];
      rest /= resolution;
    }
    for (unsigned c = 0; c < corners; ++c) {
      std::uint64_t idx = base;
      for (unsigned i = 0; i < n; ++i)
        if (c & (1u << i)) idx += stride[i];
      corner_nodes[c] = idx;
    }
    std::string sg(s, '+');
    bool supports = true, has_zero = false;
    for (std::size_t j = 0; j < s && supports; ++j) {
      bool pos = false, neg = false, zero = false;
      for (std::uint64_t idx : corner_nodes) {
        const char c = sigma[idx][j];
        pos |= c == '+';
        neg |= c == '-';
        zero |= c == '0';
      }
      if (pos && neg) {
        sg[j] = '0';
        has_zero = true;
      } else if (zero) {
        supports = false;  // vanishing only at corners is left to the node witnesses
      } else {
        sg[j] = pos ? '+' : '-';
      }
    }
    if (!supports || !has_zero) continue;
    box_sigma[b] = sg;
    const std::uint64_t element = nodes + b;
    for (std::uint64_t idx : corner_nodes) {
      if (sigma[idx] == sg) sets.union_set(element, idx);
    }
  }

  // Closed boxes with equal sign vector that share a node are connected.
  {
    std::map<std::pair<std::uint64_t, std::string>, std::uint64_t> anchor;
    for (std::uint64_t b = 0; b < boxes; ++b) {
      if (box_sigma[b].empty()) continue;
      std::uint64_t base = 0, rest = b;
      for (unsigned i = 0; i < n; ++i) {
        base += (rest % resolution) * stride[i];
        rest /= resolution;
      }
      for (unsigned c = 0; c < corners; ++c) {
        std::uint64_t idx = base;
        for (unsigned i = 0; i < n; ++i)
          if (c & (1u << i)) idx += stride[i];
        auto [it, fresh] = anchor.try_emplace({idx, box_sigma[b]}, nodes + b);
        if (!fresh) sets.union_set(it->second, nodes + b);
      }
    }
  }

  SignCellReport rep;
  rep.resolution = resolution;
  rep.nodes = nodes;
  std::map<std::string, std::set<std::uint64_t>> roots;
  for (std::uint64_t idx = 0; idx < nodes; ++idx) roots[sigma[idx]].insert(sets.find_set(idx));
  for (std::uint64_t b = 0; b < boxes; ++b)
    if (!box_sigma[b].empty()) roots[box_sigma[b]].insert(sets.find_set(nodes + b));
  for (const auto& [sg, r] : roots) {
    rep.realized.insert(sg);
    rep.components_per_sign[sg] = r.size();
  }
  rep.notes.push_back("cells thinner than one grid step may be missed or merged");
  return rep;
}

void to_json(nlohmann::json& j, const BoundCheck& c) {
  const char* verdict = c.verdict == Verdict::Holds      ? "holds"
                        : c.verdict == Verdict::Violated ? "violated"
                                                         : "inconclusive";
  j = nlohmann::json{{"verdict", verdict},
                     {"measured", c.measured},
                     {"cells_bound", c.cells},
                     {"cells_margin", to_string(c.cells_margin)},
                     {"variety_components", c.variety_components},
                     {"optm", c.optm_bound},
                     {"variety_margin", to_string(c.variety_margin)},
                     {"stable", c.stable},
                     {"refined_measured", c.refined_measured}};
}

BoundCheck check_against_bound(const PolynomialSystem& sys, const SignCellReport& report) {
  sys.validate();
  const unsigned n = sys.n;
  const Nat degree = std::max(1u, sys.max_degree());
  SetFormat fmt = polynomial_format(n, degree, sys.polys.size());
  fmt.d = n;

  BoundCheck check;
  check.measured = count_components(report);
  check.cells = cells_bound(fmt);
  const auto zero = report.components_per_sign.find(std::string(sys.polys.size(), '0'));
  check.variety_components = zero == report.components_per_sign.end() ? 0 : zero->second;
  check.optm_bound = optm(n, degree);

  const Natural measured(check.measured), variety(check.variety_components);
  const bool cells_ok = measured <= check.cells.value;
  const bool variety_ok = variety <= check.optm_bound.value;
  check.cells_margin = cells_ok ? Natural(check.cells.value - measured) : Natural(0);
  check.variety_margin = variety_ok ? Natural(check.optm_bound.value - variety) : Natural(0);

  std::uint64_t refined_nodes = 1;
  bool refinable = true;
  for (unsigned i = 0; i < n && refinable; ++i) {
    refinable = refined_nodes <= kMaxGridNodes / (2 * report.resolution + 1);
    refined_nodes *= 2 * report.resolution + 1;
  }
  if (refinable) {
    const SignCellReport finer = enumerate_signs(sys, 2 * report.resolution);
    check.refined_measured = count_components(finer);
    check.stable = finer.components_per_sign == report.components_per_sign;
  } else {
    check.stable = false;
  }

  if (cells_ok && variety_ok)
    check.verdict = Verdict::Holds;
  else
    check.verdict = check.stable ? Verdict::Violated : Verdict::Inconclusive;
  return check;
}

}  // namespace pfb
