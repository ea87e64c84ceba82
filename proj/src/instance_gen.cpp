#include "hornstab/instance_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hornstab {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// k distinct variables of n. Rejection sampling keeps clause generation
// O(k) when n is large; dense requests shuffle instead.
std::vector<Var> sample_vars(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  k = std::min(k, n);
  if (4 * k <= n) {
    std::vector<Var> out;
    while (out.size() < k) {
      const auto v = static_cast<Var>(uniform(rng, 0, n - 1));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }
  std::vector<Var> all(n);
  std::iota(all.begin(), all.end(), Var{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

HornTheory random_horn(std::size_t n, std::size_t m, std::size_t max_len, bool neg_only,
                       std::uint64_t seed) {
  require(n >= 1 && max_len >= 1, "random_horn needs n >= 1 and max_len >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto vars = sample_vars(n, uniform(rng, 1, std::min(max_len, n)), rng);
    std::vector<Var> pos;
    if (!neg_only && uniform(rng, 0, 1) == 1) {
      pos.push_back(vars.back());
      vars.pop_back();
    }
    clauses.emplace_back(std::move(pos), std::move(vars));
  }
  return HornTheory(n, std::move(clauses));
}

HornTheory random_inconsistent_horn(std::size_t n, std::size_t m, std::size_t max_len,
                                    std::uint64_t seed) {
  HornTheory base = random_horn(n, m, max_len, false, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Var a = static_cast<Var>(uniform(rng, 0, n - 1));
  const Var b = static_cast<Var>(uniform(rng, 0, n - 1));
  std::vector<Clause> clauses = base.clauses();
  clauses.push_back(Clause({a}, {}));
  if (a != b) clauses.push_back(Clause({b}, {a}));
  clauses.push_back(Clause({}, {b}));
  return HornTheory(n, std::move(clauses));
}

Clause random_clause(std::size_t n, std::size_t max_len, ClauseShape shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // kAny draws uniformly from mixed clauses and the four restricted shapes.
  if (shape == ClauseShape::kAny) shape = static_cast<ClauseShape>(uniform(rng, 0, 4));
  if (shape == ClauseShape::kEmpty || n == 0) return Clause();
  const auto vars = sample_vars(n, uniform(rng, 1, std::min(max_len, n)), rng);
  std::vector<Var> pos, neg;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    bool positive = false;
    switch (shape) {
      case ClauseShape::kPositive: positive = true; break;
      case ClauseShape::kNegative: positive = false; break;
      case ClauseShape::kHorn: positive = i == 0 && uniform(rng, 0, 1) == 1; break;
      default: positive = uniform(rng, 0, 1) == 1; break;
    }
    (positive ? pos : neg).push_back(vars[i]);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  return Clause(std::move(pos), std::move(neg));
}

Graph::Graph(std::size_t nv, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : nv_(nv) {
  for (auto [i, j] : edges) {
    require(i != j, "graph has a self-loop");
    require(i < nv && j < nv, "graph edge out of range");
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Graph Graph::from_code(std::size_t nv, std::uint64_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j, ++bit) {
      if ((code >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(nv, std::move(edges));
}

Graph Graph::named(const std::string& spec) {
  auto number = [&](std::size_t from) -> std::size_t {
    require(from < spec.size(), "graph size missing");
    return std::stoul(spec.substr(from));
  };
  if (spec == "edge") return Graph(2, {{0, 1}});
  if (spec.rfind("empty", 0) == 0) return Graph(number(5));
  if (spec.find(':') != std::string::npos) {
    const auto colon = spec.find(':');
    const std::size_t nv = std::stoul(spec.substr(0, colon));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      const auto dash = item.find('-');
      require(dash != std::string::npos, "edge must look like i-j");
      const std::size_t i = std::stoul(item.substr(0, dash));
      const std::size_t j = std::stoul(item.substr(dash + 1));
      require(i >= 1 && j >= 1, "vertices are 1-based");
      edges.emplace_back(i - 1, j - 1);
    }
    return Graph(nv, std::move(edges));
  }
  if (!spec.empty() && (spec[0] == 'k' || spec[0] == 'p')) {
    const std::size_t nv = number(1);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (spec[0] == 'k' || j == i + 1) edges.emplace_back(i, j);
      }
    }
    return Graph(nv, std::move(edges));
  }
  throw ValidationError("unknown graph '" + spec + "'");
}

std::string Graph::to_string() const {
  std::string s = std::to_string(nv_) + ":";
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (e) s += ',';
    s += std::to_string(edges_[e].first + 1) + "-" + std::to_string(edges_[e].second + 1);
  }
  return s;
}

std::size_t max_independent_set(const Graph& g) {
  require(g.vertices() <= 20, "brute force limited to 20 vertices");
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertices()); ++s) {
    bool ok = true;
    for (auto [i, j] : g.edges()) ok = ok && !(((s >> i) & 1U) && ((s >> j) & 1U));
    if (ok) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

std::size_t min_vertex_cover(const Graph& g) {
  require(g.vertices() <= 20, "brute force limited to 20 vertices");
  std::size_t best = g.vertices();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertices()); ++s) {
    bool ok = true;
    for (auto [i, j] : g.edges()) ok = ok && (((s >> i) & 1U) || ((s >> j) & 1U));
    if (ok) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

TheoryInstance independent_set_instance(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertices();
  require(k >= 1 && k <= n, "independent set instance needs 1 <= k <= nv");
  std::vector<Clause> clauses;
  for (auto [i, j] : g.edges()) clauses.emplace_back(std::vector<Var>{}, std::vector<Var>{Var(i), Var(j)});
  std::vector<Var> all(n);
  std::iota(all.begin(), all.end(), Var{0});
  return {HornTheory(n, std::move(clauses)), Clause({}, all), n - k};
}

CharsetInstance interior_consistency_instance(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertices();
  require(n >= 3 && !g.edges().empty(), "interior consistency instance needs nv >= 3 and an edge");
  require(k >= 1 && k <= n, "interior consistency instance needs 1 <= k <= nv");
  check_model_width(n);
  const Mask full = low_bits(n);
  std::vector<Mask> members;
  for (auto [i, j] : g.edges()) {
    const Mask pair = (Mask{1} << i) | (Mask{1} << j);
    members.push_back(full & ~pair);
    for (std::size_t l = 0; l < n; ++l) {
      if (l != i && l != j) members.push_back(full & ~pair & ~(Mask{1} << l));
    }
  }
  return {ModelSet::from_masks(n, members), Clause(), n - k};
}

CharsetInstance vertex_cover_instance(const Graph& g, std::size_t k) {
  const std::size_t nv = g.vertices();
  const std::size_t ne = g.edges().size();
  require(k >= 1 && k < nv, "vertex cover instance needs 1 <= k < nv");
  const std::size_t n = nv + nv * ne;
  if (n > kMaxModelVars) {
    throw DimensionError("vertex cover instance needs " + std::to_string(n) + " > 64 variables");
  }
  auto block = [&](std::size_t e) { return low_bits(nv) << (nv + e * nv); };
  std::vector<Mask> members;
  for (std::size_t v = 0; v < nv; ++v) {
    Mask on = low_bits(nv) & ~(Mask{1} << v);
    for (std::size_t e = 0; e < ne; ++e) {
      const auto [i, j] = g.edges()[e];
      if (v != i && v != j) on |= block(e);
    }
    members.push_back(on);
  }
  std::vector<Var> neg(nv), pos(n - nv);
  std::iota(neg.begin(), neg.end(), Var{0});
  std::iota(pos.begin(), pos.end(), static_cast<Var>(nv));
  return {ModelSet::from_masks(n, members), Clause(std::move(pos), std::move(neg)), k};
}

}  // namespace hornstab
