#include "hhs/graph.hpp"

#include <algorithm>
#include <queue>

#include "hhs/rng.hpp"

namespace hhs {

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
  if (names_.size() > 64)
    throw ResourceError("simplicial graphs are limited to 64 vertices, got " +
                        std::to_string(names_.size()));
  adj_.assign(names_.size(), 0);
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], int(i)).second)
      throw InputError("duplicate vertex name '" + names_[i] + "'");
  }
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= size() || b >= size())
      throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + names_[a] + "'");
    adj_[a] |= 1ull << b;
    adj_[b] |= 1ull << a;
  }
}

int SimplicialGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

std::vector<std::pair<int, int>> SimplicialGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

VertexMask SimplicialGraph::parse_set(
    const std::vector<std::string>& names) const {
  VertexMask m = 0;
  for (const auto& n : names) m |= 1ull << index_of(n);
  return m;
}

VertexMask link(const SimplicialGraph& g, VertexMask s) {
  if (!mask_subset(s, g.all_mask()))
    throw InputError("vertex set is not contained in the graph");
  VertexMask common = g.all_mask();
  for (int v = 0; v < g.size(); ++v)
    if ((s >> v) & 1u) common &= g.adjacency_mask(v);
  return common & ~s;
}

VertexMask star(const SimplicialGraph& g, VertexMask s) {
  return s | link(g, s);
}

namespace {

// Bron–Kerbosch with pivoting over word-sized masks.
void bron_kerbosch(const std::vector<std::uint64_t>& nbr, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (std::uint64_t m = px; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int deg = std::popcount(p & nbr[v]);
    if (deg > best) best = deg, pivot = v;
  }
  std::uint64_t cand = p & ~nbr[pivot];
  for (std::uint64_t m = cand; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    std::uint64_t bit = 1ull << v;
    bron_kerbosch(nbr, r | bit, p & nbr[v], x & nbr[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

CliqueReport maximal_cliques(const SimplicialGraph& g) {
  std::vector<std::uint64_t> nbr(g.size());
  for (int v = 0; v < g.size(); ++v) nbr[v] = g.adjacency_mask(v);
  CliqueReport rep;
  if (g.size() > 0) bron_kerbosch(nbr, 0, g.all_mask(), 0, rep.maximal);
  std::sort(rep.maximal.begin(), rep.maximal.end());
  for (auto c : rep.maximal)
    rep.clique_number = std::max(rep.clique_number, mask_size(c));
  return rep;
}

int max_clique_size(std::span<const std::uint64_t> nbr) {
  int n = int(nbr.size());
  if (n == 0) return 0;
  int best = 0;
  // plain branch and bound; n ≤ 64 in all callers
  struct Frame {
    std::uint64_t r, p;
  };
  std::vector<Frame> stack{{0ull, n == 64 ? ~0ull : ((1ull << n) - 1)}};
  while (!stack.empty()) {
    auto [r, p] = stack.back();
    stack.pop_back();
    int rc = std::popcount(r);
    best = std::max(best, rc);
    if (rc + std::popcount(p) <= best) continue;
    while (p) {
      int v = std::countr_zero(p);
      p &= p - 1;
      if (rc + 1 + std::popcount(p & nbr[v]) > best || rc + 1 > best)
        stack.push_back({r | (1ull << v), p & nbr[v]});
    }
  }
  return best;
}

std::optional<std::pair<VertexMask, VertexMask>> join_decomposition(
    const SimplicialGraph& g, VertexMask s) {
  if (!s) throw InputError("join_decomposition requires a nonempty set");
  if (!mask_subset(s, g.all_mask()))
    throw InputError("vertex set is not contained in the graph");
  // S = S1 * S2 iff the complement graph induced on S is disconnected.
  int root = std::countr_zero(s);
  VertexMask comp = 1ull << root, frontier = comp;
  while (frontier) {
    VertexMask next = 0;
    for (std::uint64_t m = frontier; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      next |= s & ~g.adjacency_mask(v) & ~(1ull << v);
    }
    next &= ~comp;
    comp |= next;
    frontier = next;
  }
  if (comp == s) return std::nullopt;
  return std::make_pair(comp, s & ~comp);
}

MetricGraph::MetricGraph(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
  nbr_.assign(names_.size(), {});
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], int(i)).second)
      throw InputError("duplicate vertex name '" + names_[i] + "'");
  }
  std::vector<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= size() || b >= size())
      throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + names_[a] + "'");
    auto key = std::minmax(a, b);
    seen.emplace_back(key.first, key.second);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto [a, b] : seen) {
    nbr_[a].push_back(b);
    nbr_[b].push_back(a);
    ++edge_count_;
  }
  for (auto& v : nbr_) std::sort(v.begin(), v.end());
  rows_.resize(names_.size());
  if (size() == 0) throw InputError("metric graph must be nonempty");
  if (int(distances_from(0).size()) != size() ||
      *std::max_element(distances_from(0).begin(), distances_from(0).end()) ==
          INT32_MAX)
    throw InputError("metric graph must be connected");
}

MetricGraph::MetricGraph(const MetricGraph& o)
    : names_(o.names_),
      nbr_(o.nbr_),
      index_(o.index_),
      edge_count_(o.edge_count_) {
  rows_.resize(names_.size());
}

MetricGraph& MetricGraph::operator=(const MetricGraph& o) {
  if (this == &o) return *this;
  names_ = o.names_;
  nbr_ = o.nbr_;
  index_ = o.index_;
  edge_count_ = o.edge_count_;
  rows_.clear();
  rows_.resize(names_.size());
  return *this;
}

int MetricGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

std::vector<std::pair<int, int>> MetricGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : nbr_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

const std::vector<int>& MetricGraph::distances_from(int u) const {
  {
    std::lock_guard<std::mutex> lk(rows_mutex_);
    if (rows_[u]) return *rows_[u];
  }
  auto row = std::make_unique<std::vector<int>>(size(), INT32_MAX);
  (*row)[u] = 0;
  std::queue<int> q;
  q.push(u);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbr_[v])
      if ((*row)[w] == INT32_MAX) {
        (*row)[w] = (*row)[v] + 1;
        q.push(w);
      }
  }
  std::lock_guard<std::mutex> lk(rows_mutex_);
  if (!rows_[u]) rows_[u] = std::move(row);
  return *rows_[u];
}

int MetricGraph::distance(int u, int v) const { return distances_from(u)[v]; }

int MetricGraph::diameter() const {
  int d = 0;
  for (int v = 0; v < size(); ++v)
    d = std::max(d, *std::max_element(distances_from(v).begin(),
                                      distances_from(v).end()));
  return d;
}

std::vector<int> MetricGraph::shortest_path(int u, int v) const {
  const auto& dv = distances_from(v);
  std::vector<int> path{u};
  int cur = u;
  while (cur != v) {
    int next = -1;
    for (int w : nbr_[cur])
      if (dv[w] == dv[cur] - 1) {
        next = w;
        break;
      }
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<int> geodesic_hull(const MetricGraph& m, std::span<const int> pts) {
  if (pts.empty()) throw InputError("geodesic_hull requires points");
  std::vector<int> uniq(pts.begin(), pts.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<char> in(m.size(), 0);
  for (size_t i = 0; i < uniq.size(); ++i) {
    const auto& da = m.distances_from(uniq[i]);
    for (size_t j = i; j < uniq.size(); ++j) {
      const auto& db = m.distances_from(uniq[j]);
      int dab = da[uniq[j]];
      for (int v = 0; v < m.size(); ++v)
        if (!in[v] && da[v] + db[v] == dab) in[v] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < m.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

namespace {

inline double quad_defect(const MetricGraph& m, int a, int b, int c, int d) {
  int s1 = m.distance(a, b) + m.distance(c, d);
  int s2 = m.distance(a, c) + m.distance(b, d);
  int s3 = m.distance(a, d) + m.distance(b, c);
  int mx = std::max({s1, s2, s3});
  int mid = s1 + s2 + s3 - mx - std::min({s1, s2, s3});
  return (mx - mid) / 2.0;
}

}  // namespace

FourPointDelta four_point_delta(const MetricGraph& m, int exhaustive_cap,
                                int samples, std::uint64_t seed) {
  FourPointDelta out;
  int n = m.size();
  if (n < 4) return out;
  if (n <= exhaustive_cap) {
    for (int v = 0; v < n; ++v) m.distances_from(v);  // warm the table
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d)
            out.delta = std::max(out.delta, quad_defect(m, a, b, c, d));
    return out;
  }
  out.exhaustive = false;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    int a = rng.below_int(n), b = rng.below_int(n), c = rng.below_int(n),
        d = rng.below_int(n);
    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
    out.delta = std::max(out.delta, quad_defect(m, a, b, c, d));
  }
  return out;
}

}  // namespace hhs
