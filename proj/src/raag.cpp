#include "hhs/raag.hpp"

#include <algorithm>
#include <unordered_map>

#include "hhs/errors.hpp"
#include "hhs/rng.hpp"

namespace hhs {

namespace {

// Connectivity of the complement graph induced on `s`; join-irreducibility
// of the induced subgraph is exactly complement-connectedness.
bool complement_connected(const SimplicialGraph& g, VertexMask s) {
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
  return comp == s;
}

}  // namespace

IndexStructure::IndexStructure(SimplicialGraph gamma)
    : gamma_(std::move(gamma)) {
  if (gamma_.size() > 20)
    throw ResourceError(
        "index structures enumerate all 2^|V| subgraph types; the limit is "
        "20 vertices, got " +
        std::to_string(gamma_.size()));
  if (gamma_.size() == 0) throw InputError("defining graph must be nonempty");
  std::uint64_t total = 1ull << gamma_.size();
  unbounded_.assign(total, 0);
  for (VertexMask d = 1; d < total; ++d)
    unbounded_[d] =
        mask_size(d) == 1 || complement_connected(gamma_, d) ? 1 : 0;
}

VertexMask IndexStructure::link_mask(VertexMask a) const {
  VertexMask common = gamma_.all_mask();
  for (std::uint64_t m = a; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    common &= gamma_.adjacency_mask(v);
  }
  return common & ~a;
}

IndexStructure build_index(const SimplicialGraph& gamma) {
  return IndexStructure(gamma);
}

namespace {

// Max pairwise-orthogonal family whose members are drawn from the subsets
// of a shrinking vertex pool.  `eligible` decides which masks may join.
// Memoised on the pool; a node budget guards pathological inputs.
struct FamilySearch {
  const IndexStructure& idx;
  std::vector<int8_t> memo;  // per pool mask, -1 unknown
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  const std::vector<char>* alive = nullptr;  // optional mask filter
  bool need_unbounded = true;

  FamilySearch(const IndexStructure& i, std::uint64_t budget_)
      : idx(i), memo(1ull << i.vertex_count(), -1), budget(budget_) {}

  bool eligible(VertexMask d) const {
    if (alive && !(*alive)[d]) return false;
    return !need_unbounded || idx.unbounded(d);
  }

  int best(VertexMask pool) {
    if (!pool) return 0;
    int8_t& slot = memo[pool];
    if (slot >= 0) return slot;
    int out = 0;
    int cap = mask_size(pool);  // members are disjoint nonempty subsets
    VertexMask d = pool;
    while (true) {
      if (++nodes > budget)
        throw ResourceError(
            "orthogonal-family search exceeded its node budget");
      if (d && eligible(d)) {
        int sub = best(pool & idx.link_mask(d));
        out = std::max(out, 1 + sub);
        if (out == cap) break;
      }
      if (d == 0) break;
      d = (d - 1) & pool;
    }
    slot = int8_t(out);
    return out;
  }
};

constexpr std::uint64_t kSearchBudget = 2'000'000'000ull;

}  // namespace

int rank_by_enumeration(const IndexStructure& idx) {
  FamilySearch fs(idx, kSearchBudget);
  return fs.best(idx.gamma().all_mask());
}

int rank(const IndexStructure& idx) {
  int r = rank_by_enumeration(idx);
  int cn = maximal_cliques(idx.gamma()).clique_number;
  if (r != cn)
    throw InternalError("rank enumeration (" + std::to_string(r) +
                        ") disagrees with clique number (" +
                        std::to_string(cn) + ")");
  return r;
}

namespace {

void enumerate_families(const IndexStructure& idx, VertexMask pool,
                        VertexMask min_next, int remaining,
                        std::vector<VertexMask>& current,
                        std::vector<std::vector<VertexMask>>& out,
                        std::uint64_t& nodes) {
  if (remaining == 0) {
    out.push_back(current);
    if (out.size() > 2'000'000)
      throw ResourceError("too many complete support sets to enumerate");
    return;
  }
  if (mask_size(pool) < remaining) return;
  std::vector<VertexMask> subs;
  VertexMask d = pool;
  while (true) {
    if (++nodes > kSearchBudget)
      throw ResourceError("support-set enumeration exceeded its node budget");
    if (d > min_next && idx.unbounded(d)) subs.push_back(d);
    if (d == 0) break;
    d = (d - 1) & pool;
  }
  // ascending order keeps members and families lexicographic
  std::sort(subs.begin(), subs.end());
  for (VertexMask d : subs) {
    current.push_back(d);
    enumerate_families(idx, pool & idx.link_mask(d), d, remaining - 1, current,
                       out, nodes);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<VertexMask>> complete_support_sets(
    const IndexStructure& idx) {
  int nu = rank(idx);
  std::vector<std::vector<VertexMask>> out;
  std::vector<VertexMask> cur;
  std::uint64_t nodes = 0;
  enumerate_families(idx, idx.gamma().all_mask(), 0, nu, cur, out, nodes);
  return out;
}

std::vector<VertexMask> hinge_domains(const IndexStructure& idx) {
  std::vector<VertexMask> out;
  for (const auto& fam : complete_support_sets(idx))
    out.insert(out.end(), fam.begin(), fam.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Max pairwise-orthogonal family with arbitrary (not necessarily unbounded)
// members inside a pool: equals the clique number of the induced subgraph,
// via transversals one way and singleton families the other.
int any_member_family_bound(const IndexStructure& idx, VertexMask pool,
                            std::unordered_map<VertexMask, int>& cache) {
  auto it = cache.find(pool);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> nbr;
  std::vector<int> verts;
  for (std::uint64_t m = pool; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    verts.push_back(v);
  }
  nbr.resize(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = 0; j < verts.size(); ++j)
      if (i != j && idx.gamma().adjacent(verts[i], verts[j]))
        nbr[i] |= 1ull << j;
  int r = max_clique_size(nbr);
  cache.emplace(pool, r);
  return r;
}

std::vector<char> down_closure_bitmap(int n, const std::vector<char>& in_u) {
  std::uint64_t total = 1ull << n;
  std::vector<char> closed(in_u);
  // descending-cardinality sweep: d is dominated iff some d ∪ {v} is
  std::vector<std::vector<VertexMask>> by_card(n + 1);
  for (VertexMask d = 1; d < total; ++d) by_card[mask_size(d)].push_back(d);
  for (int c = n - 1; c >= 1; --c)
    for (VertexMask d : by_card[c]) {
      if (closed[d]) continue;
      for (int v = 0; v < n; ++v)
        if (!((d >> v) & 1u) && closed[d | (1ull << v)]) {
          closed[d] = 1;
          break;
        }
    }
  return closed;
}

}  // namespace

FrakturU fraktur_u(const IndexStructure& idx, bool require_unbounded) {
  FrakturU out;
  out.nu = rank(idx);
  std::uint64_t total = 1ull << idx.vertex_count();
  std::vector<char> in_u(total, 0);
  std::unordered_map<VertexMask, int> clique_cache;
  FamilySearch fs(idx, kSearchBudget);
  for (VertexMask d = 1; d < total; ++d) {
    if (require_unbounded && !idx.unbounded(d)) continue;
    VertexMask pool = idx.link_mask(d);
    int partners = require_unbounded
                       ? fs.best(pool)
                       : any_member_family_bound(idx, pool, clique_cache);
    if (partners >= out.nu - 1) in_u[d] = 1;
  }
  auto closed = down_closure_bitmap(idx.vertex_count(), in_u);
  for (VertexMask d = 1; d < total; ++d) {
    if (in_u[d]) out.members.push_back(d);
    if (closed[d]) out.down_closure.push_back(d);
  }
  return out;
}

namespace {

// One collapse round over a restricted (alive) domain set.
int alive_rank(const IndexStructure& idx, const std::vector<char>& alive,
               bool need_unbounded) {
  FamilySearch fs(idx, kSearchBudget);
  fs.alive = &alive;
  fs.need_unbounded = need_unbounded;
  return fs.best(idx.gamma().all_mask());
}

}  // namespace

std::vector<int> factored_rank_sequence(const IndexStructure& idx) {
  std::uint64_t total = 1ull << idx.vertex_count();
  std::vector<char> alive(total, 1);
  alive[0] = 0;
  std::vector<int> seq;
  while (true) {
    int nu = alive_rank(idx, alive, true);
    seq.push_back(nu);
    if (nu <= 1) break;
    // 𝔘 over the surviving domains, members unrestricted (paper-literal)
    std::vector<char> in_u(total, 0);
    FamilySearch fs(idx, kSearchBudget);
    fs.alive = &alive;
    fs.need_unbounded = false;
    for (VertexMask d = 1; d < total; ++d) {
      if (!alive[d]) continue;
      if (fs.best(idx.link_mask(d)) >= nu - 1) in_u[d] = 1;
    }
    auto closed = down_closure_bitmap(idx.vertex_count(), in_u);
    bool removed = false;
    for (VertexMask d = 1; d < total; ++d)
      if (alive[d] && closed[d]) alive[d] = 0, removed = true;
    if (!removed) break;  // defensive; cannot happen when nu ≥ 2
    bool any_alive =
        std::any_of(alive.begin(), alive.end(), [](char c) { return c != 0; });
    if (!any_alive) break;
  }
  return seq;
}

AssumptionReport check_assumptions(const IndexStructure& idx) {
  AssumptionReport rep;
  auto css = complete_support_sets(idx);
  auto hinges = hinge_domains(idx);
  rep.line = std::all_of(hinges.begin(), hinges.end(),
                         [&](VertexMask h) { return idx.unbounded(h); });

  auto pair_intersection = [&](const std::vector<VertexMask>& a,
                               const std::vector<VertexMask>& b) {
    std::vector<VertexMask> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };

  rep.intersect = !hinges.empty();
  for (VertexMask h : hinges) {
    bool found = false;
    for (size_t i = 0; i < css.size() && !found; ++i) {
      if (!std::binary_search(css[i].begin(), css[i].end(), h)) continue;
      for (size_t j = 0; j < css.size() && !found; ++j) {
        if (i == j) continue;
        auto common = pair_intersection(css[i], css[j]);
        found = common.size() == 1 && common[0] == h;
      }
    }
    if (!found) {
      rep.intersect = false;
      break;
    }
  }

  int nu = rank(idx);
  if (nu <= 2) {
    rep.extend = true;
    rep.extend_vacuous = true;
  } else {
    rep.extend = true;
    for (size_t a = 0; a < hinges.size() && rep.extend; ++a)
      for (size_t b = a + 1; b < hinges.size() && rep.extend; ++b) {
        if (!idx.orthogonal(hinges[a], hinges[b])) continue;
        std::vector<VertexMask> want{hinges[a], hinges[b]};
        std::sort(want.begin(), want.end());
        bool found = false;
        for (size_t i = 0; i < css.size() && !found; ++i)
          for (size_t j = i + 1; j < css.size() && !found; ++j)
            found = pair_intersection(css[i], css[j]) == want;
        rep.extend = found;
      }
  }
  return rep;
}

namespace {

struct AutSearch {
  const SimplicialGraph& g;
  int n;
  std::vector<int> deg;

  explicit AutSearch(const SimplicialGraph& gr) : g(gr), n(gr.size()) {
    deg.resize(n);
    for (int v = 0; v < n; ++v) deg[v] = mask_size(g.adjacency_mask(v));
  }

  bool compatible(const std::vector<int>& img, int v, int w) const {
    if (deg[v] != deg[w]) return false;
    for (int u = 0; u < v; ++u)
      if (img[u] >= 0 && g.adjacent(u, v) != g.adjacent(img[u], w))
        return false;
    return true;
  }

  // Completes a partial map (img[v] = -1 means unassigned; vertices are
  // assigned in index order starting at `next`).
  bool extend(std::vector<int>& img, std::vector<char>& used, int next) {
    while (next < n && img[next] >= 0) ++next;
    if (next == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || !compatible(img, next, w)) continue;
      img[next] = w;
      used[w] = 1;
      if (extend(img, used, next + 1)) return true;
      img[next] = -1;
      used[w] = 0;
    }
    return false;
  }

  // Is there an automorphism fixing 0..k-1 pointwise with k -> j?
  bool witness(int k, int j, std::vector<int>& out) {
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    for (int v = 0; v < k; ++v) img[v] = v, used[v] = 1;
    if (used[j]) return false;
    if (!compatible(img, k, j)) return false;
    img[k] = j;
    used[j] = 1;
    if (!extend(img, used, k + 1)) return false;
    out = img;
    return true;
  }
};

VertexMask permute_mask(VertexMask m, const std::vector<int>& perm) {
  VertexMask out = 0;
  for (std::uint64_t x = m; x;) {
    int v = std::countr_zero(x);
    x &= x - 1;
    out |= 1ull << perm[v];
  }
  return out;
}

bool induced_map_preserves_relations(const IndexStructure& idx,
                                     const std::vector<int>& perm) {
  int n = idx.vertex_count();
  std::uint64_t total = 1ull << n;
  auto check_pair = [&](VertexMask a, VertexMask b) {
    VertexMask fa = permute_mask(a, perm), fb = permute_mask(b, perm);
    return idx.nested(a, b) == idx.nested(fa, fb) &&
           idx.orthogonal(a, b) == idx.orthogonal(fa, fb);
  };
  if (n <= 10) {
    for (VertexMask a = 1; a < total; ++a)
      for (VertexMask b = 1; b < total; ++b)
        if (!check_pair(a, b)) return false;
    return true;
  }
  Rng rng(99);
  for (int i = 0; i < 200000; ++i) {
    VertexMask a = 1 + rng.below(total - 1), b = 1 + rng.below(total - 1);
    if (!check_pair(a, b)) return false;
  }
  return true;
}

}  // namespace

AutReport aut_index(const IndexStructure& idx) {
  int n = idx.vertex_count();
  if (n > 12)
    throw ResourceError(
        "aut_index is limited to 12 vertices (backtracking over vertex "
        "images), got " +
        std::to_string(n));
  AutReport rep;
  AutSearch search(idx.gamma());
  std::vector<std::vector<int>> gens;
  rep.order = 1;
  // stabilizer chain: order = prod over k of |orbit of k in the pointwise
  // stabilizer of 0..k-1|
  for (int k = 0; k < n; ++k) {
    std::uint64_t orbit = 1;  // k -> k via identity
    for (int j = 0; j < n; ++j) {
      if (j == k || j < k) continue;
      std::vector<int> w;
      if (search.witness(k, j, w)) {
        ++orbit;
        gens.push_back(w);
      }
    }
    rep.order *= orbit;
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  rep.generators = std::move(gens);

  // The domain poset is the lattice of nonempty subsets: its ⊑-minimal
  // elements are the singletons and every domain is the union of the atoms
  // below it, so an index automorphism is determined by its atom action.
  rep.atoms_are_singletons = true;
  rep.generators_verified = true;
  for (const auto& gperm : rep.generators)
    if (!induced_map_preserves_relations(idx, gperm)) {
      rep.generators_verified = false;
      break;
    }
  rep.all_induced_by_graph_automorphisms =
      rep.atoms_are_singletons && rep.generators_verified;
  return rep;
}

}  // namespace hhs
