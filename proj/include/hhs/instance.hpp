#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

enum class Rel : std::uint8_t {
  Equal,
  NestedIn,  // row properly nested in column
  Contains,  // column properly nested in row
  Orth,
  Trans,
};

// A finite, fully explicit HHS instance: ambient metric graph, one
// hyperbolic model per domain, relation matrix, projection tables, rho
// data and the constants (E, theta, s).
class HHSInstance {
 public:
  HHSInstance(MetricGraph ambient, std::vector<std::string> domain_ids,
              std::vector<MetricGraph> models,
              std::vector<std::vector<Rel>> relations,
              std::vector<std::vector<std::vector<int>>> projections,
              std::map<std::pair<int, int>, std::vector<int>> rho_sets,
              std::map<std::pair<int, int>, std::vector<std::vector<int>>>
                  rho_maps,
              int E, int theta, int s);

  const MetricGraph& ambient() const { return ambient_; }
  int domain_count() const { return int(ids_.size()); }
  const std::string& domain_id(int d) const { return ids_[d]; }
  int domain_index(const std::string& id) const;
  const MetricGraph& model(int d) const { return models_[d]; }
  Rel rel(int a, int b) const { return rel_[a][b]; }
  bool orthogonal(int a, int b) const { return rel_[a][b] == Rel::Orth; }
  int maximal_domain() const { return maximal_; }

  // π_d(x): nonempty subset of the model, diameter ≤ E
  const std::vector<int>& proj(int d, int x) const { return proj_[d][x]; }
  // ρ^U_V ⊆ CV for U ⋔ V or U ⊊ V
  const std::vector<int>& rho_set(int u, int v) const;
  bool has_rho_set(int u, int v) const;
  // ρ^V_U : CV → subsets of CU for U ⊊ V
  const std::vector<int>& rho_map(int v, int u, int model_v_vertex) const;
  bool has_rho_map(int v, int u) const;

  int E() const { return E_; }
  int theta() const { return theta_; }
  int s() const { return s_; }

  // d_{CU}(π_U(x), π_U(y)) as min distance between the projection sets
  int dproj(int d, int x, int y) const;
  int dset(int d, std::span<const int> a, std::span<const int> b) const;
  int set_diam(int d, std::span<const int> a) const;

  // A domain counts as unbounded when its model has diameter ≥ threshold
  // (default 2E+1).  rank = max pairwise-orthogonal family of those.
  bool domain_unbounded(int d, int diam_threshold = -1) const;
  int rank(int diam_threshold = -1) const;
  // max pairwise-orthogonal family among domains of model diameter ≥ c
  int orthogonal_rank(int c) const;

  // Tree products remember their factor structure (slice materialization,
  // python reporting); empty for generic instances.
  const std::vector<int>& product_factors() const { return product_factors_; }
  void set_product_factors(std::vector<int> f) {
    product_factors_ = std::move(f);
  }
  // coordinate of an ambient vertex in a product factor (factor slot index)
  int product_coordinate(int slot, int ambient_vertex) const;

 private:
  MetricGraph ambient_;
  std::vector<std::string> ids_;
  std::vector<MetricGraph> models_;
  std::vector<std::vector<Rel>> rel_;
  std::vector<std::vector<std::vector<int>>> proj_;
  std::map<std::pair<int, int>, std::vector<int>> rho_set_;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> rho_map_;
  int E_, theta_, s_;
  int maximal_ = -1;
  std::vector<int> product_factors_;
};

// ℓ1 product of trees, one domain per factor plus a point-model maximal
// domain S.  Consistency holds with E = 1 (and in fact exactly).
// `box` truncates each factor to the ball of that radius about vertex 0.
HHSInstance tree_product_instance(std::vector<MetricGraph> trees,
                                  std::optional<int> box = std::nullopt,
                                  int E = 1, int theta = -1);

// Trivial instance: a single domain whose model is the ambient graph.
HHSInstance trivial_instance(const MetricGraph& g, int E = 1, int theta = -1);

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string witness;  // first failure, human-readable
};

struct ValidationReport {
  std::vector<CheckEntry> checks;
  // max observed defect in the consistency inequalities; the honest E of
  // the instance, used for the cubulation M-floor
  int measured_consistency = 0;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

ValidationReport validate(const HHSInstance& inst, int sample_pairs = 400,
                          std::uint64_t seed = 1);

// Σ_W ⌊d_W(x,y)⌋_s
long distance_formula(const HHSInstance& inst, int x, int y, int s);

struct DistanceFit {
  double K = 1.0;
  double C = 0.0;
  int pairs = 0;
  bool exact = true;  // K=1, C=0 reproduces the ambient metric on the sample
};
DistanceFit fit_distance_formula(const HHSInstance& inst, int s,
                                 int sample_pairs, std::uint64_t seed);

// H_theta(A): ambient vertices whose every projection lies within theta of
// the per-model geodesic hull of the projections of A.
std::vector<int> hull_theta(const HHSInstance& inst, std::span<const int> a,
                            int theta_override = -1);

// Per-domain target sets for realization.
struct Tuple {
  std::vector<std::vector<int>> coords;  // per domain, nonempty
};

struct Realization {
  int vertex = -1;
  int defect = 0;  // achieved max_W d_W(π_W(x), b_W)
};
// Exhaustive argmin of max_W d_W(π_W(x), b_W); ties break by vertex index.
// `target` restricts the candidate set (empty = all ambient vertices).
Realization realize(const HHSInstance& inst, const Tuple& b,
                    std::span<const int> target = {});

// κ-consistency defect of a tuple (max over the consistency inequalities).
int tuple_consistency_defect(const HHSInstance& inst, const Tuple& b);

// Median of the three projections inside per-domain approximating trees,
// then realization.
int coarse_median(const HHSInstance& inst, int x, int y, int z);

// Coordinatewise closest-point projection onto Y followed by realization.
// InputError (naming the domain) if some π_U(Y) is not quasiconvex with
// constant `quasiconvexity` (default E).
int gate_hq(const HHSInstance& inst, int x, std::span<const int> y,
            int quasiconvexity = -1);

bool check_asymphoric(const HHSInstance& inst, int c);
bool check_bounded_orthogonality(const HHSInstance& inst, int q);

}  // namespace hhs
