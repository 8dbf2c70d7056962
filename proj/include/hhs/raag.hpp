#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

// Type-level index structure of the RAAG on Γ.  Domains are the nonempty
// vertex subsets Λ (induced-subgraph types, not cosets): Λ ⊑ Λ' iff Λ ⊆ Λ',
// Λ ⊥ Λ' iff Λ ⊆ link(Λ') and Λ' ⊆ link(Λ).  Relations are evaluated on
// masks; only the unboundedness table is materialized.
class IndexStructure {
 public:
  explicit IndexStructure(SimplicialGraph gamma);

  const SimplicialGraph& gamma() const { return gamma_; }
  int vertex_count() const { return gamma_.size(); }
  std::uint64_t domain_count() const { return (1ull << vertex_count()) - 1; }

  bool nested(VertexMask a, VertexMask b) const {  // a ⊑ b
    return mask_subset(a, b);
  }
  bool orthogonal(VertexMask a, VertexMask b) const {
    return mask_subset(b, link_mask(a));
  }
  bool transverse(VertexMask a, VertexMask b) const {
    return a != b && !nested(a, b) && !nested(b, a) && !orthogonal(a, b);
  }
  VertexMask link_mask(VertexMask a) const;

  // 𝒞Λ is treated as unbounded iff Λ is a single vertex or Λ induces a
  // join-irreducible subgraph.
  bool unbounded(VertexMask d) const { return unbounded_[d]; }

 private:
  SimplicialGraph gamma_;
  std::vector<char> unbounded_;  // indexed by mask
};

IndexStructure build_index(const SimplicialGraph& gamma);  // ≤ 20 vertices

// Max size of a pairwise-orthogonal family of unbounded domains, by
// backtracking over the domain set.
int rank_by_enumeration(const IndexStructure& idx);

// rank_by_enumeration, asserted equal to clique_number(Γ).
int rank(const IndexStructure& idx);

// All cardinality-rank pairwise-orthogonal families of unbounded domains,
// members ascending, families lexicographic.
std::vector<std::vector<VertexMask>> complete_support_sets(
    const IndexStructure& idx);

// Union of all complete support sets, ascending.
std::vector<VertexMask> hinge_domains(const IndexStructure& idx);

struct FrakturU {
  std::vector<VertexMask> members;       // 𝔘, ascending
  std::vector<VertexMask> down_closure;  // 𝔘^⊑, ascending
  int nu = 0;                            // the rank used for cardinality
};
// 𝔘 = union of all cardinality-ν pairwise-orthogonal subsets of domains.
// The paper places no unboundedness requirement on members; pass
// require_unbounded=true for the restricted variant.
FrakturU fraktur_u(const IndexStructure& idx, bool require_unbounded = false);

// Iterated collapse: rank, remove 𝔘^⊑, repeat on survivors until empty or
// rank ≤ 1.  Returns [ν_0, ν_1, ...].
std::vector<int> factored_rank_sequence(const IndexStructure& idx);

struct AssumptionReport {
  bool line = false;       // proxy: every hinge domain is unbounded
  bool intersect = false;  // ∀ hinge U ∃ 𝒰1,𝒰2 with 𝒰1∩𝒰2={U}
  bool extend = false;     // rank>2: same for orthogonal pairs {U,V}
  bool extend_vacuous = false;
};
AssumptionReport check_assumptions(const IndexStructure& idx);

struct AutReport {
  std::uint64_t order = 1;
  // Vertex permutations generating Aut(Γ); every index automorphism is
  // induced by one (the domain poset is atomistic, verified below).
  std::vector<std::vector<int>> generators;
  bool all_induced_by_graph_automorphisms = false;
  bool atoms_are_singletons = false;  // ⊑-minimal domains = singletons
  bool generators_verified = false;   // induced maps checked on domain pairs
};
AutReport aut_index(const IndexStructure& idx);  // ≤ 12 vertices

}  // namespace hhs
