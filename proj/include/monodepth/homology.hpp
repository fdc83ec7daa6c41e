#pragma once

// Depth engine: Stanley-Reisner complexes, reduced simplicial homology,
// multigraded Betti numbers by Hochster's formula, and depth(S/I) through
// polarization and Auslander-Buchsbaum.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monodepth/linalg.hpp"
#include "monodepth/monomial.hpp"

namespace monodepth {

// A set of vertices encoded as a bit mask (vertex v <-> bit v).
using VertexSet = std::uint64_t;

struct HomologyLimits {
  std::size_t max_vertices = 20;
  std::size_t max_polarized_vars = 20;
  // Cap on rows * cols of a single boundary matrix.
  std::size_t max_matrix_entries = 1u << 24;
};

// A simplicial complex on vertices 0..n-1 given by its minimal non-faces.
// Vertices that are themselves non-faces are allowed (they are simply absent).
class SimplicialComplex {
 public:
  // Non-faces are pruned to the inclusion-minimal ones. The empty set may not be
  // a non-face.
  SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> non_faces);

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<VertexSet>& minimal_non_faces() const noexcept { return non_faces_; }

  bool is_face(VertexSet f) const noexcept;
  // The induced subcomplex on `sigma`, relabelled onto 0..|sigma|-1.
  SimplicialComplex induced(VertexSet sigma) const;

  // faces[d + 1] lists the (d)-dimensional faces in ascending mask order.
  std::vector<std::vector<VertexSet>> faces_by_dimension(std::size_t max_vertices = 20) const;
  // (f_{-1}, f_0, ..., f_dim)
  std::vector<std::size_t> f_vector(std::size_t max_vertices = 20) const;

 private:
  std::size_t n_;
  std::vector<VertexSet> non_faces_;
};

SimplicialComplex stanley_reisner(const MonomialIdeal& squarefree);

// Ranks of H̃_i for i = -1..dim (entry i + 1), computed from boundary matrices.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                                const HomologyLimits& limits = {});

// Same homology, computed through Alexander duality: H̃_i(Δ) ≅ H̃^{|V|-i-3}(Δ^∨),
// with Δ^∨ replaced by the nerve of its facets. The result is indexed like
// reduced_homology_ranks but padded to i = -1..n-1.
std::vector<std::size_t> reduced_homology_ranks_dual(const SimplicialComplex& c, Field field,
                                                     const HomologyLimits& limits = {});

enum class HochsterRoute { automatic, direct, dual_nerve };

struct BettiEntry {
  std::size_t i = 0;      // homological degree in the resolution of S/I
  VertexSet sigma = 0;    // squarefree multidegree
  std::size_t value = 0;  // nonzero

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiTable {
  std::size_t num_vars = 0;
  Field field;
  std::vector<BettiEntry> entries;  // nonzero entries, sorted by (i, sigma)

  std::size_t projective_dimension() const;
  // Total Betti number beta_i.
  std::size_t total(std::size_t i) const;
};

// β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ). Only σ in the lcm lattice of G(I) can
// contribute; any other induced subcomplex is a cone.
BettiTable betti_numbers(const MonomialIdeal& squarefree, Field field,
                         const HomologyLimits& limits = {},
                         HochsterRoute route = HochsterRoute::automatic);

struct DepthReport {
  std::size_t num_vars = 0;
  std::size_t depth_quotient = 0;
  std::size_t pd_quotient = 0;
  std::size_t s = 0;  // num_vars - depth_quotient
  Field field;
  std::size_t polarized_vars = 0;
  std::optional<BettiTable> betti;  // of the polarization, on request

  // depth of I as a module: depth(S/I) + 1.
  std::size_t depth_ideal() const noexcept { return depth_quotient + 1; }
};

DepthReport depth_quotient(const MonomialIdeal& ideal, Field field = {},
                           const HomologyLimits& limits = {}, bool keep_betti = false);

}  // namespace monodepth
