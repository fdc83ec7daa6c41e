#include "monodepth/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace monodepth {

namespace {

bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

std::size_t size_of(VertexSet a) { return static_cast<std::size_t>(std::popcount(a)); }

VertexSet full_set(std::size_t n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

void check_vertices(std::size_t n, const HomologyLimits& limits) {
  if (n > limits.max_vertices || n > 30) {
    throw LimitExceeded("vertices", "complex has " + std::to_string(n) +
                                        " vertices, cap is " +
                                        std::to_string(std::min<std::size_t>(limits.max_vertices, 30)));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> non_faces)
    : n_(num_vertices) {
  if (n_ > 63) throw LimitExceeded("vertices", "at most 63 vertices are representable");
  const VertexSet all = full_set(n_);
  for (VertexSet f : non_faces) {
    if (f == 0) throw std::invalid_argument("the empty set cannot be a non-face");
    if (!subset_of(f, all)) throw DimensionError("non-face uses a vertex outside the complex");
  }
  std::sort(non_faces.begin(), non_faces.end(), [](VertexSet a, VertexSet b) {
    return size_of(a) != size_of(b) ? size_of(a) < size_of(b) : a < b;
  });
  non_faces.erase(std::unique(non_faces.begin(), non_faces.end()), non_faces.end());
  for (VertexSet f : non_faces) {
    bool minimal = std::none_of(non_faces_.begin(), non_faces_.end(),
                                [&](VertexSet g) { return subset_of(g, f); });
    if (minimal) non_faces_.push_back(f);
  }
  std::sort(non_faces_.begin(), non_faces_.end());
}

bool SimplicialComplex::is_face(VertexSet f) const noexcept {
  if (!subset_of(f, full_set(n_))) return false;
  return std::none_of(non_faces_.begin(), non_faces_.end(),
                      [&](VertexSet g) { return subset_of(g, f); });
}

SimplicialComplex SimplicialComplex::induced(VertexSet sigma) const {
  std::vector<std::size_t> relabel(n_, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n_; ++v)
    if (sigma >> v & 1) relabel[v] = next++;
  std::vector<VertexSet> nf;
  for (VertexSet g : non_faces_) {
    if (!subset_of(g, sigma)) continue;
    VertexSet h = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (g >> v & 1) h |= VertexSet{1} << relabel[v];
    nf.push_back(h);
  }
  return SimplicialComplex(next, std::move(nf));
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dimension(
    std::size_t max_vertices) const {
  HomologyLimits limits;
  limits.max_vertices = max_vertices;
  check_vertices(n_, limits);
  std::vector<std::vector<VertexSet>> faces(n_ + 1);
  const VertexSet end = VertexSet{1} << n_;
  for (VertexSet f = 0; f < end; ++f)
    if (is_face(f)) faces[size_of(f)].push_back(f);
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
  return faces;
}

std::vector<std::size_t> SimplicialComplex::f_vector(std::size_t max_vertices) const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_by_dimension(max_vertices)) f.push_back(level.size());
  return f;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& squarefree) {
  if (!squarefree.is_proper_nonzero())
    throw DegenerateIdealError("stanley_reisner: ideal must be proper and nonzero");
  if (!squarefree.is_squarefree())
    throw std::invalid_argument("stanley_reisner: ideal is not squarefree (polarize first)");
  if (squarefree.num_vars() > 63)
    throw LimitExceeded("vertices", "at most 63 variables are representable");
  std::vector<VertexSet> nf;
  for (const auto& g : squarefree.generators()) {
    VertexSet m = 0;
    for (VarIndex j : g.support()) m |= VertexSet{1} << j;
    nf.push_back(m);
  }
  return SimplicialComplex(squarefree.num_vars(), std::move(nf));
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                                const HomologyLimits& limits) {
  const auto faces = c.faces_by_dimension(limits.max_vertices);
  // faces[k] holds faces with k vertices, i.e. dimension k - 1.
  const std::size_t levels = faces.size();
  // boundary_rank[k] = rank of ∂ : C_{k-1} -> C_{k-2} (faces with k vertices to k - 1).
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  std::vector<std::int32_t> index(std::size_t{1} << c.num_vertices(), -1);
  for (const auto& level : faces)
    for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<std::int32_t>(i);

  for (std::size_t k = 1; k < levels; ++k) {
    const auto& rows = faces[k - 1];
    const auto& cols = faces[k];
    if (rows.empty() || cols.empty()) continue;
    if (rows.size() * cols.size() > limits.max_matrix_entries) {
      throw LimitExceeded("matrix", "boundary matrix " + std::to_string(rows.size()) + "x" +
                                        std::to_string(cols.size()) + " exceeds cap");
    }
    IntMatrix d(rows.size(), cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      const VertexSet f = cols[col];
      int sign = 1;
      for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        if (!(f >> v & 1)) continue;
        d(static_cast<std::size_t>(index[f & ~(VertexSet{1} << v)]), col) = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = rank(d, field);
  }
  std::vector<std::size_t> ranks(levels);
  for (std::size_t k = 0; k < levels; ++k)
    ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return ranks;
}

std::vector<std::size_t> reduced_homology_ranks_dual(const SimplicialComplex& c, Field field,
                                                     const HomologyLimits& limits) {
  const std::size_t n = c.num_vertices();
  std::vector<std::size_t> ranks(n + 1, 0);  // i = -1..n-1
  const auto& nf = c.minimal_non_faces();
  VertexSet covered = 0;
  for (VertexSet g : nf) covered |= g;
  if (n == 0) {
    ranks[0] = 1;  // Δ = {∅}
    return ranks;
  }
  if (covered != full_set(n)) return ranks;  // cone over an uncovered vertex
  if (nf.size() == 1) {
    ranks[n - 1] = 1;  // boundary of the simplex on all n vertices: H̃_{n-2}
    return ranks;
  }
  // Nerve of the facets V \ N of the Alexander dual: a set A of non-faces spans a
  // nerve simplex iff their union misses some vertex.
  const std::size_t r = nf.size();
  check_vertices(r, limits);
  std::vector<VertexSet> nerve_non_faces;
  for (VertexSet a = 1; a < (VertexSet{1} << r); ++a) {
    VertexSet u = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (a >> i & 1) u |= nf[i];
    if (u == full_set(n)) nerve_non_faces.push_back(a);
  }
  const auto nerve_ranks =
      reduced_homology_ranks(SimplicialComplex(r, std::move(nerve_non_faces)), field, limits);
  // H̃_i(Δ) = H̃_{n-i-3}(nerve); nerve_ranks[j + 1] is H̃_j.
  for (std::size_t idx = 0; idx <= n; ++idx) {
    const long i = static_cast<long>(idx) - 1;
    const long j = static_cast<long>(n) - i - 3;
    if (j >= -1 && static_cast<std::size_t>(j + 1) < nerve_ranks.size())
      ranks[idx] = nerve_ranks[static_cast<std::size_t>(j + 1)];
  }
  return ranks;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& e : entries) pd = std::max(pd, e.i);
  return pd;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t t = 0;
  for (const auto& e : entries)
    if (e.i == i) t += e.value;
  return t;
}

BettiTable betti_numbers(const MonomialIdeal& squarefree, Field field,
                         const HomologyLimits& limits, HochsterRoute route) {
  const SimplicialComplex delta = stanley_reisner(squarefree);
  const std::size_t n = delta.num_vertices();
  if (n > limits.max_polarized_vars) {
    throw LimitExceeded("polarized-vars", "ring has " + std::to_string(n) +
                                              " variables, cap is " +
                                              std::to_string(limits.max_polarized_vars));
  }
  const auto& gens = delta.minimal_non_faces();

  std::set<VertexSet> lattice{0};
  for (VertexSet g : gens) {
    std::vector<VertexSet> grown;
    for (VertexSet s : lattice) grown.push_back(s | g);
    lattice.insert(grown.begin(), grown.end());
  }

  BettiTable table;
  table.num_vars = n;
  table.field = field;
  for (VertexSet sigma : lattice) {
    const SimplicialComplex restricted = delta.induced(sigma);
    const std::size_t size = size_of(sigma);
    bool use_dual = false;
    switch (route) {
      case HochsterRoute::automatic:
        use_dual = restricted.minimal_non_faces().size() < size;
        break;
      case HochsterRoute::direct:
        break;
      case HochsterRoute::dual_nerve:
        use_dual = true;
        break;
    }
    const auto ranks = use_dual ? reduced_homology_ranks_dual(restricted, field, limits)
                                : reduced_homology_ranks(restricted, field, limits);
    // ranks[idx] is H̃_{idx-1}; β_{i,σ} with |σ| - i - 1 = idx - 1.
    for (std::size_t idx = 0; idx < ranks.size(); ++idx) {
      if (ranks[idx] == 0 || idx > size) continue;
      table.entries.push_back({size - idx, sigma, ranks[idx]});
    }
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.sigma < b.sigma;
  });
  return table;
}

DepthReport depth_quotient(const MonomialIdeal& ideal, Field field, const HomologyLimits& limits,
                           bool keep_betti) {
  if (!ideal.is_proper_nonzero())
    throw DegenerateIdealError("depth_quotient: ideal must be proper and nonzero");
  Polarization pol = polarize(ideal);
  const std::size_t npol = pol.ideal.num_vars();
  if (npol > limits.max_polarized_vars) {
    throw LimitExceeded("polarized-vars", "polarization has " + std::to_string(npol) +
                                              " variables, cap is " +
                                              std::to_string(limits.max_polarized_vars));
  }
  BettiTable table = betti_numbers(pol.ideal, field, limits);
  DepthReport r;
  r.num_vars = ideal.num_vars();
  r.field = field;
  r.polarized_vars = npol;
  r.pd_quotient = table.projective_dimension();
  // Polarization preserves pd; depth drops by exactly the added regular sequence.
  const std::size_t depth_pol = npol - r.pd_quotient;
  r.depth_quotient = depth_pol - pol.added_vars;
  r.s = r.num_vars - r.depth_quotient;
  if (r.depth_quotient + r.pd_quotient != r.num_vars)
    throw std::logic_error("Auslander-Buchsbaum identity failed");
  if (keep_betti) r.betti = std::move(table);
  return r;
}

}  // namespace monodepth
