#include "monodepth/hvz.hpp"

#include <algorithm>

namespace monodepth {

namespace {

// Mixed-radix index of a point of the box [0, g]; coordinate 0 is most significant,
// so index order is lexicographic order.
class BoxIndex {
 public:
  explicit BoxIndex(const ExponentVector& g) : g_(g), stride_(g.size(), 1) {
    for (std::size_t j = g.size(); j-- > 0;) {
      stride_[j] = size_;
      size_ *= static_cast<std::size_t>(g[j]) + 1;
    }
  }
  std::size_t size() const noexcept { return size_; }
  std::size_t index(const ExponentVector& a) const {
    std::size_t i = 0;
    for (std::size_t j = 0; j < a.size(); ++j) i += a[j] * stride_[j];
    return i;
  }
  ExponentVector point(std::size_t i) const {
    ExponentVector a(g_.size());
    for (std::size_t j = 0; j < g_.size(); ++j) {
      a[j] = static_cast<Exponent>(i / stride_[j]);
      i %= stride_[j];
    }
    return a;
  }

 private:
  ExponentVector g_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

std::size_t checked_box_size(const ExponentVector& g, std::size_t cap) {
  std::size_t size = 1;
  for (Exponent e : g) {
    const std::size_t side = static_cast<std::size_t>(e) + 1;
    if (size > cap / side) {
      throw LimitExceeded("poset", "characteristic poset box exceeds " + std::to_string(cap) +
                                       " points");
    }
    size *= side;
  }
  return size;
}

// Calls f(c) for every c with a <= c <= b.
template <typename F>
void for_each_in_interval(const ExponentVector& a, const ExponentVector& b, F&& f) {
  ExponentVector c = a;
  while (true) {
    f(c);
    std::size_t j = c.size();
    while (j-- > 0) {
      if (c[j] < b[j]) {
        ++c[j];
        break;
      }
      c[j] = a[j];
    }
    if (j == static_cast<std::size_t>(-1)) return;
  }
}

// Knuth's dancing links over columns = poset points, rows = candidate intervals.
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns) : columns_(columns) {
    const std::size_t root = columns;
    nodes_.resize(columns + 1);
    for (std::size_t c = 0; c <= columns; ++c) {
      auto& h = nodes_[c];
      h.left = c == 0 ? root : c - 1;
      h.right = c == root ? 0 : c + 1;
      h.up = h.down = c;
      h.column = c;
    }
    if (columns == 0) nodes_[root].left = nodes_[root].right = root;
    sizes_.assign(columns, 0);
  }

  void add_row(const std::vector<std::size_t>& cols) {
    const std::size_t row = row_count_++;
    std::size_t first = nodes_.size();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::size_t c = cols[k];
      const std::size_t id = nodes_.size();
      Node n;
      n.column = c;
      n.row = row;
      n.up = nodes_[c].up;
      n.down = c;
      n.left = k == 0 ? id : id - 1;
      n.right = first;
      nodes_.push_back(n);
      nodes_[nodes_[c].up].down = id;
      nodes_[c].up = id;
      if (k > 0) nodes_[id - 1].right = id;
      nodes_[first].left = id;
      ++sizes_[c];
    }
  }

  // Finds the first exact cover; rows chosen are appended to `solution`.
  Feasibility solve(std::vector<std::size_t>& solution,
                    std::optional<std::chrono::steady_clock::time_point> deadline) {
    deadline_ = deadline;
    nodes_visited_ = 0;
    timed_out_ = false;
    const bool found = search(solution);
    if (found) return Feasibility::feasible;
    return timed_out_ ? Feasibility::timed_out : Feasibility::infeasible;
  }

 private:
  struct Node {
    std::size_t left = 0, right = 0, up = 0, down = 0, column = 0, row = 0;
  };

  void cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --sizes_[nodes_[j].column];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++sizes_[nodes_[j].column];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  bool search(std::vector<std::size_t>& solution) {
    const std::size_t root = columns_;
    if (nodes_[root].right == root) return true;
    if (deadline_ && (++nodes_visited_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;

    // Fewest remaining candidates first; ties go to the lexicographically first point.
    std::size_t best = root;
    for (std::size_t c = nodes_[root].right; c != root; c = nodes_[c].right) {
      if (best == root || sizes_[c] < sizes_[best]) best = c;
      if (sizes_[best] == 0) return false;
    }
    cover(best);
    for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
      solution.push_back(nodes_[r].row);
      for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
      if (search(solution)) return true;
      for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
      solution.pop_back();
      if (timed_out_) break;
    }
    uncover(best);
    return false;
  }

  std::size_t columns_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> sizes_;
  std::size_t row_count_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t nodes_visited_ = 0;
  bool timed_out_ = false;
};

// Enumerates k-subsets of `pool` in lexicographic order of positions.
template <typename F>
void for_each_subset(const std::vector<VarIndex>& pool, std::size_t k, F&& f) {
  if (k > pool.size()) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<VarIndex> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[pos[i]];
    f(chosen);
    std::size_t i = k;
    while (i-- > 0) {
      if (pos[i] < pool.size() - k + i) {
        ++pos[i];
        for (std::size_t t = i + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

bool CharacteristicPoset::contains(const ExponentVector& a) const {
  return std::binary_search(points.begin(), points.end(), a);
}

std::size_t CharacteristicPoset::rho(const ExponentVector& b) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (b[j] == g[j]) ++r;
  return r;
}

std::size_t CharacteristicPoset::box_size() const { return BoxIndex(g).size(); }

std::size_t IntervalPartition::achieved_sdepth(const CharacteristicPoset& poset) const {
  std::size_t s = kInfiniteSdepth;
  for (const auto& iv : intervals) s = std::min(s, poset.rho(iv.b));
  return s;
}

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, ModuleMode mode,
                                         const HvzLimits& limits) {
  CharacteristicPoset p;
  p.mode = mode;
  p.g = ideal.is_zero() ? ExponentVector(ideal.num_vars(), 0) : lcm_exponents(ideal);
  checked_box_size(p.g, limits.max_poset);
  const BoxIndex box(p.g);
  for (std::size_t i = 0; i < box.size(); ++i) {
    ExponentVector a = box.point(i);
    const bool in_ideal = ideal.contains(Monomial(a));
    if (in_ideal == (mode == ModuleMode::ideal)) p.points.push_back(std::move(a));
  }
  return p;
}

bool is_valid_partition(const CharacteristicPoset& poset, const IntervalPartition& partition) {
  const BoxIndex box(poset.g);
  std::vector<int> hits(box.size(), 0);
  for (const auto& iv : partition.intervals) {
    if (iv.a.size() != poset.g.size() || iv.b.size() != poset.g.size()) return false;
    for (std::size_t j = 0; j < iv.a.size(); ++j)
      if (iv.a[j] > iv.b[j] || iv.b[j] > poset.g[j]) return false;
    bool ok = true;
    for_each_in_interval(iv.a, iv.b, [&](const ExponentVector& c) {
      if (!poset.contains(c)) ok = false;
      ++hits[box.index(c)];
    });
    if (!ok) return false;
  }
  for (const auto& p : poset.points)
    if (hits[box.index(p)] != 1) return false;
  std::size_t total = 0;
  for (int h : hits) total += static_cast<std::size_t>(h);
  return total == poset.points.size();
}

Feasibility partition_with_min_rho(const CharacteristicPoset& poset, std::size_t d,
                                   IntervalPartition& out,
                                   std::optional<std::chrono::steady_clock::time_point> deadline) {
  out.intervals.clear();
  const std::size_t n = poset.g.size();
  if (d > n) return poset.points.empty() ? Feasibility::feasible : Feasibility::infeasible;

  const BoxIndex box(poset.g);
  std::vector<std::int64_t> column_of(box.size(), -1);
  for (std::size_t i = 0; i < poset.points.size(); ++i)
    column_of[box.index(poset.points[i])] = static_cast<std::int64_t>(i);

  // An interval with rho(b) > d splits into pieces with rho = d and singletons
  // [a, a] with rho(a) > d, so only tops b = a raised to g on exactly
  // max(0, d - rho(a)) unsaturated coordinates are needed.
  ExactCover dlx(poset.points.size());
  std::vector<Interval> rows;
  std::vector<std::size_t> cols;
  for (const auto& a : poset.points) {
    std::vector<VarIndex> unsaturated;
    for (VarIndex j = 0; j < n; ++j)
      if (a[j] < poset.g[j]) unsaturated.push_back(j);
    const std::size_t have = n - unsaturated.size();
    const std::size_t need = d > have ? d - have : 0;
    for_each_subset(unsaturated, need, [&](const std::vector<VarIndex>& raise) {
      ExponentVector b = a;
      for (VarIndex j : raise) b[j] = poset.g[j];
      // Ideal points are upward closed and quotient points downward closed.
      if (column_of[box.index(b)] < 0) return;
      cols.clear();
      bool inside = true;
      for_each_in_interval(a, b, [&](const ExponentVector& c) {
        const auto col = column_of[box.index(c)];
        if (col < 0) inside = false;
        cols.push_back(static_cast<std::size_t>(col));
      });
      if (!inside) return;
      dlx.add_row(cols);
      rows.push_back({a, std::move(b)});
    });
  }

  std::vector<std::size_t> chosen;
  const Feasibility f = dlx.solve(chosen, deadline);
  if (f == Feasibility::feasible) {
    for (std::size_t r : chosen) out.intervals.push_back(rows[r]);
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
  }
  return f;
}

SdepthResult exact_sdepth(const MonomialIdeal& ideal, ModuleMode mode, const HvzLimits& limits) {
  SdepthResult result;
  result.poset = characteristic_poset(ideal, mode, limits);
  if (result.poset.points.empty()) {
    result.value = kInfiniteSdepth;
    return result;
  }
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (limits.timeout.count() > 0) deadline = std::chrono::steady_clock::now() + limits.timeout;

  const std::size_t n = ideal.num_vars();
  for (std::size_t d = n + 1; d-- > 0;) {
    IntervalPartition witness;
    // Level 0 always admits the all-singletons partition; never let it time out.
    const auto f = partition_with_min_rho(result.poset, d, witness, d == 0 ? std::nullopt : deadline);
    if (f == Feasibility::timed_out) {
      result.proved = false;
      continue;
    }
    if (f == Feasibility::feasible) {
      result.value = d;
      result.witness = std::move(witness);
      return result;
    }
  }
  throw std::logic_error("exact_sdepth: no feasible level, not even 0");
}

StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition,
                                                const CharacteristicPoset& poset,
                                                const MonomialIdeal& ideal) {
  StanleyDecomposition d{ideal, poset.mode, {}};
  for (const auto& iv : partition.intervals) {
    StanleySpace sp{Monomial(iv.a), {}};
    for (VarIndex j = 0; j < iv.b.size(); ++j)
      if (iv.b[j] == poset.g[j]) sp.vars.push_back(j);
    d.spaces.push_back(std::move(sp));
  }
  return d;
}

}  // namespace monodepth
