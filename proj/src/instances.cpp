#include "monodepth/instances.hpp"

#include <algorithm>
#include <stdexcept>

#include "monodepth/decomposition.hpp"

namespace monodepth {

std::string to_string(InstanceFilter f) { return f == InstanceFilter::all ? "all" : "aci"; }

InstanceFilter parse_filter(const std::string& text) {
  if (text == "all") return InstanceFilter::all;
  if (text == "aci") return InstanceFilter::aci;
  throw std::invalid_argument("unknown filter '" + text + "' (expected all or aci)");
}

InstanceGenerator::InstanceGenerator(InstanceSpec spec) : spec_(spec), rng_(spec.seed) {
  if (spec_.n == 0 || spec_.max_m == 0 || spec_.max_exp == 0)
    throw std::invalid_argument("instance spec needs n, max_m and max_exp >= 1");
  if (spec_.retry_budget == 0) throw std::invalid_argument("retry budget must be positive");
}

MonomialIdeal InstanceGenerator::sample() {
  // Modulo reduction keeps the stream identical across standard libraries.
  auto below = [&](std::uint64_t bound) { return rng_() % bound; };
  const std::size_t m = 1 + below(spec_.max_m);
  std::vector<Monomial> gens;
  while (gens.size() < m) {
    ExponentVector e(spec_.n);
    for (auto& x : e) x = static_cast<Exponent>(below(spec_.max_exp + 1));
    Monomial u(std::move(e));
    if (!u.is_unit()) gens.push_back(std::move(u));
  }
  return minimalize(std::move(gens), spec_.n);
}

bool InstanceGenerator::accepts(const MonomialIdeal& ideal) const {
  if (!ideal.is_proper_nonzero()) return false;
  if (spec_.filter == InstanceFilter::aci)
    return ideal.num_generators() == height(ideal) + 1;
  return true;
}

std::optional<MonomialIdeal> InstanceGenerator::next() {
  if (produced_ >= spec_.count) return std::nullopt;
  for (std::size_t attempt = 0; attempt < spec_.retry_budget; ++attempt) {
    MonomialIdeal ideal = sample();
    if (accepts(ideal)) {
      ++produced_;
      return ideal;
    }
  }
  throw std::runtime_error("no instance passed filter '" + to_string(spec_.filter) + "' in " +
                           std::to_string(spec_.retry_budget) + " samples");
}

std::vector<MonomialIdeal> generate_instances(const InstanceSpec& spec) {
  InstanceGenerator gen(spec);
  std::vector<MonomialIdeal> out;
  while (auto ideal = gen.next()) out.push_back(std::move(*ideal));
  return out;
}

namespace {

void extend_antichains(const std::vector<Monomial>& points, std::size_t from,
                       std::vector<Monomial>& chosen, std::size_t n,
                       std::vector<MonomialIdeal>& out) {
  if (!chosen.empty()) out.emplace_back(n, chosen);
  for (std::size_t i = from; i < points.size(); ++i) {
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const Monomial& c) {
      return c.divides(points[i]) || points[i].divides(c);
    });
    if (comparable) continue;
    chosen.push_back(points[i]);
    extend_antichains(points, i + 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MonomialIdeal> enumerate_ideals(std::size_t n, Exponent max_exp) {
  std::size_t box = 1;
  for (std::size_t j = 0; j < n; ++j) {
    box *= static_cast<std::size_t>(max_exp) + 1;
    if (box > 16) throw LimitExceeded("box", "exhaustive enumeration is limited to 16 box points");
  }
  std::vector<Monomial> points;
  ExponentVector e(n, 0);
  for (std::size_t step = 0; step < box; ++step) {
    Monomial u(e);
    if (!u.is_unit()) points.push_back(std::move(u));
    for (std::size_t j = n; j-- > 0;) {
      if (++e[j] <= max_exp) break;
      e[j] = 0;
    }
  }
  std::sort(points.begin(), points.end());
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  extend_antichains(points, 0, chosen, n, out);
  return out;
}

}  // namespace monodepth
