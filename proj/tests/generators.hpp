#pragma once

#include "planeval/flagval.hpp"
#include "planeval/okbody.hpp"
#include "planeval/oracle.hpp"

#include <optional>
#include <random>
#include <vector>

namespace gen {

using namespace planeval;

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return uniform_below(rng, n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  // Satellite probability in {0, 1/10, ..., 9/10}.
  ProximityCluster cluster(std::size_t lo, std::size_t hi) {
    return random_cluster(between(lo, hi), make_rational(below(10), 10), rng);
  }

  static std::vector<FlagSpec> flags(const ProximityCluster& c) {
    PointId r = c.size();
    std::vector<FlagSpec> out{FlagSpec::free(r)};
    if (r >= 2) {
      auto graph = dual_graph(c, r);
      for (PointId eta : graph.neighbors(r)) out.push_back(FlagSpec::satellite(r, eta));
    }
    return out;
  }

  FlagSpec flag(const ProximityCluster& c) {
    auto fs = flags(c);
    return fs[below(fs.size())];
  }

  std::optional<FlagSpec> satellite_flag(const ProximityCluster& c) {
    auto fs = flags(c);
    if (fs.size() == 1) return std::nullopt;
    return fs[1 + below(fs.size() - 1)];
  }

  // Sum of one or two curvettes of the extended cluster whose points lie on
  // the same side of the limit graph.
  BranchSpec branch(const ExceptionalValuation& val) {
    PointId N = val.r() + 1 + below(3);
    auto ext = val.extended_cluster(N);
    PointId j1 = between(1, N);
    std::vector<std::pair<PointId, Integer>> parts{{j1, Integer(between(1, 3))}};
    if (coin()) {
      std::vector<PointId> same;
      for (PointId j = 1; j <= N; ++j) {
        if (j != j1 && val.far_side(j) == val.far_side(j1)) same.push_back(j);
      }
      if (!same.empty()) parts.push_back({same[below(same.size())], Integer(between(1, 3))});
    }
    std::vector<Integer> mults;
    for (auto& [j, a] : parts) {
      auto m = multiplicity_sequence(ext, j);
      if (mults.size() < m.size()) mults.resize(m.size(), 0);
      for (std::size_t k = 0; k < m.size(); ++k) mults[k] += a * m[k];
    }
    return BranchSpec{mults};
  }

  CurveSpec curve(const ExceptionalValuation& val, std::size_t branches) {
    CurveSpec c{1, {}};
    for (std::size_t k = 0; k < branches; ++k) c.branches.push_back(branch(val));
    return c;
  }

  // Random initial free chain 1..s usable as a line support, if any.
  std::optional<std::vector<PointId>> line_support(const ProximityCluster& c) {
    PointId r = c.size();
    if (r < 2) return std::nullopt;
    PointId smax = 1;
    while (smax + 1 <= r && !c.is_satellite(smax + 1)) ++smax;
    if (smax < 2) return std::nullopt;
    PointId s = between(2, smax);
    std::vector<PointId> sup;
    for (PointId k = 1; k <= s; ++k) sup.push_back(k);
    return sup;
  }

  struct NpiInput {
    ProximityCluster cluster;
    std::vector<PointId> support;
  };

  NpiInput npi_input(std::size_t lo, std::size_t hi) {
    for (;;) {
      auto c = random_cluster(between(lo, hi), make_rational(below(8), 10), rng);
      auto sup = line_support(c);
      if (!sup) continue;
      if (check_npi(c, c.size(), *sup).is_npi) return {c, *sup};
    }
  }
};

}  // namespace gen
