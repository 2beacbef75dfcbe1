#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <utility>
#include <vector>

#include "steinred/instance.hpp"

namespace steinred::testing {

inline std::filesystem::path data_dir() { return STEINRED_DATA_DIR; }

struct EdgeSpec {
  VertexId a, b;
  Cost cost;
};

inline PcInstance make_instance(std::size_t n, const std::vector<EdgeSpec>& edges,
                                const std::vector<std::pair<VertexId, Cost>>& prizes) {
  PcInstance inst(n);
  for (const auto& e : edges) inst.add_edge(e.a, e.b, e.cost);
  for (const auto& [v, p] : prizes) inst.set_prize(v, p);
  return inst;
}

/// a - t - b with costs 3, 3 and p(t) = 4.
inline PcInstance path3() { return make_instance(3, {{0, 1, 3}, {1, 2, 3}}, {{1, 4}}); }

/// Ids: t1 = 0, t2 = 1, t3 = 2, s1 = 3, s2 = 4, t4 = 5, t5 = 6.
namespace star7_ids {
inline constexpr VertexId t1 = 0, t2 = 1, t3 = 2, s1 = 3, s2 = 4, t4 = 5, t5 = 6;
}

inline PcInstance star7() {
  using namespace star7_ids;
  return make_instance(7,
                       {{t1, t2, 3}, {t1, t3, 3}, {s1, t2, 3}, {s2, t3, 3}, {t1, s1, 2}, {t1, s2, 3},
                        {s1, t4, 1}, {s2, t5, 3}, {t4, t5, 1}},
                       {{t1, 5}, {t2, 5}, {t3, 5}, {t4, 5}, {t5, 5}});
}

/// Ids: big = 0 (p = 7), s1 = 1, s3 = 2, small = 3 (p = 2.5).
inline PcInstance heavy4() {
  return make_instance(4, {{0, 1, 0.6}, {1, 2, 1.5}, {2, 3, 1.1}}, {{0, 7}, {3, 2.5}});
}

/// Hub v0 = 0, rim v1..v6 = 1..6.
inline PcInstance wheel(Cost eps = 0.5) {
  return make_instance(7,
                       {{0, 2, 1}, {0, 6, 1}, {0, 4, 1}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {5, 6, 2},
                        {1, 2, 2}, {1, 6, 2}},
                       {{0, 4}, {1, 4}, {3, 4}, {5, 4}, {4, eps}});
}

/// Connected random instance: |V| uniform in [min_v, max_v], one edge
/// probability in [0.3, 0.7] per instance, integer costs 1..10, integer
/// prizes 0..10. Resamples until connected.
inline PcInstance random_instance(std::uint64_t seed, std::size_t min_v = 6, std::size_t max_v = 14) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_v, max_v);
  std::uniform_real_distribution<double> density(0.3, 0.7);
  std::uniform_int_distribution<int> cost(1, 10);
  std::uniform_int_distribution<int> prize(0, 10);
  const std::size_t n = size(rng);
  const double p = density(rng);
  while (true) {
    PcInstance inst(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng)) inst.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b), cost(rng));
    for (std::size_t v = 0; v < n; ++v) inst.set_prize(static_cast<VertexId>(v), prize(rng));
    if (inst.connected()) return inst;
  }
}

/// Same instance with the highest-prize terminals fixed (at most `count`).
inline PcInstance with_fixed(PcInstance inst, std::size_t count) {
  auto terms = inst.terminals();
  std::stable_sort(terms.begin(), terms.end(),
                   [&](VertexId a, VertexId b) { return inst.prize(a) > inst.prize(b); });
  for (std::size_t i = 0; i < terms.size() && i < count; ++i) inst.set_fixed(terms[i]);
  return inst;
}

}  // namespace steinred::testing
