#include <benchmark/benchmark.h>

#include "arthur/induction.hpp"
#include "arthur/sequences.hpp"

using namespace arthur;

namespace {

// [n,0], [n-1,0], ..., [1,0]: every pair is nested, so the orbit is large.
ZSeq descending_chain(int n) {
  ZSeq s;
  for (int k = n; k >= 1; --k) s.emplace_back(ZSegment{k, 0}, 0, 1);
  return s;
}

// Same supports with the first (l, eta) data that make the sequence non-vanishing.
ZSeq nonvanishing_chain(int n) {
  ZSeq s = descending_chain(n);
  std::vector<std::vector<VExtZSeg>> choices;
  for (const auto& e : s) choices.push_back(enumerate_eseg(e.support()));
  std::vector<std::size_t> pick(s.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = choices[i][pick[i]];
    if (nv_seq(s)) return s;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) return descending_chain(n);
  }
}

const CuspidalRegistry& registry() {
  static const CuspidalRegistry reg({{"chi", 1, SelfDuality::Orthogonal, ""}});
  return reg;
}

// Grows the empty SO_odd multi-segment by repeated induction, keeping the
// first component each time.
ExtMultiSegment grown(int steps) {
  ExtMultiSegment E;
  for (int i = 0; i < steps; ++i) E = induce(E, registry(), "chi", 2 * (i % 2) + 2, 1).components.front();
  return E;
}

}  // namespace

static void BM_Orbit(benchmark::State& state) {
  const ZSeq s = descending_chain(static_cast<int>(state.range(0)));
  std::size_t size = 0;
  for (auto _ : state) {
    size = orbit(s).members.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["orbit"] = static_cast<double>(size);
}
BENCHMARK(BM_Orbit)->DenseRange(2, 5);

static void BM_NvSeq(benchmark::State& state) {
  const ZSeq s = nonvanishing_chain(static_cast<int>(state.range(0)));
  const NvOptions opt{kDefaultCap, state.range(1) != 0};
  bool nv = false;
  for (auto _ : state) {
    nv = nv_seq(s, opt);
    benchmark::DoNotOptimize(nv);
  }
  state.counters["nonzero"] = nv ? 1 : 0;
}
BENCHMARK(BM_NvSeq)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->ArgNames({"n", "shortcut"});

static void BM_Induce(benchmark::State& state) {
  const ExtMultiSegment E = grown(static_cast<int>(state.range(0)));
  std::size_t parts = 0;
  for (auto _ : state) {
    parts = induce(E, registry(), "chi", 3, 2).components.size();
    benchmark::DoNotOptimize(parts);
  }
  state.counters["components"] = static_cast<double>(parts);
}
BENCHMARK(BM_Induce)->DenseRange(0, 4);
BENCHMARK_MAIN();
