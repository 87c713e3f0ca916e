#include <fstream>
#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "ordfuse/dempster.hpp"
#include "ordfuse/document.hpp"
#include "ordfuse/fusion.hpp"
#include "ordfuse/mrbf.hpp"

namespace {

using namespace ordfuse;

EvidenceDocument load(const char* name) {
  std::ifstream in(std::string(ORDFUSE_DATA_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_evidence_document(s.str());
}

void BM_Pipeline(benchmark::State& state) {
  const auto doc = load("example1.json");
  for (auto _ : state) benchmark::DoNotOptimize(pipeline(doc.evidences, doc.config));
}
BENCHMARK(BM_Pipeline);

MassFunction dense_bpa(const Frame& f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  MassFunction::Map map;
  double total = 0.0;
  for (std::uint64_t bits = 1; bits <= f.universe().bits(); ++bits) {
    total += map[Proposition::from_bits(bits)] = u(rng);
  }
  for (auto& [p, m] : map) m /= total;
  return MassFunction(f, std::move(map));
}

void BM_Combine(benchmark::State& state) {
  std::vector<std::string> labels;
  for (int i = 0; i < state.range(0); ++i) labels.push_back("x" + std::to_string(i));
  const Frame f(labels);
  std::mt19937_64 rng(1);
  const auto m1 = dense_bpa(f, rng);
  const auto m2 = dense_bpa(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(combine(m1, m2));
}
BENCHMARK(BM_Combine)->DenseRange(2, 8, 2);

void BM_Expand(benchmark::State& state) {
  const auto dims = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(3.0, 0.4, 0.5, dims));
}
BENCHMARK(BM_Expand)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
