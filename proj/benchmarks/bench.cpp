// Microbenchmarks for the hot paths: interpreting machines, enumerating
// computation paths, logarithm enclosures, and tuple coding.

#include <benchmark/benchmark.h>

#include "rbss/enclose.hpp"
#include "rbss/interp.hpp"
#include "rbss/machine.hpp"
#include "rbss/paths.hpp"
#include "rbss/rational.hpp"
#include "rbss/sigma.hpp"

using namespace rbss;

namespace {

const char* kSq =
    "machine sq\n"
    "input 1 -> body\n"
    "node body compute x1 := x1^2 goto done\n"
    "node done output [1]\n";

const char* kSum =
    "machine sum\n"
    "input * -> widen\n"
    "node widen shift right goto init\n"
    "node init compute x0 := x1, x1 := 0 goto test\n"
    "node test branch x0 - 1/2 ? fold : fin\n"
    "node fold compute x1 := x0 - 1, x2 := x1 + x2 goto slide\n"
    "node slide shift left goto test\n"
    "node fin output [1]\n";

RFin ramp(long n) {
  RFin in;
  for (long i = 1; i <= n; ++i) in.push_back(Rat(i, 7));
  return in;
}

}  // namespace

static void BM_RunStraightLine(benchmark::State& state) {
  Machine m = parse_machine(kSq);
  RFin in{Rat(3)};
  for (auto _ : state) {
    RunResult r = run(m, in, 1000);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RunStraightLine);

static void BM_RunFoldLoop(benchmark::State& state) {
  Machine m = parse_machine(kSum);
  RFin in = ramp(state.range(0));
  for (auto _ : state) {
    RunResult r = run(m, in, 1000000);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunFoldLoop)->Arg(8)->Arg(64)->Arg(256)->Complexity();

static void BM_EnumeratePaths(benchmark::State& state) {
  Machine m = parse_machine(kSum);
  for (auto _ : state) {
    auto ps = enumerate_paths(m, 3, state.range(0));
    benchmark::DoNotOptimize(ps);
  }
}
BENCHMARK(BM_EnumeratePaths)->Arg(8)->Arg(12)->Arg(16);

static void BM_LnBounds(benchmark::State& state) {
  Rat two(2);
  for (auto _ : state) {
    Enclosure e = ln_bounds(two, state.range(0));
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_LnBounds)->Arg(16)->Arg(256)->Arg(4096);

static void BM_LnCert(benchmark::State& state) {
  Rat two(2), eps(1, 100000);
  for (auto _ : state) {
    Enclosure e = ln_cert(two, eps);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_LnCert);

static void BM_TupleCode(benchmark::State& state) {
  RFin in = ramp(state.range(0));
  for (auto _ : state) {
    HFRef c = tuple_code(in);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_TupleCode)->Arg(4)->Arg(16)->Arg(64);

static void BM_TupleDecode(benchmark::State& state) {
  HFRef code = tuple_code(ramp(state.range(0)));
  for (auto _ : state) {
    auto t = tuple_decode(code);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TupleDecode)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
