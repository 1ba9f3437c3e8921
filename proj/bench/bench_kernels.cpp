// Parallel kernels against their serial references. With OMP_NUM_THREADS=1
// the difference is the scheduling overhead alone.

#include <benchmark/benchmark.h>

#include "endslab/ball.hpp"
#include "endslab/ends.hpp"
#include "endslab/wreath.hpp"

using namespace endslab;

namespace {
  struct Case {
    PointedAction   action;
    SymmetricGenSet gens;
  };

  Case free_group() {
    auto f2 = Group::free(2);
    return {translation_action(f2), standard_gens(f2)};
  }

  Case lattice3() {
    auto z3 = Group::lattice(3);
    return {translation_action(z3), standard_gens(z3)};
  }

  Case lamplighter_group() {
    auto l = lamplighter(2);
    return {translation_action(l.group->as_group()), l.gens};
  }

  template <Case (*Make)(), bool Parallel>
  void BM_build_ball(benchmark::State& state) {
    auto c = Make();
    auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      auto ball = Parallel ? build_ball(c.action, c.gens, r) : serial::build_ball(c.action, c.gens, r);
      benchmark::DoNotOptimize(ball.size());
      state.counters["vertices"] = static_cast<double>(ball.size());
    }
  }

  template <Case (*Make)(), bool Parallel>
  void BM_ends_matrix(benchmark::State& state) {
    auto c    = Make();
    auto r    = static_cast<std::size_t>(state.range(0));
    auto ball = build_ball(c.action, c.gens, r);
    std::vector<std::size_t> ks{1, 2, 3, 4};
    for (auto _ : state) {
      auto m = Parallel ? ends_matrix(ball, ks) : serial::ends_matrix(ball, ks);
      benchmark::DoNotOptimize(m.data());
    }
    state.counters["vertices"] = static_cast<double>(ball.size());
  }
}  // namespace

BENCHMARK(BM_build_ball<free_group, true>)->Name("build_ball/parallel/F(2)")->Arg(8)->Arg(10);
BENCHMARK(BM_build_ball<free_group, false>)->Name("build_ball/serial/F(2)")->Arg(8)->Arg(10);
BENCHMARK(BM_build_ball<lattice3, true>)->Name("build_ball/parallel/Z^3")->Arg(20);
BENCHMARK(BM_build_ball<lattice3, false>)->Name("build_ball/serial/Z^3")->Arg(20);
BENCHMARK(BM_build_ball<lamplighter_group, true>)->Name("build_ball/parallel/lamplighter")->Arg(10);
BENCHMARK(BM_build_ball<lamplighter_group, false>)->Name("build_ball/serial/lamplighter")->Arg(10);

BENCHMARK(BM_ends_matrix<free_group, true>)->Name("ends_matrix/parallel/F(2)")->Arg(9);
BENCHMARK(BM_ends_matrix<free_group, false>)->Name("ends_matrix/serial/F(2)")->Arg(9);
BENCHMARK(BM_ends_matrix<lattice3, true>)->Name("ends_matrix/parallel/Z^3")->Arg(14);
BENCHMARK(BM_ends_matrix<lattice3, false>)->Name("ends_matrix/serial/Z^3")->Arg(14);

BENCHMARK_MAIN();
