#include <benchmark/benchmark.h>

#include <random>

#include "inclusion/inclusion.hpp"

using namespace inclusion;

namespace {

ProblemInstance linear_instance(long dim) {
  ProblemSpec spec;
  spec.name = "monotone-linear";
  spec.scalars["dim"] = double(dim);
  spec.seed = 42;
  return make_problem(spec);
}

void solver_steps(benchmark::State& state, Algorithm alg) {
  const ProblemInstance problem = linear_instance(state.range(0));
  SolverConfig config;
  config.algorithm = alg;
  config.max_iters = 256;
  config.check_envelope = false;
  validate_config(problem, config);
  for (auto _ : state) {
    const RunReport rep = run(problem, config);
    benchmark::DoNotOptimize(rep.records.back().cert_residual);
  }
  state.SetItemsProcessed(state.iterations() * config.max_iters);
}

void BM_AnchoredExtragradient(benchmark::State& state) {
  solver_steps(state, Algorithm::Eag);
}
void BM_AcceleratedSplitting(benchmark::State& state) {
  solver_steps(state, Algorithm::As);
}
void BM_Extragradient(benchmark::State& state) {
  solver_steps(state, Algorithm::Eg);
}
BENCHMARK(BM_AnchoredExtragradient)->Arg(8)->Arg(64);
BENCHMARK(BM_AcceleratedSplitting)->Arg(8)->Arg(64);
BENCHMARK(BM_Extragradient)->Arg(8)->Arg(64);

void BM_BallProjection(benchmark::State& state) {
  const Index dim = Index(state.range(0));
  const ConvexSet ball = ConvexSet::ball(DenseVector::Zero(dim), 0.5);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> d(0.0, 1.0);
  DenseVector z(dim);
  for (Index i = 0; i < dim; ++i) z[i] = d(rng);
  for (auto _ : state) {
    DenseVector p = ball.project(z);
    benchmark::DoNotOptimize(p.data());
  }
  state.SetItemsProcessed(state.iterations() * dim);
}
BENCHMARK(BM_BallProjection)->Arg(64)->Arg(4096);

void BM_LinearResolvent(benchmark::State& state) {
  const Index dim = Index(state.range(0));
  std::mt19937_64 rng(9);
  const MaxMonotoneOperator op =
      MaxMonotoneOperator::linear_monotone(random_monotone_matrix(dim, rng));
  std::normal_distribution<double> d(0.0, 1.0);
  DenseVector w(dim);
  for (Index i = 0; i < dim; ++i) w[i] = d(rng);
  // Fixed step size, so the factorization is reused after the first apply.
  for (auto _ : state) {
    DenseVector z = op.resolvent(0.5, w);
    benchmark::DoNotOptimize(z.data());
  }
}
BENCHMARK(BM_LinearResolvent)->Arg(16)->Arg(128);

void BM_IdentityBalance(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> d(0.0, 1.0);
  const auto draw = [&] {
    DenseVector v(8);
    for (Index i = 0; i < 8; ++i) v[i] = d(rng);
    return v;
  };
  const DenseVector x0 = draw(), x1 = draw(), x2 = draw(), x3 = draw(),
                    y1 = draw(), y2 = draw(), y3 = draw(), u1 = draw();
  for (auto _ : state) {
    const IdentityCheck chk =
        verify_identity_eag(x0, x1, x2, x3, y1, y2, y3, u1, 0.11, 9.0);
    benchmark::DoNotOptimize(chk.residual);
  }
}
BENCHMARK(BM_IdentityBalance);

void BM_RateFit(benchmark::State& state) {
  std::vector<IterateRecord> records(10000);
  for (size_t i = 0; i < records.size(); ++i) {
    records[i].k = long(i) + 1;
    records[i].cert_residual = 3.0 / double(i + 1);
  }
  for (auto _ : state) {
    const auto fit = fit_rate_exponent(records, 50);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_RateFit);

}  // namespace

BENCHMARK_MAIN();
