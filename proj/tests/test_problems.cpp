#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cstdio>
#include <random>

#include "doctest.h"
#include "inclusion/problems.hpp"
#include "inclusion/residuals.hpp"

using namespace inclusion;

namespace {

DenseVector vec(std::initializer_list<double> xs) {
  DenseVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("spectral norm by power iteration") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  CHECK(spectral_norm(d) == doctest::Approx(3.0).epsilon(1e-9));

  Eigen::MatrixXd rot(2, 2);
  rot << -0.2, -1.0, 1.0, -0.2;
  CHECK(spectral_norm(rot) == doctest::Approx(std::sqrt(1.04)).epsilon(1e-9));

  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd m(6, 6);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) m(i, j) = g(rng);
  const double svd = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
  CHECK(spectral_norm(m) == doctest::Approx(svd).epsilon(1e-8));
}

TEST_CASE("skew coupling instance") {
  Eigen::MatrixXd b(1, 2);
  b << 2.0, 0.0;
  const ProblemInstance p = make_bilinear(b);
  CHECK(p.dim() == 3);
  CHECK(p.lipschitz == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(p.rho == 0.0);
  CHECK(p.projection_admissible());
  REQUIRE(p.z_star.has_value());
  CHECK(p.z_star->norm() == 0.0);
  // F(x, y) = (B y, -B^T x).
  const DenseVector f = p.f(vec({1.0, 0.5, -0.5}));
  CHECK(f[0] == doctest::Approx(2.0 * 0.5));
  CHECK(f[1] == doctest::Approx(-2.0 * 1.0));
  CHECK(f[2] == doctest::Approx(0.0));
}

TEST_CASE("constraints shift the known solution availability") {
  const Eigen::MatrixXd b = Eigen::MatrixXd::Identity(1, 1);
  const ProblemInstance feasible =
      make_bilinear(b, ConstraintSpec::sym_box(1.0));
  CHECK(feasible.z_star.has_value());
  CHECK(feasible.projection_set().kind() == ConvexSet::Kind::Box);

  // Box [1, 2]^2 excludes the origin; no solution is claimed.
  const ProblemInstance shifted =
      make_bilinear(b, ConstraintSpec::box(vec({1.0, 1.0}), vec({2.0, 2.0})));
  CHECK_FALSE(shifted.z_star.has_value());

  const ProblemInstance ballc = make_bilinear(b, ConstraintSpec::ball(2.0));
  CHECK(ballc.projection_set().kind() == ConvexSet::Kind::Ball);
  CHECK(ballc.z_star.has_value());
}

TEST_CASE("rotation family carries its exact comonotonicity margin") {
  const ProblemInstance p = make_rotation_family(-0.2, 1.0, 2);
  CHECK(p.dim() == 4);
  CHECK(p.lipschitz == doctest::Approx(std::sqrt(1.04)).epsilon(1e-12));
  CHECK(p.rho == doctest::Approx(-0.2 / 1.04).epsilon(1e-12));
  CHECK_FALSE(p.projection_admissible());  // rho < 0
  const DenseVector f = p.f(vec({1.0, 0.0, 0.0, 1.0}));
  CHECK(f[0] == doctest::Approx(-0.2));
  CHECK(f[1] == doctest::Approx(1.0));
  CHECK(f[2] == doctest::Approx(-1.0));
  CHECK(f[3] == doctest::Approx(-0.2));

  // Margins at or below -1/(2L) have no convergent parameterization.
  CHECK_THROWS_AS(make_rotation_family(-1.0, 0.1, 1), ParameterViolation);
  CHECK_THROWS_AS(make_rotation_family(0.0, 0.0, 1), ParameterViolation);
  CHECK_THROWS_AS(make_rotation_family(-0.2, 1.0, 0), ParameterViolation);

  // Monotone member of the family.
  const ProblemInstance mono = make_rotation_family(0.3, 1.0, 1);
  CHECK(mono.rho > 0.0);
}

TEST_CASE("shrinkage-coupled instance") {
  const ProblemInstance p =
      make_l1_regularized_minmax(Eigen::MatrixXd::Identity(2, 2), 0.2, 0.4);
  CHECK(p.dim() == 4);
  CHECK(p.a.kind() == MaxMonotoneOperator::Kind::SoftThreshold);
  CHECK_FALSE(p.projection_admissible());
  CHECK(p.z_star.has_value());
  CHECK_THROWS_AS(p.projection_set(), UnsupportedSet);
  CHECK_THROWS_AS(
      make_l1_regularized_minmax(Eigen::MatrixXd::Identity(1, 1), -0.1, 0.1),
      ParameterViolation);
}

TEST_CASE("linear instance requires a positive semidefinite symmetric part") {
  Eigen::MatrixXd good(2, 2);
  good << 1.0, -3.0, 3.0, 0.1;
  const ProblemInstance p = make_monotone_linear(good);
  CHECK(p.rho == 0.0);
  CHECK(p.z_star.has_value());
  CHECK_THROWS_AS(make_monotone_linear(-Eigen::MatrixXd::Identity(2, 2)),
                  NotMonotone);
}

TEST_CASE("random monotone matrices have PSD symmetric part") {
  std::mt19937_64 rng(77);
  for (int s = 0; s < 20; ++s) {
    const Eigen::MatrixXd m = random_monotone_matrix(5, rng);
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  }
}

TEST_CASE("instance validation rejects dishonest metadata") {
  const auto ident = [](const DenseVector& z) { return z; };
  // Claimed solution that is not one.
  ProblemInstance lie1{"lie", LipschitzOperator(ident, 1.0, 2),
                       MaxMonotoneOperator::zero(2), 1.0, 0.0,
                       vec({1.0, 0.0})};
  CHECK_THROWS_AS(validate_instance(lie1, 1, 200), ParameterViolation);
  // Claimed Lipschitz constant below the true one.
  ProblemInstance lie2{"lie", LipschitzOperator(ident, 0.5, 2),
                       MaxMonotoneOperator::zero(2), 0.5, 0.0, std::nullopt};
  CHECK_THROWS_AS(validate_instance(lie2, 1, 200), ParameterViolation);
  // Claimed cocoercivity the operator does not have.
  ProblemInstance lie3{"lie", LipschitzOperator(ident, 1.0, 2),
                       MaxMonotoneOperator::zero(2), 1.0, 2.0, std::nullopt};
  CHECK_THROWS_AS(validate_instance(lie3, 1, 200), NotMonotone);
  // Honest metadata passes.
  ProblemInstance ok{"ok", LipschitzOperator(ident, 1.0, 2),
                     MaxMonotoneOperator::zero(2), 1.0, 1.0,
                     vec({0.0, 0.0})};
  CHECK_NOTHROW(validate_instance(ok, 1, 200));
}

TEST_CASE("matrix text files round-trip exactly") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd m(3, 4);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 4; ++j) m(i, j) = g(rng) * std::pow(10.0, (i - 1) * 100);
  m(0, 0) = 1.0 / 3.0;
  const std::string path = "roundtrip_matrix.txt";
  save_matrix_text(path, m);
  const Eigen::MatrixXd back = load_matrix_text(path);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK(back == m);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_matrix_text("no_such_file.txt"), Error);
}

TEST_CASE("catalog names all construct with defaults") {
  const auto catalog = problem_catalog();
  CHECK(catalog.size() == 5);
  for (const auto& entry : catalog) {
    ProblemSpec spec;
    spec.name = entry.name;
    const ProblemInstance p = make_problem(spec);
    CHECK(p.name == entry.name);
    CHECK(p.projection_admissible() == entry.projection_admissible);
  }
  ProblemSpec unknown;
  unknown.name = "no-such";
  CHECK_THROWS_AS(make_problem(unknown), ConfigError);
}

TEST_CASE("by-name construction honors scalars and seeds") {
  ProblemSpec rot;
  rot.name = "rotation";
  rot.scalars = {{"mu", 0.5}, {"nu", 2.0}, {"dim_pairs", 3.0}};
  const ProblemInstance p = make_problem(rot);
  CHECK(p.dim() == 6);
  CHECK(p.lipschitz == doctest::Approx(std::sqrt(4.25)).epsilon(1e-12));

  ProblemSpec lin;
  lin.name = "monotone-linear";
  lin.scalars = {{"dim", 5.0}};
  lin.seed = 42;
  const ProblemInstance a = make_problem(lin);
  const ProblemInstance b = make_problem(lin);
  const DenseVector probe = vec({1.0, -1.0, 0.5, 0.0, 2.0});
  CHECK(a.f(probe) == b.f(probe));  // same seed, same instance
  CHECK(a.dim() == 5);

  ProblemSpec con;
  con.name = "bilinear";
  con.constraint = ConstraintSpec::sym_box(2.0);
  con.matrix = Eigen::MatrixXd::Identity(2, 2);
  const ProblemInstance c = make_problem(con);
  CHECK(c.dim() == 4);
  CHECK(c.projection_set().kind() == ConvexSet::Kind::Box);
}

TEST_CASE("solution metadata survives the validation battery") {
  for (const auto& entry : problem_catalog()) {
    ProblemSpec spec;
    spec.name = entry.name;
    const ProblemInstance p = make_problem(spec);
    if (p.z_star) CHECK(natural_residual(p.f, p.a, *p.z_star) <= 1e-9);
  }
}
