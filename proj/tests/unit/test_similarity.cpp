#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "procrec/error.hpp"
#include "procrec/similarity.hpp"
#include "test_support.hpp"

using namespace procrec;

namespace {

// 4 projects x 3 variables with three distinct covariance eigenvalues.
const std::vector<std::vector<double>> kFixture{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};

ContextMatrix fixture_matrix() {
  std::vector<ContextVector> rows;
  for (std::size_t i = 0; i < kFixture.size(); ++i) {
    ContextVector v{"p" + std::to_string(i + 1), {}};
    for (double x : kFixture[i]) v.values.push_back(x == 1.0);
    rows.push_back(v);
  }
  return ContextMatrix(3, rows);
}

double dot_columns(const DenseMatrix& m, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, a) * m(r, b);
  return s;
}

}  // namespace

TEST_CASE("4x3 fixture matches the characteristic polynomial oracle") {
  auto model = fit_pca(fixture_matrix(), 3);
  const auto cov = oracle::to_mat3(oracle::covariance(kFixture));
  const auto lambda = oracle::eigenvalues_desc(cov);
  REQUIRE(lambda[0] - lambda[1] > 1e-3);
  REQUIRE(lambda[1] - lambda[2] > 1e-3);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(model.eigenvalues[i] - lambda[i]) < 1e-8);
    const auto v = oracle::eigenvector(cov, lambda[i]);
    for (int r = 0; r < 3; ++r) CHECK(std::abs(model.components(r, i) - v[r]) < 1e-8);
  }

  // held-out vector (0,0,1): (x - mu) . V
  const auto mu = oracle::column_means(kFixture);
  const std::vector<double> x{0, 0, 1};
  auto coords = project(model, ContextVector{"held out", {false, false, true}});
  for (int i = 0; i < 3; ++i) {
    const auto v = oracle::eigenvector(cov, lambda[i]);
    double expected = 0.0;
    for (int r = 0; r < 3; ++r) expected += (x[r] - mu[r]) * v[r];
    CHECK(std::abs(coords[i] - expected) < 1e-9);
  }

  // biplot loadings are the oracle eigenvectors
  auto table = export_biplot(model);
  REQUIRE(table.loadings.size() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(std::abs(table.loadings[r].pc1 - oracle::eigenvector(cov, lambda[0])[r]) < 1e-8);
    CHECK(std::abs(table.loadings[r].pc2 - oracle::eigenvector(cov, lambda[1])[r]) < 1e-8);
  }
}

TEST_CASE("identical rows have no variance") {
  std::vector<ContextVector> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(ContextVector{"g" + std::to_string(i), {true, false, true}});
  auto model = fit_pca(ContextMatrix(3, rows), 2);
  for (double l : model.eigenvalues) CHECK(l == 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < 2; ++c) CHECK(model.scores(i, c) == 0.0);
}

TEST_CASE("two rows give at most one nonzero eigenvalue") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto m = testing::random_matrix(rng, 2, 6);
    auto model = fit_pca(m, 2);
    for (std::size_t i = 1; i < model.eigenvalues.size(); ++i) CHECK(std::abs(model.eigenvalues[i]) < 1e-12);
    auto table = export_biplot(model);
    CHECK(table.scores.size() == 2);
    for (const auto& s : table.scores) CHECK(std::abs(s.pc2) < 1e-12);
  }
}

TEST_CASE("fit preconditions") {
  auto m = fixture_matrix();
  CHECK_THROWS_AS(fit_pca(m, 0), InputError);
  CHECK_THROWS_AS(fit_pca(m, 4), InputError);
  CHECK_THROWS_AS(fit_pca(ContextMatrix(3, {ContextVector{"a", {true, false, false}}}), 1), InputError);
  auto model = fit_pca(m, 1);
  CHECK_THROWS_AS(export_biplot(model), InputError);
  CHECK_THROWS_AS(project(model, ContextVector{"x", {true, false}}), InputError);
}

TEST_CASE("training rows and the mean project consistently") {
  std::mt19937 rng(5);
  auto m = testing::random_matrix(rng, 8, 6);
  auto model = fit_pca(m, 3);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto p = project(model, m.rows()[i]);
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(p[c] - model.scores(i, c)) < 1e-12);
  }
  // scores are centred
  double sum[3] = {0, 0, 0};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t c = 0; c < 3; ++c) sum[c] += model.scores(i, c);
  for (double s : sum) CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("mean vector projects to the origin") {
  // column means (1, .5, .5); a and b sit symmetrically about them
  ContextMatrix sym(3, {{"a", {true, true, true}}, {"b", {true, false, false}}, {"c", {true, true, false}},
                        {"d", {true, false, true}}});
  auto model = fit_pca(sym, 2);
  CHECK(model.mean == std::vector<double>{1.0, 0.5, 0.5});
  auto pa = project(model, sym.rows()[0]);
  auto pb = project(model, sym.rows()[1]);
  for (int c = 0; c < 2; ++c) CHECK(std::abs(pa[c] + pb[c]) < 1e-12);
}

TEST_CASE("property suite on random 8x6 binary matrices") {
  std::mt19937 rng(2018);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = testing::random_matrix(rng, 8, 6);
    auto model = fit_pca(m, 6);
    std::vector<std::vector<double>> x;
    for (const auto& r : m.rows()) x.push_back(r.as_reals());
    const auto cov = oracle::covariance(x);

    double trace = 0.0, total = 0.0;
    for (int i = 0; i < 6; ++i) trace += cov[i][i];
    for (double l : model.eigenvalues) total += l;
    CHECK(std::abs(trace - total) < 1e-9);

    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(model.eigenvalues[i] >= 0.0);
      if (i + 1 < 6) CHECK(model.eigenvalues[i] >= model.eigenvalues[i + 1]);
      for (std::size_t j = 0; j < 6; ++j)
        CHECK(std::abs(dot_columns(model.components, i, j) - (i == j ? 1.0 : 0.0)) < 1e-9);
      double var = 0.0;
      for (std::size_t r = 0; r < 8; ++r) var += model.scores(r, i) * model.scores(r, i);
      CHECK(std::abs(var / 7.0 - model.eigenvalues[i]) < 1e-9);
    }

    // V diag(lambda) V^T == covariance
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < 6; ++k) s += model.components(a, k) * model.eigenvalues[k] * model.components(b, k);
        CHECK(std::abs(s - cov[a][b]) < 1e-8);
      }

    CHECK(fit_pca(m, 6) == model);
  }
}

TEST_CASE("row order does not change fitted numbers or rankings") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = testing::random_matrix(rng, 10, 8, 0.4);
    auto rows = m.rows();
    std::shuffle(rows.begin(), rows.end(), rng);
    ContextMatrix shuffled(8, rows);
    auto a = fit_pca(m, 2), b = fit_pca(shuffled, 2);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.components == b.components);
    for (const auto& g : a.games) CHECK(a.score_of(*a.index_of(g)) == b.score_of(*b.index_of(g)));
    for (const auto& target : m.rows()) {
      CHECK(find_similar(a, target, {4, {}}) == find_similar(b, target, {4, {}}));
    }
  }
}

TEST_CASE("hand-placed distances") {
  PcaModel model;
  model.mean = {0.0, 0.0};
  model.eigenvalues = {1.0, 1.0};
  model.components = DenseMatrix::identity(2);
  model.variables = {"v01", "v02"};
  model.games = {"target", "far", "near"};
  model.scores = DenseMatrix(3, 2);
  model.scores(1, 0) = 3.0;
  model.scores(1, 1) = 4.0;
  model.scores(2, 0) = 1.0;
  auto ranking = find_similar(model, ContextVector{"target", {false, false}}, {2, {}});
  REQUIRE(ranking.neighbors.size() == 2);
  CHECK(ranking.neighbors[0] == Neighbor{"near", 1.0});
  CHECK(ranking.neighbors[1] == Neighbor{"far", 5.0});

  auto within = find_similar(model, ContextVector{"target", {false, false}}, {1, 4.0});
  CHECK(within.games() == std::vector<std::string>{"near"});
  auto everyone = find_similar(model, ContextVector{"someone else", {false, false}}, {10, {}});
  CHECK(everyone.games() == std::vector<std::string>{"target", "near", "far"});
}

TEST_CASE("ties break by name and the target is never a candidate") {
  ContextMatrix m(3, {{"b", {true, false, false}}, {"a", {true, false, false}}, {"t", {true, false, false}},
                      {"c", {false, true, true}}});
  auto model = fit_pca(m, 2);
  auto ranking = find_similar(model, *m.find("t"), {3, {}});
  CHECK(ranking.games() == std::vector<std::string>{"a", "b", "c"});
  CHECK(ranking.neighbors[0].distance == 0.0);

  ContextMatrix pair(3, {{"t", {true, false, false}}, {"u", {false, true, false}}});
  CHECK_THROWS_AS(find_similar(fit_pca(pair, 1), *pair.find("t"), {0, {}}), InputError);
  ContextMatrix lonely(3, {{"t", {true, false, false}}, {"t2", {true, false, false}}});
  auto lm = fit_pca(lonely, 1);
  lm.games = {"t", "t"};
  CHECK_THROWS_AS(find_similar(lm, *lonely.find("t"), {}), InputError);
}

TEST_CASE("biplot csv layout") {
  auto model = fit_pca(fixture_matrix(), 2);
  auto csv = export_biplot(model).to_csv();
  CHECK(csv.rfind("#scores\ngame,pc1,pc2\np1,", 0) == 0);
  CHECK(csv.find("#loadings\nvariable,pc1,pc2\nv01,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 4 + 2 + 3);
}
