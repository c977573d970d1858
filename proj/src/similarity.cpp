#include "procrec/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "procrec/error.hpp"
#include "procrec/text.hpp"

namespace procrec {

namespace {

constexpr double kNegativeEigenvalueSlack = 1e-9;

}  // namespace

std::optional<std::size_t> PcaModel::index_of(const std::string& game) const {
  auto it = std::find(games.begin(), games.end(), game);
  if (it == games.end()) return std::nullopt;
  return static_cast<std::size_t>(it - games.begin());
}

std::vector<double> PcaModel::score_of(std::size_t row) const {
  auto r = scores.row(row);
  return {r.begin(), r.end()};
}

PcaModel fit_pca(const ContextMatrix& matrix, std::size_t retained_components) {
  const std::size_t n = matrix.size();
  const std::size_t d = matrix.dimension();
  if (n < 2) throw InputError("PCA needs at least 2 projects, got " + std::to_string(n));
  if (retained_components < 1 || retained_components > d)
    throw InputError("retained components must be in [1, " + std::to_string(d) + "], got " +
                     std::to_string(retained_components));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return matrix.rows()[a].game < matrix.rows()[b].game; });

  PcaModel model;
  model.variables = matrix.variable_ids();
  model.mean.assign(d, 0.0);
  for (auto i : order) {
    const auto& values = matrix.rows()[i].values;
    for (std::size_t j = 0; j < d; ++j) model.mean[j] += values[j] ? 1.0 : 0.0;
  }
  for (auto& m : model.mean) m /= static_cast<double>(n);

  DenseMatrix centered(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& values = matrix.rows()[i].values;
    for (std::size_t j = 0; j < d; ++j) centered(i, j) = (values[j] ? 1.0 : 0.0) - model.mean[j];
  }

  DenseMatrix cov(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double sum = 0.0;
      for (auto i : order) sum += centered(i, a) * centered(i, b);
      cov(a, b) = cov(b, a) = sum / static_cast<double>(n - 1);
    }
  }

  auto eig = jacobi_eigen(cov);
  if (!eig.converged) throw InvariantError("Jacobi eigen solver did not converge");
  for (auto& lambda : eig.values) {
    if (lambda < -kNegativeEigenvalueSlack)
      throw InvariantError("covariance has a negative eigenvalue " + text::format_significant(lambda, 6));
    if (lambda < 0.0) lambda = 0.0;
  }
  model.eigenvalues = eig.values;

  model.components = DenseMatrix(d, retained_components);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < retained_components; ++c) model.components(r, c) = eig.vectors(r, c);

  model.scores = DenseMatrix(n, retained_components);
  model.games.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    model.games.push_back(matrix.rows()[i].game);
    for (std::size_t c = 0; c < retained_components; ++c) {
      double sum = 0.0;
      for (std::size_t j = 0; j < d; ++j) sum += centered(i, j) * model.components(j, c);
      model.scores(i, c) = sum;
    }
  }
  return model;
}

std::vector<double> project(const PcaModel& model, const ContextVector& vector) {
  if (vector.values.size() != model.dimension())
    throw InputError("context '" + vector.game + "' has " + std::to_string(vector.values.size()) +
                     " values, model expects " + std::to_string(model.dimension()));
  std::vector<double> coords(model.retained(), 0.0);
  for (std::size_t c = 0; c < model.retained(); ++c) {
    double sum = 0.0;
    for (std::size_t j = 0; j < model.dimension(); ++j)
      sum += ((vector.values[j] ? 1.0 : 0.0) - model.mean[j]) * model.components(j, c);
    coords[c] = sum;
  }
  return coords;
}

std::vector<std::string> SimilarityRanking::games() const {
  std::vector<std::string> out;
  out.reserve(neighbors.size());
  for (const auto& n : neighbors) out.push_back(n.game);
  return out;
}

SimilarityRanking find_similar(const PcaModel& model, const ContextVector& target, const SimilarityQuery& query) {
  if (query.k < 1) throw InputError("neighbor count k must be >= 1");
  if (query.max_distance && !(*query.max_distance >= 0.0)) throw InputError("distance threshold must be >= 0");
  const auto where = project(model, target);

  SimilarityRanking ranking{target.game, {}};
  for (std::size_t i = 0; i < model.games.size(); ++i) {
    if (model.games[i] == target.game) continue;
    double sq = 0.0;
    for (std::size_t c = 0; c < model.retained(); ++c) {
      const double diff = model.scores(i, c) - where[c];
      sq += diff * diff;
    }
    ranking.neighbors.push_back({model.games[i], std::sqrt(sq)});
  }
  if (ranking.neighbors.empty()) throw InputError("no candidate projects besides '" + target.game + "'");

  std::sort(ranking.neighbors.begin(), ranking.neighbors.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.game < b.game;
  });
  if (query.max_distance) {
    const double limit = *query.max_distance;
    std::erase_if(ranking.neighbors, [&](const Neighbor& n) { return n.distance > limit; });
  } else if (ranking.neighbors.size() > query.k) {
    ranking.neighbors.resize(query.k);
  }
  return ranking;
}

BiplotTable export_biplot(const PcaModel& model) {
  if (model.retained() < 2)
    throw InputError("biplot needs at least 2 retained components, model has " + std::to_string(model.retained()));
  BiplotTable table;
  for (std::size_t i = 0; i < model.games.size(); ++i)
    table.scores.push_back({model.games[i], model.scores(i, 0), model.scores(i, 1)});
  for (std::size_t j = 0; j < model.dimension(); ++j)
    table.loadings.push_back({model.variables[j], model.components(j, 0), model.components(j, 1)});
  return table;
}

std::string BiplotTable::to_csv() const {
  constexpr int kDigits = 9;
  std::string out = "#scores\ngame,pc1,pc2\n";
  for (const auto& s : scores)
    out += text::join_csv({s.game, text::format_significant(s.pc1, kDigits), text::format_significant(s.pc2, kDigits)}) +
           "\n";
  out += "#loadings\nvariable,pc1,pc2\n";
  for (const auto& l : loadings)
    out += text::join_csv(
               {l.variable, text::format_significant(l.pc1, kDigits), text::format_significant(l.pc2, kDigits)}) +
           "\n";
  return out;
}

}  // namespace procrec
