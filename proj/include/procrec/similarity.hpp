#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "procrec/context_model.hpp"
#include "procrec/symmetric_eigen.hpp"

namespace procrec {

/// Principal components of a context matrix.
///
/// Data are mean-centred without scaling; the covariance uses the n-1
/// denominator. `eigenvalues` keeps the full spectrum (descending, tiny
/// negatives clamped to zero) while `components` and `scores` hold only the
/// retained leading directions.
struct PcaModel {
  std::vector<double> mean;
  std::vector<double> eigenvalues;
  DenseMatrix components;  // dimension x retained, orthonormal columns
  std::vector<std::string> games;
  DenseMatrix scores;  // games.size() x retained, in matrix row order
  std::vector<std::string> variables;

  std::size_t dimension() const noexcept { return mean.size(); }
  std::size_t retained() const noexcept { return components.cols(); }
  std::optional<std::size_t> index_of(const std::string& game) const;
  std::vector<double> score_of(std::size_t row) const;

  bool operator==(const PcaModel&) const = default;
};

inline constexpr std::size_t kDefaultComponents = 2;

/// Requires at least two rows and 1 <= retained_components <= dimension.
/// Accumulation runs in game-name order, so the fitted numbers do not depend
/// on the matrix row order.
PcaModel fit_pca(const ContextMatrix& matrix, std::size_t retained_components = kDefaultComponents);

/// (vector - mean) x components.
std::vector<double> project(const PcaModel& model, const ContextVector& vector);

struct Neighbor {
  std::string game;
  double distance = 0.0;

  bool operator==(const Neighbor&) const = default;
};

struct SimilarityRanking {
  std::string target;
  std::vector<Neighbor> neighbors;  // nondecreasing distance, ties by name

  std::vector<std::string> games() const;
  bool operator==(const SimilarityRanking&) const = default;
};

inline constexpr std::size_t kDefaultNeighbors = 5;

/// Either the k nearest candidates or, when `max_distance` is set, every
/// candidate within that distance (k is then ignored).
struct SimilarityQuery {
  std::size_t k = kDefaultNeighbors;
  std::optional<double> max_distance;
};

/// Ranks model projects by Euclidean distance to the target in retained
/// component space. A project with the target's name is never a candidate.
SimilarityRanking find_similar(const PcaModel& model, const ContextVector& target, const SimilarityQuery& query = {});

struct BiplotTable {
  struct Score {
    std::string game;
    double pc1 = 0.0;
    double pc2 = 0.0;
  };
  struct Loading {
    std::string variable;
    double pc1 = 0.0;
    double pc2 = 0.0;
  };
  std::vector<Score> scores;
  std::vector<Loading> loadings;

  /// `#scores` and `#loadings` sections, 9 significant digits, LF endings.
  std::string to_csv() const;
};

/// Scores and loadings on the first two components. Needs >= 2 retained.
BiplotTable export_biplot(const PcaModel& model);

}  // namespace procrec
