#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "procrec/corpus_store.hpp"
#include "procrec/similarity.hpp"

namespace procrec {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

/// Buckets every universe key: recommended and tested (tp), recommended only
/// (fp), tested only (fn), neither (tn). Throws InputError naming any
/// recommended or tested key outside the universe.
ConfusionMatrix compare_elements(const std::set<std::string>& recommended, const std::set<std::string>& tested,
                                 const std::set<std::string>& universe);

struct CorrectnessMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
  double fp_rate = 0.0;
  double fn_rate = 0.0;
  double specificity = 0.0;
  double f_measure = 0.0;
};

/// Every 0/0 ratio comes back as 0 and its name is listed in `degenerate`.
struct CorrectnessReport {
  ConfusionMatrix counts;
  CorrectnessMetrics metrics;
  std::vector<std::string> degenerate;
};

CorrectnessReport correctness_metrics(const ConfusionMatrix& cm);

struct CoverageCounts {
  std::size_t sr = 0;
  std::size_t sa = 0;
  std::size_t ss = 0;
  std::size_t sr_and_ss = 0;
};

struct CoverageReport {
  CoverageCounts counts;
  double catalog = 0.0;
  double weighted_catalog = 0.0;
  std::vector<std::string> degenerate;
};

/// catalog = |sr|/|sa|, weighted = |sr & ss|/|ss|. Throws InputError when sa
/// is empty or sr/ss are not subsets of sa.
CoverageReport coverage_metrics(const std::set<std::string>& sr, const std::set<std::string>& sa,
                                const std::set<std::string>& ss);

/// Same formulas on bare counts (used when replaying published tables).
CoverageReport coverage_from_counts(const CoverageCounts& counts);

struct MetricsReport {
  std::string label;
  CorrectnessReport correctness;
  CoverageReport coverage;
  std::vector<std::string> neighbors;
};

/// Scores the recommendation built from `ranking` against `target_game`'s own
/// extracted elements. The universe is the store's non-feedback key set and the
/// tested keys double as the validated set for weighted coverage.
MetricsReport evaluate_against_extracted(const ElementStore& store, const std::string& target_game,
                                         const SimilarityRanking& ranking);

/// Builds a report from raw counts: sr = tp + fp, ss = tp + fn.
MetricsReport replay_counts(std::string label, const ConfusionMatrix& cm, std::optional<std::size_t> sa);

/// Columns mirror the published results table: Precision, Recall, Accuracy,
/// FP Rate, FN Rate, Specificity, F-Measure, Sr, Sa, Ss, Catalog, W. Catalog.
std::string metrics_table(const std::vector<MetricsReport>& reports);
std::string confusion_table(const std::vector<MetricsReport>& reports);
std::string metrics_json(const std::vector<MetricsReport>& reports);

/// Replay input: CSV header `run,tp,fp,fn,tn` with an optional trailing `sa`.
std::vector<MetricsReport> load_replay(std::istream& in);

// --- Likert ----------------------------------------------------------------

enum class LikertDimension { Trustworthiness, Novelty, Serendipity, Utility, Risk };

std::string_view to_string(LikertDimension d);
std::optional<LikertDimension> parse_likert_dimension(std::string_view s);

struct LikertRating {
  std::string element;
  LikertDimension dimension = LikertDimension::Trustworthiness;
  int score = 3;
};

struct LikertTally {
  LikertDimension dimension = LikertDimension::Trustworthiness;
  std::size_t agree = 0;     // score >= 4
  std::size_t neutral = 0;   // score == 3
  std::size_t disagree = 0;  // score <= 2

  std::size_t total() const noexcept { return agree + neutral + disagree; }
  double agree_ratio() const;
  double neutral_ratio() const;
  double disagree_ratio() const;
};

/// One tally per dimension present, in dimension order. Throws InputError on
/// scores outside 1..5.
std::vector<LikertTally> likert_tally(const std::vector<LikertRating>& ratings);

/// CSV `element,dimension,score` with a header row.
std::vector<LikertRating> load_ratings(std::istream& in);

std::string likert_table(const std::vector<LikertTally>& tallies);

}  // namespace procrec
