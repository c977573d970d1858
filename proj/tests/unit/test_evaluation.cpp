#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "procrec/error.hpp"
#include "procrec/evaluation.hpp"
#include "procrec/text.hpp"

using namespace procrec;

namespace {

using Keys = std::set<std::string>;

Keys letters(const std::string& s) {
  Keys out;
  for (char c : s) out.insert(std::string(1, c));
  return out;
}

// Published confusion rows and the percentages reported for them.
struct PublishedRun {
  ConfusionMatrix cm;
  double precision, recall, accuracy, fp_rate, fn_rate, specificity, f_measure;
};

const PublishedRun kRuns[] = {
    {{32, 44, 285, 540}, 42.11, 10.09, 63.49, 7.53, 34.55, 92.47, 16.28},
    {{23, 105, 153, 620}, 17.97, 13.07, 71.37, 14.48, 19.79, 85.52, 15.13},
    {{10, 32, 171, 692}, 23.81, 5.52, 77.57, 4.42, 19.81, 95.58, 8.97},
    {{14, 19, 358, 505}, 42.42, 3.76, 57.92, 3.63, 41.48, 96.37, 6.91},
};

bool near_pp(double ratio, double percent) { return std::abs(ratio * 100.0 - percent) <= 0.01; }

ElementRecord rec(std::string game, std::string key) {
  return {std::move(game), Phase::Activities, Subphase::Production, key, "q " + key, false};
}

}  // namespace

TEST_CASE("compare_elements hand examples") {
  const auto u = letters("abcdefg");
  CHECK(compare_elements(u, u, u) == ConfusionMatrix{7, 0, 0, 0});
  CHECK(compare_elements({}, {}, u) == ConfusionMatrix{0, 0, 0, 7});
  CHECK(compare_elements(letters("bcd"), letters("abc"), letters("abcdef")) == ConfusionMatrix{2, 1, 1, 2});
}

TEST_CASE("compare_elements names keys outside the universe") {
  try {
    compare_elements(letters("az"), {}, letters("abc"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
  CHECK_THROWS_AS(compare_elements({}, letters("q"), letters("abc")), InputError);
}

TEST_CASE("published confusion rows give the published percentages") {
  for (const auto& run : kRuns) {
    CAPTURE(run.cm.tp);
    auto m = correctness_metrics(run.cm).metrics;
    CHECK(near_pp(m.precision, run.precision));
    CHECK(near_pp(m.recall, run.recall));
    CHECK(near_pp(m.accuracy, run.accuracy));
    CHECK(near_pp(m.fp_rate, run.fp_rate));
    CHECK(near_pp(m.fn_rate, run.fn_rate));
    CHECK(near_pp(m.specificity, run.specificity));
    CHECK(near_pp(m.f_measure, run.f_measure));
  }
}

TEST_CASE("degenerate denominators are flagged zeros") {
  auto r = correctness_metrics({0, 0, 0, 9});
  CHECK(r.metrics.precision == 0.0);
  CHECK(r.metrics.recall == 0.0);
  CHECK(r.metrics.accuracy == 1.0);
  CHECK(r.degenerate == std::vector<std::string>{"precision", "recall", "f_measure"});
  auto empty = correctness_metrics({});
  CHECK(empty.metrics.accuracy == 0.0);
  CHECK(std::find(empty.degenerate.begin(), empty.degenerate.end(), "accuracy") != empty.degenerate.end());
}

TEST_CASE("published coverage counts") {
  struct Row {
    CoverageCounts c;
    double catalog, weighted;
  };
  const Row rows[] = {{{76, 913, 317, 32}, 8.32, 10.09},
                      {{128, 913, 176, 23}, 14.02, 13.07},
                      {{42, 913, 181, 10}, 4.60, 5.52},
                      {{33, 913, 372, 14}, 3.61, 3.76}};
  for (const auto& row : rows) {
    auto r = coverage_from_counts(row.c);
    CHECK(near_pp(r.catalog, row.catalog));
    CHECK(near_pp(r.weighted_catalog, row.weighted));
  }
}

TEST_CASE("coverage on sets") {
  const auto sa = letters("abcdef");
  auto full = coverage_metrics(sa, sa, letters("ab"));
  CHECK(full.catalog == 1.0);
  CHECK(full.weighted_catalog == 1.0);
  auto r = coverage_metrics(letters("abc"), sa, letters("cde"));
  CHECK(r.catalog == 0.5);
  CHECK(r.weighted_catalog == doctest::Approx(1.0 / 3.0));
  auto none = coverage_metrics(letters("a"), sa, {});
  CHECK(none.weighted_catalog == 0.0);
  CHECK(none.degenerate == std::vector<std::string>{"weighted_catalog"});
  CHECK_THROWS_AS(coverage_metrics({}, {}, {}), InputError);
  CHECK_THROWS_AS(coverage_metrics(letters("z"), sa, {}), InputError);
}

TEST_CASE("partition and metric identities on random triples") {
  std::mt19937 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    std::uniform_int_distribution<int> size(0, 40);
    std::bernoulli_distribution pick(0.4);
    Keys u, r, s;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      std::string k = "e" + std::to_string(i);
      u.insert(k);
      if (pick(rng)) r.insert(k);
      if (pick(rng)) s.insert(k);
    }
    auto cm = compare_elements(r, s, u);
    CHECK(cm.total() == u.size());
    auto b = oracle::bucket(r, s, u);
    CHECK(cm == ConfusionMatrix{b.tp.size(), b.fp.size(), b.fn.size(), b.tn.size()});
    // every element in exactly one bucket, and the buckets rebuild the inputs
    Keys all, rebuilt_r, rebuilt_s;
    for (const auto* part : {&b.tp, &b.fp, &b.fn, &b.tn}) all.insert(part->begin(), part->end());
    CHECK(all == u);
    rebuilt_r.insert(b.tp.begin(), b.tp.end());
    rebuilt_r.insert(b.fp.begin(), b.fp.end());
    rebuilt_s.insert(b.tp.begin(), b.tp.end());
    rebuilt_s.insert(b.fn.begin(), b.fn.end());
    CHECK(rebuilt_r == r);
    CHECK(rebuilt_s == s);

    auto m = correctness_metrics(cm).metrics;
    for (double v : {m.precision, m.recall, m.accuracy, m.fp_rate, m.fn_rate, m.specificity, m.f_measure}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    if (cm.fp + cm.tn > 0) CHECK(m.specificity == 1.0 - m.fp_rate);
    if (cm.tp + cm.fn > 0) CHECK(m.recall == 1.0 - static_cast<double>(cm.fn) / static_cast<double>(cm.tp + cm.fn));
    // swapping precision and recall leaves F unchanged
    if (m.precision + m.recall > 0)
      CHECK(2 * m.recall * m.precision / (m.recall + m.precision) == doctest::Approx(m.f_measure).epsilon(1e-15));
  }
}

TEST_CASE("evaluate against an extracted process") {
  ElementStore store({rec("g1", "a"), rec("g1", "b"), rec("g2", "b"), rec("g2", "c"), rec("g3", "c"), rec("g3", "d"),
                      rec("g4", "e")});
  SimilarityRanking ranking{"g1", {{"g2", 1.0}, {"g3", 2.0}}};
  auto r = evaluate_against_extracted(store, "g1", ranking);
  CHECK(r.correctness.counts == ConfusionMatrix{1, 2, 1, 1});
  CHECK(r.correctness.metrics.precision == doctest::Approx(1.0 / 3.0));
  CHECK(r.correctness.metrics.recall == 0.5);
  CHECK(r.coverage.counts.sr == 3);
  CHECK(r.coverage.counts.sa == 5);
  CHECK(r.coverage.counts.ss == 2);
  CHECK(r.neighbors == std::vector<std::string>{"g2", "g3"});

  CHECK_THROWS_AS(evaluate_against_extracted(store, "nobody", ranking), InputError);
  CHECK_THROWS_AS(evaluate_against_extracted(store, "g2", ranking), InputError);
}

TEST_CASE("a duplicated twin scores perfectly") {
  ElementStore store({rec("g", "a"), rec("g", "b"), rec("twin", "a"), rec("twin", "b"), rec("other", "c")});
  auto r = evaluate_against_extracted(store, "g", SimilarityRanking{"g", {{"twin", 0.0}}});
  CHECK(r.correctness.metrics.precision == 1.0);
  CHECK(r.correctness.metrics.recall == 1.0);
}

TEST_CASE("replay reproduces the published table") {
  std::istringstream in("run,tp,fp,fn,tn,sa\n#1,32,44,285,540,913\n#2,23,105,153,620,913\n");
  auto reports = load_replay(in);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].coverage.counts.sr == 76);
  CHECK(reports[0].coverage.counts.ss == 317);
  CHECK(near_pp(reports[0].coverage.catalog, 8.32));
  auto table = metrics_table(reports);
  CHECK(table.find("42.11%") != std::string::npos);
  CHECK(table.find("17.97%") != std::string::npos);
  CHECK(table.rfind("    Precision", 0) == 0);
  auto json = metrics_json(reports);
  CHECK(json.find("\"precision\"") != std::string::npos);

  std::istringstream no_sa("run,tp,fp,fn,tn\nx,1,2,3,4\n");
  CHECK(load_replay(no_sa)[0].coverage.counts.sa == 10);
  std::istringstream bad("run,tp,fp,fn,tn\nx,1,2,three,4\n");
  CHECK_THROWS_AS(load_replay(bad), InputError);
}

TEST_CASE("likert tallies") {
  auto ratings = [](LikertDimension d, int agree, int neutral, int disagree) {
    std::vector<LikertRating> out;
    for (int i = 0; i < agree; ++i) out.push_back({"e", d, i % 2 ? 4 : 5});
    for (int i = 0; i < neutral; ++i) out.push_back({"e", d, 3});
    for (int i = 0; i < disagree; ++i) out.push_back({"e", d, i % 2 ? 1 : 2});
    return out;
  };
  auto t = likert_tally(ratings(LikertDimension::Trustworthiness, 16, 7, 9));
  REQUIRE(t.size() == 1);
  CHECK(t[0].total() == 32);
  CHECK(text::format_percent(t[0].agree_ratio()) == "50.00");
  CHECK(text::format_percent(t[0].neutral_ratio()) == "21.88");
  CHECK(text::format_percent(t[0].disagree_ratio()) == "28.13");

  CHECK(likert_tally({}).empty());
  auto all5 = likert_tally(ratings(LikertDimension::Utility, 0, 0, 0));
  CHECK(all5.empty());
  std::vector<LikertRating> fives(4, LikertRating{"e", LikertDimension::Risk, 5});
  CHECK(likert_tally(fives)[0].agree_ratio() == 1.0);
  CHECK_THROWS_AS(likert_tally({{"e", LikertDimension::Risk, 6}}), InputError);
  CHECK_THROWS_AS(likert_tally({{"e", LikertDimension::Risk, 0}}), InputError);

  // every published split: printed percentages sum to 100 within rounding
  const int splits[][3] = {{16, 7, 9}, {13, 8, 11}, {12, 12, 8}, {19, 9, 4}, {9, 8, 15}};
  std::vector<LikertRating> all;
  for (int d = 0; d < 5; ++d) {
    auto part = ratings(static_cast<LikertDimension>(d), splits[d][0], splits[d][1], splits[d][2]);
    all.insert(all.end(), part.begin(), part.end());
  }
  auto tallies = likert_tally(all);
  REQUIRE(tallies.size() == 5);
  for (const auto& tally : tallies) {
    double sum = std::stod(text::format_percent(tally.agree_ratio())) + std::stod(text::format_percent(tally.neutral_ratio())) +
                 std::stod(text::format_percent(tally.disagree_ratio()));
    CHECK(std::abs(sum - 100.0) <= 0.01 + 1e-9);
  }
  CHECK(likert_table(tallies).find("trustworthiness") != std::string::npos);
}

TEST_CASE("ratings file") {
  std::istringstream in("element,dimension,score\nprototyping,novelty,4\ntesting,Risk,2\n");
  auto r = load_ratings(in);
  REQUIRE(r.size() == 2);
  CHECK(r[1].dimension == LikertDimension::Risk);
  std::istringstream bad("element,dimension,score\nx,fun,3\n");
  CHECK_THROWS_AS(load_ratings(bad), InputError);
}
