#include "procrec/evaluation.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <iterator>

#include "json.hpp"
#include "procrec/error.hpp"
#include "procrec/recommender.hpp"
#include "procrec/text.hpp"

namespace procrec {

namespace {

using ordered_json = nlohmann::ordered_json;

double ratio(std::size_t num, std::size_t den, const char* name, std::vector<std::string>& degenerate) {
  if (den == 0) {
    degenerate.emplace_back(name);
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

void require_subset(const std::set<std::string>& part, const std::set<std::string>& whole, const char* what) {
  std::vector<std::string> outside;
  std::set_difference(part.begin(), part.end(), whole.begin(), whole.end(), std::back_inserter(outside));
  if (outside.empty()) return;
  std::string msg = std::string(what) + " keys outside the universe:";
  for (const auto& k : outside) msg += " '" + k + "'";
  throw InputError(msg);
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      out += c == 0 ? pad_right(cells[c], width[c]) : pad_left(cells[c], width[c]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

constexpr std::array<std::string_view, 5> kDimensionNames{"trustworthiness", "novelty", "serendipity", "utility",
                                                          "risk"};

}  // namespace

ConfusionMatrix compare_elements(const std::set<std::string>& recommended, const std::set<std::string>& tested,
                                 const std::set<std::string>& universe) {
  require_subset(recommended, universe, "recommended");
  require_subset(tested, universe, "tested");
  ConfusionMatrix cm;
  for (const auto& key : universe) {
    const bool rec = recommended.contains(key);
    const bool used = tested.contains(key);
    if (rec && used)
      ++cm.tp;
    else if (rec)
      ++cm.fp;
    else if (used)
      ++cm.fn;
    else
      ++cm.tn;
  }
  return cm;
}

CorrectnessReport correctness_metrics(const ConfusionMatrix& cm) {
  CorrectnessReport r;
  r.counts = cm;
  auto& m = r.metrics;
  auto& deg = r.degenerate;
  m.precision = ratio(cm.tp, cm.tp + cm.fp, "precision", deg);
  // recall and specificity go through their complements so that
  // recall = 1 - fn/(tp+fn) and specificity = 1 - fp_rate hold bit for bit
  m.recall = cm.tp + cm.fn == 0 ? ratio(0, 0, "recall", deg) : 1.0 - ratio(cm.fn, cm.tp + cm.fn, "recall", deg);
  m.accuracy = ratio(cm.tp + cm.tn, cm.total(), "accuracy", deg);
  m.fp_rate = ratio(cm.fp, cm.fp + cm.tn, "fp_rate", deg);
  m.fn_rate = ratio(cm.fn, cm.fn + cm.tn, "fn_rate", deg);
  m.specificity = cm.fp + cm.tn == 0 ? ratio(0, 0, "specificity", deg) : 1.0 - m.fp_rate;
  if (m.precision + m.recall == 0.0) {
    deg.emplace_back("f_measure");
    m.f_measure = 0.0;
  } else {
    m.f_measure = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  }
  return r;
}

CoverageReport coverage_from_counts(const CoverageCounts& counts) {
  if (counts.sa == 0) throw InputError("catalog coverage needs a nonempty set of available elements");
  if (counts.sr > counts.sa || counts.ss > counts.sa || counts.sr_and_ss > std::min(counts.sr, counts.ss))
    throw InputError("coverage counts are inconsistent");
  CoverageReport r;
  r.counts = counts;
  r.catalog = ratio(counts.sr, counts.sa, "catalog", r.degenerate);
  r.weighted_catalog = ratio(counts.sr_and_ss, counts.ss, "weighted_catalog", r.degenerate);
  return r;
}

CoverageReport coverage_metrics(const std::set<std::string>& sr, const std::set<std::string>& sa,
                                const std::set<std::string>& ss) {
  if (sa.empty()) throw InputError("catalog coverage needs a nonempty set of available elements");
  require_subset(sr, sa, "recommended");
  require_subset(ss, sa, "validated");
  std::vector<std::string> both;
  std::set_intersection(sr.begin(), sr.end(), ss.begin(), ss.end(), std::back_inserter(both));
  return coverage_from_counts({sr.size(), sa.size(), ss.size(), both.size()});
}

MetricsReport evaluate_against_extracted(const ElementStore& store, const std::string& target_game,
                                         const SimilarityRanking& ranking) {
  std::set<std::string> tested;
  for (auto pos : store.positions_of(target_game)) {
    const auto& r = store.records()[pos];
    if (r.phase != Phase::Feedback) tested.insert(r.key);
  }
  if (tested.empty()) throw InputError("target '" + target_game + "' has no process elements in the store");
  for (const auto& n : ranking.neighbors)
    if (n.game == target_game) throw InputError("target '" + target_game + "' must not be among its own neighbors");

  const auto recommended = element_set(recommend(store, ranking));
  const auto universe = store.process_universe();

  MetricsReport report;
  report.label = target_game;
  report.neighbors = ranking.games();
  report.correctness = correctness_metrics(compare_elements(recommended, tested, universe));
  report.coverage = coverage_metrics(recommended, universe, tested);
  return report;
}

MetricsReport replay_counts(std::string label, const ConfusionMatrix& cm, std::optional<std::size_t> sa) {
  MetricsReport report;
  report.label = std::move(label);
  report.correctness = correctness_metrics(cm);
  CoverageCounts counts{cm.tp + cm.fp, sa.value_or(cm.total()), cm.tp + cm.fn, cm.tp};
  report.coverage = coverage_from_counts(counts);
  return report;
}

std::string metrics_table(const std::vector<MetricsReport>& reports) {
  std::vector<std::string> header{"",       "Precision", "Recall", "Accuracy", "FP Rate", "FN Rate",   "Specificity",
                                  "F-Measure", "Sr",       "Sa",     "Ss",       "Catalog", "W. Catalog"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    const auto& m = r.correctness.metrics;
    const auto& c = r.coverage;
    rows.push_back({r.label, text::format_percent(m.precision) + "%", text::format_percent(m.recall) + "%",
                    text::format_percent(m.accuracy) + "%", text::format_percent(m.fp_rate) + "%",
                    text::format_percent(m.fn_rate) + "%", text::format_percent(m.specificity) + "%",
                    text::format_percent(m.f_measure) + "%", std::to_string(c.counts.sr), std::to_string(c.counts.sa),
                    std::to_string(c.counts.ss), text::format_percent(c.catalog) + "%",
                    text::format_percent(c.weighted_catalog) + "%"});
  }
  return render_table(header, rows);
}

std::string confusion_table(const std::vector<MetricsReport>& reports) {
  std::vector<std::string> header{"", "T. Positive", "F. Positive", "F. Negative", "T. Negative"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    const auto& cm = r.correctness.counts;
    rows.push_back({r.label, std::to_string(cm.tp), std::to_string(cm.fp), std::to_string(cm.fn), std::to_string(cm.tn)});
  }
  return render_table(header, rows);
}

std::string metrics_json(const std::vector<MetricsReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) {
    const auto& cm = r.correctness.counts;
    const auto& m = r.correctness.metrics;
    const auto& c = r.coverage;
    ordered_json j;
    j["label"] = r.label;
    if (!r.neighbors.empty()) j["neighbors"] = r.neighbors;
    j["confusion"] = {{"tp", cm.tp}, {"fp", cm.fp}, {"fn", cm.fn}, {"tn", cm.tn}};
    j["correctness"] = {{"precision", m.precision}, {"recall", m.recall},           {"accuracy", m.accuracy},
                        {"fp_rate", m.fp_rate},     {"fn_rate", m.fn_rate},         {"specificity", m.specificity},
                        {"f_measure", m.f_measure}};
    j["coverage"] = {{"sr", c.counts.sr},
                     {"sa", c.counts.sa},
                     {"ss", c.counts.ss},
                     {"sr_and_ss", c.counts.sr_and_ss},
                     {"catalog", c.catalog},
                     {"weighted_catalog", c.weighted_catalog}};
    auto degenerate = r.correctness.degenerate;
    degenerate.insert(degenerate.end(), c.degenerate.begin(), c.degenerate.end());
    j["degenerate"] = degenerate;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::vector<MetricsReport> load_replay(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (text::read_line(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    header = text::split_csv_line(line);
    break;
  }
  for (auto& h : header) h = text::canonical_key(h);
  const std::vector<std::string> base{"run", "tp", "fp", "fn", "tn"};
  const bool has_sa = header.size() == 6 && header[5] == "sa";
  if (header.size() < 5 || !std::equal(base.begin(), base.end(), header.begin()) || (header.size() == 6 && !has_sa) ||
      header.size() > 6)
    throw ParseError({{line_no, "replay header must be run,tp,fp,fn,tn[,sa]"}});

  std::vector<MetricsReport> reports;
  std::vector<Diagnostic> problems;
  while (text::read_line(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    auto cells = text::split_csv_line(line);
    if (cells.size() != header.size()) {
      problems.push_back({line_no, "expected " + std::to_string(header.size()) + " columns"});
      continue;
    }
    std::vector<std::size_t> n;
    bool ok = true;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      auto cell = text::trim(cells[i]);
      if (cell.empty() || !std::all_of(cell.begin(), cell.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        problems.push_back({line_no, "'" + cells[i] + "' is not a nonnegative count"});
        ok = false;
        break;
      }
      n.push_back(std::stoull(cell));
    }
    if (!ok) continue;
    try {
      reports.push_back(replay_counts(cells[0], {n[0], n[1], n[2], n[3]},
                                      has_sa ? std::optional<std::size_t>(n[4]) : std::nullopt));
    } catch (const InputError& e) {
      problems.push_back({line_no, e.what()});
    }
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
  return reports;
}

// --- Likert ----------------------------------------------------------------

std::string_view to_string(LikertDimension d) { return kDimensionNames[static_cast<std::size_t>(d)]; }

std::optional<LikertDimension> parse_likert_dimension(std::string_view s) {
  const auto key = text::canonical_key(s);
  for (std::size_t i = 0; i < kDimensionNames.size(); ++i)
    if (kDimensionNames[i] == key) return static_cast<LikertDimension>(i);
  return std::nullopt;
}

double LikertTally::agree_ratio() const { return total() ? static_cast<double>(agree) / total() : 0.0; }
double LikertTally::neutral_ratio() const { return total() ? static_cast<double>(neutral) / total() : 0.0; }
double LikertTally::disagree_ratio() const { return total() ? static_cast<double>(disagree) / total() : 0.0; }

std::vector<LikertTally> likert_tally(const std::vector<LikertRating>& ratings) {
  std::array<LikertTally, kDimensionNames.size()> by_dim{};
  for (std::size_t i = 0; i < by_dim.size(); ++i) by_dim[i].dimension = static_cast<LikertDimension>(i);
  for (const auto& r : ratings) {
    if (r.score < 1 || r.score > 5)
      throw InputError("Likert score " + std::to_string(r.score) + " for '" + r.element + "' is outside 1..5");
    auto& t = by_dim[static_cast<std::size_t>(r.dimension)];
    if (r.score >= 4)
      ++t.agree;
    else if (r.score == 3)
      ++t.neutral;
    else
      ++t.disagree;
  }
  std::vector<LikertTally> out;
  for (const auto& t : by_dim)
    if (t.total() > 0) out.push_back(t);
  return out;
}

std::vector<LikertRating> load_ratings(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<LikertRating> ratings;
  std::vector<Diagnostic> problems;
  while (text::read_line(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    auto cells = text::split_csv_line(line);
    if (!header_seen) {
      header_seen = true;
      for (auto& c : cells) c = text::canonical_key(c);
      if (cells != std::vector<std::string>{"element", "dimension", "score"})
        throw ParseError({{line_no, "ratings header must be element,dimension,score"}});
      continue;
    }
    if (cells.size() != 3) {
      problems.push_back({line_no, "expected 3 columns"});
      continue;
    }
    auto dim = parse_likert_dimension(cells[1]);
    if (!dim) {
      problems.push_back({line_no, "unknown dimension '" + cells[1] + "'"});
      continue;
    }
    auto score_text = text::trim(cells[2]);
    if (score_text.size() != 1 || score_text[0] < '1' || score_text[0] > '5') {
      problems.push_back({line_no, "score '" + cells[2] + "' is outside 1..5"});
      continue;
    }
    ratings.push_back({text::trim(cells[0]), *dim, score_text[0] - '0'});
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
  return ratings;
}

std::string likert_table(const std::vector<LikertTally>& tallies) {
  std::vector<std::string> header{"Dimension", "N", "Agree", "Neutral", "Disagree"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : tallies) {
    rows.push_back({std::string(to_string(t.dimension)), std::to_string(t.total()),
                    text::format_percent(t.agree_ratio()) + "%", text::format_percent(t.neutral_ratio()) + "%",
                    text::format_percent(t.disagree_ratio()) + "%"});
  }
  return render_table(header, rows);
}

}  // namespace procrec
