#include "procrec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "procrec/context_model.hpp"
#include "procrec/corpus_store.hpp"
#include "procrec/error.hpp"
#include "procrec/evaluation.hpp"
#include "procrec/recommender.hpp"
#include "procrec/render_dot.hpp"
#include "procrec/similarity.hpp"
#include "procrec/text.hpp"

namespace procrec::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string store;
  std::string dict;
  std::string contexts;
  std::string catalog;
  std::size_t k = kDefaultNeighbors;
  std::size_t components = kDefaultComponents;
  std::optional<double> threshold;
  bool include_target = true;
  std::string out;
  bool gold = false;
  std::string process;
  std::vector<std::string> positional;
};

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw InputError(std::string("missing --") + what + " path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string("cannot open ") + what + " file '" + path + "'");
  return in;
}

fs::path output_dir(const RunConfig& cfg) {
  fs::path dir = cfg.out;
  if (dir.empty()) {
    const char* env = std::getenv("PROCREC_OUT");
    dir = (env && *env) ? env : "procrec-out";
  }
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
}

ElementStore load_store(const RunConfig& cfg) {
  auto in = open_input(cfg.store, "store");
  auto store = ingest_elements(in);
  if (!cfg.dict.empty()) {
    auto din = open_input(cfg.dict, "dict");
    store = normalize_keys(store, AbstractionDictionary::load_json(din));
  }
  return store;
}

std::optional<std::size_t> catalog_size(const RunConfig& cfg) {
  if (cfg.catalog.empty()) return kStandardContextSize;
  auto in = open_input(cfg.catalog, "catalog");
  return VariableCatalog::load_json(in).size();
}

ContextMatrix load_matrix(const std::string& path, const RunConfig& cfg, const char* what) {
  auto in = open_input(path, what);
  return load_contexts(in, catalog_size(cfg));
}

ContextVector single_target(const std::string& path, const RunConfig& cfg) {
  auto targets = load_matrix(path, cfg, "target context");
  if (targets.size() != 1)
    throw InputError("target context file '" + path + "' must hold exactly one row, found " +
                     std::to_string(targets.size()));
  return targets.rows().front();
}

void check_config(const RunConfig& cfg) {
  if (cfg.k < 1) throw InputError("--k must be >= 1");
  if (cfg.components < 1) throw InputError("--components must be >= 1");
}

SimilarityRanking rank_target(const ContextMatrix& matrix, const ContextVector& target, const RunConfig& cfg,
                              PcaModel* model_out = nullptr) {
  ContextMatrix fit_on = cfg.include_target ? (matrix.contains(target.game) ? matrix : append_context(matrix, target))
                                            : matrix.without(target.game);
  auto model = fit_pca(fit_on, cfg.components);
  auto ranking = find_similar(model, target, {cfg.k, cfg.threshold});
  if (model_out) *model_out = std::move(model);
  return ranking;
}

std::string ranking_csv(const SimilarityRanking& ranking) {
  std::string out = "rank,game,distance\n";
  for (std::size_t i = 0; i < ranking.neighbors.size(); ++i)
    out += text::join_csv({std::to_string(i + 1), ranking.neighbors[i].game,
                           text::format_significant(ranking.neighbors[i].distance, 9)}) +
           "\n";
  return out;
}

// --- subcommands -----------------------------------------------------------

int cmd_ingest(const RunConfig& cfg, std::ostream& out, bool require_dict) {
  if (require_dict && cfg.dict.empty()) throw InputError("normalize needs --dict");
  auto in = open_input(cfg.store, "store");
  auto raw = ingest_elements(in);
  ElementStore normalized = raw;
  if (!cfg.dict.empty()) {
    auto din = open_input(cfg.dict, "dict");
    normalized = normalize_keys(raw, AbstractionDictionary::load_json(din));
  }
  auto dir = output_dir(cfg);
  std::ostringstream body;
  write_elements(body, normalized);
  write_file(dir / "elements.normalized.jsonl", body.str());

  out << "records: " << raw.size() << "\n";
  out << "projects: " << raw.games().size() << "\n";
  out << "distinct keys (raw): " << raw.universe().size() << "\n";
  out << "distinct keys (normalized): " << normalized.universe().size() << "\n";
  out << "distinct process keys (normalized, no feedback): " << normalized.process_universe().size() << "\n";
  out << "wrote " << (dir / "elements.normalized.jsonl").string() << "\n";
  return kSuccess;
}

int cmd_context_list(const RunConfig& cfg, std::ostream& out) {
  auto matrix = load_matrix(cfg.contexts, cfg, "contexts");
  out << "projects: " << matrix.size() << "\n";
  out << "variables: " << matrix.dimension() << "\n";
  for (const auto& r : matrix.rows()) out << r.game << "\t" << r.true_count() << "\n";
  return kSuccess;
}

int cmd_context_add(const RunConfig& cfg, std::ostream& out) {
  if (cfg.positional.size() != 1) throw InputError("context add needs one target context file");
  auto matrix = load_matrix(cfg.contexts, cfg, "contexts");
  auto updated = append_context(matrix, single_target(cfg.positional[0], cfg));
  std::ostringstream body;
  write_contexts(body, updated);
  auto path = output_dir(cfg) / "contexts.csv";
  write_file(path, body.str());
  out << "projects: " << updated.size() << "\nwrote " << path.string() << "\n";
  return kSuccess;
}

int cmd_context_lint(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> files = cfg.positional;
  if (files.empty() && !cfg.contexts.empty()) files.push_back(cfg.contexts);
  if (files.empty()) throw InputError("context lint needs a context file");
  std::size_t total = 0;
  for (const auto& f : files) {
    const auto matrix = load_matrix(f, cfg, "context");
    for (const auto& row : matrix.rows()) {
      for (const auto& w : lint_context(row)) {
        out << row.game << ": " << w << "\n";
        ++total;
      }
    }
  }
  out << "warnings: " << total << "\n";
  return kSuccess;
}

int cmd_recommend(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  if (cfg.positional.size() != 1) throw InputError("recommend needs one target context file");
  auto store = load_store(cfg);
  auto matrix = load_matrix(cfg.contexts, cfg, "contexts");
  auto target = single_target(cfg.positional[0], cfg);
  if (matrix.contains(target.game))
    throw InputError("target '" + target.game + "' is already in the context matrix; use evaluate for known projects");

  PcaModel model;
  auto ranking = rank_target(matrix, target, cfg, &model);
  auto process = recommend(store, ranking);

  auto dir = output_dir(cfg);
  const auto stem = slug(target.game);
  write_file(dir / (stem + ".process.json"), to_json(process));
  DotOptions dot;
  dot.gold_terminal = cfg.gold;
  write_file(dir / (stem + ".dot"), render_dot(process, dot));
  write_file(dir / (stem + ".ranking.csv"), ranking_csv(ranking));
  if (model.retained() >= 2) write_file(dir / (stem + ".biplot.csv"), export_biplot(model).to_csv());

  out << "target: " << target.game << "\n";
  for (const auto& n : ranking.neighbors) out << "  " << n.game << "\t" << text::format_significant(n.distance, 6) << "\n";
  out << "recommended elements: " << process.elements.size() << " (" << element_set(process).size()
      << " distinct keys)\n";
  out << "wrote " << (dir / (stem + ".process.json")).string() << "\n";
  return kSuccess;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  if (cfg.positional.empty()) throw InputError("evaluate needs at least one target game");
  auto store = load_store(cfg);
  auto matrix = load_matrix(cfg.contexts, cfg, "contexts");
  std::vector<MetricsReport> reports;
  for (const auto& game : cfg.positional) {
    const auto* row = matrix.find(game);
    if (!row) throw InputError("unknown target '" + game + "': not in the context matrix");
    if (store.positions_of(game).empty()) throw InputError("unknown target '" + game + "': no elements in the store");
    auto ranking = rank_target(matrix, *row, cfg);
    reports.push_back(evaluate_against_extracted(store, game, ranking));
  }
  auto dir = output_dir(cfg);
  std::string txt = confusion_table(reports) + "\n" + metrics_table(reports);
  write_file(dir / "evaluation.txt", txt);
  write_file(dir / "evaluation.json", metrics_json(reports));
  for (const auto& r : reports) {
    out << r.label << " <-";
    for (const auto& n : r.neighbors) out << " [" << n << "]";
    out << "\n";
  }
  out << "\n" << txt;
  return kSuccess;
}

int cmd_replay(const RunConfig& cfg, std::ostream& out) {
  if (cfg.positional.size() != 1) throw InputError("replay-metrics needs one CSV file of run,tp,fp,fn,tn[,sa]");
  auto in = open_input(cfg.positional[0], "replay");
  auto reports = load_replay(in);
  std::string txt = confusion_table(reports) + "\n" + metrics_table(reports);
  auto dir = output_dir(cfg);
  write_file(dir / "replay.txt", txt);
  write_file(dir / "replay.json", metrics_json(reports));
  out << txt;
  return kSuccess;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  RecommendedProcess process;
  DotOptions dot;
  dot.gold_terminal = cfg.gold;
  if (!cfg.process.empty()) {
    auto in = open_input(cfg.process, "process");
    process = process_from_json(in);
  } else {
    if (cfg.positional.size() != 1) throw InputError("render needs one game name or --process FILE");
    process = extracted_process(load_store(cfg), cfg.positional[0]);
    dot.title = "Extracted process: " + process.target;
  }
  auto path = output_dir(cfg) / (slug(process.target) + ".dot");
  write_file(path, render_dot(process, dot));
  out << "nodes: " << process.elements.size() << "\nwrote " << path.string() << "\n";
  return kSuccess;
}

int cmd_biplot(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  auto matrix = load_matrix(cfg.contexts, cfg, "contexts");
  auto table = export_biplot(fit_pca(matrix, cfg.components));
  auto path = output_dir(cfg) / "biplot.csv";
  write_file(path, table.to_csv());
  out << "scores: " << table.scores.size() << "\nloadings: " << table.loadings.size() << "\nwrote " << path.string()
      << "\n";
  return kSuccess;
}

int cmd_likert(const RunConfig& cfg, std::ostream& out) {
  if (cfg.positional.size() != 1) throw InputError("likert needs one ratings CSV file");
  auto in = open_input(cfg.positional[0], "ratings");
  auto table = likert_table(likert_tally(load_ratings(in)));
  write_file(output_dir(cfg) / "likert.txt", table);
  out << table;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Process recommendations for video game projects from postmortem elements", "procrec"};
  app.require_subcommand(1);

  auto add_store = [&](CLI::App* sub) {
    sub->add_option("--store", cfg.store, "Element records (JSON Lines)");
    sub->add_option("--dict", cfg.dict, "Abstraction dictionary (JSON alias -> canonical)");
  };
  auto add_contexts = [&](CLI::App* sub) {
    sub->add_option("--contexts", cfg.contexts, "Context matrix CSV (game,v01..v61)");
    sub->add_option("--catalog", cfg.catalog, "Variable catalog JSON; fixes the expected variable count");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output directory (default $PROCREC_OUT, else ./procrec-out)");
  };
  auto add_similarity = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "Number of neighbors")->capture_default_str();
    sub->add_option("--components", cfg.components, "Retained principal components")->capture_default_str();
    sub->add_option("--threshold", cfg.threshold, "Keep every neighbor within this distance instead of k");
    sub->add_flag("--include-target,!--exclude-target", cfg.include_target,
                  "Fit PCA with the target row included (default) or project it afterwards");
  };

  auto* ingest = app.add_subcommand("ingest", "Validate element records and write the normalized store");
  add_store(ingest);
  add_out(ingest);
  auto* normalize = app.add_subcommand("normalize", "Apply the abstraction dictionary to a store");
  add_store(normalize);
  add_out(normalize);

  auto* context = app.add_subcommand("context", "Manage project contexts");
  context->require_subcommand(1);
  auto* ctx_list = context->add_subcommand("list", "List projects and their true-variable counts");
  add_contexts(ctx_list);
  auto* ctx_add = context->add_subcommand("add", "Append a target context to the matrix");
  add_contexts(ctx_add);
  add_out(ctx_add);
  ctx_add->add_option("target", cfg.positional, "Target context CSV (one row)");
  auto* ctx_lint = context->add_subcommand("lint", "Warn about implausible variable combinations");
  add_contexts(ctx_lint);
  ctx_lint->add_option("files", cfg.positional, "Context CSV files");

  auto* rec = app.add_subcommand("recommend", "Recommend a process for a new project context");
  add_store(rec);
  add_contexts(rec);
  add_similarity(rec);
  add_out(rec);
  rec->add_flag("--gold", cfg.gold, "Add a gold-master terminal node to the DOT output");
  rec->add_option("target", cfg.positional, "Target context CSV (one row)");

  auto* eval = app.add_subcommand("evaluate", "Score recommendations against extracted processes");
  add_store(eval);
  add_contexts(eval);
  add_similarity(eval);
  add_out(eval);
  eval->add_option("games", cfg.positional, "Target game names");

  auto* replay = app.add_subcommand("replay-metrics", "Compute metrics from raw confusion counts");
  add_out(replay);
  replay->add_option("file", cfg.positional, "CSV run,tp,fp,fn,tn[,sa]");

  auto* render = app.add_subcommand("render", "Render a process as Graphviz DOT");
  add_store(render);
  add_out(render);
  render->add_option("--process", cfg.process, "Recommended process JSON to render");
  render->add_flag("--gold", cfg.gold, "Add a gold-master terminal node");
  render->add_option("game", cfg.positional, "Game whose extracted process is rendered");

  auto* biplot = app.add_subcommand("biplot", "Export PCA scores and loadings");
  add_contexts(biplot);
  add_out(biplot);
  biplot->add_option("--components", cfg.components, "Retained principal components")->capture_default_str();

  auto* likert = app.add_subcommand("likert", "Tally five-point ratings per dimension");
  add_out(likert);
  likert->add_option("file", cfg.positional, "CSV element,dimension,score");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "procrec: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(cfg, out, false);
    if (normalize->parsed()) return cmd_ingest(cfg, out, true);
    if (ctx_list->parsed()) return cmd_context_list(cfg, out);
    if (ctx_add->parsed()) return cmd_context_add(cfg, out);
    if (ctx_lint->parsed()) return cmd_context_lint(cfg, out);
    if (rec->parsed()) return cmd_recommend(cfg, out);
    if (eval->parsed()) return cmd_evaluate(cfg, out);
    if (replay->parsed()) return cmd_replay(cfg, out);
    if (render->parsed()) return cmd_render(cfg, out);
    if (biplot->parsed()) return cmd_biplot(cfg, out);
    if (likert->parsed()) return cmd_likert(cfg, out);
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) {
      err << "procrec: ";
      if (d.line) err << "line " << d.line << ": ";
      err << d.reason << "\n";
    }
    return kInputError;
  } catch (const InputError& e) {
    err << "procrec: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    err << "procrec: internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const fs::filesystem_error& e) {
    err << "procrec: " << e.what() << "\n";
    return kInputError;
  }
  err << "procrec: no command\n";
  return kInputError;
}

}  // namespace procrec::cli
