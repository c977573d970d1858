#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "procrec/context_model.hpp"
#include "procrec/corpus_store.hpp"
#include "procrec/error.hpp"
#include "procrec/evaluation.hpp"
#include "procrec/recommender.hpp"
#include "procrec/render_dot.hpp"
#include "procrec/similarity.hpp"

namespace py = pybind11;
using namespace procrec;

namespace {

ElementStore store_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  return ingest_elements(in);
}

AbstractionDictionary dictionary_from_json(const std::string& text) {
  std::istringstream in(text);
  return AbstractionDictionary::load_json(in);
}

ContextMatrix contexts_from_csv(const std::string& text, std::optional<std::size_t> dimension) {
  std::istringstream in(text);
  return load_contexts(in, dimension);
}

std::string contexts_to_csv(const ContextMatrix& m) {
  std::ostringstream out;
  write_contexts(out, m);
  return out.str();
}

std::string store_to_jsonl(const ElementStore& s) {
  std::ostringstream out;
  write_elements(out, s);
  return out.str();
}

std::vector<std::vector<double>> to_rows(const DenseMatrix& m) {
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

py::dict correctness_dict(const CorrectnessReport& r) {
  py::dict d;
  d["tp"] = r.counts.tp;
  d["fp"] = r.counts.fp;
  d["fn"] = r.counts.fn;
  d["tn"] = r.counts.tn;
  d["precision"] = r.metrics.precision;
  d["recall"] = r.metrics.recall;
  d["accuracy"] = r.metrics.accuracy;
  d["fp_rate"] = r.metrics.fp_rate;
  d["fn_rate"] = r.metrics.fn_rate;
  d["specificity"] = r.metrics.specificity;
  d["f_measure"] = r.metrics.f_measure;
  d["degenerate"] = r.degenerate;
  return d;
}

py::dict coverage_dict(const CoverageReport& r) {
  py::dict d;
  d["sr"] = r.counts.sr;
  d["sa"] = r.counts.sa;
  d["ss"] = r.counts.ss;
  d["sr_and_ss"] = r.counts.sr_and_ss;
  d["catalog"] = r.catalog;
  d["weighted_catalog"] = r.weighted_catalog;
  d["degenerate"] = r.degenerate;
  return d;
}

SimilarityRanking ranking_from(const std::string& target, const std::vector<std::pair<std::string, double>>& neighbors) {
  SimilarityRanking r{target, {}};
  for (const auto& [g, d] : neighbors) r.neighbors.push_back({g, d});
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Process recommendations for video game projects from postmortem elements";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  (void)input_error;

  m.attr("STANDARD_CONTEXT_SIZE") = kStandardContextSize;

  py::class_<ElementStore>(m, "ElementStore")
      .def_static("from_jsonl", &store_from_jsonl, py::arg("text"), "Parse JSON Lines element records.")
      .def("to_jsonl", &store_to_jsonl)
      .def("normalized", [](const ElementStore& s, const std::string& dictionary_json) {
        return normalize_keys(s, dictionary_from_json(dictionary_json));
      }, py::arg("dictionary_json"), "Apply an alias -> canonical dictionary given as JSON text.")
      .def("games", &ElementStore::games)
      .def("universe", [](const ElementStore& s) { return s.universe(); })
      .def("process_universe", &ElementStore::process_universe)
      .def("__len__", &ElementStore::size)
      .def("__eq__", [](const ElementStore& a, const ElementStore& b) { return a == b; });

  py::class_<ContextMatrix>(m, "ContextMatrix")
      .def_static("from_csv", &contexts_from_csv, py::arg("text"), py::arg("dimension") = kStandardContextSize)
      .def("to_csv", &contexts_to_csv)
      .def("games", [](const ContextMatrix& cm) {
        std::vector<std::string> out;
        for (const auto& r : cm.rows()) out.push_back(r.game);
        return out;
      })
      .def("values", [](const ContextMatrix& cm, const std::string& game) {
        const auto* v = cm.find(game);
        if (!v) throw InputError("unknown game '" + game + "'");
        return v->values;
      })
      .def("append", [](const ContextMatrix& cm, const std::string& game, const std::vector<bool>& values) {
        return append_context(cm, ContextVector{game, values});
      }, py::arg("game"), py::arg("values"), "Return a copy with one more row.")
      .def("lint", [](const ContextMatrix& cm, const std::string& game) {
        const auto* v = cm.find(game);
        if (!v) throw InputError("unknown game '" + game + "'");
        return lint_context(*v);
      })
      .def_property_readonly("dimension", &ContextMatrix::dimension)
      .def("__len__", &ContextMatrix::size);

  py::class_<PcaModel>(m, "PcaModel")
      .def_readonly("mean", &PcaModel::mean)
      .def_readonly("eigenvalues", &PcaModel::eigenvalues)
      .def_readonly("games", &PcaModel::games)
      .def_readonly("variables", &PcaModel::variables)
      .def_property_readonly("components", [](const PcaModel& p) { return to_rows(p.components); })
      .def_property_readonly("scores", [](const PcaModel& p) { return to_rows(p.scores); })
      .def("project", [](const PcaModel& p, const std::vector<bool>& values) {
        return project(p, ContextVector{"", values});
      })
      .def("biplot_csv", [](const PcaModel& p) { return export_biplot(p).to_csv(); });

  m.def("fit_pca", &fit_pca, py::arg("matrix"), py::arg("components") = kDefaultComponents);

  m.def("find_similar",
        [](const PcaModel& model, const std::string& game, const std::vector<bool>& values, std::size_t k,
           std::optional<double> max_distance) {
          auto r = find_similar(model, ContextVector{game, values}, {k, max_distance});
          std::vector<std::pair<std::string, double>> out;
          for (const auto& n : r.neighbors) out.emplace_back(n.game, n.distance);
          return out;
        },
        py::arg("model"), py::arg("game"), py::arg("values"), py::arg("k") = kDefaultNeighbors,
        py::arg("max_distance") = std::nullopt, "Nearest projects as (game, distance) pairs.");

  py::class_<RecommendedProcess>(m, "RecommendedProcess")
      .def_readonly("target", &RecommendedProcess::target)
      .def_readonly("neighbor_games", &RecommendedProcess::neighbor_games)
      .def("keys", [](const RecommendedProcess& p) {
        std::vector<std::string> out;
        for (const auto& e : p.elements) out.push_back(e.key);
        return out;
      })
      .def("element_set", &element_set)
      .def("to_json", &to_json)
      .def("render_dot", [](const RecommendedProcess& p, bool gold) {
        return render_dot(p, {.title = "", .gold_terminal = gold});
      }, py::arg("gold") = false)
      .def("__len__", [](const RecommendedProcess& p) { return p.elements.size(); });

  m.def("recommend",
        [](const ElementStore& store, const std::string& target,
           const std::vector<std::pair<std::string, double>>& neighbors) {
          return recommend(store, ranking_from(target, neighbors));
        },
        py::arg("store"), py::arg("target"), py::arg("neighbors"));
  m.def("extracted_process", &extracted_process, py::arg("store"), py::arg("game"));
  m.def("check_dot", &check_dot);

  m.def("compare_elements",
        [](const std::set<std::string>& rec, const std::set<std::string>& tested, const std::set<std::string>& universe) {
          auto cm = compare_elements(rec, tested, universe);
          return py::make_tuple(cm.tp, cm.fp, cm.fn, cm.tn);
        },
        py::arg("recommended"), py::arg("tested"), py::arg("universe"));
  m.def("correctness_metrics",
        [](std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
          return correctness_dict(correctness_metrics({tp, fp, fn, tn}));
        },
        py::arg("tp"), py::arg("fp"), py::arg("fn"), py::arg("tn"));
  m.def("coverage_metrics",
        [](const std::set<std::string>& sr, const std::set<std::string>& sa, const std::set<std::string>& ss) {
          return coverage_dict(coverage_metrics(sr, sa, ss));
        },
        py::arg("sr"), py::arg("sa"), py::arg("ss"));
  m.def("coverage_from_counts",
        [](std::size_t sr, std::size_t sa, std::size_t ss, std::size_t both) {
          return coverage_dict(coverage_from_counts({sr, sa, ss, both}));
        },
        py::arg("sr"), py::arg("sa"), py::arg("ss"), py::arg("sr_and_ss"));
  m.def("evaluate_against_extracted",
        [](const ElementStore& store, const std::string& game,
           const std::vector<std::pair<std::string, double>>& neighbors) {
          auto r = evaluate_against_extracted(store, game, ranking_from(game, neighbors));
          py::dict d;
          d["correctness"] = correctness_dict(r.correctness);
          d["coverage"] = coverage_dict(r.coverage);
          d["neighbors"] = r.neighbors;
          return d;
        },
        py::arg("store"), py::arg("game"), py::arg("neighbors"));
}
