#include "procrec/recommender.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"
#include "procrec/error.hpp"

namespace procrec {

namespace {

using ordered_json = nlohmann::ordered_json;

// Missing subphase sorts after postproduction.
int subphase_rank(const std::optional<Subphase>& sp) { return sp ? static_cast<int>(*sp) : 3; }

using MergeKey = std::tuple<int, int, std::string>;  // phase, subphase rank, key

RecommendedProcess merge(const ElementStore& store, const std::string& target, const std::vector<std::string>& games) {
  std::map<std::string, std::size_t> rank_of;
  for (std::size_t i = 0; i < games.size(); ++i) rank_of.emplace(games[i], i);

  std::map<MergeKey, MergedElement> merged;
  std::map<MergeKey, std::vector<std::pair<std::size_t, ElementSource>>> pending;
  for (const auto& game : games) {
    for (auto pos : store.positions_of(game)) {
      const auto& r = store.records()[pos];
      if (r.phase == Phase::Feedback) continue;
      MergeKey mk{static_cast<int>(r.phase), subphase_rank(r.subphase), r.key};
      auto [it, inserted] = merged.try_emplace(mk);
      if (inserted) {
        it->second.key = r.key;
        it->second.phase = r.phase;
        it->second.subphase = r.subphase;
      }
      pending[mk].push_back({rank_of.at(r.game), {r.game, r.desc, r.prob}});
    }
  }

  RecommendedProcess process{target, games, {}};
  for (auto& [mk, element] : merged) {
    auto& sources = pending[mk];
    std::sort(sources.begin(), sources.end(), [](const auto& a, const auto& b) {
      return std::tie(a.first, a.second.desc, a.second.prob) < std::tie(b.first, b.second.desc, b.second.prob);
    });
    for (auto& [_, src] : sources) element.sources.push_back(std::move(src));
    process.elements.push_back(std::move(element));
  }
  return process;
}

}  // namespace

bool MergedElement::prob() const {
  return std::any_of(sources.begin(), sources.end(), [](const ElementSource& s) { return s.prob; });
}

RecommendedProcess recommend(const ElementStore& store, const SimilarityRanking& ranking) {
  if (ranking.neighbors.empty()) throw InputError("cannot recommend from an empty ranking for '" + ranking.target + "'");
  auto process = merge(store, ranking.target, ranking.games());
  if (process.elements.empty())
    throw InputError("empty recommendation: no elements stored for any neighbor of '" + ranking.target + "'");
  return process;
}

RecommendedProcess extracted_process(const ElementStore& store, const std::string& game) {
  auto process = merge(store, game, {game});
  if (process.elements.empty()) throw InputError("no process elements stored for game '" + game + "'");
  return process;
}

std::set<std::string> element_set(const RecommendedProcess& process) {
  std::set<std::string> keys;
  for (const auto& e : process.elements) keys.insert(e.key);
  return keys;
}

std::string to_json(const RecommendedProcess& process) {
  ordered_json j;
  j["target"] = process.target;
  j["neighbors"] = process.neighbor_games;
  j["elements"] = ordered_json::array();
  for (const auto& e : process.elements) {
    ordered_json je;
    je["key"] = e.key;
    je["phase"] = std::string(to_string(e.phase));
    je["subphase"] = e.subphase ? ordered_json(std::string(to_string(*e.subphase))) : ordered_json(nullptr);
    je["prob"] = e.prob();
    je["sources"] = ordered_json::array();
    for (const auto& s : e.sources) {
      ordered_json js;
      js["game"] = s.game;
      js["desc"] = s.desc;
      js["prob"] = s.prob;
      je["sources"].push_back(std::move(js));
    }
    j["elements"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

RecommendedProcess process_from_json(std::istream& in) {
  try {
    nlohmann::json j;
    in >> j;
    RecommendedProcess p;
    p.target = j.at("target").get<std::string>();
    p.neighbor_games = j.at("neighbors").get<std::vector<std::string>>();
    for (const auto& je : j.at("elements")) {
      MergedElement e;
      e.key = je.at("key").get<std::string>();
      auto phase = parse_phase(je.at("phase").get<std::string>());
      if (!phase) throw InputError("unknown phase in process JSON");
      e.phase = *phase;
      if (je.contains("subphase") && !je["subphase"].is_null()) {
        e.subphase = parse_subphase(je["subphase"].get<std::string>());
        if (!e.subphase) throw InputError("unknown subphase in process JSON");
      }
      for (const auto& js : je.at("sources"))
        e.sources.push_back({js.at("game").get<std::string>(), js.at("desc").get<std::string>(), js.at("prob").get<bool>()});
      if (e.sources.empty()) throw InputError("element '" + e.key + "' has no sources");
      p.elements.push_back(std::move(e));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid process JSON: ") + e.what());
  }
}

}  // namespace procrec
