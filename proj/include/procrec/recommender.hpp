#pragma once

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "procrec/corpus_store.hpp"
#include "procrec/similarity.hpp"

namespace procrec {

struct ElementSource {
  std::string game;
  std::string desc;
  bool prob = false;

  bool operator==(const ElementSource&) const = default;
};

/// All quotes sharing one (key, phase, subphase) across the neighbor games.
struct MergedElement {
  std::string key;
  Phase phase = Phase::Activities;
  std::optional<Subphase> subphase;
  std::vector<ElementSource> sources;

  /// Problematic when any source reported a problem.
  bool prob() const;

  bool operator==(const MergedElement&) const = default;
};

struct RecommendedProcess {
  std::string target;
  std::vector<std::string> neighbor_games;
  std::vector<MergedElement> elements;

  bool operator==(const RecommendedProcess&) const = default;
};

/// Merges the non-feedback records of the ranked games.
///
/// Elements are ordered by phase (activities, team, characteristics), then
/// subphase (preproduction, production, postproduction, none), then key.
/// Sources follow the ranking order, then quote text. Throws InputError when
/// the ranking is empty or none of its games has an element.
RecommendedProcess recommend(const ElementStore& store, const SimilarityRanking& ranking);

/// One game's own elements in the same merged shape (for rendering).
RecommendedProcess extracted_process(const ElementStore& store, const std::string& game);

std::set<std::string> element_set(const RecommendedProcess& process);

/// {target, neighbors, elements:[{key, phase, subphase, prob, sources:[...]}]}, two-space indent.
std::string to_json(const RecommendedProcess& process);
RecommendedProcess process_from_json(std::istream& in);

}  // namespace procrec
