#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace procrec {

enum class Phase { Activities, Team, Characteristics, Feedback };
enum class Subphase { Preproduction, Production, Postproduction };

std::string_view to_string(Phase phase);
std::string_view to_string(Subphase subphase);
std::optional<Phase> parse_phase(std::string_view s);
std::optional<Subphase> parse_subphase(std::string_view s);

/// One process element lifted from a postmortem.
///
/// `key` is the element's index name (trimmed, lowercase). `desc` holds the
/// verbatim quotation and `prob` marks elements the team reported trouble with.
/// `subphase` is only ever set for activities.
struct ElementRecord {
  std::string game;
  Phase phase = Phase::Activities;
  std::optional<Subphase> subphase;
  std::string key;
  std::string desc;
  bool prob = false;

  auto operator<=>(const ElementRecord&) const = default;
  bool operator==(const ElementRecord&) const = default;
};

/// Alias -> canonical key table. Canonical keys are fixed points and no alias
/// points at another alias, so lookup is idempotent.
class AbstractionDictionary {
 public:
  AbstractionDictionary() = default;

  /// Keys and values are canonicalized (trim + lowercase) before validation.
  /// Throws InputError listing every offending entry.
  explicit AbstractionDictionary(const std::map<std::string, std::string>& entries);

  static AbstractionDictionary load_json(std::istream& in);

  /// Identity for keys without an entry.
  const std::string& lookup(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, std::string> entries_;
};

/// Immutable, ordered collection of element records with a per-game index.
class ElementStore {
 public:
  ElementStore() = default;
  explicit ElementStore(std::vector<ElementRecord> records);

  const std::vector<ElementRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// Positions of a game's records, in store order. Empty for unknown games.
  std::span<const std::size_t> positions_of(const std::string& game) const;

  /// Distinct games, sorted.
  std::vector<std::string> games() const;

  /// Distinct keys over every record, including feedback.
  const std::set<std::string>& universe() const noexcept { return universe_; }

  /// Distinct keys over non-feedback records: the evaluation universe.
  std::set<std::string> process_universe() const;

  bool operator==(const ElementStore& other) const { return records_ == other.records_; }

 private:
  std::vector<ElementRecord> records_;
  std::map<std::string, std::vector<std::size_t>> index_;
  std::set<std::string> universe_;
};

/// Parses JSON Lines element records. Blank lines are skipped. Every bad line is
/// collected and reported together in a ParseError.
ElementStore ingest_elements(std::istream& source);

/// Writes one JSON object per line with a stable field order.
void write_elements(std::ostream& out, const ElementStore& store);

ElementStore normalize_keys(const ElementStore& store, const AbstractionDictionary& dict);

/// Records whose game is listed, in store order.
std::vector<ElementRecord> elements_of(const ElementStore& store, std::span<const std::string> games);

}  // namespace procrec
