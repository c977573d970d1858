#include "procrec/corpus_store.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "procrec/error.hpp"
#include "procrec/text.hpp"

namespace procrec {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 4> kPhaseNames{"activities", "team", "characteristics", "feedback"};
constexpr std::array<std::string_view, 3> kSubphaseNames{"preproduction", "production", "postproduction"};

constexpr std::array<std::string_view, 6> kRecordFields{"game", "phase", "subphase", "element", "desc", "prob"};

std::optional<std::string> check_record(const nlohmann::json& j, ElementRecord& rec) {
  if (!j.is_object()) return "record is not a JSON object";
  for (const auto& [name, _] : j.items()) {
    if (std::find(kRecordFields.begin(), kRecordFields.end(), name) == kRecordFields.end())
      return "unknown field '" + name + "'";
  }
  for (std::string_view field : {"game", "phase", "element", "desc"}) {
    auto it = j.find(field);
    if (it == j.end()) return "missing field '" + std::string(field) + "'";
    if (!it->is_string()) return "field '" + std::string(field) + "' must be a string";
  }
  auto prob = j.find("prob");
  if (prob == j.end()) return "missing field 'prob'";
  if (!prob->is_boolean()) return "field 'prob' must be a boolean";

  rec.game = text::trim(j["game"].get<std::string>());
  if (rec.game.empty()) return "empty game name";

  auto phase_text = j["phase"].get<std::string>();
  auto phase = parse_phase(phase_text);
  if (!phase) return "unknown phase '" + phase_text + "'";
  rec.phase = *phase;

  rec.subphase.reset();
  if (auto sp = j.find("subphase"); sp != j.end() && !sp->is_null()) {
    if (!sp->is_string()) return "field 'subphase' must be a string";
    auto parsed = parse_subphase(sp->get<std::string>());
    if (!parsed) return "unknown subphase '" + sp->get<std::string>() + "'";
    if (rec.phase != Phase::Activities) return "subphase is only allowed for activities";
    rec.subphase = parsed;
  }

  rec.key = text::canonical_key(j["element"].get<std::string>());
  if (rec.key.empty()) return "empty element key";
  rec.desc = j["desc"].get<std::string>();
  if (text::trim(rec.desc).empty()) return "empty desc";
  rec.prob = prob->get<bool>();
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Phase phase) { return kPhaseNames[static_cast<std::size_t>(phase)]; }
std::string_view to_string(Subphase subphase) { return kSubphaseNames[static_cast<std::size_t>(subphase)]; }

std::optional<Phase> parse_phase(std::string_view s) {
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i)
    if (kPhaseNames[i] == s) return static_cast<Phase>(i);
  return std::nullopt;
}

std::optional<Subphase> parse_subphase(std::string_view s) {
  for (std::size_t i = 0; i < kSubphaseNames.size(); ++i)
    if (kSubphaseNames[i] == s) return static_cast<Subphase>(i);
  return std::nullopt;
}

// --- AbstractionDictionary -------------------------------------------------

AbstractionDictionary::AbstractionDictionary(const std::map<std::string, std::string>& entries) {
  std::vector<Diagnostic> problems;
  for (const auto& [alias, canonical] : entries) {
    auto a = text::canonical_key(alias);
    auto c = text::canonical_key(canonical);
    if (a.empty() || c.empty()) {
      problems.push_back({0, "empty alias or canonical key ('" + alias + "' -> '" + canonical + "')"});
      continue;
    }
    auto [it, inserted] = entries_.emplace(a, c);
    if (!inserted && it->second != c)
      problems.push_back({0, "alias '" + a + "' maps to both '" + it->second + "' and '" + c + "'"});
  }
  for (const auto& [alias, canonical] : entries_) {
    auto it = entries_.find(canonical);
    if (it != entries_.end() && it->second != canonical)
      problems.push_back({0, "chained alias '" + alias + "' -> '" + canonical + "' -> '" + it->second + "'"});
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
}

AbstractionDictionary AbstractionDictionary::load_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("dictionary is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("dictionary must be a JSON object of alias -> canonical");
  std::map<std::string, std::string> raw;
  for (const auto& [alias, value] : j.items()) {
    if (!value.is_string()) throw InputError("dictionary value for '" + alias + "' must be a string");
    raw.emplace(alias, value.get<std::string>());
  }
  return AbstractionDictionary(raw);
}

const std::string& AbstractionDictionary::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? key : it->second;
}

// --- ElementStore ----------------------------------------------------------

ElementStore::ElementStore(std::vector<ElementRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    index_[records_[i].game].push_back(i);
    universe_.insert(records_[i].key);
  }
}

std::span<const std::size_t> ElementStore::positions_of(const std::string& game) const {
  auto it = index_.find(game);
  if (it == index_.end()) return {};
  return it->second;
}

std::vector<std::string> ElementStore::games() const {
  std::vector<std::string> out;
  out.reserve(index_.size());
  for (const auto& [game, _] : index_) out.push_back(game);
  return out;
}

std::set<std::string> ElementStore::process_universe() const {
  std::set<std::string> out;
  for (const auto& r : records_)
    if (r.phase != Phase::Feedback) out.insert(r.key);
  return out;
}

// --- operations ------------------------------------------------------------

ElementStore ingest_elements(std::istream& source) {
  std::vector<ElementRecord> records;
  std::vector<Diagnostic> problems;
  std::set<ElementRecord> seen;
  std::string line;
  std::size_t line_no = 0;
  while (text::read_line(source, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      problems.push_back({line_no, std::string("malformed JSON: ") + e.what()});
      continue;
    }
    ElementRecord rec;
    if (auto why = check_record(j, rec)) {
      problems.push_back({line_no, *why});
      continue;
    }
    if (!seen.insert(rec).second) {
      problems.push_back({line_no, "duplicate record for game '" + rec.game + "', element '" + rec.key + "'"});
      continue;
    }
    records.push_back(std::move(rec));
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
  return ElementStore(std::move(records));
}

void write_elements(std::ostream& out, const ElementStore& store) {
  for (const auto& r : store.records()) {
    ordered_json j;
    j["game"] = r.game;
    j["phase"] = std::string(to_string(r.phase));
    if (r.subphase) j["subphase"] = std::string(to_string(*r.subphase));
    j["element"] = r.key;
    j["desc"] = r.desc;
    j["prob"] = r.prob;
    out << j.dump() << '\n';
  }
}

ElementStore normalize_keys(const ElementStore& store, const AbstractionDictionary& dict) {
  std::vector<ElementRecord> records = store.records();
  for (auto& r : records) r.key = dict.lookup(r.key);
  return ElementStore(std::move(records));
}

std::vector<ElementRecord> elements_of(const ElementStore& store, std::span<const std::string> games) {
  std::vector<std::size_t> positions;
  for (const auto& g : games) {
    auto p = store.positions_of(g);
    positions.insert(positions.end(), p.begin(), p.end());
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  std::vector<ElementRecord> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(store.records()[p]);
  return out;
}

}  // namespace procrec
