#include "procrec/context_model.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "procrec/error.hpp"
#include "procrec/text.hpp"

namespace procrec {

namespace {

constexpr std::array<std::string_view, 6> kGroupNames{"Activities", "Team",     "Management",
                                                      "Technical",  "Platform", "Design"};

void check_vector(const ContextVector& v, std::size_t dimension) {
  if (v.values.size() != dimension)
    throw InputError("context '" + v.game + "' has " + std::to_string(v.values.size()) + " values, expected " +
                     std::to_string(dimension));
  if (v.true_count() == 0) throw InputError("context '" + v.game + "' has no true variable");
}

}  // namespace

std::string_view to_string(VariableGroup group) { return kGroupNames[static_cast<std::size_t>(group)]; }

std::optional<VariableGroup> parse_variable_group(std::string_view s) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i)
    if (text::lowercase(kGroupNames[i]) == text::lowercase(s)) return static_cast<VariableGroup>(i);
  return std::nullopt;
}

std::string variable_id(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%02zu", index + 1);
  return buf;
}

// --- VariableCatalog -------------------------------------------------------

VariableCatalog::VariableCatalog(std::vector<ContextVariable> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw InputError("variable catalog is empty");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].id != variable_id(i))
      throw InputError("catalog entry " + std::to_string(i + 1) + " has id '" + variables_[i].id + "', expected '" +
                       variable_id(i) + "'");
  }
}

VariableCatalog VariableCatalog::load_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("catalog must be a JSON array");
  std::vector<ContextVariable> vars;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("id") || !item.contains("group") || !item.contains("description"))
      throw InputError("catalog entries need id, group and description");
    auto group = parse_variable_group(item["group"].get<std::string>());
    if (!group) throw InputError("unknown variable group '" + item["group"].get<std::string>() + "'");
    vars.push_back({item["id"].get<std::string>(), *group, item["description"].get<std::string>()});
  }
  return VariableCatalog(std::move(vars));
}

std::vector<std::string> VariableCatalog::ids() const {
  std::vector<std::string> out;
  for (const auto& v : variables_) out.push_back(v.id);
  return out;
}

// --- ContextVector ---------------------------------------------------------

ContextVector ContextVector::from_true_variables(std::string game, std::size_t size,
                                                 const std::vector<std::size_t>& true_variables) {
  ContextVector v{std::move(game), std::vector<bool>(size, false)};
  for (auto one_based : true_variables) {
    if (one_based < 1 || one_based > size) throw InputError("variable index " + std::to_string(one_based) + " out of range");
    v.values[one_based - 1] = true;
  }
  return v;
}

std::size_t ContextVector::true_count() const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), true));
}

std::vector<double> ContextVector::as_reals() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] ? 1.0 : 0.0;
  return out;
}

// --- ContextMatrix ---------------------------------------------------------

ContextMatrix::ContextMatrix(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw InputError("context dimension must be positive");
}

ContextMatrix::ContextMatrix(std::size_t dimension, std::vector<ContextVector> rows) : ContextMatrix(dimension) {
  std::set<std::string> names;
  for (const auto& r : rows) {
    check_vector(r, dimension_);
    if (!names.insert(r.game).second) throw InputError("duplicate game '" + r.game + "' in context matrix");
  }
  rows_ = std::move(rows);
}

const ContextVector* ContextMatrix::find(const std::string& game) const {
  auto it = std::find_if(rows_.begin(), rows_.end(), [&](const ContextVector& r) { return r.game == game; });
  return it == rows_.end() ? nullptr : &*it;
}

ContextMatrix ContextMatrix::without(const std::string& game) const {
  std::vector<ContextVector> rows;
  for (const auto& r : rows_)
    if (r.game != game) rows.push_back(r);
  return ContextMatrix(dimension_, std::move(rows));
}

std::vector<std::string> ContextMatrix::variable_ids() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dimension_; ++i) out.push_back(variable_id(i));
  return out;
}

// --- operations ------------------------------------------------------------

ContextMatrix load_contexts(std::istream& source, std::optional<std::size_t> expected_dimension) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (text::read_line(source, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    header = text::split_csv_line(line);
    break;
  }
  if (header.empty()) {
    if (expected_dimension) return ContextMatrix(*expected_dimension);
    throw InputError("context file has no header");
  }
  if (text::trim(header[0]) != "game") throw ParseError({{line_no, "header must start with 'game'"}});
  std::size_t dimension = header.size() - 1;
  if (dimension == 0) throw ParseError({{line_no, "header names no variables"}});
  for (std::size_t i = 0; i < dimension; ++i) {
    if (text::trim(header[i + 1]) != variable_id(i))
      throw ParseError({{line_no, "header column " + std::to_string(i + 2) + " is '" + header[i + 1] + "', expected '" +
                                      variable_id(i) + "'"}});
  }
  if (expected_dimension && dimension != *expected_dimension)
    throw ParseError({{line_no, "header names " + std::to_string(dimension) + " variables, expected " +
                                    std::to_string(*expected_dimension)}});

  std::vector<ContextVector> rows;
  std::vector<Diagnostic> problems;
  std::set<std::string> names;
  while (text::read_line(source, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    std::vector<std::string> cells;
    try {
      cells = text::split_csv_line(line);
    } catch (const InputError& e) {
      problems.push_back({line_no, e.what()});
      continue;
    }
    if (cells.size() != dimension + 1) {
      problems.push_back({line_no, "expected " + std::to_string(dimension + 1) + " columns, found " +
                                       std::to_string(cells.size())});
      continue;
    }
    ContextVector v{cells[0], std::vector<bool>(dimension, false)};
    bool ok = true;
    for (std::size_t i = 0; i < dimension; ++i) {
      auto cell = text::trim(cells[i + 1]);
      if (cell == "1") {
        v.values[i] = true;
      } else if (cell != "0") {
        problems.push_back({line_no, "value '" + cells[i + 1] + "' for " + variable_id(i) + " is not 0 or 1"});
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (v.game.empty()) {
      problems.push_back({line_no, "empty game name"});
      continue;
    }
    if (v.true_count() == 0) {
      problems.push_back({line_no, "context '" + v.game + "' has no true variable"});
      continue;
    }
    if (!names.insert(v.game).second) {
      problems.push_back({line_no, "duplicate game '" + v.game + "'"});
      continue;
    }
    rows.push_back(std::move(v));
  }
  if (!problems.empty()) throw ParseError(std::move(problems));
  return ContextMatrix(dimension, std::move(rows));
}

void write_contexts(std::ostream& out, const ContextMatrix& matrix) {
  std::vector<std::string> header{"game"};
  for (auto& id : matrix.variable_ids()) header.push_back(id);
  out << text::join_csv(header) << '\n';
  for (const auto& r : matrix.rows()) {
    std::vector<std::string> cells{r.game};
    for (bool b : r.values) cells.push_back(b ? "1" : "0");
    out << text::join_csv(cells) << '\n';
  }
}

ContextMatrix append_context(const ContextMatrix& matrix, ContextVector vector) {
  check_vector(vector, matrix.dimension());
  if (matrix.contains(vector.game)) throw InputError("game '" + vector.game + "' is already in the context matrix");
  auto rows = matrix.rows();
  rows.push_back(std::move(vector));
  return ContextMatrix(matrix.dimension(), std::move(rows));
}

std::vector<std::string> lint_context(const ContextVector& vector) {
  std::vector<std::string> warnings;
  auto on = [&](std::size_t one_based) { return one_based <= vector.values.size() && vector.values[one_based - 1]; };
  if (vector.values.size() < 21) return warnings;

  int sizes = on(19) + on(20) + on(21);
  if (sizes > 1) warnings.push_back("conflicting team size: more than one of v19, v20, v21 set");
  if (sizes == 0) warnings.push_back("missing team size: none of v19, v20, v21 set");
  if (on(7) && on(8)) warnings.push_back("conflicting pre-production length: both v07 and v08 set");
  return warnings;
}

}  // namespace procrec
