#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace procrec {

/// Number of variables in the standard video game context catalog.
inline constexpr std::size_t kStandardContextSize = 61;

enum class VariableGroup { Activities, Team, Management, Technical, Platform, Design };

std::string_view to_string(VariableGroup group);
std::optional<VariableGroup> parse_variable_group(std::string_view s);

struct ContextVariable {
  std::string id;  // "v01", "v02", ...
  VariableGroup group = VariableGroup::Activities;
  std::string description;
};

/// Ordered variable catalog; ids are v01..vNN in sequence.
class VariableCatalog {
 public:
  explicit VariableCatalog(std::vector<ContextVariable> variables);

  /// Reads a JSON array of {id, group, description}.
  static VariableCatalog load_json(std::istream& in);

  const std::vector<ContextVariable>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  std::vector<std::string> ids() const;

 private:
  std::vector<ContextVariable> variables_;
};

/// "v07" for index 6.
std::string variable_id(std::size_t index);

/// A project's binary context. At least one value must be true.
struct ContextVector {
  std::string game;
  std::vector<bool> values;

  /// Builds a vector of `size` values with the listed 1-based variables set.
  static ContextVector from_true_variables(std::string game, std::size_t size,
                                           const std::vector<std::size_t>& true_variables);

  std::size_t true_count() const;
  std::vector<double> as_reals() const;

  bool operator==(const ContextVector&) const = default;
};

/// Rows of context vectors sharing one variable layout. Game names are unique.
class ContextMatrix {
 public:
  /// Empty matrix over `dimension` variables (ids v01..).
  explicit ContextMatrix(std::size_t dimension = kStandardContextSize);

  /// Validates row lengths, all-false rows, and unique names.
  ContextMatrix(std::size_t dimension, std::vector<ContextVector> rows);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<ContextVector>& rows() const noexcept { return rows_; }

  const ContextVector* find(const std::string& game) const;
  bool contains(const std::string& game) const { return find(game) != nullptr; }

  /// Copy without the named row (no-op when absent).
  ContextMatrix without(const std::string& game) const;

  std::vector<std::string> variable_ids() const;

 private:
  std::size_t dimension_;
  std::vector<ContextVector> rows_;
};

/// CSV with header `game,v01,...,vNN` and one 0/1 row per project. When
/// `expected_dimension` is set, the header must have exactly that many variables.
ContextMatrix load_contexts(std::istream& source, std::optional<std::size_t> expected_dimension = kStandardContextSize);

void write_contexts(std::ostream& out, const ContextMatrix& matrix);

/// Returns a matrix with `vector` as its new last row. Throws InputError on a
/// duplicate name or a dimension mismatch.
ContextMatrix append_context(const ContextMatrix& matrix, ContextVector vector);

/// Soft checks on mutually exclusive variables of the standard catalog
/// (team size v19-v21, pre-production length v07/v08). Never throws.
std::vector<std::string> lint_context(const ContextVector& vector);

}  // namespace procrec
