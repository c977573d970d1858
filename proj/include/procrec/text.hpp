#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the file readers and writers.
namespace procrec::text {

std::string trim(std::string_view s);

/// ASCII lowercase; bytes >= 0x80 pass through so UTF-8 stays intact.
std::string lowercase(std::string_view s);

/// trim + lowercase, the canonical form of element keys.
std::string canonical_key(std::string_view s);

/// Splits one CSV record (RFC 4180 quoting, no embedded newlines).
/// Throws InputError on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field only when it contains a comma, quote, or leading/trailing space.
std::string csv_field(std::string_view field);

std::string join_csv(const std::vector<std::string>& fields);

/// Reads the next line, stripping a trailing '\r'. Returns false at EOF.
bool read_line(std::istream& in, std::string& line);

/// Formats a finite double with `digits` significant digits, mapping -0 to 0.
std::string format_significant(double value, int digits);

/// Fixed two-decimal rendering of ratio*100 with halves rounded away from zero.
std::string format_percent(double ratio);

}  // namespace procrec::text
