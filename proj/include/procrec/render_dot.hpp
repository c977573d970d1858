#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "procrec/recommender.hpp"

namespace procrec {

struct DotOptions {
  std::string title;          // defaults to "Recommended process: <target>"
  bool gold_terminal = false;  // emit a "gold" node before the end disc
  std::size_t wrap_width = 48;  // quote box line width, 0 disables wrapping
};

/// Node identifier rule: lowercase, every byte outside [a-z0-9] becomes '_'.
std::string slug(std::string_view key);

/// Renders a process as a Graphviz DOT digraph.
///
/// Activity lanes (preproduction, production, postproduction, then an
/// "unordered" lane for activities without a subphase) become clusters chained
/// by the start -> lane -> end skeleton; team and characteristics elements sit
/// in two frames. Each element is one node whose style class (normal or
/// problematic) is assigned once in the preamble; each source quote is a note
/// node tied to its element. Activities with no subphase end in " ??".
/// No edges between activities are invented. Throws InputError on an empty
/// process.
std::string render_dot(const RecommendedProcess& process, const DotOptions& options = {});

/// Minimal syntax check for emitted DOT: balanced braces and brackets outside
/// strings, terminated strings, one top-level graph, quoted label values.
/// Returns the problems found (empty when well formed).
std::vector<std::string> check_dot(std::string_view dot);

}  // namespace procrec
