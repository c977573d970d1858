#include "procrec/render_dot.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "procrec/error.hpp"

namespace procrec {

namespace {

struct StyleClass {
  std::string_view name;
  std::string_view attributes;
};

// The only place colors and shapes are defined.
constexpr std::array<StyleClass, 6> kStyles{{
    {"normal", R"(shape=box, style="rounded,filled", fillcolor="#b5dfa0", color="#3c763d")"},
    {"problematic", R"(shape=box, style="rounded,filled", fillcolor="#f2a5a5", color="#a94442")"},
    {"quote", R"(shape=note, style=filled, fillcolor="#e4e4e4", color="#808080", fontsize=8)"},
    {"marker", R"(shape=circle, style=filled, fillcolor="#222222", color="#222222", label="", width=0.18)"},
    {"terminal", R"(shape=doublecircle, style=filled, fillcolor="#222222", color="#222222", label="", width=0.14)"},
    {"gold", R"(shape=doubleoctagon, style=filled, fillcolor="#e8c547", color="#8a6d1d")"},
}};

struct Lane {
  std::string_view id;
  std::string_view label;
};

// Activity lanes in flow order; index 3 holds activities without a subphase.
constexpr std::array<Lane, 4> kLanes{{
    {"preproduction", "Preproduction"},
    {"production", "Production"},
    {"postproduction", "Postproduction"},
    {"unordered", "Unordered"},
}};

constexpr std::string_view kUnknownOrderMarker = " ??";

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else if (c != '\r') {
      out += c;
    }
  }
  return out;
}

// Word-wraps into left-justified DOT lines ("\l" terminated).
std::string wrap_left(std::string_view s, std::size_t width) {
  std::istringstream words{std::string(s)};
  std::string word, line, out;
  while (words >> word) {
    if (width > 0 && !line.empty() && line.size() + 1 + word.size() > width) {
      out += escape(line) + "\\l";
      line.clear();
    }
    if (!line.empty()) line += ' ';
    line += word;
  }
  if (!line.empty()) out += escape(line) + "\\l";
  return out;
}

struct Node {
  std::string id;
  const MergedElement* element = nullptr;
  std::vector<std::string> quote_ids;
};

std::string element_prefix(const MergedElement& e) {
  switch (e.phase) {
    case Phase::Team:
      return "team_";
    case Phase::Characteristics:
      return "char_";
    default:
      break;
  }
  static constexpr std::array<std::string_view, 4> kShort{"pre_", "prod_", "post_", "none_"};
  return "act_" + std::string(kShort[e.subphase ? static_cast<std::size_t>(*e.subphase) : 3]);
}

}  // namespace

std::string slug(std::string_view key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out += ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) ? c : '_';
  }
  return out.empty() ? std::string("_") : out;
}

std::string render_dot(const RecommendedProcess& process, const DotOptions& options) {
  if (process.elements.empty()) throw InputError("cannot render an empty process for '" + process.target + "'");

  // Identifiers: prefix + slug, numbered on collision in element order.
  std::vector<Node> nodes;
  std::set<std::string> taken;
  for (const auto& e : process.elements) {
    std::string base = element_prefix(e) + slug(e.key);
    std::string id = base;
    for (int n = 2; !taken.insert(id).second; ++n) id = base + "_" + std::to_string(n);
    Node node{id, &e, {}};
    for (std::size_t q = 0; q < e.sources.size(); ++q) node.quote_ids.push_back(id + "__q" + std::to_string(q + 1));
    nodes.push_back(std::move(node));
  }

  std::array<std::vector<const Node*>, kLanes.size()> lanes;
  std::vector<const Node*> team, characteristics;
  for (const auto& n : nodes) {
    const auto& e = *n.element;
    if (e.phase == Phase::Team)
      team.push_back(&n);
    else if (e.phase == Phase::Characteristics)
      characteristics.push_back(&n);
    else
      lanes[e.subphase ? static_cast<std::size_t>(*e.subphase) : 3].push_back(&n);
  }

  std::map<std::string_view, std::vector<std::string>> members;
  for (const auto& n : nodes) {
    members[n.element->prob() ? "problematic" : "normal"].push_back(n.id);
    for (const auto& q : n.quote_ids) members["quote"].push_back(q);
  }
  members["marker"].push_back("start");
  for (std::size_t l = 0; l < lanes.size(); ++l) {
    if (lanes[l].empty()) continue;
    members["marker"].push_back("lane_" + std::string(kLanes[l].id) + "_begin");
    members["marker"].push_back("lane_" + std::string(kLanes[l].id) + "_end");
  }
  members["terminal"].push_back("end");
  if (options.gold_terminal) members["gold"].push_back("gold");

  const std::string title =
      options.title.empty() ? "Recommended process: " + process.target : options.title;

  std::string out;
  out += "digraph process {\n";
  out += "  graph [rankdir=LR, compound=true, newrank=true, fontname=\"Helvetica\", labelloc=t, label=\"" +
         escape(title) + "\"];\n";
  out += "  node [fontname=\"Helvetica\", fontsize=10];\n";
  out += "  edge [fontname=\"Helvetica\", fontsize=9, color=\"#555555\"];\n";
  out += "\n  // style classes\n";
  for (const auto& style : kStyles) {
    auto it = members.find(style.name);
    if (it == members.end()) continue;
    out += "  subgraph class_" + std::string(style.name) + " {\n";
    out += "    node [" + std::string(style.attributes) + ", class=\"" + std::string(style.name) + "\"];\n";
    for (const auto& id : it->second) out += "    " + id + ";\n";
    out += "  }\n";
  }

  auto emit_element = [&](const Node& n, const std::string& indent) {
    const auto& e = *n.element;
    std::string label = e.key;
    if (e.phase == Phase::Activities && !e.subphase) label += kUnknownOrderMarker;
    out += indent + n.id + " [label=\"" + escape(label) + "\"];\n";
    for (std::size_t q = 0; q < e.sources.size(); ++q) {
      const auto& src = e.sources[q];
      out += indent + n.quote_ids[q] + " [label=\"" + escape(src.game) + "\\l" + wrap_left(src.desc, options.wrap_width) +
             "\"];\n";
      out += indent + n.id + " -> " + n.quote_ids[q] + " [style=dashed, arrowhead=none];\n";
    }
  };

  std::vector<std::string> chain{"start"};
  for (std::size_t l = 0; l < lanes.size(); ++l) {
    if (lanes[l].empty()) continue;
    const std::string lane(kLanes[l].id);
    out += "\n  subgraph cluster_" + lane + " {\n";
    out += "    label=\"" + std::string(kLanes[l].label) + "\";\n";
    out += "    style=rounded;\n";
    out += "    lane_" + lane + "_begin;\n";
    for (const auto* n : lanes[l]) emit_element(*n, "    ");
    out += "    lane_" + lane + "_end;\n";
    out += "  }\n";
    chain.push_back("lane_" + lane + "_begin");
    chain.push_back("lane_" + lane + "_end");
  }
  if (options.gold_terminal) {
    out += "\n  gold [label=\"gold\"];\n";
    chain.push_back("gold");
  }
  chain.push_back("end");

  auto emit_frame = [&](const char* id, const char* label, const std::vector<const Node*>& frame) {
    if (frame.empty()) return;
    out += "\n  subgraph cluster_" + std::string(id) + " {\n";
    out += "    label=\"" + std::string(label) + "\";\n";
    out += "    style=dashed;\n";
    for (const auto* n : frame) emit_element(*n, "    ");
    out += "  }\n";
  };
  emit_frame("team", "Team", team);
  emit_frame("characteristics", "Characteristics", characteristics);

  out += "\n  // skeleton\n";
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) out += "  " + chain[i] + " -> " + chain[i + 1] + ";\n";
  out += "}\n";
  return out;
}

std::vector<std::string> check_dot(std::string_view dot) {
  std::vector<std::string> problems;
  std::vector<char> stack;
  std::size_t top_level_blocks = 0;
  std::size_t i = 0;
  auto skip_space = [&](std::size_t k) {
    while (k < dot.size() && (dot[k] == ' ' || dot[k] == '\t' || dot[k] == '\n' || dot[k] == '\r')) ++k;
    return k;
  };

  std::size_t first = skip_space(0);
  if (dot.substr(first, 7) != "digraph" && dot.substr(first, 5) != "graph" && dot.substr(first, 6) != "strict")
    problems.push_back("output does not start with a graph keyword");

  while (i < dot.size()) {
    char c = dot[i];
    if (c == '"') {
      ++i;
      while (i < dot.size() && dot[i] != '"') {
        if (dot[i] == '\\') ++i;
        if (i < dot.size() && dot[i] == '\n') problems.push_back("raw newline inside a quoted string");
        ++i;
      }
      if (i >= dot.size()) {
        problems.push_back("unterminated string");
        break;
      }
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < dot.size() && dot[i + 1] == '/') {
      while (i < dot.size() && dot[i] != '\n') ++i;
      continue;
    }
    if (c == '{' || c == '[') {
      if (c == '{' && stack.empty()) ++top_level_blocks;
      stack.push_back(c);
    } else if (c == '}' || c == ']') {
      char open = c == '}' ? '{' : '[';
      if (stack.empty() || stack.back() != open) {
        problems.push_back(std::string("unbalanced '") + c + "' at offset " + std::to_string(i));
        return problems;
      }
      stack.pop_back();
    } else if (dot.substr(i, 6) == "label=" && (i == 0 || dot[i - 1] == ' ' || dot[i - 1] == '[' || dot[i - 1] == ',')) {
      std::size_t v = i + 6;
      if (v >= dot.size() || dot[v] != '"') problems.push_back("unquoted label at offset " + std::to_string(i));
      i = v;
      continue;
    }
    ++i;
  }
  if (!stack.empty()) problems.push_back("unclosed '" + std::string(1, stack.back()) + "'");
  if (top_level_blocks != 1) problems.push_back("expected exactly one top-level graph body");
  return problems;
}

}  // namespace procrec
