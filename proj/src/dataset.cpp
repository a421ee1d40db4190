#include "clan/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "clan/error.hpp"

namespace clan {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(kSpace) - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Bytes >= 0x80 belong to multi-byte UTF-8 sequences; treat them as word characters.
bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z');
}

bool is_kept_edge_char(char c) { return is_word_char(c) || c == '#' || c == '@'; }

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

}  // namespace

AttributeTable::AttributeTable(std::vector<std::vector<std::string>> tokens) : tokens_(std::move(tokens)) {
  std::set<std::string> vocab;
  for (const auto& row : tokens_) vocab.insert(row.begin(), row.end());
  vocabulary_.assign(vocab.begin(), vocab.end());
}

std::span<const std::string> AttributeTable::tokens(NodeId node) const {
  if (node >= tokens_.size()) return {};
  return tokens_[node];
}

AttributeTable AttributeTable::restricted(std::span<const NodeId> keep) const {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(keep.size());
  for (NodeId n : keep) {
    auto t = tokens(n);
    rows.emplace_back(t.begin(), t.end());
  }
  return AttributeTable(std::move(rows));
}

void LabelTable::set(NodeId node, std::string label) {
  auto& slot = labels_.at(node);
  if (slot && *slot != label)
    throw Error("conflicting labels for node " + std::to_string(node) + ": '" + *slot + "' vs '" + label + "'");
  slot = std::move(label);
}

const std::optional<std::string>& LabelTable::label_of(NodeId node) const {
  static const std::optional<std::string> kNone;
  if (node >= labels_.size()) return kNone;
  return labels_[node];
}

std::size_t LabelTable::labeled_count() const {
  return static_cast<std::size_t>(
      std::count_if(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); }));
}

std::vector<std::string> LabelTable::label_set() const {
  std::set<std::string> s;
  for (const auto& l : labels_)
    if (l) s.insert(*l);
  return {s.begin(), s.end()};
}

LabelTable LabelTable::restricted(std::span<const NodeId> keep) const {
  LabelTable out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) out.labels_[i] = label_of(keep[i]);
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view word = text.substr(i, j - i);
    std::size_t b = 0;
    std::size_t e = word.size();
    while (b < e && !is_kept_edge_char(word[b])) ++b;
    while (e > b && !is_kept_edge_char(word[e - 1])) --e;
    if (e > b) out.push_back(lowercase(word.substr(b, e - b)));
    i = j;
  }
  return out;
}

Graph parse_edge_list(std::istream& in, const std::string& source, const EdgeListOptions& options) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line_no = 0;
  bool any_edge = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError(source, line_no, "expected 2 or 3 tab-separated fields, got " + std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty()) throw ParseError(source, line_no, "empty node id");
    double weight = 1.0;
    if (fields.size() == 3) {
      const std::string_view w = trim(fields[2]);
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc() || ptr != w.data() + w.size() || w.empty())
        throw ParseError(source, line_no, "invalid weight '" + std::string(fields[2]) + "'");
      if (!(weight > 0.0) || !std::isfinite(weight))
        throw ParseError(source, line_no, "edge weight must be positive, got " + std::string(w));
    }
    const NodeId u = builder.add_node(fields[0]);
    const NodeId v = builder.add_node(fields[1]);
    builder.add_edge(u, v, weight);
    any_edge = true;
  }
  if (!any_edge) throw ParseError(source, 0, "empty graph");
  return std::move(builder).build(options.unweighted);
}

Graph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  auto in = open_input(path);
  return parse_edge_list(in, path.string(), options);
}

AttributeTable parse_attributes(std::istream& in, const std::string& source, Graph& graph) {
  std::vector<std::pair<NodeId, std::vector<std::string>>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source, line_no, "expected a JSON object");
    auto id = obj.find("id");
    if (id == obj.end() || !id->is_string()) throw ParseError(source, line_no, "missing string field \"id\"");

    std::vector<std::string> tokens;
    if (auto t = obj.find("tokens"); t != obj.end()) {
      if (!t->is_array()) throw ParseError(source, line_no, "\"tokens\" must be an array of strings");
      for (const auto& tok : *t) {
        if (!tok.is_string()) throw ParseError(source, line_no, "\"tokens\" must be an array of strings");
        tokens.push_back(lowercase(tok.get<std::string>()));
      }
    } else if (auto text = obj.find("text"); text != obj.end()) {
      if (!text->is_string()) throw ParseError(source, line_no, "\"text\" must be a string");
      tokens = tokenize(text->get<std::string>());
    } else {
      throw ParseError(source, line_no, "record has neither \"tokens\" nor \"text\"");
    }
    rows.emplace_back(graph.add_isolated_node(id->get<std::string>()), std::move(tokens));
  }

  std::vector<std::vector<std::string>> table(graph.node_count());
  for (auto& [node, tokens] : rows)
    table[node].insert(table[node].end(), std::make_move_iterator(tokens.begin()),
                       std::make_move_iterator(tokens.end()));
  return AttributeTable(std::move(table));
}

AttributeTable load_attributes(const std::filesystem::path& path, Graph& graph) {
  auto in = open_input(path);
  return parse_attributes(in, path.string(), graph);
}

LabelTable parse_labels(std::istream& in, const std::string& source, const Graph& graph) {
  LabelTable labels(graph.node_count());
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) throw ParseError(source, line_no, "expected 'id,label'");
    const std::string_view id = trim(line.substr(0, comma));
    const std::string_view label = trim(line.substr(comma + 1));
    if (id.empty() || label.empty()) throw ParseError(source, line_no, "empty id or label");
    const auto node = graph.find(id);
    if (!node) throw ParseError(source, line_no, "unknown node id '" + std::string(id) + "'");
    try {
      labels.set(*node, std::string(label));
    } catch (const Error&) {
      throw ParseError(source, line_no, "conflicting label for '" + std::string(id) + "'");
    }
  }
  return labels;
}

LabelTable load_labels(const std::filesystem::path& path, const Graph& graph) {
  auto in = open_input(path);
  return parse_labels(in, path.string(), graph);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const Edge& e : graph.edges()) {
    out << graph.external_id(e.u) << '\t' << graph.external_id(e.v);
    if (e.weight != 1.0) out << '\t' << format_weight(e.weight);
    out << '\n';
  }
}

void write_attributes(std::ostream& out, const Graph& graph, const AttributeTable& attrs) {
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    nlohmann::ordered_json row;
    row["id"] = graph.external_id(n);
    auto tokens = attrs.tokens(n);
    row["tokens"] = std::vector<std::string>(tokens.begin(), tokens.end());
    out << row.dump() << '\n';
  }
}

void write_labels(std::ostream& out, const Graph& graph, const LabelTable& labels) {
  for (NodeId n = 0; n < graph.node_count(); ++n)
    if (const auto& l = labels.label_of(n)) out << graph.external_id(n) << ',' << *l << '\n';
}

}  // namespace clan
