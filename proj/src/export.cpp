#include "clan/export.hpp"

#include <charconv>
#include <ostream>

namespace clan {
namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string number(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

const std::string& value_at(const NodeColumn& col, NodeId n) {
  static const std::string kEmpty;
  return n < col.values.size() ? col.values[n] : kEmpty;
}

}  // namespace

void write_dot(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns) {
  out << "graph clan {\n";
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    out << "  " << dot_quote(graph.external_id(n));
    bool first = true;
    for (const auto& col : columns) {
      const std::string& v = value_at(col, n);
      if (v.empty()) continue;
      out << (first ? " [" : ", ") << col.name << '=' << dot_quote(v);
      first = false;
    }
    out << (first ? ";\n" : "];\n");
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << dot_quote(graph.external_id(e.u)) << " -- " << dot_quote(graph.external_id(e.v));
    if (e.weight != 1.0) out << " [weight=" << number(e.weight) << ']';
    out << ";\n";
  }
  out << "}\n";
}

void write_gexf(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
      << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
      << "    <attributes class=\"node\">\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << "      <attribute id=\"" << i << "\" title=\"" << xml_escape(columns[i].name) << "\" type=\"string\"/>\n";
  out << "    </attributes>\n    <nodes>\n";
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    const std::string id = xml_escape(graph.external_id(n));
    out << "      <node id=\"" << id << "\" label=\"" << id << "\">\n        <attvalues>\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string& v = value_at(columns[i], n);
      if (!v.empty()) out << "          <attvalue for=\"" << i << "\" value=\"" << xml_escape(v) << "\"/>\n";
    }
    out << "        </attvalues>\n      </node>\n";
  }
  out << "    </nodes>\n    <edges>\n";
  std::size_t edge_id = 0;
  for (const Edge& e : graph.edges()) {
    out << "      <edge id=\"" << edge_id++ << "\" source=\"" << xml_escape(graph.external_id(e.u)) << "\" target=\""
        << xml_escape(graph.external_id(e.v)) << "\" weight=\"" << number(e.weight) << "\"/>\n";
  }
  out << "    </edges>\n  </graph>\n</gexf>\n";
}

void write_node_table(std::ostream& out, const Graph& graph, std::span<const NodeColumn> columns) {
  out << "id";
  for (const auto& col : columns) out << '\t' << col.name;
  out << '\n';
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    out << graph.external_id(n);
    for (const auto& col : columns) out << '\t' << value_at(col, n);
    out << '\n';
  }
}

}  // namespace clan
