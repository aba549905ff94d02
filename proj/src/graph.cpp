#include "pcg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pcg/errors.hpp"
#include "pcg/induced_search.hpp"

namespace pcg {

  namespace {

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    // Position of the '-' separating the endpoints of an edge token. A '-'
    // directly after '^' belongs to an inverse marker inside a ball label.
    std::size_t edge_separator(std::string_view token) {
      for (std::size_t i = 1; i < token.size(); ++i) {
        if (token[i] == '-' && token[i - 1] != '^') {
          return i;
        }
      }
      return std::string_view::npos;
    }

    std::string vertex_label(std::size_t i) {
      return "v" + std::to_string(i);
    }

  }  // namespace

  bool is_identifier(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  bool is_vertex_name(std::string_view name) {
    auto const at = name.find('@');
    if (at == std::string_view::npos) {
      return is_identifier(name);
    }
    if (!is_identifier(name.substr(0, at))) {
      return false;
    }
    std::string_view rest = name.substr(at + 1);
    if (rest.empty()) {
      return false;
    }
    while (true) {
      auto const       dot    = rest.find('.');
      std::string_view letter = rest.substr(0, dot);
      if (letter.size() > 3 && letter.substr(letter.size() - 3) == "^-1") {
        letter.remove_suffix(3);
      }
      if (!is_identifier(letter)) {
        return false;
      }
      if (dot == std::string_view::npos) {
        return true;
      }
      rest = rest.substr(dot + 1);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph
  ////////////////////////////////////////////////////////////////////////

  Graph::Graph(std::vector<std::string>                               vertices,
               std::vector<std::pair<std::string, std::string>> const& edges)
      : _names(std::move(vertices)), _adj(_names.size()) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!is_vertex_name(_names[i])) {
        throw InvalidArgument("invalid vertex name \"" + _names[i] + "\"");
      }
      if (!_index.emplace(_names[i], i).second) {
        throw InvalidArgument("duplicate vertex \"" + _names[i] + "\"");
      }
    }
    for (auto const& [u, v] : edges) {
      add_edge(index(u), index(v));
    }
  }

  Graph::Graph(std::vector<std::string>                               vertices,
               std::vector<std::pair<std::size_t, std::size_t>> const& edges)
      : Graph(std::move(vertices),
              std::vector<std::pair<std::string, std::string>>{}) {
    for (auto const& [u, v] : edges) {
      if (u >= size() || v >= size()) {
        throw InvalidArgument("edge endpoint out of range");
      }
      add_edge(u, v);
    }
  }

  void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) {
      throw InvalidArgument("self-loop at \"" + _names[u] + "\"");
    }
    if (_adj.test(u, v)) {
      throw InvalidArgument("duplicate edge " + _names[u] + "-" + _names[v]);
    }
    _adj.set(u, v);
  }

  std::optional<std::size_t> Graph::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t Graph::index(std::string_view name) const {
    if (auto i = find(name)) {
      return *i;
    }
    throw InvalidArgument("unknown vertex \"" + std::string(name) + "\"");
  }

  std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>>
  GraphEmbedding::named(Graph const& pattern, Graph const& host) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < image.size(); ++i) {
      out.emplace_back(pattern.name(i), host.name(image[i]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  Graph parse_graph(std::string_view text) {
    std::vector<std::string>                         vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t>                         edge_lines;
    bool        seen_vertices = false, seen_edges = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto const end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected \"vertices:\" or \"edges:\"");
      }
      auto const key  = trim(line.substr(0, colon));
      auto const body = line.substr(colon + 1);
      if (key == "vertices") {
        if (seen_vertices) {
          throw ParseError(line_no, "repeated \"vertices:\" line");
        }
        seen_vertices = true;
        for (auto tok : split_ws(body)) {
          std::string name(tok);
          if (!is_vertex_name(name)) {
            throw ParseError(line_no, "invalid vertex name \"" + name + "\"");
          }
          if (std::find(vertices.begin(), vertices.end(), name)
              != vertices.end()) {
            throw ParseError(line_no, "duplicate vertex \"" + name + "\"");
          }
          vertices.push_back(std::move(name));
        }
      } else if (key == "edges") {
        if (!seen_vertices) {
          throw ParseError(line_no, "\"edges:\" before \"vertices:\"");
        }
        if (seen_edges) {
          throw ParseError(line_no, "repeated \"edges:\" line");
        }
        seen_edges = true;
        for (auto tok : split_ws(body)) {
          auto const sep = edge_separator(tok);
          if (sep == std::string_view::npos || sep + 1 == tok.size()) {
            throw ParseError(line_no,
                             "malformed edge \"" + std::string(tok) + "\"");
          }
          edges.emplace_back(std::string(tok.substr(0, sep)),
                             std::string(tok.substr(sep + 1)));
          edge_lines.push_back(line_no);
        }
      } else {
        throw ParseError(line_no, "unknown key \"" + std::string(key) + "\"");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!seen_vertices) {
      throw ParseError(0, "missing \"vertices:\" line");
    }

    Graph g(std::move(vertices),
            std::vector<std::pair<std::size_t, std::size_t>>{});
    std::vector<std::pair<std::size_t, std::size_t>> indexed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& [u, v] = edges[i];
      auto const iu = g.find(u), iv = g.find(v);
      if (!iu || !iv) {
        throw ParseError(edge_lines[i],
                         "unknown endpoint \"" + (iu ? v : u) + "\"");
      }
      if (*iu == *iv) {
        throw ParseError(edge_lines[i], "self-loop at \"" + u + "\"");
      }
      std::pair<std::size_t, std::size_t> const key{std::min(*iu, *iv),
                                                   std::max(*iu, *iv)};
      if (std::find(indexed.begin(), indexed.end(), key) != indexed.end()) {
        throw ParseError(edge_lines[i], "duplicate edge " + u + "-" + v);
      }
      indexed.push_back(key);
    }
    return Graph(g.names(), indexed);
  }

  std::string format_graph(Graph const& g) {
    std::ostringstream out;
    out << "vertices:";
    for (auto const& n : g.names()) {
      out << ' ' << n;
    }
    out << "\nedges:";
    for (auto const& [u, v] : g.edges()) {
      out << ' ' << g.name(u) << '-' << g.name(v);
    }
    out << '\n';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Graph complement(Graph const& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (!g.adjacent(u, v)) {
          edges.emplace_back(u, v);
        }
      }
    }
    return Graph(g.names(), edges);
  }

  namespace {
    std::vector<std::string> labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(vertex_label(i));
      }
      return out;
    }
  }  // namespace

  Graph cycle_graph(std::size_t n) {
    if (n < 3) {
      throw InvalidArgument("cycle_graph requires n >= 3, got "
                            + std::to_string(n));
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(labels(n), edges);
  }

  Graph path_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(i, i + 1);
    }
    return Graph(labels(n + 1), edges);
  }

  Graph complete_graph(std::size_t n) {
    return complement(edgeless_graph(n));
  }

  Graph edgeless_graph(std::size_t n) {
    return Graph(labels(n), std::vector<std::pair<std::size_t, std::size_t>>{});
  }

  Graph induced_subgraph(Graph const&                    g,
                         std::vector<std::string> const& names) {
    return induced_subgraph(g, vertex_set(g, names));
  }

  Graph induced_subgraph(Graph const& g, VertexSet const& vertices) {
    std::vector<std::size_t> const keep(vertices.begin(), vertices.end());
    for (auto v : keep) {
      if (v >= g.size()) {
        throw InvalidArgument("vertex index out of range");
      }
    }
    std::vector<std::string>                         names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      names.push_back(g.name(keep[i]));
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (g.adjacent(keep[i], keep[j])) {
          edges.emplace_back(i, j);
        }
      }
    }
    return Graph(std::move(names), edges);
  }

  std::vector<std::string> names_of(Graph const& g, VertexSet const& s) {
    std::vector<std::string> out;
    for (auto v : s) {
      out.push_back(g.name(v));
    }
    return out;
  }

  VertexSet vertex_set(Graph const& g, std::vector<std::string> const& names) {
    VertexSet out;
    for (auto const& n : names) {
      out.insert(g.index(n));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Search and recognition
  ////////////////////////////////////////////////////////////////////////

  std::optional<GraphEmbedding> find_induced(Graph const& pattern,
                                             Graph const& host) {
    if (auto image
        = find_induced_embedding(pattern.adjacency(), host.adjacency())) {
      return GraphEmbedding{std::move(*image)};
    }
    return std::nullopt;
  }

  std::optional<GraphEmbedding> graph_isomorphic(Graph const& g1,
                                                 Graph const& g2) {
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) {
      return std::nullopt;
    }
    return find_induced(g1, g2);
  }

  std::vector<VertexSet> connected_components(Graph const&     g,
                                              VertexSet const& within) {
    std::vector<VertexSet> out;
    VertexSet              seen;
    for (auto start : within) {
      if (seen.count(start)) {
        continue;
      }
      VertexSet                component{start};
      std::vector<std::size_t> todo{start};
      seen.insert(start);
      while (!todo.empty()) {
        auto u = todo.back();
        todo.pop_back();
        for (auto v : within) {
          if (!seen.count(v) && g.adjacent(u, v)) {
            seen.insert(v);
            component.insert(v);
            todo.push_back(v);
          }
        }
      }
      out.push_back(std::move(component));
    }
    return out;
  }

  bool is_chordal(Graph const& g) {
    for (std::size_t n = 4; n <= g.size(); ++n) {
      if (find_induced(cycle_graph(n), g)) {
        return false;
      }
    }
    return true;
  }

  bool is_weakly_chordal(Graph const& g) {
    for (std::size_t n = 5; n <= g.size(); ++n) {
      auto const cycle = cycle_graph(n);
      if (find_induced(cycle, g) || find_induced(complement(cycle), g)) {
        return false;
      }
    }
    return true;
  }

  bool is_thin_chordal(Graph const& g) {
    return !find_induced(cycle_graph(4), g) && !find_induced(path_graph(3), g);
  }

}  // namespace pcg
