#include "pcg/droms.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace pcg {

  namespace {

    DecompositionResult decompose(Graph const& g, VertexSet const& within) {
      DecompositionNode node;
      node.vertices = within;
      if (within.size() == 1) {
        node.kind = DecompositionNode::Kind::leaf;
        node.apex = *within.begin();
        return node;
      }
      auto components = connected_components(g, within);
      if (components.size() != 1) {
        node.kind = DecompositionNode::Kind::free_product;
        for (auto const& c : components) {
          auto child = decompose(g, c);
          if (std::holds_alternative<DecompositionFailure>(child)) {
            return child;
          }
          node.children.push_back(std::get<DecompositionNode>(std::move(child)));
        }
        return node;
      }
      auto const apex = cone_vertex(g, within);
      if (!apex) {
        return DecompositionFailure{within};
      }
      node.kind = DecompositionNode::Kind::cone;
      node.apex = *apex;
      VertexSet rest(within);
      rest.erase(*apex);
      auto child = decompose(g, rest);
      if (std::holds_alternative<DecompositionFailure>(child)) {
        return child;
      }
      node.children.push_back(std::get<DecompositionNode>(std::move(child)));
      return node;
    }

    struct Term {
      std::string text;
      bool        compound = false;  // needs parentheses inside a product
    };

    // Sorts factors with bare Z first, then by text.
    std::string join_sorted(std::vector<Term> terms, std::string const& op) {
      std::sort(terms.begin(), terms.end(), [](Term const& a, Term const& b) {
        return std::tie(a.compound, a.text) < std::tie(b.compound, b.text);
      });
      std::string out;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
          out += op;
        }
        out += terms[i].compound ? "(" + terms[i].text + ")" : terms[i].text;
      }
      return out;
    }

    // Direct factors of a cone chain, flattened.
    void direct_factors(DecompositionNode const& node, std::vector<Term>& out);

    Term signature(DecompositionNode const& node) {
      switch (node.kind) {
        case DecompositionNode::Kind::leaf:
          return {"Z", false};
        case DecompositionNode::Kind::cone: {
          std::vector<Term> factors;
          direct_factors(node, factors);
          return {join_sorted(std::move(factors), " × "), true};
        }
        case DecompositionNode::Kind::free_product:
        default: {
          if (node.children.empty()) {
            return {"1", false};
          }
          std::vector<Term> factors;
          for (auto const& c : node.children) {
            factors.push_back(signature(c));
          }
          return {join_sorted(std::move(factors), " ∗ "), true};
        }
      }
    }

    void direct_factors(DecompositionNode const& node, std::vector<Term>& out) {
      if (node.kind == DecompositionNode::Kind::cone) {
        out.push_back({"Z", false});
        direct_factors(node.children.front(), out);
      } else {
        out.push_back(signature(node));
      }
    }

    void rebuild(Graph const& g, DecompositionNode const& node,
                 std::vector<std::pair<std::size_t, std::size_t>>& edges) {
      for (auto const& c : node.children) {
        rebuild(g, c, edges);
      }
      if (node.kind == DecompositionNode::Kind::cone) {
        for (auto v : node.children.front().vertices) {
          edges.emplace_back(node.apex, v);
        }
      }
    }

  }  // namespace

  std::optional<std::size_t> cone_vertex(Graph const& g) {
    VertexSet all;
    for (std::size_t v = 0; v < g.size(); ++v) {
      all.insert(v);
    }
    return cone_vertex(g, all);
  }

  std::optional<std::size_t> cone_vertex(Graph const& g,
                                         VertexSet const& within) {
    for (auto z : within) {
      if (std::all_of(within.begin(), within.end(),
                      [&](auto v) { return v == z || g.adjacent(z, v); })) {
        return z;
      }
    }
    return std::nullopt;
  }

  DecompositionResult decompose_thin_chordal(Graph const& g) {
    if (g.size() == 0) {
      return DecompositionNode{DecompositionNode::Kind::free_product, {}, 0, {}};
    }
    VertexSet all;
    for (std::size_t v = 0; v < g.size(); ++v) {
      all.insert(v);
    }
    return decompose(g, all);
  }

  std::string to_sexpr(Graph const& g, DecompositionNode const& node) {
    switch (node.kind) {
      case DecompositionNode::Kind::leaf:
        return "(leaf " + g.name(node.apex) + ")";
      case DecompositionNode::Kind::cone:
        return "(cone " + g.name(node.apex) + " "
               + to_sexpr(g, node.children.front()) + ")";
      case DecompositionNode::Kind::free_product:
      default: {
        std::string out = "(free";
        for (auto const& c : node.children) {
          out += " " + to_sexpr(g, c);
        }
        return out + ")";
      }
    }
  }

  std::string tree_group_signature(DecompositionNode const& node) {
    return signature(node).text;
  }

  Graph rebuild_graph(Graph const& g, DecompositionNode const& node) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    rebuild(g, node, edges);
    for (auto& e : edges) {
      if (e.first > e.second) {
        std::swap(e.first, e.second);
      }
    }
    std::sort(edges.begin(), edges.end());
    return Graph(g.names(), edges);
  }

  std::size_t node_count(DecompositionNode const& node) {
    std::size_t total = 1;
    for (auto const& c : node.children) {
      total += node_count(c);
    }
    return total;
  }

}  // namespace pcg
