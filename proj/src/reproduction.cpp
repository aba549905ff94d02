#include "pcg/reproduction.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "pcg/centralizers.hpp"
#include "pcg/errors.hpp"

namespace pcg {

  namespace {

    std::map<std::string_view, std::string_view> const& graph_texts() {
      static std::map<std::string_view, std::string_view> const texts = {
          {"gamma1",
           "vertices: a b c d e\n"
           "edges: a-d a-e b-e c-d d-e\n"},
          {"gamma2",
           "vertices: a1 a2 b c d e\n"
           "edges: a1-a2 a1-c a1-d a1-e a2-b a2-d a2-e b-e c-d d-e\n"},
          {"c5bar",
           "vertices: a b c d e\n"
           "edges: a-c a-d b-d b-e c-e\n"},
          // complement of the path c1-d1-e1-a-b-c2-d2-e2
          {"p7bar",
           "vertices: a b c1 c2 d1 d2 e1 e2\n"
           "edges: a-c1 a-c2 a-d1 a-d2 a-e2"
           " b-c1 b-d1 b-d2 b-e1 b-e2"
           " c1-c2 c1-d2 c1-e1 c1-e2"
           " c2-d1 c2-e1 c2-e2"
           " d1-d2 d1-e2 d2-e1"
           " e1-e2\n"},
      };
      return texts;
    }

    struct MapSpec {
      std::string_view source, target, text;
    };

    std::map<std::string_view, MapSpec> const& map_specs() {
      static std::map<std::string_view, MapSpec> const specs = {
          {"phi_egc",
           {"gamma1", "gamma2",
            "a -> a1 a2\nb -> b\nc -> c\nd -> d\ne -> e\n"}},
          {"phi_wcc",
           {"c5bar", "p7bar",
            "a -> a\nb -> b\nc -> c1 c2\nd -> d1 d2\ne -> e1 e2\n"}},
      };
      return specs;
    }

    std::string set_text(Graph const& g, VertexSet const& s) {
      std::string out = "{";
      bool        first = true;
      for (auto const& n : names_of(g, s)) {
        out += (first ? "" : ",") + n;
        first = false;
      }
      return out + "}";
    }

    // Runs fn(check) and records its duration.
    template <typename F>
    Check timed(std::string id, F&& fn) {
      Check check;
      check.id          = std::move(id);
      auto const start  = std::chrono::steady_clock::now();
      fn(check);
      check.time_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      return check;
    }

    Check homomorphism_check(std::string id, GeneratorMap const& m) {
      return timed(std::move(id), [&](Check& check) {
        auto const report = check_homomorphism(m);
        check.verdict     = report.holds() ? Verdict::pass : Verdict::fail;
        check.summary     = report.holds()
                                ? "every defining relator maps to the identity"
                                : "a defining relator has nontrivial image";
        for (auto const& r : report.relators) {
          std::string const rel = "[" + m.source.name(r.x) + ","
                                  + m.source.name(r.y) + "]";
          std::string const reduced
              = r.reduced.empty() ? "1" : format_word(m.target, r.reduced.word());
          check.details.push_back(rel + " -> " + format_word(m.target, r.image)
                                  + " = " + reduced
                                  + (r.trivial() ? "" : "  FAILS"));
        }
      });
    }

    Check kernel_check(std::string id, GeneratorMap const& m,
                       std::size_t max_len, std::optional<VertexSet> const& ys) {
      return timed(std::move(id), [&](Check& check) {
        check.bound = max_len;
        std::string const scope
            = ys ? " on the parabolic " + set_text(m.source, *ys) : "";
        try {
          auto const result = kernel_search(m, max_len, ys);
          std::size_t total = 0;
          for (auto c : result.elements_per_length) {
            total += c;
          }
          if (result.witness) {
            check.verdict = Verdict::fail;
            check.summary = "kernel element found" + scope;
            check.details.push_back("witness: "
                                    + format_word(m.source, *result.witness));
          } else {
            check.verdict = Verdict::evidence;
            check.summary = "no kernel element of length <= "
                            + std::to_string(max_len) + scope
                            + " (bounded evidence, not a proof of injectivity)";
          }
          check.details.push_back("nontrivial elements checked: "
                                  + std::to_string(total));
        } catch (NotHomomorphismError const& e) {
          check.verdict = Verdict::fail;
          check.summary = "not a homomorphism; kernel search skipped";
          check.details.push_back(e.what());
        }
      });
    }

  }  // namespace

  std::vector<std::string> builtin_graph_names() {
    std::vector<std::string> out;
    for (auto const& [name, text] : graph_texts()) {
      out.emplace_back(name);
    }
    return out;
  }

  std::vector<std::string> builtin_map_names() {
    std::vector<std::string> out;
    for (auto const& [name, spec] : map_specs()) {
      out.emplace_back(name);
    }
    return out;
  }

  bool is_builtin_graph(std::string_view name) {
    return graph_texts().count(name) != 0;
  }

  bool is_builtin_map(std::string_view name) {
    return map_specs().count(name) != 0;
  }

  std::string builtin_graph_text(std::string_view name) {
    auto it = graph_texts().find(name);
    if (it == graph_texts().end()) {
      throw InvalidArgument("unknown built-in graph \"" + std::string(name)
                            + "\"");
    }
    return std::string(it->second);
  }

  Graph builtin_graph(std::string_view name) {
    return parse_graph(builtin_graph_text(name));
  }

  std::string builtin_map_text(std::string_view name) {
    auto it = map_specs().find(name);
    if (it == map_specs().end()) {
      throw InvalidArgument("unknown built-in map \"" + std::string(name)
                            + "\"");
    }
    return std::string(it->second.text);
  }

  GeneratorMap builtin_map(std::string_view name) {
    auto it = map_specs().find(name);
    if (it == map_specs().end()) {
      throw InvalidArgument("unknown built-in map \"" + std::string(name)
                            + "\"");
    }
    auto const& spec = it->second;
    return parse_map(builtin_graph(spec.source), builtin_graph(spec.target),
                     spec.text);
  }

  std::string_view to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::evidence:
      default:
        return "evidence";
    }
  }

  bool Report::ok() const {
    for (auto const& c : checks) {
      if (c.verdict == Verdict::fail) {
        return false;
      }
    }
    return true;
  }

  std::string Report::text() const {
    std::ostringstream out;
    out << title << '\n';
    for (auto const& c : checks) {
      out << "  [" << to_string(c.verdict) << "] " << c.id << ": " << c.summary;
      if (c.bound) {
        out << " (bound " << *c.bound << ")";
      }
      out << '\n';
      for (auto const& d : c.details) {
        out << "      " << d << '\n';
      }
    }
    out << (ok() ? "result: no check failed\n" : "result: FAILED\n");
    return out.str();
  }

  std::string Report::structured() const {
    std::ostringstream out;
    for (auto const& c : checks) {
      out << c.id << ' ' << to_string(c.verdict) << " bound="
          << (c.bound ? std::to_string(*c.bound) : std::string("-"))
          << " time_ms=" << std::llround(c.time_ms) << '\n';
    }
    return out.str();
  }

  Report reproduce_egc(EgcOptions const& options) {
    auto const gamma1 = builtin_graph("gamma1");
    auto const gamma2 = builtin_graph("gamma2");
    auto const phi    = options.map ? *options.map : builtin_map("phi_egc");

    Report report;
    report.title = "extension graph counterexample (gamma1 -> gamma2)";
    report.checks.push_back(homomorphism_check("egc.homomorphism", phi));
    report.checks.push_back(
        kernel_check("egc.kernel", phi, options.max_kernel_len, std::nullopt));
    report.checks.push_back(kernel_check(
        "egc.parabolic_kernel", phi, options.max_kernel_len,
        vertex_set(phi.source, {"b", "c", "d", "e"})));

    report.checks.push_back(timed("egc.ball_embedding", [&](Check& check) {
      check.bound     = options.ball_radius;
      auto const ball = build_ball(gamma2, options.ball_radius, options.vertex_cap);
      check.details.push_back("ball of radius " + std::to_string(ball.radius())
                              + ": " + std::to_string(ball.size())
                              + " vertices, "
                              + std::to_string(ball.adjacency().edge_count())
                              + " edges");
      if (auto image = find_induced_in_ball(gamma1, ball)) {
        check.verdict = Verdict::fail;
        check.summary = "gamma1 embeds as an induced subgraph of the ball";
        for (std::size_t i = 0; i < image->size(); ++i) {
          check.details.push_back(gamma1.name(i) + " -> "
                                  + ball.label((*image)[i]));
        }
      } else {
        check.verdict = Verdict::evidence;
        check.summary = "gamma1 is not an induced subgraph of the radius-"
                        + std::to_string(options.ball_radius)
                        + " extension ball of gamma2 (evidence only)";
      }
    }));

    report.checks.push_back(timed("egc.centralizers", [&](Check& check) {
      auto const v = [&](char const* n) { return gamma2.index(n); };
      auto const expect = [&](std::string const& what, VertexSet const& got,
                              std::vector<std::string> const& want) {
        bool const ok = got == vertex_set(gamma2, want);
        check.details.push_back(what + " = " + set_text(gamma2, got)
                                + (ok ? "" : "  MISMATCH"));
        return ok;
      };
      auto const cd = generator_centralizer(gamma2, v("d"));
      auto const cc = generator_centralizer(gamma2, v("c"));
      auto const ce = generator_centralizer(gamma2, v("e"));
      auto const ca2e
          = set_centralizer(gamma2, vertex_set(gamma2, {"a2", "e"}));
      bool ok = true;
      ok &= expect("C(d)", cd.generators, {"a1", "a2", "c", "d", "e"});
      ok &= expect("Z(C(d))", parabolic_center(cd), {"a1", "d"});
      ok &= expect("C(c)", cc.generators, {"a1", "c", "d"});
      ok &= expect("Z(C(c))", parabolic_center(cc), {"a1", "c", "d"});
      ok &= expect("C(e)", ce.generators, {"a1", "a2", "b", "d", "e"});
      ok &= expect("C({a2,e})", ca2e.generators, {"a1", "a2", "b", "d", "e"});
      ok &= !commutes(gamma2, generator_word(v("a2")), generator_word(v("c")));
      ok &= !commutes(gamma2, generator_word(v("a1")), generator_word(v("b")));
      check.details.push_back("[a2,c] != 1 and [a1,b] != 1");
      check.verdict = ok ? Verdict::pass : Verdict::fail;
      check.summary = "centralizers of generators of gamma2";
    }));

    report.checks.push_back(timed("egc.gamma2_chordal", [&](Check& check) {
      bool const chordal = is_chordal(gamma2);
      check.verdict      = chordal ? Verdict::pass : Verdict::fail;
      check.summary = chordal ? "gamma2 is chordal" : "gamma2 is not chordal";
    }));
    return report;
  }

  Report reproduce_wcc(WccOptions const& options) {
    auto const c5bar = builtin_graph("c5bar");
    auto const p7bar = builtin_graph("p7bar");
    auto const phi   = options.map ? *options.map : builtin_map("phi_wcc");

    Report report;
    report.title = "weakly chordal counterexample (c5bar -> p7bar)";
    report.checks.push_back(homomorphism_check("wcc.homomorphism", phi));
    report.checks.push_back(
        kernel_check("wcc.kernel", phi, options.max_kernel_len, std::nullopt));

    report.checks.push_back(timed("wcc.weakly_chordal", [&](Check& check) {
      std::vector<std::pair<std::string, Graph>> subjects;
      if (options.weakly_chordal_subjects.empty()) {
        subjects = {{"p7bar", p7bar}, {"P7", path_graph(7)}};
      } else {
        for (std::size_t i = 0; i < options.weakly_chordal_subjects.size(); ++i) {
          subjects.emplace_back("subject " + std::to_string(i),
                                options.weakly_chordal_subjects[i]);
        }
      }
      bool ok = true;
      for (auto const& [name, g] : subjects) {
        bool const wc = is_weakly_chordal(g);
        ok &= wc;
        check.details.push_back(name + ": "
                                + (wc ? "weakly chordal" : "NOT weakly chordal"));
      }
      check.verdict = ok ? Verdict::pass : Verdict::fail;
      check.summary = ok ? "all subjects are weakly chordal"
                         : "a subject is not weakly chordal";
    }));

    report.checks.push_back(timed("wcc.p7bar_complement", [&](Check& check) {
      bool const iso = graph_isomorphic(complement(p7bar), path_graph(7)).has_value();
      check.verdict  = iso ? Verdict::pass : Verdict::fail;
      check.summary  = iso ? "complement of p7bar is isomorphic to P7"
                           : "complement of p7bar is not isomorphic to P7";
    }));

    report.checks.push_back(timed("wcc.c5_self_complementary", [&](Check& check) {
      bool const iso
          = graph_isomorphic(complement(c5bar), cycle_graph(5)).has_value();
      check.verdict = iso ? Verdict::pass : Verdict::fail;
      check.summary = iso ? "complement of c5bar is isomorphic to C5"
                          : "complement of c5bar is not isomorphic to C5";
    }));

    report.checks.push_back(timed("wcc.c5bar_iso_c5", [&](Check& check) {
      bool const iso = graph_isomorphic(c5bar, cycle_graph(5)).has_value();
      check.verdict  = iso ? Verdict::pass : Verdict::fail;
      check.summary  = iso ? "c5bar is isomorphic to C5"
                           : "c5bar is not isomorphic to C5";
    }));
    return report;
  }

}  // namespace pcg
