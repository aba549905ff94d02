#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pcg/centralizers.hpp"
#include "pcg/droms.hpp"
#include "pcg/errors.hpp"
#include "pcg/extension_graph.hpp"
#include "pcg/graph.hpp"
#include "pcg/morphisms.hpp"
#include "pcg/reproduction.hpp"
#include "pcg/word.hpp"

namespace pcg::cli {

  namespace {

    constexpr std::string_view builtin_prefix = "builtin:";

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InvalidArgument("cannot read \"" + path + "\"");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    // "builtin:<name>" or a path to a graph file.
    Graph load_graph(std::string const& spec) {
      if (spec.rfind(builtin_prefix, 0) == 0) {
        return builtin_graph(spec.substr(builtin_prefix.size()));
      }
      return parse_graph(read_file(spec));
    }

    GeneratorMap load_map(std::string const& spec, Graph const& source,
                          Graph const& target) {
      if (spec.rfind(builtin_prefix, 0) == 0) {
        return parse_map(source, target,
                         builtin_map_text(spec.substr(builtin_prefix.size())));
      }
      return parse_map(source, target, read_file(spec));
    }

    // A quoted word, or "@path" for a word stored in a file.
    Word load_word(Graph const& g, std::string const& spec) {
      if (!spec.empty() && spec.front() == '@') {
        return parse_word(g, read_file(spec.substr(1)));
      }
      return parse_word(g, spec);
    }

    std::string join(std::vector<std::string> const& items) {
      std::string out;
      for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? " " : "") + items[i];
      }
      return out;
    }

    struct Options {
      std::string              graph, source, target, map;
      std::vector<std::string> words;
      std::size_t              max_len    = 6;
      std::size_t              radius     = 1;
      std::size_t              vertex_cap = default_vertex_cap;
      std::string              format     = "text";
      std::string              out_path;
      std::string              restrict_to;
      std::string              which;
    };

    using Handler = std::function<int(Options const&, std::ostream&)>;

    int cmd_normalize(Options const& o, std::ostream& out) {
      auto const g = load_graph(o.graph);
      out << format_word(g, normal_form(g, load_word(g, o.words.at(0))).word())
          << '\n';
      return exit_ok;
    }

    int cmd_eq(Options const& o, std::ostream& out) {
      if (o.words.size() != 2) {
        throw InvalidArgument("eq needs exactly two -w words");
      }
      auto const g = load_graph(o.graph);
      bool const equal
          = words_equal(g, load_word(g, o.words[0]), load_word(g, o.words[1]));
      out << (equal ? "equal" : "not equal") << '\n';
      return equal ? exit_ok : exit_property;
    }

    int cmd_alpha(Options const& o, std::ostream& out) {
      auto const g = load_graph(o.graph);
      out << join(names_of(g, alphabet(g, load_word(g, o.words.at(0))))) << '\n';
      return exit_ok;
    }

    int cmd_props(Options const& o, std::ostream& out) {
      auto const g    = load_graph(o.graph);
      auto const yes  = [](bool b) { return b ? "yes" : "no"; };
      auto const cone = cone_vertex(g);
      out << "vertices: " << g.size() << '\n'
          << "edges: " << g.edge_count() << '\n'
          << "chordal: " << yes(is_chordal(g)) << '\n'
          << "weakly_chordal: " << yes(is_weakly_chordal(g)) << '\n'
          << "thin_chordal: " << yes(is_thin_chordal(g)) << '\n'
          << "cone_vertex: " << (cone ? g.name(*cone) : std::string("none"))
          << '\n';
      return exit_ok;
    }

    int cmd_decompose(Options const& o, std::ostream& out) {
      auto const g      = load_graph(o.graph);
      auto const result = decompose_thin_chordal(g);
      if (auto const* failure = std::get_if<DecompositionFailure>(&result)) {
        out << "not thin-chordal: component {"
            << join(names_of(g, failure->component)) << "} has no cone vertex\n";
        return exit_property;
      }
      auto const& tree = std::get<DecompositionNode>(result);
      out << to_sexpr(g, tree) << '\n'
          << "signature: " << tree_group_signature(tree) << '\n';
      return exit_ok;
    }

    int cmd_ext_ball(Options const& o, std::ostream& out) {
      auto const g = load_graph(o.graph);
      if (o.vertex_cap < g.size()) {
        throw InvalidArgument("--vertex-cap is smaller than the graph");
      }
      out << format_graph(build_ball(g, o.radius, o.vertex_cap).as_graph());
      return exit_ok;
    }

    int cmd_embed(Options const& o, std::ostream& out) {
      auto const pattern = load_graph(o.source);
      auto const host    = load_graph(o.target);
      auto const ball    = build_ball(host, o.radius, o.vertex_cap);
      auto const image   = find_induced_in_ball(pattern, ball);
      if (!image) {
        out << "no induced embedding in the radius-" << o.radius
            << " extension ball (" << ball.size()
            << " vertices); evidence only, larger radii are not covered\n";
        return exit_property;
      }
      out << format_map(embedding_to_homomorphism(pattern, ball, *image));
      return exit_ok;
    }

    int cmd_verify_hom(Options const& o, std::ostream& out) {
      auto const source = load_graph(o.source);
      auto const target = load_graph(o.target);
      auto const m      = load_map(o.map, source, target);
      auto const report = check_homomorphism(m);
      for (auto const& r : report.relators) {
        out << '[' << source.name(r.x) << ',' << source.name(r.y) << "] -> "
            << (r.reduced.empty() ? std::string("1")
                                  : format_word(target, r.reduced.word()))
            << (r.trivial() ? "  ok" : "  FAILS") << '\n';
      }
      out << (report.holds() ? "homomorphism\n" : "not a homomorphism\n");
      return report.holds() ? exit_ok : exit_property;
    }

    int cmd_kernel_search(Options const& o, std::ostream& out) {
      auto const source = load_graph(o.source);
      auto const target = load_graph(o.target);
      auto const m      = load_map(o.map, source, target);
      std::optional<VertexSet> ys;
      if (!o.restrict_to.empty()) {
        std::istringstream       in(o.restrict_to);
        std::vector<std::string> names;
        for (std::string n; in >> n;) {
          names.push_back(n);
        }
        ys = vertex_set(source, names);
      }
      KernelSearchResult result;
      try {
        result = kernel_search(m, o.max_len, ys);
      } catch (NotHomomorphismError const& e) {
        out << "not a homomorphism: " << e.what() << '\n';
        return exit_property;
      }
      std::size_t total = 0;
      for (auto c : result.elements_per_length) {
        total += c;
      }
      if (result.witness) {
        out << "kernel element: " << format_word(source, *result.witness) << '\n';
        return exit_property;
      }
      out << "no kernel element of length <= " << o.max_len << " (" << total
          << " elements checked)\n";
      return exit_ok;
    }

    int cmd_reproduce(Options const& o, std::ostream& out) {
      Report report;
      if (o.which == "egc") {
        EgcOptions options;
        options.max_kernel_len = o.max_len;
        options.ball_radius    = o.radius;
        options.vertex_cap     = o.vertex_cap;
        report                 = reproduce_egc(options);
      } else {
        WccOptions options;
        options.max_kernel_len = o.max_len;
        report                 = reproduce_wcc(options);
      }
      out << (o.format == "structured" ? report.structured() : report.text());
      return report.ok() ? exit_ok : exit_property;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Computations in partially commutative groups", "pcg"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](std::string const& name, std::string const& help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("-o,--out", o.out_path, "Write output to this file");
      return sub;
    };
    auto graph_opt = [&](CLI::App* sub) {
      sub->add_option("-g,--graph", o.graph, "Graph file or builtin:<name>")
          ->required();
    };
    auto word_opt = [&](CLI::App* sub, std::size_t n) {
      sub->add_option("-w,--word", o.words, "Word text or @file")
          ->required()
          ->expected(static_cast<int>(n));
    };
    auto pair_opts = [&](CLI::App* sub) {
      sub->add_option("-s,--source", o.source, "Source graph")->required();
      sub->add_option("-t,--target", o.target, "Target graph")->required();
    };
    auto ball_opts = [&](CLI::App* sub) {
      sub->add_option("--radius", o.radius, "Conjugator length bound");
      sub->add_option("--vertex-cap", o.vertex_cap, "Maximum ball size");
    };

    std::map<CLI::App*, Handler> handlers;

    auto* normalize = add("normalize", "Print the shortlex normal form of a word");
    graph_opt(normalize);
    word_opt(normalize, 1);
    handlers[normalize] = cmd_normalize;

    auto* eq = add("eq", "Decide whether two words are equal");
    graph_opt(eq);
    word_opt(eq, 2);
    handlers[eq] = cmd_eq;

    auto* alpha = add("alpha", "Print the generators in the reduced form");
    graph_opt(alpha);
    word_opt(alpha, 1);
    handlers[alpha] = cmd_alpha;

    auto* props = add("props", "Print graph-class properties");
    graph_opt(props);
    handlers[props] = cmd_props;

    auto* decompose = add("decompose", "Cone/free-product decomposition");
    graph_opt(decompose);
    handlers[decompose] = cmd_decompose;

    auto* ext_ball = add("ext-ball", "Export a ball of the extension graph");
    graph_opt(ext_ball);
    ball_opts(ext_ball);
    handlers[ext_ball] = cmd_ext_ball;

    auto* embed = add("embed", "Find an induced copy of -s in the ball of -t");
    pair_opts(embed);
    ball_opts(embed);
    handlers[embed] = cmd_embed;

    auto* verify = add("verify-hom", "Check the defining relators of a map");
    pair_opts(verify);
    verify->add_option("-m,--map", o.map, "Map file or builtin:<name>")->required();
    handlers[verify] = cmd_verify_hom;

    auto* kernel = add("kernel-search", "Search for short kernel elements");
    pair_opts(kernel);
    kernel->add_option("-m,--map", o.map, "Map file or builtin:<name>")->required();
    kernel->add_option("--max-len", o.max_len, "Normal-form length bound");
    kernel->add_option("--restrict", o.restrict_to,
                       "Only words over these source generators");
    handlers[kernel] = cmd_kernel_search;

    auto* reproduce = add("reproduce", "Run the built-in counterexample checks");
    reproduce->add_option("which", o.which, "egc or wcc")
        ->required()
        ->check(CLI::IsMember({"egc", "wcc"}));
    reproduce->add_option("--max-len", o.max_len, "Kernel search bound");
    ball_opts(reproduce);
    reproduce->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    handlers[reproduce] = cmd_reproduce;

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "pcg: " << e.what() << '\n';
      return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    std::ostringstream buffer;
    int                code = exit_ok;
    try {
      code = handlers.at(chosen)(o, buffer);
    } catch (CapacityError const& e) {
      err << "pcg: capacity exceeded: " << e.what() << '\n';
      return exit_capacity;
    } catch (Error const& e) {
      err << "pcg: " << e.what() << '\n';
      return exit_usage;
    }

    if (o.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "pcg: cannot write \"" << o.out_path << "\"\n";
        return exit_usage;
      }
    }
    return code;
  }

}  // namespace pcg::cli
