#ifndef PCG_REPRODUCTION_HPP_
#define PCG_REPRODUCTION_HPP_

// Built-in fixtures (the two counterexample pairs and their maps) and the
// drivers that check them, producing a Report.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/extension_graph.hpp"
#include "pcg/graph.hpp"
#include "pcg/morphisms.hpp"

namespace pcg {

  // Graph names: gamma1, gamma2, c5bar, p7bar. Map names: phi_egc
  // (gamma1 -> gamma2), phi_wcc (c5bar -> p7bar).
  std::vector<std::string> builtin_graph_names();
  std::vector<std::string> builtin_map_names();

  bool is_builtin_graph(std::string_view name);
  bool is_builtin_map(std::string_view name);

  // Throw InvalidArgument for unknown names.
  std::string  builtin_graph_text(std::string_view name);
  Graph        builtin_graph(std::string_view name);
  std::string  builtin_map_text(std::string_view name);
  GeneratorMap builtin_map(std::string_view name);

  enum class Verdict { pass, fail, evidence };

  std::string_view to_string(Verdict v);

  struct Check {
    std::string                id;
    std::string                summary;
    Verdict                    verdict = Verdict::pass;
    std::optional<std::size_t> bound;  // search bound for evidence checks
    double                     time_ms = 0;
    std::vector<std::string>   details;
  };

  struct Report {
    std::string        title;
    std::vector<Check> checks;

    // No check failed.
    bool ok() const;

    // Human-readable report.
    std::string text() const;

    // One line per check: "<id> <pass|fail|evidence> bound=<n> time_ms=<t>",
    // with bound "-" for checks that are not bounded searches.
    std::string structured() const;
  };

  struct EgcOptions {
    std::size_t                 max_kernel_len = 6;
    std::size_t                 ball_radius    = 1;
    std::size_t                 vertex_cap     = default_vertex_cap;
    std::optional<GeneratorMap> map;  // replaces phi_egc when set
  };

  // Checks the gamma1 -> gamma2 counterexample: the map is a homomorphism,
  // no short kernel elements (overall and on <b,c,d,e>), no induced gamma1
  // in the extension ball of gamma2, the centralizer facts used to rule out
  // such an embedding, and chordality of gamma2.
  Report reproduce_egc(EgcOptions const& options = {});

  struct WccOptions {
    std::size_t                 max_kernel_len = 6;
    std::optional<GeneratorMap> map;  // replaces phi_wcc when set
    // Graphs that must be weakly chordal; p7bar and P_7 when empty.
    std::vector<Graph> weakly_chordal_subjects;
  };

  // Checks the c5bar -> p7bar counterexample: homomorphism, no short kernel
  // elements, weak chordality of p7bar and P_7, and the self-complementarity
  // of C_5.
  Report reproduce_wcc(WccOptions const& options = {});

}  // namespace pcg

#endif  // PCG_REPRODUCTION_HPP_
