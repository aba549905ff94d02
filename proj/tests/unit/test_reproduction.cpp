#include <doctest.h>

#include <sstream>

#include "../fixtures.hpp"
#include "pcg/errors.hpp"
#include "pcg/reproduction.hpp"

using namespace pcg;

namespace {

  Check const& find_check(Report const& r, std::string const& id) {
    for (auto const& c : r.checks) {
      if (c.id == id) {
        return c;
      }
    }
    FAIL("missing check " << id);
    return r.checks.front();
  }

}  // namespace

TEST_CASE("builtins") {
  CHECK(builtin_graph_names()
        == std::vector<std::string>{"c5bar", "gamma1", "gamma2", "p7bar"});
  CHECK(builtin_map_names() == std::vector<std::string>{"phi_egc", "phi_wcc"});
  CHECK(is_builtin_graph("gamma2"));
  CHECK_FALSE(is_builtin_graph("gamma3"));
  CHECK_THROWS_AS(builtin_graph("gamma3"), InvalidArgument);
  CHECK_THROWS_AS(builtin_map("phi"), InvalidArgument);

  auto g1 = builtin_graph("gamma1");
  CHECK(g1.size() == 5);
  CHECK(g1.edge_count() == 5);
  auto g2 = builtin_graph("gamma2");
  CHECK(g2.size() == 6);
  CHECK(g2.edge_count() == 10);
  auto p = builtin_graph("p7bar");
  CHECK(p.size() == 8);
  CHECK(p.edge_count() == 21);
  CHECK(graph_isomorphic(complement(p), path_graph(7)).has_value());
  CHECK(graph_isomorphic(builtin_graph("c5bar"), cycle_graph(5)).has_value());

  auto m = builtin_map("phi_wcc");
  CHECK(m.source == builtin_graph("c5bar"));
  CHECK(m.target == p);
  CHECK(test::text(p, m.images[m.source.index("d")]) == "d1 d2");
}

TEST_CASE("egc report") {
  EgcOptions options;
  options.max_kernel_len = 4;
  auto r = reproduce_egc(options);
  CHECK(r.ok());
  CHECK(r.checks.size() == 6);
  CHECK(find_check(r, "egc.homomorphism").verdict == Verdict::pass);
  CHECK(find_check(r, "egc.kernel").verdict == Verdict::evidence);
  CHECK(find_check(r, "egc.kernel").bound == std::size_t{4});
  CHECK(find_check(r, "egc.parabolic_kernel").verdict == Verdict::evidence);
  CHECK(find_check(r, "egc.ball_embedding").verdict == Verdict::evidence);
  CHECK(find_check(r, "egc.centralizers").verdict == Verdict::pass);
  CHECK(find_check(r, "egc.gamma2_chordal").verdict == Verdict::pass);
  CHECK(r.text().find("result: no check failed") != std::string::npos);
  CHECK(r.text().find("evidence only") != std::string::npos);
}

TEST_CASE("egc report at radius 0") {
  EgcOptions options;
  options.max_kernel_len = 2;
  options.ball_radius    = 0;
  auto r = reproduce_egc(options);
  CHECK(r.ok());
  auto const& ball = find_check(r, "egc.ball_embedding");
  CHECK(ball.bound == std::size_t{0});
  CHECK(ball.details.front().find("6 vertices") != std::string::npos);
}

TEST_CASE("sabotaged map fails") {
  auto g1 = builtin_graph("gamma1");
  auto g2 = builtin_graph("gamma2");
  EgcOptions options;
  options.max_kernel_len = 2;
  // b does not commute with a1, so [a,d] fails.
  options.map = parse_map(g1, g2, "a -> a1\nb -> b\nc -> c\nd -> b\ne -> e\n");
  auto r = reproduce_egc(options);
  CHECK_FALSE(r.ok());
  auto const& hom = find_check(r, "egc.homomorphism");
  CHECK(hom.verdict == Verdict::fail);
  bool named = false;
  for (auto const& d : hom.details) {
    named |= d.rfind("[a,d]", 0) == 0 && d.find("FAILS") != std::string::npos;
  }
  CHECK(named);
  CHECK(find_check(r, "egc.kernel").verdict == Verdict::fail);
  CHECK(r.text().find("result: FAILED") != std::string::npos);
}

TEST_CASE("collapsing map yields a kernel witness") {
  auto g1 = builtin_graph("gamma1");
  auto g2 = builtin_graph("gamma2");
  EgcOptions options;
  options.max_kernel_len = 2;
  options.map = parse_map(g1, g2, "a -> 1\nb -> b\nc -> c\nd -> d\ne -> e\n");
  auto r = reproduce_egc(options);
  auto const& k = find_check(r, "egc.kernel");
  CHECK(k.verdict == Verdict::fail);
  CHECK(k.details.front() == "witness: a");
  CHECK(find_check(r, "egc.parabolic_kernel").verdict == Verdict::evidence);
}

TEST_CASE("wcc report") {
  WccOptions options;
  options.max_kernel_len = 3;
  auto r = reproduce_wcc(options);
  CHECK(r.ok());
  CHECK(find_check(r, "wcc.homomorphism").verdict == Verdict::pass);
  CHECK(find_check(r, "wcc.kernel").verdict == Verdict::evidence);
  CHECK(find_check(r, "wcc.weakly_chordal").verdict == Verdict::pass);
  CHECK(find_check(r, "wcc.p7bar_complement").verdict == Verdict::pass);
  CHECK(find_check(r, "wcc.c5_self_complementary").verdict == Verdict::pass);
  CHECK(find_check(r, "wcc.c5bar_iso_c5").verdict == Verdict::pass);

  options.weakly_chordal_subjects = {path_graph(4), cycle_graph(6)};
  auto bad = reproduce_wcc(options);
  CHECK_FALSE(bad.ok());
  auto const& wc = find_check(bad, "wcc.weakly_chordal");
  CHECK(wc.verdict == Verdict::fail);
  CHECK(wc.details[0] == "subject 0: weakly chordal");
  CHECK(wc.details[1] == "subject 1: NOT weakly chordal");
}

TEST_CASE("structured output") {
  WccOptions options;
  options.max_kernel_len = 2;
  auto r = reproduce_wcc(options);
  std::istringstream in(r.structured());
  std::string        line;
  std::size_t        n = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string        id, verdict, bound, time;
    fields >> id >> verdict >> bound >> time;
    CHECK(id == r.checks[n].id);
    CHECK(verdict == to_string(r.checks[n].verdict));
    CHECK(bound.rfind("bound=", 0) == 0);
    CHECK(time.rfind("time_ms=", 0) == 0);
    ++n;
  }
  CHECK(n == r.checks.size());
  CHECK(r.structured().find("wcc.kernel evidence bound=2 ") != std::string::npos);
  CHECK(r.structured().find("wcc.homomorphism pass bound=- ") != std::string::npos);
}
