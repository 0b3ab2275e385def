#include "doctest.h"

#include "error.hpp"
#include "generate.hpp"
#include "oracles.hpp"
#include "solver.hpp"
#include "textio.hpp"

using namespace avoid;

namespace {

OutputFunction maj(std::vector<int> in) { return make_function(std::move(in), maj_table(3)); }

Bits bits(const std::string& s) {
  Bits b;
  for (char ch : s) b.push_back(ch == '1');
  return b;
}

Circuit fixture(const std::string& name) { return load_circuit(std::string(AVOID_FIXTURE_DIR) + "/" + name); }

void expect_certified(const Circuit& c, const SolveReport& r) {
  INFO(report_explain(r));
  REQUIRE(r.status == SolveStatus::Verified);
  CHECK(r.verified);
  CHECK_FALSE(oracle::in_range(c, r.certificate));
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("nc02: a constant output is flipped") {
    auto c = make_circuit(2, {make_function({0, 1}, Bits(4, 0)), make_function({0}, bits("01")),
                              make_function({1}, bits("01"))});
    auto r = solve_nc02(c);
    CHECK(r.certificate == "1**");
    expect_certified(c, r);
  }

  TEST_CASE("nc02: xor triangle") {
    auto x = bits("0110");
    auto c = make_circuit(3, {make_function({0, 1}, x), make_function({1, 2}, x), make_function({0, 2}, x),
                              make_function({0}, bits("01"))});
    auto r = solve_nc02(c);
    expect_certified(c, r);
    int zeros = 0, ones = 0;
    for (int i = 0; i < 3; ++i) (r.certificate[i] == '0' ? zeros : ones) += r.certificate[i] != '*';
    CHECK(zeros == 2);
    CHECK(ones == 1);
    CHECK(r.provenance.back() == "nc02 case 1");
  }

  TEST_CASE("nc02: a duplicated wire closes a two-cycle") {
    std::vector<OutputFunction> outs;
    for (int i = 0; i < 4; ++i) outs.push_back(make_function({i}, bits("01")));
    outs.push_back(make_function({2}, bits("01")));
    auto c = make_circuit(4, outs);
    auto r = solve_nc02(c);
    expect_certified(c, r);
    CHECK(r.edges.size() == 2);
  }

  TEST_CASE("nc02 on random instances") {
    SplitMix64 rng(61);
    for (int t = 0; t < 200; ++t) {
      const int n = rng.range(2, 12);
      auto c = oracle::random_circuit(rng, n, n + 1, 2);
      auto r = solve_nc02(c);
      expect_certified(c, r);
    }
  }

  TEST_CASE("and/or: crowns on the affine-plane fixture") {
    auto c = fixture("andor3.circuit");
    auto r = dispatch_solve(c);
    CHECK(r.cls.tag == ProblemClass::Tag::AndOrK);
    CHECK(r.solver == "andor");
    CHECK((r.pattern == "crown:3" || r.pattern == "cstar:3"));
    expect_certified(c, r);
  }

  TEST_CASE("and/or: generated instances solve, falling back to depth-1 when no crown exists") {
    SplitMix64 rng(67);
    for (int t = 0; t < 40; ++t) {
      const int n = rng.range(9, 16);
      auto c = generate(GeneratorSpec{GenClass::AndOr, 3, n, n + 1, rng.next()});
      auto r = dispatch_solve(c);
      expect_certified(c, r);
    }
  }

  TEST_CASE("grid: 3x3 fixture gives rows 0 and columns 1") {
    auto c = fixture("grid3.circuit");
    auto r = solve_one_intersect_maj_k(c);
    expect_certified(c, r);
    CHECK(r.pattern == "grid:3");
    CHECK(r.certificate.substr(0, 6) == "000111");
  }

  TEST_CASE("grid: k = 4") {
    auto c = fixture("grid4_maj4.circuit");
    auto r = dispatch_solve(c);
    CHECK(r.cls.tag == ProblemClass::Tag::OneIntersectMajK);
    expect_certified(c, r);
  }

  TEST_CASE("grid solver rejects overlapping lines") {
    std::vector<OutputFunction> outs;
    for (int i = 0; i < 7; ++i) outs.push_back(make_function({0, 1, 2 + i % 4, 6}, maj_table(4)));
    CHECK_THROWS_AS(solve_one_intersect_maj_k(make_circuit(7, outs)), Error);
  }

  TEST_CASE("wicket strategy on the fixture") {
    auto c = fixture("wicket.circuit");
    auto r = solve_one_intersect_maj3(c, Strategy::Wicket);
    expect_certified(c, r);
    CHECK(r.certificate.substr(0, 5) == "00011");
  }

  TEST_CASE("x-cycle strategy on connected one-intersect instances with m = n + 1") {
    SplitMix64 rng(71);
    for (int t = 0; t < 60; ++t) {
      const int n = rng.range(9, 18);
      auto c = generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, n, n + 1, rng.next()});
      auto r = solve_one_intersect_maj3(c, Strategy::Auto);
      CHECK(r.pattern == "x-cycle");
      expect_certified(c, r);
    }
  }

  TEST_CASE("x-cycle strategy on a disconnected light instance reports not-found") {
    auto c = make_circuit(9, {maj({0, 1, 2}), maj({2, 3, 4}), maj({4, 5, 6}), maj({6, 7, 8})});
    auto r = solve_one_intersect_maj3(c, Strategy::XCycle);
    CHECK(r.status == SolveStatus::NotFound);
    CHECK(exit_code(r) == 3);
  }

  TEST_CASE("monotone pipeline: constant output short-circuits") {
    auto c = make_circuit(3, {make_function({0}, bits("11")), maj({0, 1, 2}), maj({0, 1, 2}), maj({0, 1, 2})});
    auto r = solve_mon_nc03(c);
    CHECK(r.certificate == "0***");
    expect_certified(c, r);
  }

  TEST_CASE("monotone pipeline on generated instances") {
    SplitMix64 rng(73);
    for (int t = 0; t < 300; ++t) {
      const int n = rng.range(4, 14);
      auto c = generate(GeneratorSpec{GenClass::MonNC03, 3, n, rng.range(n + 1, 2 * n), rng.next()});
      auto r = solve_mon_nc03(c);
      expect_certified(c, r);
    }
  }

  TEST_CASE("pure one-intersect majority goes straight to the x-cycle") {
    auto c = generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, 12, 13, 5});
    auto r = dispatch_solve(c);
    CHECK(r.cls.tag == ProblemClass::Tag::Maj3);
    CHECK(r.pattern == "x-cycle");
    for (const auto& s : r.trace.steps) CHECK(s.kind == TraceStep::Kind::DropOutput);
    expect_certified(c, r);
  }

  TEST_CASE("padding with disjoint outputs leaves the certificate's fixed positions alone") {
    SplitMix64 rng(79);
    for (int t = 0; t < 30; ++t) {
      const int n = rng.range(9, 14);
      // m = n + 3 leaves room for one more output on three fresh inputs
      auto c = generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, n, n + 3, rng.next()});
      auto r = dispatch_solve(c);
      auto padded = c;
      padded.n += 3;
      padded.outputs.push_back(maj({n, n + 1, n + 2}));
      auto r2 = dispatch_solve(padded);
      REQUIRE(r2.certificate.size() == r.certificate.size() + 1);
      CHECK(r2.certificate.substr(0, r.certificate.size()) == r.certificate);
      CHECK(r2.certificate.back() == '*');
    }
  }

  TEST_CASE("dispatch routes") {
    CHECK(classify_problem(fixture("nc02.circuit")).tag == ProblemClass::Tag::NC02);
    CHECK(classify_problem(fixture("depth1.circuit")).tag == ProblemClass::Tag::Depth1Monotone);
    CHECK(classify_problem(fixture("mon_nc03.circuit")).tag == ProblemClass::Tag::MonNC03);
    CHECK(classify_problem(fixture("signed_and3.circuit")).tag == ProblemClass::Tag::MonNC03);
    auto un = classify_problem(fixture("nonmonotone.circuit"));
    CHECK(un.tag == ProblemClass::Tag::Unsupported);
    // m > 2n, non-monotone locality 3 whose monotonization reads six inputs
    std::vector<OutputFunction> outs(7, make_function({0, 1, 2}, bits("01101001")));
    auto wide = classify_problem(make_circuit(3, outs));
    CHECK(wide.tag == ProblemClass::Tag::Unsupported);
    CHECK(wide.reason == "mon-NC06");
    CHECK_THROWS_AS(dispatch_solve(make_circuit(3, {maj({0, 1, 2})})), Error);
  }

  TEST_CASE("monotonized route certifies the original circuit") {
    auto c = fixture("signed_and3.circuit");
    auto r = dispatch_solve(c);
    CHECK(r.provenance.front() == "monotonized");
    expect_certified(c, r);
  }

  TEST_CASE("unsupported and forced methods") {
    auto r = dispatch_solve(fixture("nonmonotone.circuit"));
    CHECK(r.status == SolveStatus::Unsupported);
    CHECK(exit_code(r) == 4);
    CHECK_THROWS_AS(dispatch_solve(fixture("nc02.circuit"), SolveOptions{Strategy::Grid}), Error);
    auto d = dispatch_solve(fixture("depth1.circuit"), SolveOptions{Strategy::Depth1});
    CHECK(d.solver == "depth1");
    CHECK_THROWS(parse_strategy("magic"));
  }

  TEST_CASE("above the oracle limit certificates are reported unverified") {
    auto c = generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, 30, 31, 3});
    auto r = dispatch_solve(c);
    CHECK(r.status == SolveStatus::Unverified);
    CHECK_FALSE(r.verified);
    CHECK(exit_code(r) == 2);
  }

  TEST_CASE("reports are deterministic and timing-free") {
    auto c = fixture("maj3.circuit");
    auto a = report_to_json(dispatch_solve(c));
    auto b = report_to_json(dispatch_solve(c));
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
    CHECK(a.find("\"certificate\"") != std::string::npos);
  }
}
