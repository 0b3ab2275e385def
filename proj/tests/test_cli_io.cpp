#include "doctest.h"

#include "error.hpp"
#include "generate.hpp"
#include "hypergraph.hpp"
#include "oracles.hpp"
#include "textio.hpp"

using namespace avoid;

namespace {

Errc parse_error(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Invariant;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse a single majority gate") {
    auto c = parse_circuit("circuit n=3 m=1\nout 0: inputs 0 1 2 ; table 00010111\n");
    REQUIRE(c.m() == 1);
    CHECK(c.outputs[0].inputs == std::vector<int>{0, 1, 2});
    CHECK(c.outputs[0].table == maj_table(3));
  }

  TEST_CASE("comments and blank lines are skipped") {
    auto c = parse_circuit("# header\n\ncircuit n=2 m=1\n  # gate\nout 0: inputs 1 ; table 01\n");
    CHECK(c.outputs[0].inputs == std::vector<int>{1});
  }

  TEST_CASE("malformed input is rejected with a line number") {
    CHECK(parse_error("circuit n=3 m=0\n") == Errc::Parse);
    CHECK(parse_error("circuit n=3 m=2\nout 0: inputs 0 ; table 01\n") == Errc::Parse);
    CHECK(parse_error("circuit n=3 m=1\nout 1: inputs 0 ; table 01\n") == Errc::Parse);
    CHECK(parse_error("circuit n=3 m=1\nout 0: inputs 3 ; table 01\n") == Errc::Parse);
    CHECK(parse_error("circuit n=3 m=1\nout 0: inputs 0 1 ; table 011\n") != Errc::Invariant);
    CHECK(parse_error("circuit n=3 m=1\nout 0: inputs 0 1 table 0111\n") == Errc::Parse);
    CHECK(parse_error("circuit n=x m=1\n") == Errc::Parse);
    try {
      parse_circuit("circuit n=3 m=1\n\nout 0: inputs 0 9 ; table 0001\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
  }

  TEST_CASE("serialize then parse reproduces a random circuit") {
    SplitMix64 rng(83);
    for (int t = 0; t < 20; ++t) {
      auto c = oracle::random_circuit(rng, 30, 50, 3);
      auto back = parse_circuit(serialize_circuit(c));
      REQUIRE(back.n == c.n);
      REQUIRE(back.m() == c.m());
      for (int i = 0; i < c.m(); ++i) {
        CHECK(back.outputs[i].inputs == c.outputs[i].inputs);
        CHECK(back.outputs[i].table == c.outputs[i].table);
      }
    }
  }

  TEST_CASE("loading a missing file fails") { CHECK_THROWS_AS(load_circuit("/nonexistent/x.circuit"), Error); }
}

TEST_SUITE("generate") {
  TEST_CASE("class names parse in both spellings") {
    CHECK(parse_generator_class("one-intersect-majk:4").k == 4);
    CHECK(parse_generator_class("one-intersect-majk(5)").k == 5);
    CHECK(parse_generator_class("andor:3").cls == GenClass::AndOr);
    auto s = parse_generator_class("mon-nc03");
    CHECK(generator_class_name(s) == "mon-nc03");
    CHECK_THROWS_AS(parse_generator_class("nc04"), Error);
  }

  TEST_CASE("generation is a pure function of the seed") {
    GeneratorSpec spec{GenClass::OneIntersectMaj3, 3, 9, 10, 7};
    CHECK(serialize_circuit(generate(spec)) == serialize_circuit(generate(spec)));
    spec.seed = 8;
    auto other = serialize_circuit(generate(spec));
    spec.seed = 7;
    CHECK(other != serialize_circuit(generate(spec)));
  }

  TEST_CASE("generated circuits pass their validators") {
    SplitMix64 rng(89);
    const GenClass classes[] = {GenClass::MonNC03, GenClass::Maj3,  GenClass::OneIntersectMaj3,
                                GenClass::NC02,    GenClass::AndOr, GenClass::LinearHypergraph};
    for (auto cls : classes) {
      for (int t = 0; t < 15; ++t) {
        const int n = rng.range(10, 20);
        GeneratorSpec spec{cls, 3, n, n + 1 + rng.range(0, 3), rng.next()};
        auto c = generate(spec);
        INFO(generator_class_name(spec), " seed ", spec.seed);
        CHECK(validate_generated(c, spec) == "");
        CHECK(c.n == spec.n);
        CHECK(c.m() == spec.m);
      }
    }
    GeneratorSpec k4{GenClass::OneIntersectMajK, 4, 20, 21, 3};
    CHECK(validate_generated(generate(k4), k4) == "");
  }

  TEST_CASE("linear generators stay linear; the hypergraph class also covers every vertex") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto h = build_hypergraph(generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, 15, 16, seed}));
      CHECK(validate_structure(h).isLinear);
      h = build_hypergraph(generate(GeneratorSpec{GenClass::LinearHypergraph, 3, 15, 16, seed}));
      auto rep = validate_structure(h);
      CHECK(rep.isLinear);
      CHECK(rep.isConnected);
      CHECK(covered_vertices(h) == 15);
    }
  }

  TEST_CASE("the validator catches a broken instance") {
    GeneratorSpec spec{GenClass::OneIntersectMaj3, 3, 5, 2, 0};
    auto c = make_circuit(5, {make_function({0, 1, 2}, maj_table(3)), make_function({0, 1, 3}, maj_table(3))});
    CHECK(validate_generated(c, spec) != "");
  }

  TEST_CASE("counting bounds make some sizes infeasible") {
    try {
      generate(GeneratorSpec{GenClass::OneIntersectMaj3, 3, 4, 10, 1});
      FAIL("expected infeasible");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Infeasible);
    }
  }
}
