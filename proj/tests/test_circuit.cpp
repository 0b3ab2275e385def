#include "doctest.h"

#include "circuit.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace avoid;

namespace {

Circuit maj_circuit(std::vector<std::vector<int>> supports, int n) {
  std::vector<OutputFunction> outs;
  for (auto& s : supports) outs.push_back(make_function(s, maj_table(3)));
  return make_circuit(n, outs);
}

Bits bits(const std::string& s) {
  Bits b;
  for (char ch : s) b.push_back(ch == '1');
  return b;
}

}  // namespace

TEST_SUITE("circuit") {
  TEST_CASE("majority gate on all-zero and two-one inputs") {
    auto c = maj_circuit({{0, 1, 2}}, 3);
    CHECK(evaluate(c, bits("000")) == bits("0"));
    CHECK(evaluate(c, bits("110")) == bits("1"));
    CHECK_THROWS_AS(evaluate(c, bits("11")), Error);
  }

  TEST_CASE("construction rejects malformed functions and circuits") {
    CHECK_THROWS(make_function({0, 0}, Bits(4)));
    CHECK_THROWS(make_function({0, 1}, Bits(3)));
    CHECK_THROWS(make_function({}, Bits(1)));
    CHECK_THROWS(make_circuit(2, {make_function({0, 2}, Bits(4))}));
    CHECK_THROWS(make_circuit(2, {}));
  }

  TEST_CASE("evaluate agrees with an independent interpreter on every input") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = rng.range(1, 12);
      auto c = oracle::random_circuit(rng, n, rng.range(1, 8), 4);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        Bits xb(n);
        for (int i = 0; i < n; ++i) xb[i] = x >> i & 1;
        const auto out = evaluate(c, xb);
        std::string s;
        for (auto b : out) s += b ? '1' : '0';
        REQUIRE(s == oracle::image(c, xb));
      }
    }
  }

  TEST_CASE("classification of three-input monotone shapes") {
    CHECK(classify_output_function(make_function({0, 1, 2}, and_table(3))) == FunctionClass{FnTag::MonotoneCase, 7});
    // zero set W0 plus 001
    Bits t(8, 1);
    t[0] = 0;
    t[1] = 0;
    CHECK(classify_output_function(make_function({0, 1, 2}, t)) == FunctionClass{FnTag::MonotoneCase, 3});
    CHECK(classify_output_function(make_function({0, 1, 2}, bits("01101001"))).tag == FnTag::NonMonotone);
    CHECK(classify_output_function(make_function({0, 1, 2}, maj_table(3))).tag == FnTag::Maj3);
    CHECK(classify_output_function(make_function({0, 1, 2}, or_table(3))) == FunctionClass{FnTag::MonotoneCase, 2});
    CHECK(classify_output_function(make_function({0, 1, 2}, Bits(8, 1))).tag == FnTag::Const1);
    CHECK(classify_output_function(make_function({0, 1}, bits("0110"))).tag == FnTag::Parity2);
    CHECK(classify_output_function(make_function({0, 1}, bits("0100"))).tag == FnTag::AndOr2);
    CHECK(classify_output_function(make_function({0, 1, 2, 3}, maj_table(4))).tag == FnTag::MajK);
    CHECK(classify_output_function(make_function({0, 1, 2, 3}, and_table(4))).tag == FnTag::AndK);
  }

  TEST_CASE("classification tags are consistent with the truth table") {
    for (std::uint32_t code = 0; code < 256; ++code) {
      Bits t(8);
      for (int a = 0; a < 8; ++a) t[a] = code >> a & 1;
      const auto cls = classify_output_function(make_function({0, 1, 2}, t));
      bool monotone = true;
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
          if ((a & b) == a && t[a] > t[b]) monotone = false;
      INFO("table code " << code);
      if (cls.tag == FnTag::Maj3) CHECK(t == maj_table(3));
      if (cls.tag == FnTag::MonotoneCase) {
        CHECK(monotone);
        CHECK(cls.caseId >= 2);
        CHECK(cls.caseId <= 7);
      }
      if (cls.tag == FnTag::NonMonotone) CHECK_FALSE(monotone);
      if (monotone && code != 0 && code != 255) CHECK(cls.tag != FnTag::NonMonotone);
    }
  }

  TEST_CASE("preimage search") {
    std::vector<OutputFunction> wires;
    for (int i = 0; i < 4; ++i) wires.push_back(make_function({i}, bits("01")));
    auto id = make_circuit(4, wires);
    CHECK(brute_force_preimage(id, "****") == Bits(4, 0));
    auto maj = maj_circuit({{0, 1, 2}}, 3);
    CHECK(brute_force_preimage(maj, "0") == Bits(3, 0));
    CHECK(brute_force_preimage(maj, "1") == bits("110"));
    auto twin = maj_circuit({{0, 1, 2}, {0, 1, 2}}, 3);
    CHECK_FALSE(brute_force_preimage(twin, "01").has_value());
    CHECK_THROWS_AS(brute_force_preimage(maj, "01"), Error);
    CHECK_THROWS_AS(brute_force_preimage(make_circuit(30, {make_function({0}, bits("01"))}), "*", 22), Error);
  }

  TEST_CASE("preimage answers match a second enumeration order") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = rng.range(1, 9);
      auto c = oracle::random_circuit(rng, n, rng.range(n, n + 4), 3);
      for (int q = 0; q < 10; ++q) {
        std::string y;
        for (int i = 0; i < c.m(); ++i) y += "01*"[rng.below(3)];
        const auto x = brute_force_preimage(c, y);
        REQUIRE(x.has_value() == oracle::in_range(c, y));
        if (x) CHECK(oracle::matches(oracle::image(c, *x), y));
      }
    }
  }

  TEST_CASE("intersection profile") {
    CHECK(intersection_profile(maj_circuit({{0, 1, 2}, {3, 4, 5}}, 6)) == IntersectionProfile{3, 0});
    CHECK(intersection_profile(maj_circuit({{0, 1, 2}, {1, 2, 3}}, 4)) == IntersectionProfile{3, 2});
    CHECK(intersection_profile(maj_circuit({{0, 1, 2}, {2, 3, 4}}, 5)) == IntersectionProfile{3, 1});
    CHECK(intersection_profile(maj_circuit({{0, 1, 2}}, 3)) == IntersectionProfile{3, 0});
  }

  TEST_CASE("restriction and essential inputs") {
    auto f = make_function({4, 1, 7}, maj_table(3));
    std::vector<int> fixed(8, -1);
    fixed[1] = 1;
    auto r = restrict_function(f, fixed);
    CHECK(r.inputs == std::vector<int>{4, 7});
    CHECK(r.table == or_table(2));
    fixed[4] = 1;
    r = restrict_function(f, fixed);
    CHECK(r.table == Bits{1, 1});
    auto e = essential(r.inputs, r.table);
    CHECK(e.inputs.empty());
  }
}
