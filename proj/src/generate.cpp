#include "generate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "error.hpp"
#include "rng.hpp"

namespace avoid {

GeneratorSpec parse_generator_class(const std::string& text) {
  std::string head = text, arg;
  const auto cut = text.find_first_of(":(");
  if (cut != std::string::npos) {
    head = text.substr(0, cut);
    arg = text.substr(cut + 1);
    if (text[cut] == '(') {
      if (arg.empty() || arg.back() != ')') fail(Errc::Parse, "unbalanced parenthesis in '" + text + "'");
      arg.pop_back();
    }
  }
  GeneratorSpec s;
  auto needK = [&](GenClass c) {
    s.cls = c;
    if (arg.empty()) fail(Errc::Parse, head + " needs a k, e.g. " + head + ":3");
    try {
      std::size_t used = 0;
      s.k = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      fail(Errc::Parse, "bad k '" + arg + "'");
    }
    if (s.k < 2 || s.k > 8) fail(Errc::Parse, "k must be in [2,8]");
  };
  auto noK = [&](GenClass c) {
    if (!arg.empty()) fail(Errc::Parse, head + " takes no parameter");
    s.cls = c;
  };
  if (head == "mon-nc03") noK(GenClass::MonNC03);
  else if (head == "maj3") noK(GenClass::Maj3);
  else if (head == "one-intersect-maj3") noK(GenClass::OneIntersectMaj3);
  else if (head == "one-intersect-majk") needK(GenClass::OneIntersectMajK);
  else if (head == "nc02") noK(GenClass::NC02);
  else if (head == "andor") needK(GenClass::AndOr);
  else if (head == "linear-hypergraph") noK(GenClass::LinearHypergraph);
  else fail(Errc::Parse, "unknown generator class '" + text + "'");
  return s;
}

std::string generator_class_name(const GeneratorSpec& s) {
  switch (s.cls) {
    case GenClass::MonNC03: return "mon-nc03";
    case GenClass::Maj3: return "maj3";
    case GenClass::OneIntersectMaj3: return "one-intersect-maj3";
    case GenClass::OneIntersectMajK: return "one-intersect-majk:" + std::to_string(s.k);
    case GenClass::NC02: return "nc02";
    case GenClass::AndOr: return "andor:" + std::to_string(s.k);
    case GenClass::LinearHypergraph: return "linear-hypergraph";
  }
  return "?";
}

namespace {

[[noreturn]] void infeasible(const std::string& why) { fail(Errc::Infeasible, why); }

// All non-constant monotone tables of the given arity.
std::vector<Bits> monotone_tables(int arity) {
  std::vector<Bits> out;
  const std::uint32_t size = 1u << arity;
  for (std::uint32_t code = 1; code + 1 < (1u << size); ++code) {
    Bits t(size);
    for (std::uint32_t a = 0; a < size; ++a) t[a] = code >> a & 1;
    if (table_is_monotone(t, arity)) out.push_back(std::move(t));
  }
  return out;
}

// Connected family of k-sets with pairwise intersections <= 1. With cover set, the first edges
// sweep in uncovered vertices until all n are used.
std::vector<std::vector<int>> linear_edges(SplitMix64& rng, int n, int m, int k, bool cover) {
  constexpr int kRestarts = 200, kTries = 400;
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::set<std::pair<int, int>> pairs;
    std::vector<char> covered(n, 0);
    std::vector<int> coveredList;
    std::vector<std::vector<int>> edges;
    auto accept = [&](std::vector<int> e) {
      std::sort(e.begin(), e.end());
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b)
          if (pairs.count({e[a], e[b]})) return false;
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b) pairs.insert({e[a], e[b]});
      for (int v : e)
        if (!covered[v]) {
          covered[v] = 1;
          coveredList.push_back(v);
        }
      edges.push_back(std::move(e));
      return true;
    };
    bool stuck = false;
    while (static_cast<int>(edges.size()) < m && !stuck) {
      stuck = true;
      for (int t = 0; t < kTries; ++t) {
        std::vector<int> e;
        if (edges.empty()) {
          e = rng.sample(n, k);
        } else {
          e.push_back(coveredList[rng.below(coveredList.size())]);
          std::vector<int> fresh;
          for (int v = 0; v < n; ++v)
            if (!covered[v]) fresh.push_back(v);
          const int want = cover ? std::min<int>(k - 1, static_cast<int>(fresh.size())) : 0;
          for (int idx : rng.sample(static_cast<int>(fresh.size()), want)) e.push_back(fresh[idx]);
          while (static_cast<int>(e.size()) < k) {
            const int v = static_cast<int>(rng.below(n));
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
          }
        }
        if (accept(e)) {
          stuck = false;
          break;
        }
      }
    }
    if (!stuck && (!cover || static_cast<int>(coveredList.size()) == n)) return edges;
  }
  infeasible("greedy linear construction failed for n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " k=" + std::to_string(k) + " after retries");
}

void linear_bound(int n, int m, int k) {
  const long cap = static_cast<long>(n) * (n - 1) / (static_cast<long>(k) * (k - 1));
  if (m > cap)
    infeasible("linear " + std::to_string(k) + "-uniform needs m <= n(n-1)/(k(k-1)) = " + std::to_string(cap) +
               ", got m=" + std::to_string(m));
}

}  // namespace

Circuit generate(const GeneratorSpec& spec) {
  const int n = spec.n, m = spec.m, k = spec.k;
  if (n < 1 || m < 1) infeasible("need n >= 1 and m >= 1");
  SplitMix64 rng(spec.seed);
  std::vector<OutputFunction> outs;
  switch (spec.cls) {
    case GenClass::MonNC03: {
      std::vector<Bits> tables[4];
      for (int a = 1; a <= 3; ++a) tables[a] = monotone_tables(a);
      for (int i = 0; i < m; ++i) {
        int a = rng.range(1, std::min(3, n));
        Bits t;
        if (a == 3 && rng.chance(1, 2)) t = maj_table(3);
        else t = tables[a][rng.below(tables[a].size())];
        outs.push_back(make_function(rng.sample(n, a), t));
      }
      break;
    }
    case GenClass::Maj3:
      if (n < 3) infeasible("maj3 needs n >= 3");
      for (int i = 0; i < m; ++i) outs.push_back(make_function(rng.sample(n, 3), maj_table(3)));
      break;
    case GenClass::OneIntersectMaj3:
    case GenClass::OneIntersectMajK:
    case GenClass::LinearHypergraph:
    case GenClass::AndOr: {
      const int kk = (spec.cls == GenClass::OneIntersectMaj3 || spec.cls == GenClass::LinearHypergraph) ? 3 : k;
      if (n < kk) infeasible("need n >= " + std::to_string(kk));
      linear_bound(n, m, kk);
      const bool cover = spec.cls == GenClass::LinearHypergraph;
      if (cover && m < (n - 1 + kk - 2) / (kk - 1))
        infeasible("covering " + std::to_string(n) + " vertices needs more edges than m=" + std::to_string(m));
      for (auto& e : linear_edges(rng, n, m, kk, cover)) {
        Bits t = maj_table(kk);
        if (spec.cls == GenClass::AndOr) t = rng.chance(1, 2) ? and_table(kk) : or_table(kk);
        outs.push_back(make_function(e, t));
      }
      break;
    }
    case GenClass::NC02:
      if (n < 2) infeasible("nc02 needs n >= 2");
      for (int i = 0; i < m; ++i) {
        Bits t(4);
        do
          for (auto& b : t) b = rng.chance(1, 2);
        while (std::all_of(t.begin(), t.end(), [&](auto b) { return b == t[0]; }));
        outs.push_back(make_function(rng.sample(n, 2), t));
      }
      break;
  }
  auto c = make_circuit(n, std::move(outs));
  if (auto why = validate_generated(c, spec); !why.empty()) fail(Errc::Invariant, "generator produced: " + why);
  return c;
}

// Written against the definitions directly; shares no code with the generators or classifiers.
std::string validate_generated(const Circuit& c, const GeneratorSpec& spec) {
  auto value = [](const OutputFunction& f, std::uint32_t a) { return f.table[a] != 0; };
  auto monotone = [&](const OutputFunction& f) {
    for (std::uint32_t a = 0; a < f.table.size(); ++a)
      for (int t = 0; t < f.arity(); ++t)
        if (!(a >> t & 1) && value(f, a) && !value(f, a | (1u << t))) return false;
    return true;
  };
  auto constant = [&](const OutputFunction& f) {
    for (std::uint32_t a = 1; a < f.table.size(); ++a)
      if (value(f, a) != value(f, 0)) return false;
    return true;
  };
  auto majority = [&](const OutputFunction& f, int k) {
    if (f.arity() != k) return false;
    for (std::uint32_t a = 0; a < f.table.size(); ++a)
      if (value(f, a) != (2 * std::popcount(a) > k)) return false;
    return true;
  };
  auto andOr = [&](const OutputFunction& f, int k) {
    if (f.arity() != k) return false;
    const std::uint32_t top = (1u << k) - 1;
    bool isAnd = true, isOr = true;
    for (std::uint32_t a = 0; a <= top; ++a) {
      isAnd &= value(f, a) == (a == top);
      isOr &= value(f, a) == (a != 0);
    }
    return isAnd || isOr;
  };
  auto linearConnected = [&](bool needCover) -> std::string {
    for (int i = 0; i < c.m(); ++i)
      for (int j = i + 1; j < c.m(); ++j) {
        int common = 0;
        for (int v : c.outputs[i].inputs)
          common += std::count(c.outputs[j].inputs.begin(), c.outputs[j].inputs.end(), v) > 0;
        if (common > 1) return "outputs " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                               std::to_string(common) + " inputs";
      }
    std::vector<char> reached(c.m(), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < c.m(); ++j)
        if (!reached[j])
          for (int v : c.outputs[i].inputs)
            if (std::count(c.outputs[j].inputs.begin(), c.outputs[j].inputs.end(), v)) {
              reached[j] = 1;
              stack.push_back(j);
              break;
            }
    }
    if (std::count(reached.begin(), reached.end(), 0)) return "supports are not connected";
    if (needCover) {
      std::vector<char> used(c.n, 0);
      for (const auto& f : c.outputs)
        for (int v : f.inputs) used[v] = 1;
      if (std::count(used.begin(), used.end(), 0)) return "some vertex is uncovered";
    }
    return {};
  };
  if (c.m() != spec.m || c.n != spec.n) return "size differs from the request";
  for (int i = 0; i < c.m(); ++i) {
    const auto& f = c.outputs[i];
    const std::string at = "output " + std::to_string(i) + ": ";
    switch (spec.cls) {
      case GenClass::MonNC03:
        if (f.arity() > 3) return at + "locality above 3";
        if (!monotone(f)) return at + "not monotone";
        break;
      case GenClass::Maj3:
      case GenClass::OneIntersectMaj3:
      case GenClass::LinearHypergraph:
        if (!majority(f, 3)) return at + "not MAJ3";
        break;
      case GenClass::OneIntersectMajK:
        if (!majority(f, spec.k)) return at + "not MAJ_k";
        break;
      case GenClass::AndOr:
        if (!andOr(f, spec.k)) return at + "not AND_k or OR_k";
        break;
      case GenClass::NC02:
        if (f.arity() != 2 || constant(f)) return at + "not a non-constant 2-input function";
        break;
    }
  }
  switch (spec.cls) {
    case GenClass::OneIntersectMaj3:
    case GenClass::OneIntersectMajK:
    case GenClass::AndOr: return linearConnected(false);
    case GenClass::LinearHypergraph: return linearConnected(true);
    default: return {};
  }
}

}  // namespace avoid
