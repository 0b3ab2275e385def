#include "circuit.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "error.hpp"

namespace avoid {

namespace {

Bits table_from(int k, auto pred) {
  Bits t(std::size_t{1} << k);
  for (std::uint32_t a = 0; a < t.size(); ++a) t[a] = pred(a) ? 1 : 0;
  return t;
}

}  // namespace

bool OutputFunction::eval(const Bits& x) const {
  std::uint32_t a = 0;
  for (int t = 0; t < arity(); ++t)
    if (x[inputs[t]]) a |= 1u << t;
  return at(a);
}

OutputFunction make_function(std::vector<int> inputs, Bits table) {
  if (inputs.empty()) fail(Errc::InputShape, "output function needs at least one input");
  if (inputs.size() > 16) fail(Errc::InputShape, "output function arity above 16");
  std::set<int> seen;
  for (int v : inputs) {
    if (v < 0) fail(Errc::InputShape, "negative input index");
    if (!seen.insert(v).second) fail(Errc::InputShape, "duplicate input index " + std::to_string(v));
  }
  if (table.size() != (std::size_t{1} << inputs.size()))
    fail(Errc::InputShape, "table length " + std::to_string(table.size()) + " != 2^" +
                               std::to_string(inputs.size()));
  for (auto& b : table) b = b ? 1 : 0;
  return OutputFunction{std::move(inputs), std::move(table)};
}

int Circuit::locality() const {
  int k = 0;
  for (const auto& f : outputs) k = std::max(k, f.arity());
  return k;
}

Circuit make_circuit(int n, std::vector<OutputFunction> outputs) {
  if (n < 0) fail(Errc::InputShape, "negative input count");
  if (outputs.empty()) fail(Errc::InputShape, "circuit needs m >= 1");
  for (std::size_t i = 0; i < outputs.size(); ++i)
    for (int v : outputs[i].inputs)
      if (v >= n)
        fail(Errc::InputShape, "output " + std::to_string(i) + " reads input " + std::to_string(v) +
                                   " >= n=" + std::to_string(n));
  return Circuit{n, std::move(outputs)};
}

std::string FunctionClass::name() const {
  switch (tag) {
    case FnTag::Const0: return "Const0";
    case FnTag::Const1: return "Const1";
    case FnTag::AndK: return "AndK";
    case FnTag::OrK: return "OrK";
    case FnTag::Maj3: return "Maj3";
    case FnTag::MonotoneCase: return "MonotoneCase(" + std::to_string(caseId) + ")";
    case FnTag::Parity2: return "Parity2";
    case FnTag::AndOr2: return "AndOr2";
    case FnTag::MajK: return "MajK";
    case FnTag::MonotoneWide: return "MonotoneWide";
    case FnTag::NonMonotone: return "NonMonotone";
  }
  return "?";
}

Bits and_table(int k) {
  const std::uint32_t full = (1u << k) - 1;
  return table_from(k, [&](std::uint32_t a) { return a == full; });
}
Bits or_table(int k) {
  return table_from(k, [](std::uint32_t a) { return a != 0; });
}
Bits maj_table(int k) {
  return table_from(k, [&](std::uint32_t a) { return std::popcount(a) >= k / 2 + 1; });
}
Bits xor_table(int k) {
  return table_from(k, [](std::uint32_t a) { return std::popcount(a) % 2 == 1; });
}

bool table_is_monotone(const Bits& table, int arity) {
  for (std::uint32_t a = 0; a < table.size(); ++a)
    for (int i = 0; i < arity; ++i)
      if (!(a >> i & 1) && table[a] > table[a | 1u << i]) return false;
  return true;
}

bool depends_on(const Bits& table, int /*arity*/, int position) {
  for (std::uint32_t a = 0; a < table.size(); ++a)
    if (!(a >> position & 1) && table[a] != table[a | 1u << position]) return true;
  return false;
}

int monotone_case(const Bits& table, int arity) {
  int z[4] = {0, 0, 0, 0};
  const std::uint32_t mask = (1u << arity) - 1;
  for (std::uint32_t a = 0; a < 8; ++a)
    if (!table[a & mask]) ++z[std::popcount(a)];
  const int total = z[0] + z[1] + z[2] + z[3];
  if (total == 0) return 1;
  if (total == 8) return 8;
  if (z[3] != 0 || z[0] != 1) return 0;
  if (z[2] == 0 && z[1] == 0) return 2;
  if (z[2] == 0 && z[1] == 1) return 3;
  if (z[2] == 0 && z[1] == 2) return 4;
  if (z[2] == 1 && z[1] == 2) return 4;  // dictator
  if (z[1] == 3 && z[2] == 1) return 5;
  if (z[1] == 3 && z[2] == 2) return 6;
  if (z[1] == 3 && z[2] == 3) return 7;
  return 0;
}

FunctionClass classify_output_function(const OutputFunction& f) {
  const int j = f.arity();
  const auto ones = std::count(f.table.begin(), f.table.end(), 1);
  if (ones == 0) return {FnTag::Const0};
  if (ones == static_cast<long>(f.table.size())) return {FnTag::Const1};
  const bool mono = table_is_monotone(f.table, j);
  if (j == 3) {
    if (f.table == maj_table(3)) return {FnTag::Maj3};
    if (mono) return {FnTag::MonotoneCase, monotone_case(f.table, 3)};
    return {FnTag::NonMonotone};
  }
  if (f.table == or_table(j)) return {FnTag::OrK};
  if (f.table == and_table(j)) return {FnTag::AndK};
  if (j == 2) {
    if (f.table == xor_table(2) || f.table == Bits{1, 0, 0, 1}) return {FnTag::Parity2};
    if (ones == 1 || ones == 3) return {FnTag::AndOr2};
    if (mono) return {FnTag::MonotoneCase, monotone_case(f.table, 2)};
    return {FnTag::NonMonotone};
  }
  if (j >= 4 && f.table == maj_table(j)) return {FnTag::MajK};
  if (mono) return {FnTag::MonotoneWide};
  return {FnTag::NonMonotone};
}

Bits evaluate(const Circuit& c, const Bits& x) {
  if (static_cast<int>(x.size()) != c.n)
    fail(Errc::InputShape, "input length " + std::to_string(x.size()) + " != n=" + std::to_string(c.n));
  Bits out(c.m());
  for (int i = 0; i < c.m(); ++i) out[i] = c.outputs[i].eval(x) ? 1 : 0;
  return out;
}

void check_partial_output(const Circuit& c, const PartialOutput& y) {
  if (static_cast<int>(y.size()) != c.m())
    fail(Errc::InputShape, "y length " + std::to_string(y.size()) + " != m=" + std::to_string(c.m()));
  for (char ch : y)
    if (ch != '0' && ch != '1' && ch != '*') fail(Errc::InputShape, std::string("bad y symbol '") + ch + "'");
}

bool consistent(const Bits& out, const PartialOutput& y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != '*' && (y[i] == '1') != (out[i] != 0)) return false;
  return true;
}

std::optional<Bits> brute_force_preimage(const Circuit& c, const PartialOutput& y, int limit) {
  check_partial_output(c, y);
  if (c.n > limit || c.n > 30)
    fail(Errc::OracleLimit, "n=" + std::to_string(c.n) + " above oracle limit " + std::to_string(limit));
  struct Fixed {
    std::vector<int> inputs;
    const Bits* table;
    std::uint8_t want;
  };
  std::vector<Fixed> fixed;
  for (int i = 0; i < c.m(); ++i)
    if (y[i] != '*') fixed.push_back({c.outputs[i].inputs, &c.outputs[i].table, std::uint8_t(y[i] == '1')});
  const std::uint64_t total = std::uint64_t{1} << c.n;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& f : fixed) {
      std::uint32_t a = 0;
      for (std::size_t t = 0; t < f.inputs.size(); ++t) a |= static_cast<std::uint32_t>(x >> f.inputs[t] & 1) << t;
      if ((*f.table)[a] != f.want) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Bits w(c.n);
      for (int v = 0; v < c.n; ++v) w[v] = x >> v & 1;
      return w;
    }
  }
  return std::nullopt;
}

IntersectionProfile intersection_profile(const Circuit& c) {
  IntersectionProfile p{c.locality(), 0};
  std::vector<std::vector<int>> sets;
  for (const auto& f : c.outputs) {
    auto s = f.inputs;
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      p.t = std::max(p.t, static_cast<int>(common.size()));
    }
  return p;
}

Restricted restrict_function(const OutputFunction& f, const std::vector<int>& fixed) {
  Restricted r;
  std::uint32_t base = 0;
  std::vector<int> freePos;
  for (int t = 0; t < f.arity(); ++t) {
    const int v = fixed[f.inputs[t]];
    if (v < 0) {
      freePos.push_back(t);
      r.inputs.push_back(f.inputs[t]);
    } else if (v == 1) {
      base |= 1u << t;
    }
  }
  r.table.assign(std::size_t{1} << freePos.size(), 0);
  for (std::uint32_t a = 0; a < r.table.size(); ++a) {
    std::uint32_t full = base;
    for (std::size_t s = 0; s < freePos.size(); ++s)
      if (a >> s & 1) full |= 1u << freePos[s];
    r.table[a] = f.table[full];
  }
  return r;
}

Restricted essential(const std::vector<int>& inputs, const Bits& table) {
  const int j = static_cast<int>(inputs.size());
  std::vector<int> keep;
  for (int t = 0; t < j; ++t)
    if (depends_on(table, j, t)) keep.push_back(t);
  Restricted r;
  for (int t : keep) r.inputs.push_back(inputs[t]);
  r.table.assign(std::size_t{1} << keep.size(), 0);
  for (std::uint32_t a = 0; a < r.table.size(); ++a) {
    std::uint32_t full = 0;
    for (std::size_t s = 0; s < keep.size(); ++s)
      if (a >> s & 1) full |= 1u << keep[s];
    r.table[a] = table[full];
  }
  return r;
}

}  // namespace avoid
