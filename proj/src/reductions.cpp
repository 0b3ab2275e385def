#include "reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace avoid {

ReductionTrace identity_trace(int m) {
  ReductionTrace t;
  t.sourceM = m;
  t.outMap.resize(m);
  std::iota(t.outMap.begin(), t.outMap.end(), 0);
  return t;
}

ReductionTrace compose(const ReductionTrace& first, const ReductionTrace& second) {
  if (second.sourceM != static_cast<int>(first.outMap.size()))
    fail(Errc::Trace, "trace composition: sizes disagree");
  ReductionTrace t;
  t.sourceM = first.sourceM;
  for (int i : second.outMap) t.outMap.push_back(first.outMap.at(i));
  t.steps = first.steps;
  for (auto s : second.steps) {
    if (s.kind == TraceStep::Kind::SetOutput || s.kind == TraceStep::Kind::DropOutput) s.index = first.outMap.at(s.index);
    t.steps.push_back(std::move(s));
  }
  return t;
}

PartialOutput backsubstitute(const ReductionTrace& trace, const PartialOutput& reduced) {
  if (reduced.size() != trace.outMap.size())
    fail(Errc::Trace, "reduced solution has length " + std::to_string(reduced.size()) + ", trace expects " +
                          std::to_string(trace.outMap.size()));
  PartialOutput y(trace.sourceM, '*');
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const int dst = trace.outMap[i];
    if (dst < 0 || dst >= trace.sourceM) fail(Errc::Trace, "output map out of range");
    y[dst] = reduced[i];
  }
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (it->kind != TraceStep::Kind::SetOutput) continue;
    if (it->index < 0 || it->index >= trace.sourceM || (it->value != 0 && it->value != 1))
      fail(Errc::Trace, "malformed SetOutput step");
    const char bit = it->value ? '1' : '0';
    if (y[it->index] != '*' && y[it->index] != bit)
      fail(Errc::Trace, "output " + std::to_string(it->index) + " set twice with different values");
    y[it->index] = bit;
  }
  return y;
}

// ---------------------------------------------------------------------------------------------

Reduced demorgan_monotonize(const Circuit& c) {
  if (c.m() <= 2 * c.n) fail(Errc::Stretch, "monotonization needs m > 2n");
  std::vector<OutputFunction> outs;
  for (const auto& f : c.outputs) {
    const int j = f.arity();
    if (j > 8) fail(Errc::InputShape, "monotonization limited to locality 8");
    std::vector<int> ins = f.inputs;
    for (int v : f.inputs) ins.push_back(c.n + v);
    const std::uint32_t full = (1u << j) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t a = 0; a <= full; ++a)
      if (f.at(a)) masks.push_back(a | ((~a & full) << j));
    Bits table(std::size_t{1} << (2 * j), 0);
    for (std::uint32_t z = 0; z < table.size(); ++z)
      for (auto mk : masks)
        if ((z & mk) == mk) {
          table[z] = 1;
          break;
        }
    auto r = essential(ins, table);
    if (r.inputs.empty()) {
      r.inputs = {f.inputs[0]};
      r.table = {table[0], table[0]};
    }
    outs.push_back(make_function(r.inputs, r.table));
  }
  Reduced out{std::nullopt, make_circuit(2 * c.n, std::move(outs)), identity_trace(c.m()), {}};
  for (int v = 0; v < c.n; ++v) {
    TraceStep s;
    s.kind = TraceStep::Kind::MonotonizeMap;
    s.index = v;
    s.pos = v;
    s.neg = c.n + v;
    out.trace.steps.push_back(s);
  }
  out.explain.push_back("monotonize: " + std::to_string(c.n) + " inputs doubled, not x_i at n+i");
  return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

TraceStep set_output(int i, int v, std::string note) {
  TraceStep s;
  s.kind = TraceStep::Kind::SetOutput;
  s.index = i;
  s.value = v;
  s.note = std::move(note);
  return s;
}

TraceStep set_input(int v, int val, std::string note = {}) {
  TraceStep s;
  s.kind = TraceStep::Kind::SetInput;
  s.index = v;
  s.value = val;
  s.note = std::move(note);
  return s;
}

TraceStep drop_output(int i, std::string note = {}) {
  TraceStep s;
  s.kind = TraceStep::Kind::DropOutput;
  s.index = i;
  s.note = std::move(note);
  return s;
}

bool is_constant(const Bits& t) { return std::all_of(t.begin(), t.end(), [&](auto b) { return b == t[0]; }); }

PartialOutput outputs_so_far(int m, const std::vector<TraceStep>& steps) {
  PartialOutput y(m, '*');
  for (const auto& s : steps)
    if (s.kind == TraceStep::Kind::SetOutput) y[s.index] = s.value ? '1' : '0';
  return y;
}

}  // namespace

Reduced reduce_mon3_to_maj3(const Circuit& c) {
  for (int i = 0; i < c.m(); ++i) {
    const auto& f = c.outputs[i];
    if (f.arity() > 3) fail(Errc::Precondition, "output " + std::to_string(i) + " has locality above 3");
    if (!table_is_monotone(f.table, f.arity())) fail(Errc::Precondition, "output " + std::to_string(i) + " is not monotone");
  }
  if (c.m() <= c.n) fail(Errc::Stretch, "needs m > n");
  std::vector<int> fixed(c.n, -1);
  std::vector<char> done(c.m(), 0);
  Reduced out{std::nullopt, c, identity_trace(c.m()), {}};
  auto& steps = out.trace.steps;
  for (;;) {
    bool acted = false;
    for (int i = 0; i < c.m() && !acted; ++i) {
      if (done[i]) continue;
      const auto r = restrict_function(c.outputs[i], fixed);
      if (!is_constant(r.table)) continue;
      const int v = r.table[0];
      const int cs = v ? 1 : 8;
      steps.push_back(set_output(i, 1 - v, "case " + std::to_string(cs)));
      out.explain.push_back("out " + std::to_string(i) + ": case " + std::to_string(cs) + ", constant " +
                            std::to_string(v) + " after fixes, flipped to " + std::to_string(1 - v));
      out.certificate = outputs_so_far(c.m(), steps);
      return out;
    }
    for (int i = 0; i < c.m() && !acted; ++i) {
      if (done[i]) continue;
      const auto r0 = restrict_function(c.outputs[i], fixed);
      const auto r = essential(r0.inputs, r0.table);
      const int j = static_cast<int>(r.inputs.size());
      if (j == 3 && r.table == maj_table(3)) continue;
      const int cs = monotone_case(r.table, j);
      std::vector<int> s0, s1;
      for (int t = 0; t < j; ++t) {
        bool zeroOnZeros = true, oneOnOnes = true;
        for (std::uint32_t a = 0; a < r.table.size(); ++a) {
          if (!r.table[a] && (a >> t & 1)) zeroOnZeros = false;
          if (r.table[a] && !(a >> t & 1)) oneOnOnes = false;
        }
        if (zeroOnZeros) s0.push_back(r.inputs[t]);
        if (oneOnOnes) s1.push_back(r.inputs[t]);
      }
      const int value = s0.empty() ? 1 : 0;
      const auto& pin = s0.empty() ? s1 : s0;
      if (pin.empty()) fail(Errc::Invariant, "monotone output " + std::to_string(i) + " pins no input");
      std::string note = "case " + std::to_string(cs);
      steps.push_back(set_output(i, value, note));
      std::string line = "out " + std::to_string(i) + ": " + note + ", set " + std::to_string(value) + ", fix";
      for (int v : pin) {
        fixed[v] = value;
        steps.push_back(set_input(v, value, note));
        line += " x" + std::to_string(v) + "=" + std::to_string(value);
      }
      steps.push_back(drop_output(i));
      done[i] = 1;
      out.explain.push_back(line);
      acted = true;
    }
    if (!acted) break;
  }
  std::vector<OutputFunction> outs;
  out.trace.outMap.clear();
  for (int i = 0; i < c.m(); ++i)
    if (!done[i]) {
      outs.push_back(c.outputs[i]);
      out.trace.outMap.push_back(i);
    }
  if (outs.empty()) fail(Errc::Invariant, "every output eliminated without a certificate");
  out.circuit = make_circuit(c.n, std::move(outs));
  return out;
}

// ---------------------------------------------------------------------------------------------

Cluster find_heavy_cluster(const Circuit& c) {
  std::vector<int> parent(c.m());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> firstReader(c.n, -1);
  for (int i = 0; i < c.m(); ++i)
    for (int v : c.outputs[i].inputs) {
      if (firstReader[v] < 0) firstReader[v] = i;
      else {
        int a = find(i), b = find(firstReader[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::map<int, Cluster> byRoot;
  for (int i = 0; i < c.m(); ++i) byRoot[find(i)].outputs.push_back(i);
  for (auto& [root, k] : byRoot) {
    std::set<int> ins;
    for (int i : k.outputs) ins.insert(c.outputs[i].inputs.begin(), c.outputs[i].inputs.end());
    k.inputs.assign(ins.begin(), ins.end());
    if (k.outputs.size() > k.inputs.size()) return k;
  }
  fail(Errc::Precondition, "no cluster has more outputs than inputs");
}

Reduced restrict_to_cluster(const Circuit& c, const Cluster& k) {
  std::vector<OutputFunction> outs;
  Reduced out{std::nullopt, c, identity_trace(c.m()), {}};
  out.trace.outMap = k.outputs;
  std::set<int> keep(k.outputs.begin(), k.outputs.end());
  for (int i = 0; i < c.m(); ++i)
    if (!keep.count(i)) out.trace.steps.push_back(drop_output(i, "outside cluster"));
  for (int i : k.outputs) outs.push_back(c.outputs[i]);
  out.circuit = make_circuit(c.n, std::move(outs));
  out.explain.push_back("cluster: " + std::to_string(k.outputs.size()) + " outputs over " +
                        std::to_string(k.inputs.size()) + " inputs");
  return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

thread_local std::vector<std::vector<LiteralState>> g_states;

constexpr std::size_t kMaxBranches = 1u << 14;

using Branch = std::vector<signed char>;

class Elimination {
 public:
  explicit Elimination(const Circuit& c) : c_(c), inIO_(c.n, 0), inO_(c.m(), 0), y_(c.m(), '*') {
    S_.push_back(Branch(c.n, -1));
  }

  std::vector<Branch> extend(int g, int value) const {
    const auto& f = c_.outputs[g];
    std::vector<int> fresh;
    for (int v : f.inputs)
      if (!inIO_[v]) fresh.push_back(v);
    std::vector<Branch> out;
    for (const auto& b : S_)
      for (std::uint32_t a = 0; a < (1u << fresh.size()); ++a) {
        Branch nb = b;
        for (std::size_t s = 0; s < fresh.size(); ++s) nb[fresh[s]] = static_cast<signed char>(a >> s & 1);
        if (f.eval(bits(nb)) == (value == 1)) out.push_back(std::move(nb));
      }
    return out;
  }

  // Variables that vary across branches are grouped by their column up to negation; each group's
  // lowest variable is its root.
  std::vector<LiteralState> literals() const {
    std::vector<LiteralState> st(c_.n);
    if (S_.empty()) return st;
    std::map<std::vector<signed char>, int> rootOf;
    for (int v = 0; v < c_.n; ++v) {
      if (!inIO_[v]) continue;
      std::vector<signed char> col;
      for (const auto& b : S_) col.push_back(b[v]);
      if (std::all_of(col.begin(), col.end(), [&](auto x) { return x == col[0]; })) {
        st[v] = {LitKind::Fixed, col[0], -1, 0};
        continue;
      }
      const int sign = col[0];
      if (sign)
        for (auto& x : col) x = static_cast<signed char>(1 - x);
      const int root = rootOf.emplace(col, v).first->second;
      st[v] = {LitKind::Lit, -1, root, sign ^ S_[0][root]};
    }
    return st;
  }

  int alive_roots() const {
    std::set<int> roots;
    for (const auto& l : literals())
      if (l.kind == LitKind::Lit) roots.insert(l.root);
    return static_cast<int>(roots.size());
  }

  void commit(int g, int value, const std::string& note, std::vector<TraceStep>& steps) {
    const auto before = literals();
    S_ = extend(g, value);
    for (int v : c_.outputs[g].inputs) inIO_[v] = 1;
    inO_[g] = 1;
    y_[g] = value ? '1' : '0';
    steps.push_back(set_output(g, value, note));
    const auto after = literals();
    for (int v = 0; v < c_.n; ++v) {
      if (!inIO_[v] || before[v] == after[v]) continue;
      if (after[v].kind == LitKind::Fixed) steps.push_back(set_input(v, after[v].value, note));
      else if (after[v].root != v) {
        TraceStep s;
        s.kind = TraceStep::Kind::IdentifyInputs;
        s.index = v;
        s.root = after[v].root;
        s.sign = after[v].sign;
        s.note = note;
        steps.push_back(s);
      }
    }
    g_states.push_back(after);
  }

  std::string shared_label(int g) const {
    const auto lit = literals();
    std::vector<int> shared;
    for (int v : c_.outputs[g].inputs)
      if (inIO_[v]) shared.push_back(v);
    std::sort(shared.begin(), shared.end());
    int alive = 0;
    for (int v : shared) alive += lit[v].kind == LitKind::Lit;
    if (shared.size() == 3) {
      if (alive == 0) return "endgame case 1";
      if (alive == 3) return "endgame case 4";
      std::vector<int> fixedVals, lits;
      for (int v : shared) {
        if (lit[v].kind == LitKind::Fixed) fixedVals.push_back(lit[v].value);
        else lits.push_back(lit[v].sign);
      }
      if (alive == 1) return fixedVals[0] == fixedVals[1] ? "endgame case 2(a)" : "endgame case 2(b)";
      return lits[0] == lits[1] ? "endgame case 3(a)" : "endgame case 3(b)";
    }
    // case k: k - 1 of the two shared inputs are still undetermined
    if (shared.size() == 2) return "shared-pair case " + std::to_string(1 + alive);
    return alive ? "one-shared rule (alive input)" : "one-shared rule";
  }

  // priority: 0 internal, 1 two shared, 2 one shared fixed, 3 one shared alive
  int kind(int g) const {
    const auto lit = literals();
    int shared = 0, alive = 0;
    for (int v : c_.outputs[g].inputs)
      if (inIO_[v]) {
        ++shared;
        alive += lit[v].kind == LitKind::Lit;
      }
    if (shared == 0) return -1;
    if (shared == 3) return 0;
    if (shared == 2) return 1;
    return alive ? 3 : 2;
  }

  int tie_value(int g) const {
    const auto lit = literals();
    std::vector<int> shared;
    for (int v : c_.outputs[g].inputs)
      if (inIO_[v]) shared.push_back(v);
    std::sort(shared.begin(), shared.end());
    if (shared.size() == 2 && lit[shared[0]].kind == LitKind::Fixed && lit[shared[1]].kind == LitKind::Fixed)
      return lit[shared[0]].value;
    return 0;
  }

  const Circuit& c_;
  std::vector<char> inIO_;
  std::vector<char> inO_;
  PartialOutput y_;
  std::vector<Branch> S_;

 private:
  Bits bits(const Branch& b) const {
    Bits x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = b[i] == 1;
    return x;
  }
};

std::vector<int> sorted_inputs(const OutputFunction& f) {
  auto s = f.inputs;
  std::sort(s.begin(), s.end());
  return s;
}

int common_count(const OutputFunction& a, const OutputFunction& b) {
  int k = 0;
  for (int v : a.inputs)
    if (std::find(b.inputs.begin(), b.inputs.end(), v) != b.inputs.end()) ++k;
  return k;
}

}  // namespace

const std::vector<std::vector<LiteralState>>& last_elimination_states() { return g_states; }

Reduced reduce_two_to_one_intersect(const Circuit& c, TwoToOneStats* stats) {
  g_states.clear();
  for (int i = 0; i < c.m(); ++i)
    if (c.outputs[i].arity() != 3 || c.outputs[i].table != maj_table(3))
      fail(Errc::Precondition, "output " + std::to_string(i) + " is not MAJ3");
  TwoToOneStats local;
  TwoToOneStats& st = stats ? *stats : local;
  Reduced out{std::nullopt, c, identity_trace(c.m()), {}};
  auto& steps = out.trace.steps;
  // (a) identical supports
  for (int i = 0; i < c.m(); ++i)
    for (int j = i + 1; j < c.m(); ++j)
      if (sorted_inputs(c.outputs[i]) == sorted_inputs(c.outputs[j])) {
        steps.push_back(set_output(i, 0, "identical supports"));
        steps.push_back(set_output(j, 1, "identical supports"));
        out.explain.push_back("outs " + std::to_string(i) + "," + std::to_string(j) +
                              ": same inputs, opposite bits");
        out.certificate = outputs_so_far(c.m(), steps);
        return out;
      }
  // (b) elimination from the first pair sharing two inputs
  int f1 = -1, f2 = -1;
  for (int i = 0; i < c.m() && f1 < 0; ++i)
    for (int j = i + 1; j < c.m(); ++j)
      if (common_count(c.outputs[i], c.outputs[j]) == 2) {
        f1 = i;
        f2 = j;
        break;
      }
  if (f1 < 0) {
    out.explain.push_back("already one-intersect");
    return out;  // (c)
  }
  Elimination el(c);
  el.commit(f1, 1, "bootstrap", steps);
  el.commit(f2, 0, "bootstrap", steps);
  out.explain.push_back("bootstrap: out " + std::to_string(f1) + "=1, out " + std::to_string(f2) + "=0");
  st.maxAliveRoots = std::max(st.maxAliveRoots, el.alive_roots());
  while (!el.S_.empty()) {
    struct Pick {
      int g = -1, value = 0, kind = 9;
      std::size_t size = 0;
    } best, grow;
    for (int g = 0; g < c.m(); ++g) {
      if (el.inO_[g]) continue;
      const int k = el.kind(g);
      if (k < 0) continue;
      const auto s0 = el.extend(g, 0).size();
      const auto s1 = el.extend(g, 1).size();
      const int v = s0 < s1 ? 0 : s1 < s0 ? 1 : el.tie_value(g);
      const auto sz = std::min(s0, s1);
      if (sz <= 2) {
        if (k < best.kind) best = {g, v, k, sz};
      } else if (grow.g < 0 || sz < grow.size) {
        grow = {g, v, k, sz};
      }
    }
    if (best.g < 0 && grow.g >= 0) {
      // Every candidate shares a single alive input: no output value keeps two branches, so the
      // branch set grows here and the counting bound shrinks it again later.
      ++st.deferred;
      if (grow.size > kMaxBranches) fail(Errc::Invariant, "elimination branch set exceeded its cap");
      best = grow;
    }
    if (best.g < 0) fail(Errc::Precondition, "elimination ran out of functions: instance is not a heavy cluster");
    const std::string note = el.shared_label(best.g);
    el.commit(best.g, best.value, note, steps);
    ++st.steps;
    st.maxAliveRoots = std::max(st.maxAliveRoots, el.alive_roots());
    st.maxBranches = std::max(st.maxBranches, static_cast<int>(el.S_.size()));
    out.explain.push_back("out " + std::to_string(best.g) + ": " + note + ", set " + std::to_string(best.value) +
                          (el.S_.empty() ? " -> no consistent input remains" : ""));
  }
  out.certificate = el.y_;
  return out;
}

// ---------------------------------------------------------------------------------------------

bool is_and_or_const(const OutputFunction& f) {
  return is_constant(f.table) || f.table == and_table(f.arity()) || f.table == or_table(f.arity());
}

PartialOutput solve_depth1_monotone(const Circuit& c, std::vector<std::string>* explain) {
  for (int i = 0; i < c.m(); ++i)
    if (!is_and_or_const(c.outputs[i]))
      fail(Errc::Precondition, "output " + std::to_string(i) + " is not constant, AND or OR");
  if (c.m() <= c.n) fail(Errc::Stretch, "needs m > n");
  std::vector<int> fixed(c.n, -1);
  std::vector<char> done(c.m(), 0);
  PartialOutput y(c.m(), '*');
  auto say = [&](const std::string& s) {
    if (explain) explain->push_back(s);
  };
  for (;;) {
    for (int i = 0; i < c.m(); ++i) {
      if (done[i]) continue;
      const auto r = restrict_function(c.outputs[i], fixed);
      if (is_constant(r.table)) {
        y[i] = r.table[0] ? '0' : '1';
        say("out " + std::to_string(i) + ": determined " + std::to_string(r.table[0]) + ", flipped");
        return y;
      }
    }
    int i = 0;
    while (done[i]) ++i;  // some output is always left: each step fixes an input and m > n
    const auto r = restrict_function(c.outputs[i], fixed);
    const int value = r.table == and_table(static_cast<int>(r.inputs.size())) ? 1 : 0;
    y[i] = value ? '1' : '0';
    for (int v : r.inputs) fixed[v] = value;
    done[i] = 1;
    say("out " + std::to_string(i) + ": " + (value ? "AND set 1" : "OR set 0") + ", fixed " +
        std::to_string(r.inputs.size()) + " inputs");
  }
}

}  // namespace avoid
