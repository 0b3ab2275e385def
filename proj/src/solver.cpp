#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>

#include "json.hpp"

#include "error.hpp"
#include "hypergraph.hpp"

namespace avoid {

std::string ProblemClass::name() const {
  switch (tag) {
    case Tag::NC02: return "NC02";
    case Tag::AndOrK: return "AndOr" + std::to_string(k);
    case Tag::OneIntersectMajK: return "OneIntersectMaj" + std::to_string(k);
    case Tag::Maj3: return "Maj3";
    case Tag::MonNC03: return "MonNC03";
    case Tag::Depth1Monotone: return "Depth1Monotone";
    case Tag::Unsupported: return "Unsupported(" + reason + ")";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "xcycle") return Strategy::XCycle;
  if (s == "wicket") return Strategy::Wicket;
  if (s == "grid") return Strategy::Grid;
  if (s == "nc02") return Strategy::NC02;
  if (s == "andor") return Strategy::AndOr;
  if (s == "depth1") return Strategy::Depth1;
  fail(Errc::Parse, "unknown method '" + s + "'");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::XCycle: return "xcycle";
    case Strategy::Wicket: return "wicket";
    case Strategy::Grid: return "grid";
    case Strategy::NC02: return "nc02";
    case Strategy::AndOr: return "andor";
    case Strategy::Depth1: return "depth1";
  }
  return "?";
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Verified: return "verified";
    case SolveStatus::Unverified: return "unverified";
    case SolveStatus::NotFound: return "not-found";
    case SolveStatus::Unsupported: return "unsupported";
    case SolveStatus::Refuted: return "refuted";
  }
  return "?";
}

int exit_code(const SolveReport& r) {
  switch (r.status) {
    case SolveStatus::Verified: return 0;
    case SolveStatus::Refuted: return 1;
    case SolveStatus::Unverified: return 2;
    case SolveStatus::NotFound: return 3;
    case SolveStatus::Unsupported: return 4;
  }
  return 1;
}

namespace {

using Tag = ProblemClass::Tag;

bool all_outputs(const Circuit& c, auto pred) { return std::all_of(c.outputs.begin(), c.outputs.end(), pred); }

bool is_and_or_k(const OutputFunction& f, int k) {
  return f.arity() == k && (f.table == and_table(k) || f.table == or_table(k));
}

bool is_maj(const OutputFunction& f, int k) { return f.arity() == k && f.table == maj_table(k); }

SolveReport blank(const Circuit& c, std::string solver) {
  SolveReport r;
  r.n = c.n;
  r.m = c.m();
  r.solver = std::move(solver);
  r.trace = identity_trace(c.m());
  return r;
}

// Sets status from the certificate: oracle when n is small enough, otherwise unverified.
void certify(SolveReport& r, const Circuit& c, const SolveOptions& opt) {
  if (r.certificate.empty()) return;
  check_partial_output(c, r.certificate);
  if (c.n > opt.oracleLimit) {
    r.status = SolveStatus::Unverified;
    r.verified = false;
    return;
  }
  auto x = brute_force_preimage(c, r.certificate, opt.oracleLimit);
  r.verified = !x;
  r.status = x ? SolveStatus::Refuted : SolveStatus::Verified;
  if (x) {
    std::string s;
    for (auto b : *x) s += b ? '1' : '0';
    r.reason = "oracle found preimage x=" + s;
  }
}

void not_found(SolveReport& r, std::string why) {
  r.status = SolveStatus::NotFound;
  r.reason = std::move(why);
}

// Pattern coloring to certificate, after propagation confirms no vertex coloring realizes it.
bool pattern_certificate(SolveReport& r, const Circuit& c, const Hypergraph& h, const std::vector<int>& edges,
                         const EdgeColoring& gamma, const std::string& name, int seed = -1) {
  const auto labels = circuit_labels(h, c);
  const auto v = decide_phi_colorable(h, labels, edges, gamma, Method::Propagation, seed);
  r.stats["propagation_nodes"] += v.nodes;
  if (v.colorable) {
    not_found(r, "coloring of " + name + " is realizable");
    return false;
  }
  r.certificate = certificate_to_partial_output(c.m(), h, gamma);
  r.pattern = name;
  r.edges.clear();
  r.coloring.clear();
  for (int e : edges) r.edges.push_back(h.label[e]);
  for (auto [e, col] : gamma) r.coloring.emplace_back(h.label[e], col);
  std::sort(r.coloring.begin(), r.coloring.end());
  r.provenance.push_back(name);
  return true;
}

void require_stretch(const Circuit& c) {
  if (c.m() <= c.n) fail(Errc::Stretch, "need m > n, got m=" + std::to_string(c.m()) + " n=" + std::to_string(c.n));
}

void tally_stats(SolveReport& r, const XCycleSearchStats& s) {
  r.stats["chi_pairs"] += s.chiPairs;
  r.stats["bfs_runs"] += s.bfsRuns;
  r.stats["xcycle_rejected"] += s.rejected;
}

}  // namespace

ProblemClass classify_problem(const Circuit& c) {
  ProblemClass pc;
  if (c.m() <= c.n) {
    pc.reason = "m <= n";
    return pc;
  }
  const int loc = c.locality();
  if (loc <= 2) return {Tag::NC02, 0, {}};
  const auto prof = intersection_profile(c);
  if (loc >= 3 && all_outputs(c, [&](const auto& f) { return is_and_or_k(f, loc); }) && prof.t <= 1)
    return {Tag::AndOrK, loc, {}};
  if (all_outputs(c, [](const auto& f) { return is_and_or_const(f); })) return {Tag::Depth1Monotone, 0, {}};
  if (loc >= 4 && all_outputs(c, [&](const auto& f) { return is_maj(f, loc); }) && prof.t <= 1)
    return {Tag::OneIntersectMajK, loc, {}};
  const bool monotone = all_outputs(c, [](const auto& f) { return table_is_monotone(f.table, f.arity()); });
  if (monotone && loc <= 3) {
    if (all_outputs(c, [](const auto& f) { return is_maj(f, 3); })) return {Tag::Maj3, 3, {}};
    return {Tag::MonNC03, 0, {}};
  }
  if (monotone) {
    pc.reason = "monotone locality " + std::to_string(loc);
    return pc;
  }
  if (c.m() <= 2 * c.n) {
    pc.reason = "non-monotone with m <= 2n";
    return pc;
  }
  const auto mono = demorgan_monotonize(c);
  const int loc2 = mono.circuit.locality();
  if (loc2 <= 3) return {Tag::MonNC03, 0, {}};
  pc.reason = "mon-NC0" + std::to_string(loc2);
  return pc;
}

// ---------------------------------------------------------------------------------------------

SolveReport solve_nc02(const Circuit& c, const SolveOptions& opt) {
  if (c.locality() > 2) fail(Errc::Precondition, "nc02 solver needs locality <= 2");
  require_stretch(c);
  auto r = blank(c, "nc02");
  const int ground = c.n;
  std::vector<OutputFunction> lab;
  std::vector<std::vector<int>> ends;
  for (int i = 0; i < c.m(); ++i) {
    auto e = essential(c.outputs[i].inputs, c.outputs[i].table);
    if (e.inputs.empty()) {
      r.certificate.assign(c.m(), '*');
      r.certificate[i] = e.table[0] ? '0' : '1';
      r.provenance.push_back("constant output");
      r.explain.push_back("out " + std::to_string(i) + ": constant " + std::to_string(int(e.table[0])) + ", flipped");
      certify(r, c, opt);
      return r;
    }
    ends.push_back(e.inputs.size() == 1 ? std::vector<int>{e.inputs[0], ground} : e.inputs);
    lab.push_back(OutputFunction{e.inputs, e.table});
  }
  // First output closing a cycle in the forest built so far.
  std::vector<int> comp(c.n + 1);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> forest(c.n + 1);  // (neighbor, output)
  int closing = -1;
  for (int i = 0; i < c.m() && closing < 0; ++i) {
    const int a = find(ends[i][0]), b = find(ends[i][1]);
    if (a == b) closing = i;
    else {
      comp[a] = b;
      forest[ends[i][0]].push_back({ends[i][1], i});
      forest[ends[i][1]].push_back({ends[i][0], i});
    }
  }
  if (closing < 0) fail(Errc::Invariant, "m > n outputs over n+1 vertices must close a cycle");
  // Forest path from u to v, then the closing edge back to u.
  const int u = ends[closing][0], v = ends[closing][1];
  std::vector<std::pair<int, int>> prev(c.n + 1, {-1, -1});
  std::queue<int> q;
  q.push(u);
  prev[u] = {u, -1};
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (auto [y, e] : forest[x])
      if (prev[y].first < 0) {
        prev[y] = {x, e};
        q.push(y);
      }
  }
  std::vector<int> cycE, cycV;  // cycV[t] and cycV[t+1] are the ends of cycE[t]
  for (int x = v; x != u; x = prev[x].first) {
    cycE.push_back(prev[x].second);
    cycV.push_back(x);
  }
  cycV.push_back(u);
  std::reverse(cycE.begin(), cycE.end());
  std::reverse(cycV.begin(), cycV.end());
  cycE.push_back(closing);
  const int len = static_cast<int>(cycE.size());

  auto value_at = [&](int e, const std::map<int, int>& val) {
    std::uint32_t a = 0;
    for (int t = 0; t < lab[e].arity(); ++t)
      if (val.at(lab[e].inputs[t])) a |= 1u << t;
    return int(lab[e].table[a]);
  };
  auto ones = [&](int e) { return static_cast<int>(std::count(lab[e].table.begin(), lab[e].table.end(), 1)); };

  int start = 0;
  std::string kase;
  auto groundAt = std::find(cycV.begin(), cycV.end(), ground);
  if (groundAt != cycV.end()) {
    start = static_cast<int>(groundAt - cycV.begin());
    kase = "nc02 ground cycle";
  } else {
    for (int t = 0; t < len; ++t)
      if (lab[cycE[t]].arity() == 2 && ones(cycE[t]) % 2 == 1) {
        start = t;
        kase = "nc02 case 2";
        break;
      }
    if (kase.empty()) kase = "nc02 case 1";
  }
  std::rotate(cycE.begin(), cycE.begin() + start, cycE.end());
  std::rotate(cycV.begin(), cycV.begin() + start, cycV.end());
  cycV.push_back(cycV[0]);

  // Vertex values: constants, or s xor bit for the symbolic start in the parity case.
  std::map<int, std::pair<bool, int>> val;  // vertex -> (symbolic, bit)
  EdgeColoring gamma;
  std::vector<int> used;
  int t0 = 0;
  if (kase == "nc02 ground cycle") {
    val[ground] = {false, 0};
  } else if (kase == "nc02 case 2") {
    const int e = cycE[0];
    const int want = ones(e) == 1 ? 1 : 0;
    std::uint32_t a = 0;
    while (lab[e].table[a] != want) ++a;
    for (int t = 0; t < 2; ++t) val[lab[e].inputs[t]] = {false, int(a >> t & 1)};
    gamma[e] = color_of(want);
    used.push_back(e);
    r.explain.push_back("out " + std::to_string(e) + ": set " + std::to_string(want) + ", both inputs forced");
    t0 = 1;
  } else {
    val[cycV[0]] = {true, 0};
  }
  bool early = false;
  for (int t = t0; t < len - 1 && !early; ++t) {
    const int e = cycE[t], p = cycV[t], nx = cycV[t + 1];
    used.push_back(e);
    const auto pv = val.at(p);
    if (!pv.first) {
      int g[2];
      for (int z = 0; z < 2; ++z) {
        g[z] = value_at(e, {{p, pv.second}, {nx, z}});
      }
      if (g[0] == g[1]) {
        gamma[e] = color_of(!g[0]);
        r.explain.push_back("out " + std::to_string(e) + ": determined " + std::to_string(g[0]) + ", flipped");
        kase += " (early contradiction)";
        early = true;
      } else {
        gamma[e] = Color::R;
        val[nx] = {false, g[0] == 0 ? 0 : 1};
        r.explain.push_back("out " + std::to_string(e) + ": set 0, fixes x" + std::to_string(nx));
      }
    } else {
      const int c0 = lab[e].table[0];
      if (lab[e].arity() != 2 || lab[e].table[3] != c0 || lab[e].table[1] == c0 || lab[e].table[2] == c0)
        fail(Errc::Invariant, "symbolic propagation through a non-parity edge");
      gamma[e] = Color::R;
      val[nx] = {true, pv.second ^ c0};
      r.explain.push_back("out " + std::to_string(e) + ": set 0, x" + std::to_string(nx) + " follows x" +
                          std::to_string(p));
    }
  }
  if (!early) {
    const int e = cycE[len - 1];
    const auto a = val.at(cycV[len - 1]), b = val.at(cycV[len]);
    int forced;
    if (a.first != b.first) fail(Errc::Invariant, "mixed constant and symbolic ends");
    if (!a.first) {
      forced = value_at(e, {{cycV[len - 1], a.second}, {cycV[len], b.second}});
    } else {
      forced = lab[e].table[0] ^ a.second ^ b.second;
    }
    gamma[e] = color_of(!forced);
    used.push_back(e);
    r.explain.push_back("out " + std::to_string(e) + ": forced " + std::to_string(forced) + ", flipped");
  }
  std::vector<std::vector<int>> hedges = ends;
  auto h = make_hypergraph(c.n + 1, hedges);
  std::vector<OutputFunction> labels = lab;
  const auto verdict = decide_phi_colorable(h, labels, used, gamma, Method::Propagation);
  r.stats["propagation_nodes"] += verdict.nodes;
  r.stats["cycle_length"] = len;
  if (verdict.colorable) fail(Errc::Invariant, "nc02 cycle coloring turned out realizable");
  r.certificate = certificate_to_partial_output(c.m(), h, gamma);
  r.pattern = "cycle";
  r.edges = used;
  for (auto [e, col] : gamma) r.coloring.emplace_back(e, col);
  r.provenance.push_back(kase);
  certify(r, c, opt);
  return r;
}

// ---------------------------------------------------------------------------------------------

SolveReport solve_andor_k(const Circuit& c, const SolveOptions& opt) {
  require_stretch(c);
  const int k = c.locality();
  if (!all_outputs(c, [&](const auto& f) { return is_and_or_k(f, k); }))
    fail(Errc::Precondition, "andor solver needs every output AND_k or OR_k of one arity");
  const auto h = build_hypergraph(c);
  if (!validate_structure(h).isLinear) fail(Errc::Precondition, "andor solver needs pairwise intersections <= 1");
  auto r = blank(c, "andor");
  const auto labels = circuit_labels(h, c);
  for (auto kind : {PatternKind::KCrown, PatternKind::CStar}) {
    PatternSpec spec{kind, k};
    auto match = find_fixed_pattern(h, spec);
    r.stats["patterns_tried"] += 1;
    if (!match) continue;
    const auto gamma = canonical_forbidden_coloring(*match, h, &labels);
    if (pattern_certificate(r, c, h, match->edges(), gamma, spec.name())) {
      certify(r, c, opt);
      return r;
    }
  }
  not_found(r, "no " + std::to_string(k) + "-crown or C* present");
  return r;
}

SolveReport solve_one_intersect_maj_k(const Circuit& c, const SolveOptions& opt) {
  require_stretch(c);
  const int k = c.locality();
  if (!all_outputs(c, [&](const auto& f) { return is_maj(f, k); }))
    fail(Errc::Precondition, "grid solver needs every output MAJ_k of one arity");
  const auto h = build_hypergraph(c);
  if (!validate_structure(h).isLinear) fail(Errc::Precondition, "grid solver needs pairwise intersections <= 1");
  auto r = blank(c, "grid");
  PatternSpec spec{PatternKind::GridK, k};
  auto match = find_fixed_pattern(h, spec);
  if (!match) {
    not_found(r, "no " + std::to_string(k) + "x" + std::to_string(k) + " grid present");
    return r;
  }
  if (pattern_certificate(r, c, h, match->edges(), canonical_forbidden_coloring(*match, h), spec.name()))
    certify(r, c, opt);
  return r;
}

SolveReport solve_one_intersect_maj3(const Circuit& c, Strategy strategy, const SolveOptions& opt) {
  if (!all_outputs(c, [](const auto& f) { return is_maj(f, 3); }))
    fail(Errc::Precondition, "needs every output MAJ3");
  const auto h = build_hypergraph(c);
  if (!validate_structure(h).isLinear) fail(Errc::Precondition, "needs pairwise intersections <= 1");
  auto r = blank(c, strategy == Strategy::Wicket ? "wicket" : "xcycle");
  if (strategy == Strategy::Wicket) {
    auto match = find_fixed_pattern(h, PatternSpec{PatternKind::Wicket});
    if (!match) {
      not_found(r, "no wicket present");
      return r;
    }
    if (pattern_certificate(r, c, h, match->edges(), canonical_forbidden_coloring(*match, h), "wicket"))
      certify(r, c, opt);
    return r;
  }
  const auto labels = majority_labels(h);
  long nodes = 0;
  auto accept = [&](const LooseXCycle& x) {
    EdgeColoring gamma;
    try {
      gamma = canonical_forbidden_coloring(x);
    } catch (const Error&) {
      return false;
    }
    std::vector<int> es;
    for (auto [e, col] : gamma) es.push_back(e);
    const auto v = decide_phi_colorable(h, labels, es, gamma, Method::Propagation, x.chiVertex);
    nodes += v.nodes;
    return !v.colorable;
  };
  XCycleSearchStats st;
  auto x = find_loose_x_cycle(h, accept, &st);
  tally_stats(r, st);
  r.stats["propagation_nodes"] += nodes;
  if (!x) {
    not_found(r, validate_structure(h).isConnected ? "no x-cycle with an unrealizable coloring"
                                                   : "no x-cycle found; extract a heavy cluster first");
    return r;
  }
  const auto gamma = canonical_forbidden_coloring(*x);
  std::vector<int> es;
  for (auto [e, col] : gamma) es.push_back(e);
  const std::string name = std::string("x-cycle (") + (x->simple ? "simple" : "walk") + ", length " +
                           std::to_string(x->cycleEdges.size()) + ")";
  if (pattern_certificate(r, c, h, es, gamma, name, x->chiVertex)) {
    r.pattern = "x-cycle";
    std::string line = "x-cycle through vertex " + std::to_string(x->chiVertex) + ": outs";
    for (int e : x->cycleEdges) line += " " + std::to_string(h.label[e]);
    r.explain.push_back(line);
    certify(r, c, opt);
  }
  return r;
}

// ---------------------------------------------------------------------------------------------

SolveReport solve_mon_nc03(const Circuit& c, const SolveOptions& opt) {
  require_stretch(c);
  auto r = blank(c, "mon-nc03");
  auto add = [&](const std::vector<std::string>& lines) { r.explain.insert(r.explain.end(), lines.begin(), lines.end()); };
  auto finish_early = [&](const ReductionTrace& t, const PartialOutput& y, const std::string& how) {
    r.trace = t;
    r.certificate = backsubstitute(t, y);
    r.pattern = "reduction";
    r.provenance.push_back(how);
    certify(r, c, opt);
    return r;
  };

  auto s1 = reduce_mon3_to_maj3(c);
  add(s1.explain);
  long mon3Steps = 0;
  for (const auto& s : s1.trace.steps) mon3Steps += s.kind == TraceStep::Kind::SetOutput;
  r.stats["mon3_steps"] = mon3Steps;
  for (const auto& s : s1.trace.steps)
    if (s.kind == TraceStep::Kind::SetOutput) r.provenance.push_back("monotone " + s.note);
  if (s1.certificate) return finish_early(s1.trace, *s1.certificate, "constant flip");

  const auto cluster = find_heavy_cluster(s1.circuit);
  auto s2 = restrict_to_cluster(s1.circuit, cluster);
  add(s2.explain);
  auto trace = compose(s1.trace, s2.trace);
  r.provenance.push_back("cluster " + std::to_string(cluster.outputs.size()) + "/" +
                         std::to_string(cluster.inputs.size()));

  TwoToOneStats st;
  auto s3 = reduce_two_to_one_intersect(s2.circuit, &st);
  add(s3.explain);
  r.stats["two_to_one_steps"] = st.steps;
  r.stats["max_alive_roots"] = st.maxAliveRoots;
  r.stats["max_branches"] = st.maxBranches;
  r.stats["branch_growth_steps"] = st.deferred;
  if (s3.certificate) {
    for (const auto& s : s3.trace.steps)
      if (s.kind == TraceStep::Kind::SetOutput && !s.note.empty()) r.provenance.push_back(s.note);
    return finish_early(compose(trace, s3.trace), *s3.certificate, "two-intersect elimination");
  }
  trace = compose(trace, s3.trace);

  auto inner = solve_one_intersect_maj3(s3.circuit, Strategy::XCycle, SolveOptions{opt.method, -1});
  for (auto& [k, v] : inner.stats) r.stats[k] += v;
  add(inner.explain);
  if (inner.certificate.empty()) {
    r.trace = trace;
    r.status = SolveStatus::NotFound;
    r.reason = "pipeline reached the one-intersect stage without a certificate: " + inner.reason;
    return r;
  }
  r.trace = trace;
  r.certificate = backsubstitute(trace, inner.certificate);
  r.pattern = inner.pattern;
  for (int e : inner.edges) r.edges.push_back(trace.outMap[e]);
  for (auto [e, col] : inner.coloring) r.coloring.emplace_back(trace.outMap[e], col);
  std::sort(r.coloring.begin(), r.coloring.end());
  r.provenance.insert(r.provenance.end(), inner.provenance.begin(), inner.provenance.end());
  certify(r, c, opt);
  return r;
}

SolveReport solve_depth1(const Circuit& c, const SolveOptions& opt) {
  auto r = blank(c, "depth1");
  r.certificate = solve_depth1_monotone(c, &r.explain);
  r.pattern = "reduction";
  r.provenance.push_back("depth-1 elimination");
  certify(r, c, opt);
  return r;
}

// ---------------------------------------------------------------------------------------------

namespace {

SolveReport route(const Circuit& c, const ProblemClass& pc, const SolveOptions& opt) {
  switch (opt.method) {
    case Strategy::XCycle:
    case Strategy::Wicket: return solve_one_intersect_maj3(c, opt.method, opt);
    case Strategy::Grid: return solve_one_intersect_maj_k(c, opt);
    case Strategy::NC02: return solve_nc02(c, opt);
    case Strategy::AndOr: return solve_andor_k(c, opt);
    case Strategy::Depth1: return solve_depth1(c, opt);
    case Strategy::Auto: break;
  }
  switch (pc.tag) {
    case Tag::NC02: return solve_nc02(c, opt);
    case Tag::AndOrK: {
      auto r = solve_andor_k(c, opt);
      if (r.status != SolveStatus::NotFound) return r;
      // Depth-1 elimination always succeeds on AND/OR circuits with m > n.
      auto d = solve_depth1(c, opt);
      d.provenance.insert(d.provenance.begin(), "no crown or C*");
      for (auto& [k, v] : r.stats) d.stats[k] += v;
      return d;
    }
    case Tag::Depth1Monotone: return solve_depth1(c, opt);
    case Tag::OneIntersectMajK: return solve_one_intersect_maj_k(c, opt);
    case Tag::Maj3:
    case Tag::MonNC03: {
      if (all_outputs(c, [](const auto& f) { return table_is_monotone(f.table, f.arity()); }))
        return solve_mon_nc03(c, opt);
      auto mono = demorgan_monotonize(c);
      auto r = solve_mon_nc03(mono.circuit, SolveOptions{opt.method, -1});
      r.n = c.n;
      r.trace = compose(mono.trace, r.trace);
      r.provenance.insert(r.provenance.begin(), "monotonized");
      r.explain.insert(r.explain.begin(), mono.explain.begin(), mono.explain.end());
      r.verified = false;
      if (!r.certificate.empty()) certify(r, c, opt);
      return r;
    }
    case Tag::Unsupported: break;
  }
  auto r = blank(c, "none");
  r.status = SolveStatus::Unsupported;
  r.reason = pc.reason;
  return r;
}

}  // namespace

SolveReport dispatch_solve(const Circuit& c, const SolveOptions& opt) {
  require_stretch(c);
  const auto t0 = std::chrono::steady_clock::now();
  const auto pc = classify_problem(c);
  auto r = route(c, pc, opt);
  r.cls = pc;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------------------------

namespace {

const char* step_kind(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::SetOutput: return "set-output";
    case TraceStep::Kind::SetInput: return "set-input";
    case TraceStep::Kind::IdentifyInputs: return "identify-inputs";
    case TraceStep::Kind::DropOutput: return "drop-output";
    case TraceStep::Kind::MonotonizeMap: return "monotonize-map";
  }
  return "?";
}

}  // namespace

std::string report_to_json(const SolveReport& r) {
  using nlohmann::json;
  json j;
  j["status"] = status_name(r.status);
  j["class"] = r.cls.name();
  j["solver"] = r.solver;
  j["n"] = r.n;
  j["m"] = r.m;
  j["certificate"] = r.certificate;
  j["verified"] = r.verified;
  j["pattern"] = r.pattern;
  j["edges"] = r.edges;
  json col = json::array();
  for (auto [e, c] : r.coloring) col.push_back({{"output", e}, {"color", std::string(1, color_char(c))}});
  j["coloring"] = col;
  j["provenance"] = r.provenance;
  json steps = json::array();
  for (const auto& s : r.trace.steps) {
    json o{{"kind", step_kind(s.kind)}, {"index", s.index}};
    if (s.value >= 0) o["value"] = s.value;
    if (s.kind == TraceStep::Kind::IdentifyInputs) {
      o["root"] = s.root;
      o["negated"] = s.sign == 1;
    }
    if (s.kind == TraceStep::Kind::MonotonizeMap) {
      o["pos"] = s.pos;
      o["neg"] = s.neg;
    }
    if (!s.note.empty()) o["note"] = s.note;
    steps.push_back(std::move(o));
  }
  j["trace"] = {{"source_m", r.trace.sourceM}, {"out_map", r.trace.outMap}, {"steps", steps}};
  j["stats"] = r.stats;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j.dump(2);
}

std::string report_explain(const SolveReport& r) {
  std::string s = "class " + r.cls.name() + ", solver " + r.solver + "\n";
  for (const auto& line : r.explain) s += "  " + line + "\n";
  s += "result " + status_name(r.status);
  if (!r.certificate.empty()) s += " y=" + r.certificate;
  if (!r.reason.empty()) s += " (" + r.reason + ")";
  return s + "\n";
}

}  // namespace avoid
