#include "hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace avoid {

Hypergraph build_hypergraph(const Circuit& c) {
  Hypergraph h;
  h.n_vertices = c.n;
  for (int i = 0; i < c.m(); ++i) {
    auto e = c.outputs[i].inputs;
    std::sort(e.begin(), e.end());
    h.edges.push_back(std::move(e));
    h.label.push_back(i);
  }
  return h;
}

Hypergraph make_hypergraph(int n_vertices, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.n_vertices = n_vertices;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    for (int v : e)
      if (v < 0 || v >= n_vertices) fail(Errc::Structure, "edge vertex out of range");
    h.label.push_back(static_cast<int>(h.edges.size()));
    h.edges.push_back(std::move(e));
  }
  return h;
}

Hypergraph sub_hypergraph(const Hypergraph& h, const std::vector<int>& edgeIdx) {
  Hypergraph s;
  s.n_vertices = h.n_vertices;
  for (int e : edgeIdx) {
    s.edges.push_back(h.edges[e]);
    s.label.push_back(h.label[e]);
  }
  return s;
}

std::vector<int> vertex_degrees(const Hypergraph& h) {
  std::vector<int> d(h.n_vertices, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++d[v];
  return d;
}

int covered_vertices(const Hypergraph& h) {
  auto d = vertex_degrees(h);
  return static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x > 0; }));
}

std::vector<std::vector<int>> incidence(const Hypergraph& h) {
  std::vector<std::vector<int>> inc(h.n_vertices);
  for (int i = 0; i < h.m(); ++i)
    for (int v : h.edges[i]) inc[v].push_back(i);
  return inc;
}

namespace {

int shared_count(const std::vector<int>& a, const std::vector<int>& b, int* last = nullptr) {
  int c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++c;
      if (last) *last = *i;
      ++i;
      ++j;
    }
  }
  return c;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

StructureReport validate_structure(const Hypergraph& h) {
  StructureReport r;
  r.isLinear = true;
  for (int i = 0; i < h.m() && r.isLinear; ++i)
    for (int j = i + 1; j < h.m(); ++j)
      if (shared_count(h.edges[i], h.edges[j]) > 1) {
        r.isLinear = false;
        break;
      }
  r.uniformK = h.m() ? static_cast<int>(h.edges[0].size()) : 0;
  for (const auto& e : h.edges)
    if (static_cast<int>(e.size()) != r.uniformK) r.uniformK = 0;
  Dsu d(h.n_vertices);
  for (const auto& e : h.edges)
    for (std::size_t t = 1; t < e.size(); ++t) d.unite(e[0], e[t]);
  std::set<int> roots;
  for (const auto& e : h.edges)
    for (int v : e) roots.insert(d.find(v));
  r.isConnected = roots.size() <= 1;
  return r;
}

BlockGraph build_block_graph(const Hypergraph& h) {
  if (!validate_structure(h).isLinear) fail(Errc::Structure, "block graph needs a linear hypergraph");
  BlockGraph g;
  g.nodes = h.m();
  g.adj.assign(h.m(), {});
  const auto inc = incidence(h);
  for (int v = 0; v < h.n_vertices; ++v)
    for (std::size_t a = 0; a < inc[v].size(); ++a)
      for (std::size_t b = a + 1; b < inc[v].size(); ++b) {
        const int f = inc[v][a];
        const int e = inc[v][b];
        g.edges.emplace_back(f, e);
        g.sharedVertex[{f, e}] = v;
      }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto [f, e] : g.edges) {
    g.adj[f].push_back(e);
    g.adj[e].push_back(f);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

// ---------------------------------------------------------------------------------------------
// fixed patterns

std::string PatternSpec::name() const {
  switch (kind) {
    case PatternKind::Wicket: return "wicket";
    case PatternKind::GridK: return "grid:" + std::to_string(k);
    case PatternKind::WeakFano: return "weak-fano";
    case PatternKind::KCage: return "cage:" + std::to_string(k);
    case PatternKind::KCrown: return "crown:" + std::to_string(k);
    case PatternKind::CStar: return "cstar:" + std::to_string(k);
    case PatternKind::OddButterfly: return "butterfly:" + std::to_string(k) + "," + std::to_string(l);
    case PatternKind::OddKite: {
      std::string s = "kite:" + std::to_string(k) + "," + std::to_string(l);
      if (i != 2 || j != 2) s += "," + std::to_string(i) + "," + std::to_string(j);
      return s;
    }
  }
  return "?";
}

PatternSpec parse_pattern_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(Errc::Kind, "bad pattern parameter '" + tok + "'");
      }
    }
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) fail(Errc::Kind, "wrong parameter count for " + head);
  };
  PatternSpec s;
  if (head == "wicket") {
    need(0, 0);
    s.kind = PatternKind::Wicket;
  } else if (head == "grid") {
    need(1, 1);
    s = {PatternKind::GridK, args[0]};
    if (s.k < 2 || s.k > kMaxUniformity) fail(Errc::Kind, "grid size out of range");
  } else if (head == "weak-fano") {
    need(0, 0);
    s.kind = PatternKind::WeakFano;
  } else if (head == "cage" || head == "crown" || head == "cstar") {
    need(1, 1);
    s.kind = head == "cage" ? PatternKind::KCage : head == "crown" ? PatternKind::KCrown : PatternKind::CStar;
    s.k = args[0];
    if (s.k < 3 || s.k > kMaxUniformity) fail(Errc::Kind, head + " size out of range");
  } else if (head == "butterfly") {
    need(2, 2);
    s = {PatternKind::OddButterfly, args[0], args[1]};
    if (s.k < 3 || s.l < 3 || s.k % 2 == 0 || s.l % 2 == 0) fail(Errc::Kind, "butterfly cycles must be odd >= 3");
  } else if (head == "kite") {
    need(2, 4);
    s = {PatternKind::OddKite, args[0], args[1]};
    if (args.size() == 4) {
      s.i = args[2];
      s.j = args[3];
    } else if (args.size() != 2) {
      fail(Errc::Kind, "kite takes k,l or k,l,i,j");
    }
    if (s.k < 3 || s.l < 3 || s.k % 2 == 0 || s.l % 2 == 0) fail(Errc::Kind, "kite cycles must be odd >= 3");
    if (s.i < 2 || s.i > s.k - 1 || s.j < 2 || s.j > s.l - 1 || (s.i - s.j) % 2 != 0)
      fail(Errc::Kind, "kite needs 2<=i<=k-1, 2<=j<=l-1, i = j mod 2");
  } else {
    fail(Errc::Kind, "unknown pattern kind '" + head + "'");
  }
  return s;
}

namespace {

struct Builder {
  PatternTemplate t;
  int vertex(const std::string& role) {
    t.vertexRoles.push_back(role);
    return t.n_vertices++;
  }
  void edge(const std::string& role, std::vector<int> vs) {
    t.edgeRoles.push_back(role);
    t.edges.push_back(std::move(vs));
  }
};

std::string rc(int r, int c) { return "v" + std::to_string(r) + "_" + std::to_string(c); }

}  // namespace

PatternTemplate pattern_template(const PatternSpec& s) {
  Builder b;
  switch (s.kind) {
    case PatternKind::Wicket:
    case PatternKind::GridK: {
      const int k = s.kind == PatternKind::Wicket ? 3 : s.k;
      std::vector<std::vector<int>> v(k, std::vector<int>(k));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) v[r][c] = b.vertex(rc(r + 1, c + 1));
      auto row = [&](int r) { return v[r]; };
      auto col = [&](int c) {
        std::vector<int> out;
        for (int r = 0; r < k; ++r) out.push_back(v[r][c]);
        return out;
      };
      b.edge("row1", row(0));
      if (s.kind == PatternKind::Wicket) {
        b.edge("col1", col(0));
        b.edge("col3", col(2));
      } else {
        for (int c = 0; c < k; ++c) b.edge("col" + std::to_string(c + 1), col(c));
      }
      for (int r = 1; r < k; ++r) b.edge("row" + std::to_string(r + 1), row(r));
      break;
    }
    case PatternKind::WeakFano: {
      std::vector<int> p(8);
      for (int i = 1; i <= 7; ++i) p[i] = b.vertex("p" + std::to_string(i));
      const int lines[6][3] = {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {3, 6, 7}, {2, 5, 7}, {2, 4, 6}};
      for (const auto& L : lines)
        b.edge("e" + std::to_string(L[0]) + std::to_string(L[1]) + std::to_string(L[2]), {p[L[0]], p[L[1]], p[L[2]]});
      break;
    }
    case PatternKind::KCage: {
      const int k = s.k;
      const int w = b.vertex("w");
      std::vector<std::vector<int>> v(k - 1, std::vector<int>(k));
      for (int r = 0; r < k - 1; ++r)
        for (int c = 0; c < k; ++c) v[r][c] = b.vertex(rc(r + 1, c + 1));
      auto spoke = [&](int c) {
        std::vector<int> out{w};
        for (int r = 0; r < k - 1; ++r) out.push_back(v[r][c]);
        return out;
      };
      b.edge("spoke1", spoke(0));
      for (int r = 0; r < k - 1; ++r) b.edge("rung" + std::to_string(r + 1), v[r]);
      for (int c = 1; c < k; ++c) b.edge("spoke" + std::to_string(c + 1), spoke(c));
      break;
    }
    case PatternKind::KCrown:
    case PatternKind::CStar: {
      const int k = s.k;
      std::vector<int> hub;
      for (int i = 1; i <= k; ++i) hub.push_back(b.vertex("h" + std::to_string(i)));
      const bool star = s.kind == PatternKind::CStar;
      const int common = star ? b.vertex("v") : -1;
      b.edge("e0", hub);
      for (int i = 1; i <= k; ++i) {
        std::vector<int> e{hub[i - 1]};
        const bool throughCommon = star && i <= k - 2;
        if (throughCommon) e.push_back(common);
        const int privates = throughCommon ? k - 2 : k - 1;
        for (int p = 1; p <= privates; ++p) e.push_back(b.vertex("s" + std::to_string(i) + "_" + std::to_string(p)));
        b.edge("e" + std::to_string(i), e);
      }
      break;
    }
    case PatternKind::OddButterfly: {
      const int k = s.k, l = s.l;
      std::vector<int> u(k + 2), v(l + 2);
      u[1] = b.vertex("u1");
      for (int i = 2; i <= k; ++i) u[i] = b.vertex("u" + std::to_string(i));
      u[k + 1] = u[1];
      v[1] = u[1];
      for (int i = 2; i <= l; ++i) v[i] = b.vertex("v" + std::to_string(i));
      v[l + 1] = u[1];
      for (int i = 1; i <= k; ++i) b.edge("e" + std::to_string(i), {u[i], b.vertex("x" + std::to_string(i)), u[i + 1]});
      for (int i = 1; i <= l; ++i) b.edge("f" + std::to_string(i), {v[i], b.vertex("y" + std::to_string(i)), v[i + 1]});
      break;
    }
    case PatternKind::OddKite: {
      const int k = s.k, l = s.l;
      const int u0 = b.vertex("u0");
      std::vector<int> u(k + 1), v(l + 1);
      for (int i = 1; i <= k; ++i) u[i] = b.vertex("u" + std::to_string(i));
      v[1] = u[1];
      v[l] = u[k];
      for (int j = 2; j <= l - 1; ++j) v[j] = b.vertex("v" + std::to_string(j));
      for (int i = 1; i <= k - 1; ++i)
        b.edge("e" + std::to_string(i), {u[i], b.vertex("x" + std::to_string(i)), u[i + 1]});
      b.edge("e" + std::to_string(k), {u0, u[1], u[k]});
      b.edge("e'", {u0, u[s.i], v[s.j]});
      for (int j = 1; j <= l - 1; ++j)
        b.edge("f" + std::to_string(j), {v[j], b.vertex("y" + std::to_string(j)), v[j + 1]});
      break;
    }
  }
  for (auto& e : b.t.edges) std::sort(e.begin(), e.end());
  return b.t;
}

std::vector<int> PatternMatch::edges() const {
  std::vector<int> out;
  for (const auto& [role, e] : edgeRoles) out.push_back(e);
  return out;
}

int PatternMatch::edge(const std::string& role) const {
  for (const auto& [r, e] : edgeRoles)
    if (r == role) return e;
  fail(Errc::Kind, "no edge role " + role);
}

int PatternMatch::vertex(const std::string& role) const {
  for (const auto& [r, v] : vertexRoles)
    if (r == role) return v;
  fail(Errc::Kind, "no vertex role " + role);
}

namespace {

class PatternSearch {
 public:
  PatternSearch(const Hypergraph& h, PatternTemplate t) : h_(h), t_(std::move(t)), inc_(incidence(h)) {
    const int P = static_cast<int>(t_.edges.size());
    patternSig_.resize(P + 1);
    for (int lvl = 1; lvl <= P; ++lvl) {
      std::vector<std::uint64_t> sig(t_.n_vertices, 0);
      for (int e = 0; e < lvl; ++e)
        for (int v : t_.edges[e]) sig[v] |= std::uint64_t{1} << e;
      for (auto x : sig)
        if (x) patternSig_[lvl].push_back(x);
      std::sort(patternSig_[lvl].begin(), patternSig_[lvl].end());
    }
    anchor_.assign(P, -1);
    for (int e = 1; e < P; ++e)
      for (int prev = 0; prev < e && anchor_[e] < 0; ++prev)
        if (shared_count(t_.edges[e], t_.edges[prev]) > 0) anchor_[e] = prev;
  }

  std::optional<PatternMatch> run(const PatternSpec& spec) {
    if (h_.m() < static_cast<int>(t_.edges.size())) return std::nullopt;
    chosen_.clear();
    used_.assign(h_.m(), false);
    if (!dfs()) return std::nullopt;
    PatternMatch m;
    m.spec = spec;
    for (std::size_t e = 0; e < chosen_.size(); ++e) m.edgeRoles.emplace_back(t_.edgeRoles[e], chosen_[e]);
    // pair pattern vertices with hypergraph vertices inside each signature class
    std::map<std::uint64_t, std::vector<int>> pv, hv;
    for (int v = 0; v < t_.n_vertices; ++v) {
      std::uint64_t s = 0;
      for (std::size_t e = 0; e < t_.edges.size(); ++e)
        if (std::binary_search(t_.edges[e].begin(), t_.edges[e].end(), v)) s |= std::uint64_t{1} << e;
      pv[s].push_back(v);
    }
    for (const auto& [x, s] : hostSignatures()) hv[s].push_back(x);
    std::vector<int> image(t_.n_vertices, -1);
    for (auto& [s, list] : pv) {
      auto& targets = hv[s];
      std::sort(targets.begin(), targets.end());
      for (std::size_t i = 0; i < list.size(); ++i) image[list[i]] = targets[i];
    }
    for (int v = 0; v < t_.n_vertices; ++v) m.vertexRoles.emplace_back(t_.vertexRoles[v], image[v]);
    return m;
  }

 private:
  std::map<int, std::uint64_t> hostSignatures() const {
    std::map<int, std::uint64_t> sig;
    for (std::size_t e = 0; e < chosen_.size(); ++e)
      for (int v : h_.edges[chosen_[e]]) sig[v] |= std::uint64_t{1} << e;
    return sig;
  }

  bool feasible() const {
    std::vector<std::uint64_t> got;
    for (const auto& [v, s] : hostSignatures()) got.push_back(s);
    std::sort(got.begin(), got.end());
    return got == patternSig_[chosen_.size()];
  }

  std::vector<int> candidates(int lvl) const {
    if (anchor_[lvl] < 0) {
      std::vector<int> all(h_.m());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    std::vector<int> out;
    for (int v : h_.edges[chosen_[anchor_[lvl]]]) out.insert(out.end(), inc_[v].begin(), inc_[v].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool dfs() {
    const int lvl = static_cast<int>(chosen_.size());
    if (lvl == static_cast<int>(t_.edges.size())) return true;
    for (int e : candidates(lvl)) {
      if (used_[e] || h_.edges[e].size() != t_.edges[lvl].size()) continue;
      chosen_.push_back(e);
      used_[e] = true;
      if (feasible() && dfs()) return true;
      used_[e] = false;
      chosen_.pop_back();
    }
    return false;
  }

  const Hypergraph& h_;
  PatternTemplate t_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::vector<std::uint64_t>> patternSig_;
  std::vector<int> anchor_;
  std::vector<int> chosen_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<PatternMatch> find_fixed_pattern(const Hypergraph& h, const PatternSpec& spec) {
  auto t = pattern_template(spec);
  if (t.edges.size() > 64) fail(Errc::Kind, "pattern too large");
  return PatternSearch(h, std::move(t)).run(spec);
}

bool verify_pattern_match(const Hypergraph& h, const PatternMatch& match) {
  const auto t = pattern_template(match.spec);
  if (match.edgeRoles.size() != t.edges.size() || match.vertexRoles.size() != static_cast<std::size_t>(t.n_vertices))
    return false;
  std::vector<int> image(t.n_vertices);
  std::set<int> seenV, seenE;
  for (int v = 0; v < t.n_vertices; ++v) {
    if (match.vertexRoles[v].first != t.vertexRoles[v]) return false;
    image[v] = match.vertexRoles[v].second;
    if (image[v] < 0 || image[v] >= h.n_vertices || !seenV.insert(image[v]).second) return false;
  }
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (match.edgeRoles[e].first != t.edgeRoles[e]) return false;
    const int he = match.edgeRoles[e].second;
    if (he < 0 || he >= h.m() || !seenE.insert(he).second) return false;
    std::vector<int> mapped;
    for (int v : t.edges[e]) mapped.push_back(image[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != h.edges[he]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// loose X-cycles

XCycleCheck verify_x_cycle(const Hypergraph& h, const LooseXCycle& x) {
  auto bad = [](std::string why) { return XCycleCheck{false, std::move(why)}; };
  const int m = h.m();
  auto inEdge = [&](int e, int v) { return std::binary_search(h.edges[e].begin(), h.edges[e].end(), v); };
  if (x.chiEdge < 0 || x.chiEdge >= m || x.chiEdge2 < 0 || x.chiEdge2 >= m || x.chiEdge == x.chiEdge2)
    return bad("chi pair out of range");
  int w = -1;
  if (shared_count(h.edges[x.chiEdge], h.edges[x.chiEdge2], &w) != 1 || w != x.chiVertex)
    return bad("chi pair must meet exactly at the chi vertex");
  auto checkWalk = [&](const std::vector<int>& es, const std::vector<int>& vs) -> std::string {
    if (es.size() < 2 || es.size() % 2 != 0) return "walk must have an even positive number of hyperedges";
    if (vs.size() != es.size() + 1) return "walk vertex/edge counts disagree";
    if (!inEdge(x.chiEdge, vs.front()) || vs.front() == w) return "walk must start in the first chi edge";
    if (!inEdge(x.chiEdge2, vs.back()) || vs.back() == w) return "walk must end in the second chi edge";
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (es[i] < 0 || es[i] >= m) return "walk edge out of range";
      if (es[i] == x.chiEdge || es[i] == x.chiEdge2) return "walk reuses a chi edge";
      if (!inEdge(es[i], vs[i]) || !inEdge(es[i], vs[i + 1]) || vs[i] == vs[i + 1]) return "walk is not a Berge walk";
      if (i > 0 && es[i] == es[i - 1]) return "walk backtracks";
    }
    return {};
  };
  if (auto why = checkWalk(x.walk1Edges, x.walk1Vertices); !why.empty()) return bad("walk1: " + why);
  if (auto why = checkWalk(x.walk2Edges, x.walk2Vertices); !why.empty()) return bad("walk2: " + why);
  if (x.walk1Vertices.front() == x.walk2Vertices.front() || x.walk1Vertices.back() == x.walk2Vertices.back())
    return bad("walks must leave and enter the chi edges at different vertices");
  std::vector<int> cyc{x.chiEdge};
  cyc.insert(cyc.end(), x.walk1Edges.begin(), x.walk1Edges.end());
  cyc.push_back(x.chiEdge2);
  cyc.insert(cyc.end(), x.walk2Edges.rbegin(), x.walk2Edges.rend());
  if (cyc != x.cycleEdges || x.parity.size() != cyc.size()) return bad("cycle order mismatch");
  std::map<int, int> color;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (x.parity[i] != static_cast<int>(i % 2)) return bad("parity does not alternate");
    auto [it, fresh] = color.emplace(cyc[i], x.parity[i]);
    if (!fresh && it->second != x.parity[i]) return bad("edge repeated with both parities");
  }
  return {true, {}};
}

int x_cycle_counting_margin(const Hypergraph& h, const LooseXCycle& x) {
  std::map<int, int> color;
  for (std::size_t i = 0; i < x.cycleEdges.size(); ++i) color.emplace(x.cycleEdges[i], x.parity[i]);
  std::map<int, std::pair<int, int>> deg;
  for (auto [e, c] : color)
    for (int v : h.edges[e]) (c ? deg[v].second : deg[v].first)++;
  int sum = 0;
  for (auto& [v, d] : deg) sum += std::min(d.first, d.second);
  return sum - static_cast<int>(color.size());
}

namespace {

struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool simple = true;
};

// BFS over (node, parity of hyperedges entered) in the incidence graph.
std::optional<Path> parity_bfs(const Hypergraph& h, const std::vector<std::vector<int>>& inc, int src, int dst,
                               const std::vector<char>& bannedE, const std::vector<char>& bannedV) {
  const int n = h.n_vertices;
  const int N = n + h.m();
  auto id = [&](int node, int p) { return node * 2 + p; };
  std::vector<int> prev(2 * N, -2);
  std::deque<int> q;
  prev[id(src, 0)] = -1;
  q.push_back(id(src, 0));
  int goal = -1;
  while (!q.empty()) {
    const int s = q.front();
    q.pop_front();
    const int node = s / 2, p = s % 2;
    if (node == dst && p == 0) {
      goal = s;
      break;
    }
    if (node < n) {
      for (int e : inc[node]) {
        if (bannedE[e]) continue;
        const int t = id(n + e, p ^ 1);
        if (prev[t] == -2) {
          prev[t] = s;
          q.push_back(t);
        }
      }
    } else {
      for (int v : h.edges[node - n]) {
        if (bannedV[v]) continue;
        const int t = id(v, p);
        if (prev[t] == -2) {
          prev[t] = s;
          q.push_back(t);
        }
      }
    }
  }
  if (goal < 0) return std::nullopt;
  std::vector<int> nodes;
  for (int s = goal; s != -1; s = prev[s]) nodes.push_back(s / 2);
  std::reverse(nodes.begin(), nodes.end());
  Path path;
  std::set<int> seen(nodes.begin(), nodes.end());
  path.simple = seen.size() == nodes.size();
  for (int node : nodes) (node < n ? path.vertices : path.edges).push_back(node < n ? node : node - n);
  for (std::size_t i = 1; i < path.edges.size(); ++i)
    if (path.edges[i] == path.edges[i - 1]) return std::nullopt;
  return path;
}

LooseXCycle assemble(int f, int f2, int w, const Path& p1, const Path& p2) {
  LooseXCycle x;
  x.chiEdge = f;
  x.chiEdge2 = f2;
  x.chiVertex = w;
  x.walk1Edges = p1.edges;
  x.walk1Vertices = p1.vertices;
  x.walk2Edges = p2.edges;
  x.walk2Vertices = p2.vertices;
  x.cycleEdges.push_back(f);
  x.cycleEdges.insert(x.cycleEdges.end(), p1.edges.begin(), p1.edges.end());
  x.cycleEdges.push_back(f2);
  x.cycleEdges.insert(x.cycleEdges.end(), p2.edges.rbegin(), p2.edges.rend());
  for (std::size_t i = 0; i < x.cycleEdges.size(); ++i) x.parity.push_back(static_cast<int>(i % 2));
  x.simple = p1.simple && p2.simple;
  return x;
}

}  // namespace

std::optional<LooseXCycle> find_loose_x_cycle(const Hypergraph& h,
                                              const std::function<bool(const LooseXCycle&)>& accept,
                                              XCycleSearchStats* stats) {
  const auto rep = validate_structure(h);
  if (!rep.isLinear || rep.uniformK != 3) return std::nullopt;
  XCycleSearchStats local;
  XCycleSearchStats& st = stats ? *stats : local;
  const auto inc = incidence(h);
  const int m = h.m();
  auto acceptable = [&](const LooseXCycle& x) {
    if (!verify_x_cycle(h, x).ok) return false;
    if (accept) return accept(x);
    return x_cycle_counting_margin(h, x) > 0;
  };
  // phase 0: internally disjoint paths (theta); phase 1: walks, kept only if consistent
  for (int phase = 0; phase < 2; ++phase) {
    for (int f = 0; f < m; ++f)
      for (int f2 = f + 1; f2 < m; ++f2) {
        int w = -1;
        if (shared_count(h.edges[f], h.edges[f2], &w) != 1) continue;
        if (phase == 0) ++st.chiPairs;
        std::vector<int> A, B;
        for (int v : h.edges[f])
          if (v != w) A.push_back(v);
        for (int v : h.edges[f2])
          if (v != w) B.push_back(v);
        const std::pair<int, int> orders[4][2] = {{{A[0], B[0]}, {A[1], B[1]}},
                                                  {{A[1], B[1]}, {A[0], B[0]}},
                                                  {{A[0], B[1]}, {A[1], B[0]}},
                                                  {{A[1], B[0]}, {A[0], B[1]}}};
        for (const auto& ord : orders) {
          const auto [s1, t1] = ord[0];
          const auto [s2, t2] = ord[1];
          std::vector<char> bannedE(m, 0), bannedV(h.n_vertices, 0);
          bannedE[f] = bannedE[f2] = 1;
          bannedV[w] = 1;
          if (phase == 0) bannedV[s2] = bannedV[t2] = 1;
          ++st.bfsRuns;
          auto p1 = parity_bfs(h, inc, s1, t1, bannedE, bannedV);
          if (!p1 || (phase == 0 && !p1->simple)) continue;
          if (phase == 0) {
            bannedV[s2] = bannedV[t2] = 0;
            for (int e : p1->edges) bannedE[e] = 1;
            for (int v : p1->vertices) bannedV[v] = 1;
          }
          ++st.bfsRuns;
          auto p2 = parity_bfs(h, inc, s2, t2, bannedE, bannedV);
          if (!p2 || (phase == 0 && !p2->simple)) continue;
          auto x = assemble(f, f2, w, *p1, *p2);
          if (acceptable(x)) return x;
          ++st.rejected;
        }
      }
  }
  return std::nullopt;
}

std::string hypergraph_to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << "hypergraph n=" << h.n_vertices << " m=" << h.m() << "\n";
  for (int i = 0; i < h.m(); ++i) {
    os << "edge " << i << " (out " << h.label[i] << "):";
    for (int v : h.edges[i]) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace avoid
