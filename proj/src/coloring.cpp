#include "coloring.hpp"

#include <algorithm>

#include "error.hpp"

namespace avoid {

Color induced_edge_color(const OutputFunction& f, const VertexColoring& colors) {
  std::uint32_t a = 0;
  for (int t = 0; t < f.arity(); ++t) {
    auto it = colors.find(f.inputs[t]);
    if (it == colors.end()) fail(Errc::IncompleteAssignment, "vertex " + std::to_string(f.inputs[t]) + " has no color");
    if (delta(it->second)) a |= 1u << t;
  }
  return color_of(f.at(a));
}

std::vector<OutputFunction> majority_labels(const Hypergraph& h) {
  std::vector<OutputFunction> out;
  for (const auto& e : h.edges) out.push_back(OutputFunction{e, maj_table(static_cast<int>(e.size()))});
  return out;
}

std::vector<OutputFunction> circuit_labels(const Hypergraph& h, const Circuit& c) {
  std::vector<OutputFunction> out;
  for (int e = 0; e < h.m(); ++e) out.push_back(c.outputs[h.label[e]]);
  return out;
}

namespace {

struct Constraint {
  std::vector<int> vars;  // local vertex ids
  const Bits* table;
  std::uint8_t want;
};

class Dpll {
 public:
  Dpll(int nv, std::vector<Constraint> cons) : nv_(nv), cons_(std::move(cons)), watch_(nv) {
    for (std::size_t c = 0; c < cons_.size(); ++c)
      for (int v : cons_[c].vars) watch_[v].push_back(static_cast<int>(c));
  }

  std::optional<std::vector<int>> solve(int seed) {
    std::vector<int> val(nv_, -1);
    std::vector<int> all(cons_.size());
    for (std::size_t c = 0; c < cons_.size(); ++c) all[c] = static_cast<int>(c);
    if (!propagate(val, all)) return std::nullopt;
    return search(val, seed);
  }

  long nodes = 0;

 private:
  // Generalized arc consistency on each touched constraint until nothing changes.
  bool propagate(std::vector<int>& val, std::vector<int> queue) {
    std::vector<char> queued(cons_.size(), 0);
    for (int c : queue) queued[c] = 1;
    while (!queue.empty()) {
      const int c = queue.back();
      queue.pop_back();
      queued[c] = 0;
      const auto& k = cons_[c];
      std::vector<int> freePos;
      std::uint32_t base = 0;
      for (std::size_t t = 0; t < k.vars.size(); ++t) {
        if (val[k.vars[t]] < 0) freePos.push_back(static_cast<int>(t));
        else if (val[k.vars[t]] == 1) base |= 1u << t;
      }
      std::vector<int> seen0(freePos.size(), 0), seen1(freePos.size(), 0);
      bool any = false;
      for (std::uint32_t a = 0; a < (1u << freePos.size()); ++a) {
        std::uint32_t full = base;
        for (std::size_t s = 0; s < freePos.size(); ++s)
          if (a >> s & 1) full |= 1u << freePos[s];
        if ((*k.table)[full] != k.want) continue;
        any = true;
        for (std::size_t s = 0; s < freePos.size(); ++s) (a >> s & 1 ? seen1 : seen0)[s] = 1;
      }
      if (!any) return false;
      for (std::size_t s = 0; s < freePos.size(); ++s) {
        if (seen0[s] && seen1[s]) continue;
        const int v = k.vars[freePos[s]];
        val[v] = seen1[s] ? 1 : 0;
        for (int d : watch_[v])
          if (!queued[d]) {
            queued[d] = 1;
            queue.push_back(d);
          }
      }
    }
    return true;
  }

  std::optional<std::vector<int>> search(std::vector<int>& val, int prefer) {
    ++nodes;
    int pick = -1;
    if (prefer >= 0 && val[prefer] < 0) pick = prefer;
    for (int v = 0; v < nv_ && pick < 0; ++v)
      if (val[v] < 0) pick = v;
    if (pick < 0) return val;
    for (int b = 0; b < 2; ++b) {
      auto next = val;
      next[pick] = b;
      if (!propagate(next, watch_[pick])) continue;
      if (auto r = search(next, -1)) return r;
    }
    return std::nullopt;
  }

  int nv_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<int>> watch_;
};

}  // namespace

ColorabilityVerdict decide_phi_colorable(const Hypergraph& h, const std::vector<OutputFunction>& labels,
                                         const std::vector<int>& matchEdges, const EdgeColoring& gamma,
                                         Method method, int seedVertex) {
  std::vector<int> verts;
  for (int e : matchEdges) {
    if (e < 0 || e >= h.m()) fail(Errc::Structure, "match edge out of range");
    if (!gamma.count(e)) fail(Errc::IncompleteAssignment, "edge " + std::to_string(e) + " has no color");
    verts.insert(verts.end(), labels[e].inputs.begin(), labels[e].inputs.end());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  std::vector<Constraint> cons;
  for (int e : matchEdges) {
    Constraint k{{}, &labels[e].table, std::uint8_t(delta(gamma.at(e)))};
    for (int v : labels[e].inputs) k.vars.push_back(local(v));
    cons.push_back(std::move(k));
  }
  const int nv = static_cast<int>(verts.size());
  ColorabilityVerdict verdict;
  verdict.method = method;
  auto toWitness = [&](auto bitAt) {
    for (int i = 0; i < nv; ++i) verdict.witness[verts[i]] = color_of(bitAt(i));
  };
  if (method == Method::Exhaustive) {
    if (nv > kExhaustiveVertexLimit)
      fail(Errc::Method, "exhaustive decision limited to " + std::to_string(kExhaustiveVertexLimit) + " vertices, got " +
                             std::to_string(nv));
    for (std::uint32_t x = 0; x < (1u << nv); ++x) {
      ++verdict.nodes;
      bool ok = true;
      for (const auto& k : cons) {
        std::uint32_t a = 0;
        for (std::size_t t = 0; t < k.vars.size(); ++t) a |= (x >> k.vars[t] & 1) << t;
        if ((*k.table)[a] != k.want) {
          ok = false;
          break;
        }
      }
      if (ok) {
        verdict.colorable = true;
        toWitness([&](int i) { return (x >> i & 1) != 0; });
        return verdict;
      }
    }
    return verdict;
  }
  int seed = -1;
  if (seedVertex >= 0 && std::binary_search(verts.begin(), verts.end(), seedVertex)) seed = local(seedVertex);
  Dpll solver(nv, std::move(cons));
  auto sol = solver.solve(seed);
  verdict.nodes = solver.nodes;
  if (sol) {
    verdict.colorable = true;
    toWitness([&](int i) { return (*sol)[i] == 1; });
  }
  return verdict;
}

EdgeColoring canonical_forbidden_coloring(const PatternMatch& match, const Hypergraph& h,
                                          const std::vector<OutputFunction>* labels) {
  EdgeColoring g;
  const auto& s = match.spec;
  auto roleIndex = [](const std::string& role, const char* prefix) {
    return std::stoi(role.substr(std::string(prefix).size()));
  };
  switch (s.kind) {
    case PatternKind::Wicket:
    case PatternKind::GridK:
      for (const auto& [role, e] : match.edgeRoles) g[e] = role.rfind("row", 0) == 0 ? Color::R : Color::B;
      break;
    case PatternKind::WeakFano: {
      const int p1 = match.vertex("p1");
      for (const auto& [role, e] : match.edgeRoles)
        g[e] = std::binary_search(h.edges[e].begin(), h.edges[e].end(), p1) ? Color::R : Color::B;
      break;
    }
    case PatternKind::KCage:
      for (const auto& [role, e] : match.edgeRoles) g[e] = role.rfind("spoke", 0) == 0 ? Color::B : Color::R;
      break;
    case PatternKind::KCrown:
    case PatternKind::CStar: {
      // satellites pin their vertices; the hub gets the opposite of what those pins force
      std::map<int, int> forced;
      int hub = -1;
      for (const auto& [role, e] : match.edgeRoles) {
        if (role == "e0") {
          hub = e;
          continue;
        }
        bool isAnd = true;
        if (labels) {
          const auto& f = (*labels)[e];
          if (f.table == and_table(f.arity())) isAnd = true;
          else if (f.table == or_table(f.arity())) isAnd = false;
          else fail(Errc::Kind, "crown satellite " + std::to_string(e) + " is neither AND nor OR");
        }
        g[e] = isAnd ? Color::B : Color::R;
        for (int v : h.edges[e]) forced[v] = isAnd ? 1 : 0;
      }
      const OutputFunction hubFn = labels ? (*labels)[hub] : OutputFunction{h.edges[hub], and_table(static_cast<int>(h.edges[hub].size()))};
      std::uint32_t a = 0;
      for (int t = 0; t < hubFn.arity(); ++t)
        if (forced.at(hubFn.inputs[t])) a |= 1u << t;
      g[hub] = color_of(!hubFn.at(a));
      break;
    }
    case PatternKind::OddButterfly:
      for (const auto& [role, e] : match.edgeRoles) {
        const int i = roleIndex(role, "e");
        if (role[0] == 'e') g[e] = i % 2 == 0 ? Color::R : Color::B;
        else g[e] = i % 2 == 1 ? Color::R : Color::B;
      }
      break;
    case PatternKind::OddKite:
      for (const auto& [role, e] : match.edgeRoles) {
        if (role == "e'") {
          g[e] = s.i % 2 == 0 ? Color::B : Color::R;
        } else if (role[0] == 'e') {
          g[e] = roleIndex(role, "e") % 2 == 1 ? Color::B : Color::R;
        } else {
          g[e] = roleIndex(role, "f") % 2 == 1 ? Color::R : Color::B;
        }
      }
      break;
  }
  return g;
}

EdgeColoring canonical_forbidden_coloring(const LooseXCycle& x) {
  EdgeColoring g;
  for (std::size_t i = 0; i < x.cycleEdges.size(); ++i) {
    const Color c = color_of(x.parity[i] == 1);
    auto [it, fresh] = g.emplace(x.cycleEdges[i], c);
    if (!fresh && it->second != c) fail(Errc::Structure, "x-cycle edge repeated with both colors");
  }
  return g;
}

PartialOutput certificate_to_partial_output(int m, const Hypergraph& h, const EdgeColoring& gamma) {
  PartialOutput y(m, '*');
  for (auto [e, c] : gamma) y[h.label[e]] = delta(c) ? '1' : '0';
  return y;
}

}  // namespace avoid
