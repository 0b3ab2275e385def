#include "avoid/avoid.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "generate.hpp"
#include "hypergraph.hpp"
#include "json.hpp"
#include "solver.hpp"
#include "textio.hpp"

struct avoid_circuit {
  avoid::Circuit c;
};

struct avoid_report {
  avoid::SolveReport r;
};

namespace {

thread_local std::string g_error;

avoid_status code_of(avoid::Errc e) {
  using avoid::Errc;
  switch (e) {
    case Errc::Parse:
    case Errc::Kind: return AVOID_E_PARSE;
    case Errc::InputShape:
    case Errc::Trace:
    case Errc::IncompleteAssignment: return AVOID_E_SHAPE;
    case Errc::Stretch: return AVOID_E_STRETCH;
    case Errc::Precondition:
    case Errc::Method: return AVOID_E_PRECONDITION;
    case Errc::Infeasible: return AVOID_E_INFEASIBLE;
    case Errc::OracleLimit: return AVOID_E_ORACLE_LIMIT;
    case Errc::Structure: return AVOID_E_STRUCTURE;
    case Errc::Invariant: return AVOID_E_INTERNAL;
  }
  return AVOID_E_INTERNAL;
}

template <class F>
avoid_status guarded(F&& f) {
  try {
    f();
    g_error.clear();
    return AVOID_OK;
  } catch (const avoid::Error& e) {
    g_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return AVOID_E_INTERNAL;
  }
}

avoid_status null_arg(const char* what) {
  g_error = std::string("null argument: ") + what;
  return AVOID_E_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* avoid_last_error(void) { return g_error.c_str(); }
const char* avoid_version(void) { return "1.0.0"; }
void avoid_string_free(char* s) { delete[] s; }

avoid_status avoid_circuit_parse(const char* text, avoid_circuit** out) {
  if (!text || !out) return null_arg("text/out");
  return guarded([&] { *out = new avoid_circuit{avoid::parse_circuit(text)}; });
}

avoid_status avoid_circuit_load(const char* path, avoid_circuit** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] { *out = new avoid_circuit{avoid::load_circuit(path)}; });
}

avoid_status avoid_circuit_generate(const char* cls, int n, int m, uint64_t seed, avoid_circuit** out) {
  if (!cls || !out) return null_arg("cls/out");
  return guarded([&] {
    auto spec = avoid::parse_generator_class(cls);
    spec.n = n;
    spec.m = m;
    spec.seed = seed;
    *out = new avoid_circuit{avoid::generate(spec)};
  });
}

avoid_status avoid_circuit_serialize(const avoid_circuit* c, char** text) {
  if (!c || !text) return null_arg("circuit/text");
  return guarded([&] { *text = dup(avoid::serialize_circuit(c->c)); });
}

int avoid_circuit_n(const avoid_circuit* c) { return c ? c->c.n : -1; }
int avoid_circuit_m(const avoid_circuit* c) { return c ? c->c.m() : -1; }
void avoid_circuit_free(avoid_circuit* c) { delete c; }

avoid_status avoid_solve(const avoid_circuit* c, const avoid_solve_options* opt, avoid_report** out) {
  if (!c || !out) return null_arg("circuit/out");
  return guarded([&] {
    avoid::SolveOptions o;
    if (opt && opt->method) o.method = avoid::parse_strategy(opt->method);
    if (opt && opt->oracle_limit > 0) o.oracleLimit = opt->oracle_limit;
    *out = new avoid_report{avoid::dispatch_solve(c->c, o)};
  });
}

avoid_solve_status avoid_report_status(const avoid_report* r) {
  return static_cast<avoid_solve_status>(avoid::exit_code(r->r));
}
int avoid_report_exit_code(const avoid_report* r) { return avoid::exit_code(r->r); }
const char* avoid_report_certificate(const avoid_report* r) { return r->r.certificate.c_str(); }

avoid_status avoid_report_json(const avoid_report* r, char** json) {
  if (!r || !json) return null_arg("report/json");
  return guarded([&] { *json = dup(avoid::report_to_json(r->r)); });
}

avoid_status avoid_report_explain(const avoid_report* r, char** text) {
  if (!r || !text) return null_arg("report/text");
  return guarded([&] { *text = dup(avoid::report_explain(r->r)); });
}

double avoid_report_seconds(const avoid_report* r) { return r ? r->r.seconds : 0.0; }
void avoid_report_free(avoid_report* r) { delete r; }

avoid_status avoid_verify(const avoid_circuit* c, const char* y, int oracle_limit, int* in_range, char** witness) {
  if (!c || !y || !in_range) return null_arg("circuit/y/in_range");
  return guarded([&] {
    avoid::check_partial_output(c->c, y);
    auto x = avoid::brute_force_preimage(c->c, y, oracle_limit > 0 ? oracle_limit : avoid::kDefaultOracleLimit);
    *in_range = x ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (x) {
        std::string s;
        for (auto b : *x) s += b ? '1' : '0';
        *witness = dup(s);
      }
    }
  });
}

avoid_status avoid_pattern_find(const avoid_circuit* c, const char* kind, char** json) {
  if (!c || !kind || !json) return null_arg("circuit/kind/json");
  return guarded([&] {
    const auto spec = avoid::parse_pattern_spec(kind);
    const auto h = avoid::build_hypergraph(c->c);
    const auto match = avoid::find_fixed_pattern(h, spec);
    nlohmann::json j{{"kind", spec.name()}, {"found", match.has_value()}};
    if (match) {
      nlohmann::json edges = nlohmann::json::object(), verts = nlohmann::json::object();
      for (auto& [role, e] : match->edgeRoles) edges[role] = h.label[e];
      for (auto& [role, v] : match->vertexRoles) verts[role] = v;
      j["outputs"] = edges;
      j["inputs"] = verts;
    }
    *json = dup(j.dump(2));
  });
}

}  // extern "C"
