#include "textio.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace avoid {

namespace {

[[noreturn]] void bad(int line, const std::string& what) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

int read_int(std::istringstream& in, int line, const char* what) {
  long long v;
  if (!(in >> v) || v < 0 || v > (1 << 30)) bad(line, std::string("expected ") + what);
  return static_cast<int>(v);
}

void expect(std::istringstream& in, const std::string& word, int line) {
  std::string w;
  if (!(in >> w) || w != word) bad(line, "expected '" + word + "'");
}

int read_assignment(std::istringstream& in, const std::string& key, int line) {
  std::string w;
  if (!(in >> w) || w.rfind(key + "=", 0) != 0) bad(line, "expected " + key + "=<count>");
  std::istringstream num(w.substr(key.size() + 1));
  const int v = read_int(num, line, "a count");
  std::string rest;
  if (num >> rest) bad(line, "trailing text after " + key);
  return v;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream src(text);
  std::string raw;
  int lineNo = 0, n = -1, m = -1;
  std::vector<OutputFunction> outs;
  while (std::getline(src, raw)) {
    ++lineNo;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream in(raw);
    if (n < 0) {
      expect(in, "circuit", lineNo);
      n = read_assignment(in, "n", lineNo);
      m = read_assignment(in, "m", lineNo);
      std::string rest;
      if (in >> rest) bad(lineNo, "trailing text in header");
      continue;
    }
    expect(in, "out", lineNo);
    std::string id;
    in >> id;
    if (id.empty() || id.back() != ':') bad(lineNo, "expected '<id>:'");
    if (id != std::to_string(outs.size()) + ":")
      bad(lineNo, "output ids must run 0..m-1 in order, expected " + std::to_string(outs.size()));
    expect(in, "inputs", lineNo);
    std::vector<int> inputs;
    std::string w;
    while (in >> w && w != ";") {
      std::istringstream num(w);
      int v = read_int(num, lineNo, "an input index");
      std::string rest;
      if (num >> rest) bad(lineNo, "bad input index '" + w + "'");
      if (v >= n) bad(lineNo, "input " + w + " out of range for n=" + std::to_string(n));
      inputs.push_back(v);
    }
    if (w != ";") bad(lineNo, "expected ';' before table");
    expect(in, "table", lineNo);
    std::string bits;
    if (!(in >> bits)) bad(lineNo, "missing table");
    std::string rest;
    if (in >> rest) bad(lineNo, "trailing text after table");
    Bits table;
    for (char ch : bits) {
      if (ch != '0' && ch != '1') bad(lineNo, "table must be 0/1 characters");
      table.push_back(ch == '1');
    }
    try {
      outs.push_back(make_function(std::move(inputs), std::move(table)));
    } catch (const Error& e) {
      bad(lineNo, e.what());
    }
  }
  if (n < 0) bad(lineNo, "missing 'circuit n=.. m=..' header");
  if (outs.empty()) bad(lineNo, "no outputs");
  if (static_cast<int>(outs.size()) != m)
    bad(lineNo, "header says m=" + std::to_string(m) + " but " + std::to_string(outs.size()) + " outputs follow");
  return make_circuit(n, std::move(outs));
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "circuit n=" << c.n << " m=" << c.m() << "\n";
  for (int i = 0; i < c.m(); ++i) {
    os << "out " << i << ": inputs";
    for (int v : c.outputs[i].inputs) os << ' ' << v;
    os << " ; table ";
    for (auto b : c.outputs[i].table) os << (b ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

Circuit load_circuit(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_circuit(ss.str());
}

}  // namespace avoid
