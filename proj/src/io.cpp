#include "roc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace roc {

namespace {

bool valid_name(const std::string& tok) {
  if (tok.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(tok[0])) && tok[0] != '_')
    return false;
  return std::all_of(tok.begin() + 1, tok.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
}

std::vector<VarSet> parse_set_file(const std::string& path,
                                   VarRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<VarSet> sets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string tok;
    VarSet s;
    bool any = false;
    while (tokens >> tok) {
      if (tok[0] == '#') break;
      if (!valid_name(tok))
        throw IoError(path + ":" + std::to_string(lineno) +
                      ": invalid variable name '" + tok + "'");
      s.insert(registry.intern(tok));
      any = true;
    }
    if (any) sets.push_back(std::move(s));
  }
  return sets;
}

FormulaPtr parse_formula_file(const std::string& path, VarRegistry& registry) {
  std::istringstream in(read_file(path));
  std::ostringstream kept;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') line.clear();
    kept << line << '\n';
  }
  return parse_formula(kept.str(), registry);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Graph g;
  int m = 0;
  if (!(in >> g.n >> m)) throw IoError(path + ": expected header 'n m'");
  if (g.n < 0 || m < 0) throw IoError(path + ": negative counts");
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw IoError(path + ": expected " + std::to_string(m) + " edges");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& ex) {
      throw IoError(path + ": " + ex.what());
    }
  }
  return g;
}

std::string render_set_file(const std::vector<VarSet>& sets,
                            const VarRegistry& registry) {
  std::ostringstream out;
  for (const VarSet& s : sets) {
    bool first = true;
    for (int v : s) {
      if (!first) out << ' ';
      first = false;
      out << registry.name(v);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> sorted_names(const VarSet& s,
                                      const VarRegistry& registry) {
  std::vector<std::string> names;
  for (int v : s) names.push_back(registry.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace roc
