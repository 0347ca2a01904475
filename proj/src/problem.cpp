#include "lcaforge/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lcaforge {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct RawConstraint {
  int line;
  std::string a, b, c, d;
  bool forbid;
};

}  // namespace

Problem parse_problem(std::string_view text) {
  std::optional<std::vector<std::string>> taxa_line;
  std::vector<RawConstraint> raw;
  std::vector<std::string> mentioned;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& directive = tokens.front();
    if (directive == "taxa:") {
      if (taxa_line) throw ParseError(lineno, "duplicate taxa line");
      if (tokens.size() < 2) throw ParseError(lineno, "taxa line needs at least one name");
      std::vector<std::string> names(tokens.begin() + 1, tokens.end());
      for (const auto& n : names)
        if (!valid_name(n)) throw ParseError(lineno, "invalid taxon name '" + n + "'");
      taxa_line = std::move(names);
    } else if (directive == "require:" || directive == "forbid:") {
      if (tokens.size() != 6 || tokens[3] != "<")
        throw ParseError(lineno, "expected '" + directive + " <a> <b> < <c> <d>'");
      RawConstraint rc{lineno, tokens[1], tokens[2], tokens[4], tokens[5],
                       directive == "forbid:"};
      for (const auto& n : {rc.a, rc.b, rc.c, rc.d}) {
        if (!valid_name(n)) throw ParseError(lineno, "invalid taxon name '" + n + "'");
        mentioned.push_back(n);
      }
      raw.push_back(std::move(rc));
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
  }

  std::vector<std::string> labels = taxa_line ? *taxa_line : mentioned;
  if (labels.empty()) throw ParseError(lineno, "no taxa: empty universe");
  Universe universe(labels);

  Problem p{universe, Relation(universe), Relation(universe), taxa_line};
  for (const auto& rc : raw) {
    std::array<int, 4> t{};
    int i = 0;
    for (const auto& n : {rc.a, rc.b, rc.c, rc.d}) {
      auto id = universe.find(n);
      if (!id) throw ParseError(rc.line, "taxon '" + n + "' not in the taxa line");
      t[i++] = *id;
    }
    Constraint c{TaxonPair::of(t[0], t[1]), TaxonPair::of(t[2], t[3])};
    (rc.forbid ? p.forbidden : p.required).add(c);
  }
  return p;
}

std::string print_problem(const Problem& p) {
  std::ostringstream out;
  out << "taxa:";
  for (int t = 0; t < p.universe.size(); ++t) out << ' ' << p.universe.label(t);
  out << '\n';
  for (const auto& c : p.required.constraints())
    out << "require: " << p.universe.constraint_name(c) << '\n';
  for (const auto& c : p.forbidden.constraints())
    out << "forbid: " << p.universe.constraint_name(c) << '\n';
  return out.str();
}

}  // namespace lcaforge
