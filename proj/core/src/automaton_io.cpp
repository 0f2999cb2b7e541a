#include "qtc/automaton_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "qtc/errors.hpp"

namespace qtc {

namespace {

struct Tokenizer {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError("expected '" + std::string(1, c) + "' in formula: " + text);
    ++pos;
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '-'))
      ++pos;
    if (start == pos) throw ParseError("expected identifier in: " + text);
    return text.substr(start, pos - start);
  }
};

PositiveFormula parse_formula(Tokenizer& tok,
                              const std::map<std::string, uint32_t>& ids) {
  std::string head = tok.word();
  if (head == "atom") {
    std::string name = tok.word();
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError("unknown state '" + name + "'");
    return PositiveFormula::atom(it->second);
  }
  if (head != "and" && head != "or")
    throw ParseError("expected atom/and/or, got '" + head + "'");
  tok.expect('(');
  std::vector<PositiveFormula> operands;
  operands.push_back(parse_formula(tok, ids));
  while (tok.peek() == ',') {
    tok.expect(',');
    operands.push_back(parse_formula(tok, ids));
  }
  tok.expect(')');
  if (operands.size() < 2)
    throw ParseError(head + " needs at least two operands");
  return head == "and" ? PositiveFormula::conj_all(operands)
                       : PositiveFormula::disj_all(operands);
}

void format_formula(const PositiveFormula& f, uint32_t node,
                    const std::vector<std::string>& names, std::ostream& out) {
  const auto& n = f.nodes()[node];
  switch (n.kind) {
    case PositiveFormula::Kind::Atom:
      out << "atom " << names[n.a];
      break;
    case PositiveFormula::Kind::And:
    case PositiveFormula::Kind::Or:
      out << (n.kind == PositiveFormula::Kind::And ? "and(" : "or(");
      format_formula(f, n.a, names, out);
      out << ", ";
      format_formula(f, n.b, names, out);
      out << ")";
      break;
  }
}

}  // namespace

AlternatingAutomaton parse_automaton(std::istream& in) {
  AlternatingAutomaton aut;
  std::map<std::string, uint32_t> ids;
  std::map<std::pair<uint32_t, uint8_t>, PositiveFormula> delta;
  bool have_start = false;

  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto lookup = [&](const std::string& name) {
      auto it = ids.find(name);
      if (it == ids.end()) fail("unknown state '" + name + "'");
      return it->second;
    };
    if (head == "states") {
      std::string name;
      while (line >> name) {
        if (ids.count(name)) fail("duplicate state '" + name + "'");
        ids[name] = static_cast<uint32_t>(aut.state_names.size());
        aut.state_names.push_back(name);
      }
    } else if (head == "start") {
      std::string name;
      if (!(line >> name)) fail("start needs a state");
      aut.start = lookup(name);
      have_start = true;
    } else if (head == "accepting") {
      aut.accepting.assign(aut.state_names.size(), false);
      std::string name;
      while (line >> name) aut.accepting[lookup(name)] = true;
    } else if (head == "delta") {
      std::string name, symbol, eq;
      if (!(line >> name >> symbol >> eq) || eq != "=")
        fail("expected: delta STATE SYMBOL = FORMULA");
      if (symbol != "0" && symbol != "1") fail("symbol must be 0 or 1");
      uint32_t s = lookup(name);
      std::string rest;
      std::getline(line, rest);
      Tokenizer tok{rest};
      PositiveFormula f = parse_formula(tok, ids);
      if (!tok.at_end()) fail("trailing input after formula");
      auto key = std::make_pair(s, static_cast<uint8_t>(symbol == "1"));
      if (delta.count(key)) fail("duplicate delta for " + name + " " + symbol);
      delta.emplace(key, std::move(f));
    } else {
      fail("unknown directive '" + head + "'");
    }
  }

  if (aut.state_names.empty()) throw ParseError("no states declared");
  if (!have_start) throw ParseError("no start state declared");
  if (aut.accepting.empty())
    aut.accepting.assign(aut.state_names.size(), false);
  for (uint32_t s = 0; s < aut.state_count(); ++s)
    for (uint8_t symbol : {0, 1}) {
      auto it = delta.find({s, symbol});
      if (it == delta.end())
        throw ParseError("missing delta for state '" + aut.state_names[s] +
                         "' symbol " + std::to_string(symbol));
      aut.delta.push_back(it->second);
    }
  aut.validate();
  return aut;
}

AlternatingAutomaton parse_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open automaton file: " + path);
  return parse_automaton(in);
}

std::string format_automaton(const AlternatingAutomaton& aut) {
  std::ostringstream out;
  out << "states";
  for (const auto& name : aut.state_names) out << " " << name;
  out << "\nstart " << aut.state_names[aut.start] << "\naccepting";
  for (uint32_t s = 0; s < aut.state_count(); ++s)
    if (aut.accepting[s]) out << " " << aut.state_names[s];
  out << "\n";
  for (uint32_t s = 0; s < aut.state_count(); ++s)
    for (uint8_t symbol : {0, 1}) {
      out << "delta " << aut.state_names[s] << " " << int(symbol) << " = ";
      const auto& f = aut.transition(s, symbol);
      format_formula(f, f.root(), aut.state_names, out);
      out << "\n";
    }
  return out.str();
}

}  // namespace qtc
