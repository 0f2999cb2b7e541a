#include "qtc/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qtc/errors.hpp"

namespace qtc {

namespace {

uint32_t append_nodes(std::vector<PositiveFormula::Node>& pool,
                      const PositiveFormula& f) {
  // Children are stored before parents, so a single offset shift works.
  uint32_t base = static_cast<uint32_t>(pool.size());
  for (const auto& n : f.nodes()) {
    PositiveFormula::Node copy = n;
    if (copy.kind != PositiveFormula::Kind::Atom) {
      copy.a += base;
      copy.b += base;
    }
    pool.push_back(copy);
  }
  return base + f.root();
}

}  // namespace

PositiveFormula PositiveFormula::atom(uint32_t state) {
  PositiveFormula f;
  f.nodes_.push_back({Kind::Atom, state, 0});
  f.root_ = 0;
  return f;
}

PositiveFormula PositiveFormula::conj(PositiveFormula lhs, PositiveFormula rhs) {
  PositiveFormula f;
  uint32_t l = append_nodes(f.nodes_, lhs);
  uint32_t r = append_nodes(f.nodes_, rhs);
  f.nodes_.push_back({Kind::And, l, r});
  f.root_ = static_cast<uint32_t>(f.nodes_.size() - 1);
  return f;
}

PositiveFormula PositiveFormula::disj(PositiveFormula lhs, PositiveFormula rhs) {
  PositiveFormula f;
  uint32_t l = append_nodes(f.nodes_, lhs);
  uint32_t r = append_nodes(f.nodes_, rhs);
  f.nodes_.push_back({Kind::Or, l, r});
  f.root_ = static_cast<uint32_t>(f.nodes_.size() - 1);
  return f;
}

PositiveFormula PositiveFormula::conj_all(const std::vector<PositiveFormula>& fs) {
  if (fs.empty()) throw ParseError("conj_all: empty operand list");
  PositiveFormula acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

PositiveFormula PositiveFormula::disj_all(const std::vector<PositiveFormula>& fs) {
  if (fs.empty()) throw ParseError("disj_all: empty operand list");
  PositiveFormula acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

bool PositiveFormula::evaluate(
    const std::function<bool(uint32_t)>& assignment) const {
  // Nodes are in child-before-parent order; evaluate bottom-up.
  std::vector<bool> val(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::Atom: val[i] = assignment(n.a); break;
      case Kind::And: val[i] = val[n.a] && val[n.b]; break;
      case Kind::Or: val[i] = val[n.a] || val[n.b]; break;
    }
  }
  return val[root_];
}

std::vector<uint32_t> PositiveFormula::atoms() const {
  std::set<uint32_t> seen;
  for (const Node& n : nodes_)
    if (n.kind == Kind::Atom) seen.insert(n.a);
  return {seen.begin(), seen.end()};
}

bool AlternatingAutomaton::is_deterministic() const {
  for (const auto& f : delta)
    if (f.size() != 1) return false;
  return true;
}

void AlternatingAutomaton::validate() const {
  size_t n = state_count();
  if (n == 0) throw ParseError("automaton has no states");
  if (start >= n) throw ParseError("start state out of range");
  if (accepting.size() != n) throw ParseError("accepting set size mismatch");
  if (delta.size() != 2 * n)
    throw ParseError("delta is not total on S x {0,1}");
  for (const auto& f : delta) {
    if (f.size() == 0) throw ParseError("empty transition formula");
    for (uint32_t s : f.atoms())
      if (s >= n) throw ParseError("formula references unknown state");
  }
}

std::vector<bool> accepts_from_all(const AlternatingAutomaton& aut,
                                   const BitWord& w) {
  size_t n = aut.state_count();
  // acc[s] = acceptance of the remaining suffix from state s.
  std::vector<bool> acc(aut.accepting.begin(), aut.accepting.end());
  for (size_t pos = w.length(); pos-- > 0;) {
    uint8_t symbol = w.bit(pos);
    std::vector<bool> next(n);
    for (uint32_t s = 0; s < n; ++s)
      next[s] = aut.transition(s, symbol).evaluate(
          [&](uint32_t t) { return acc[t]; });
    acc.swap(next);
  }
  return acc;
}

bool accepts(const AlternatingAutomaton& aut, const BitWord& w) {
  return accepts_from_all(aut, w)[aut.start];
}

std::vector<size_t> reachable_census(const AlternatingAutomaton& aut,
                                     size_t depth) {
  size_t n = aut.state_count();
  // live = union over all words of length exactly k of the live state
  // set after reading that word; the union distributes through the
  // atom closure, so one frontier set suffices.
  std::vector<bool> frontier(n, false), seen(n, false);
  frontier[aut.start] = true;
  seen[aut.start] = true;
  std::vector<size_t> counts;
  counts.push_back(1);
  for (size_t k = 1; k <= depth; ++k) {
    std::vector<bool> next(n, false);
    for (uint32_t s = 0; s < n; ++s) {
      if (!frontier[s]) continue;
      for (uint8_t symbol : {0, 1})
        for (uint32_t t : aut.transition(s, symbol).atoms()) next[t] = true;
    }
    for (uint32_t s = 0; s < n; ++s)
      if (next[s]) seen[s] = true;
    counts.push_back(static_cast<size_t>(
        std::count(seen.begin(), seen.end(), true)));
    frontier.swap(next);
  }
  return counts;
}

AlternatingAutomaton tree_dfa(
    const std::function<bool(const BitWord&)>& member, size_t n) {
  // State ids: word w of length <= n gets id 2^|w| - 1 + value(w)
  // (heap order); the sink is the last id.
  size_t words = (size_t(1) << (n + 1)) - 1;
  uint32_t sink = static_cast<uint32_t>(words);
  AlternatingAutomaton aut;
  aut.state_names.resize(words + 1);
  aut.accepting.resize(words + 1, false);
  aut.delta.reserve(2 * (words + 1));
  for (size_t len = 0; len <= n; ++len) {
    for (uint64_t v = 0; v < (uint64_t(1) << len); ++v) {
      uint32_t id = static_cast<uint32_t>((uint64_t(1) << len) - 1 + v);
      BitWord w = BitWord::from_value(v, len);
      aut.state_names[id] = len == 0 ? "e" : w.to_string();
      aut.accepting[id] = member(w);
    }
  }
  aut.state_names[sink] = "sink";
  for (size_t len = 0; len <= n; ++len) {
    for (uint64_t v = 0; v < (uint64_t(1) << len); ++v) {
      for (uint8_t symbol : {0, 1}) {
        uint32_t target;
        if (len == n) {
          target = sink;
        } else {
          uint64_t child = v | (uint64_t(symbol) << len);
          target = static_cast<uint32_t>((uint64_t(1) << (len + 1)) - 1 + child);
        }
        aut.delta.push_back(PositiveFormula::atom(target));
      }
    }
  }
  aut.delta.push_back(PositiveFormula::atom(sink));
  aut.delta.push_back(PositiveFormula::atom(sink));
  aut.start = 0;
  return aut;
}

ResidualReport residual_count(
    const std::function<bool(const BitWord&)>& member, size_t prefix_len,
    size_t suffix_depth, uint64_t work_cap) {
  uint64_t prefixes = (uint64_t(1) << (prefix_len + 1)) - 1;
  uint64_t suffixes = (uint64_t(1) << (suffix_depth + 1)) - 1;
  if (prefix_len >= 62 || suffix_depth >= 62 || prefixes > work_cap / suffixes)
    throw BudgetError("residual_count: enumeration exceeds work cap");

  std::set<std::vector<bool>> classes;
  for (size_t plen = 0; plen <= prefix_len; ++plen) {
    for (uint64_t pv = 0; pv < (uint64_t(1) << plen); ++pv) {
      BitWord u = BitWord::from_value(pv, plen);
      std::vector<bool> signature;
      signature.reserve(suffixes);
      for (size_t slen = 0; slen <= suffix_depth; ++slen)
        for (uint64_t sv = 0; sv < (uint64_t(1) << slen); ++sv)
          signature.push_back(member(u.concat(BitWord::from_value(sv, slen))));
      classes.insert(std::move(signature));
    }
  }
  return {prefix_len, suffix_depth, classes.size()};
}

}  // namespace qtc
