#ifndef QTC_AUTOMATON_HPP
#define QTC_AUTOMATON_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtc/bitword.hpp"

namespace qtc {

// Positive boolean formula over state atoms, stored as a node pool.
// And/Or are binary; n-ary input is right-folded by the builders.
class PositiveFormula {
 public:
  enum class Kind : uint8_t { Atom, And, Or };

  struct Node {
    Kind kind;
    uint32_t a = 0;  // Atom: state id.  And/Or: left child.
    uint32_t b = 0;  // And/Or: right child.
  };

  static PositiveFormula atom(uint32_t state);
  static PositiveFormula conj(PositiveFormula lhs, PositiveFormula rhs);
  static PositiveFormula disj(PositiveFormula lhs, PositiveFormula rhs);

  // Right fold of a nonempty list under And (resp. Or).
  static PositiveFormula conj_all(const std::vector<PositiveFormula>& fs);
  static PositiveFormula disj_all(const std::vector<PositiveFormula>& fs);

  // Standard monotone evaluation; assignment(s) gives the truth of atom s.
  bool evaluate(const std::function<bool(uint32_t)>& assignment) const;

  // All state ids occurring as atoms, deduplicated.
  std::vector<uint32_t> atoms() const;

  size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  uint32_t root() const { return root_; }

 private:
  std::vector<Node> nodes_;
  uint32_t root_ = 0;
};

// Alternating automaton over {0,1}.  Deterministic automata are the
// special case where every formula is a single atom.
struct AlternatingAutomaton {
  std::vector<std::string> state_names;
  uint32_t start = 0;
  std::vector<bool> accepting;
  // delta[2*s + symbol]
  std::vector<PositiveFormula> delta;

  size_t state_count() const { return state_names.size(); }
  const PositiveFormula& transition(uint32_t s, uint8_t symbol) const {
    return delta[2 * s + symbol];
  }

  bool is_deterministic() const;

  // Throws ParseError if delta is not total or a formula references an
  // unknown state.
  void validate() const;
};

// True iff Alice wins the acceptance game on w.  Backward recursion
// memoized on (state, position), O(|w| * |S| * formula size).
bool accepts(const AlternatingAutomaton& aut, const BitWord& w);

// Acceptance from every start state at once; column s is accepts with
// start state s.  Used by profile computations over many prefixes.
std::vector<bool> accepts_from_all(const AlternatingAutomaton& aut,
                                   const BitWord& w);

// c_k = number of distinct states occurring as atoms in the live-set
// closure over all words of length <= k, starting from {start}.
// Nondecreasing; for deterministic automata this is Karp reachability.
std::vector<size_t> reachable_census(const AlternatingAutomaton& aut,
                                     size_t depth);

// Truncated binary-tree DFA for an arbitrary membership predicate on
// words: one state per word of length <= n plus a non-accepting sink.
// Reachable states within n steps <= 2^{n+1}.
AlternatingAutomaton tree_dfa(
    const std::function<bool(const BitWord&)>& member, size_t n);

struct ResidualReport {
  size_t prefix_len = 0;
  size_t suffix_depth = 0;
  size_t distinct_count = 0;
};

// Counts equivalence classes of prefixes u (|u| <= n) under
// u ~ u' iff member(uv) = member(u'v) for all |v| <= d.
// Throws BudgetError if 2^{n+1} * 2^{d+1} exceeds work_cap.
ResidualReport residual_count(
    const std::function<bool(const BitWord&)>& member, size_t prefix_len,
    size_t suffix_depth, uint64_t work_cap = uint64_t(1) << 24);

}  // namespace qtc

#endif
