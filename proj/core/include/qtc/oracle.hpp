#ifndef QTC_ORACLE_HPP
#define QTC_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "qtc/automaton.hpp"
#include "qtc/bitword.hpp"

namespace qtc {

enum class OracleKind : uint8_t { Primes, Squarefree, Automaton, Explicit };

// Language membership over LSB-first binary words.  For the integer
// kinds membership depends only on value(w); for Automaton it depends
// on the word itself.
class LanguageOracle {
 public:
  static LanguageOracle primes();
  static LanguageOracle squarefree();
  static LanguageOracle automaton(AlternatingAutomaton aut);
  // Membership of v < cutoff is (v in members); queries >= cutoff
  // throw DomainError.
  static LanguageOracle explicit_set(std::set<uint64_t> members,
                                     uint64_t cutoff);

  OracleKind kind() const { return kind_; }
  const AlternatingAutomaton& aut() const { return *aut_; }
  uint64_t cutoff() const { return cutoff_; }

  bool contains_word(const BitWord& w) const;
  // Integer membership; DomainError for Explicit out-of-range queries.
  // For Automaton this evaluates the minimal word of v.
  bool contains_value(uint64_t v) const;

  std::string kind_name() const;

 private:
  OracleKind kind_;
  std::shared_ptr<const AlternatingAutomaton> aut_;
  std::shared_ptr<const std::set<uint64_t>> members_;
  uint64_t cutoff_ = 0;
};

}  // namespace qtc

#endif
