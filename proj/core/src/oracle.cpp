#include "qtc/oracle.hpp"

#include "qtc/errors.hpp"
#include "qtc/nt.hpp"

namespace qtc {

LanguageOracle LanguageOracle::primes() {
  LanguageOracle o;
  o.kind_ = OracleKind::Primes;
  return o;
}

LanguageOracle LanguageOracle::squarefree() {
  LanguageOracle o;
  o.kind_ = OracleKind::Squarefree;
  return o;
}

LanguageOracle LanguageOracle::automaton(AlternatingAutomaton aut) {
  aut.validate();
  LanguageOracle o;
  o.kind_ = OracleKind::Automaton;
  o.aut_ = std::make_shared<const AlternatingAutomaton>(std::move(aut));
  return o;
}

LanguageOracle LanguageOracle::explicit_set(std::set<uint64_t> members,
                                            uint64_t cutoff) {
  LanguageOracle o;
  o.kind_ = OracleKind::Explicit;
  o.members_ = std::make_shared<const std::set<uint64_t>>(std::move(members));
  o.cutoff_ = cutoff;
  return o;
}

bool LanguageOracle::contains_word(const BitWord& w) const {
  if (kind_ == OracleKind::Automaton) return accepts(*aut_, w);
  return contains_value(w.value());
}

bool LanguageOracle::contains_value(uint64_t v) const {
  switch (kind_) {
    case OracleKind::Primes: return is_prime(v);
    case OracleKind::Squarefree: return is_squarefree(v);
    case OracleKind::Automaton: return accepts(*aut_, BitWord::minimal(v));
    case OracleKind::Explicit:
      if (v >= cutoff_)
        throw DomainError("explicit oracle: query beyond cutoff");
      return members_->count(v) != 0;
  }
  return false;
}

std::string LanguageOracle::kind_name() const {
  switch (kind_) {
    case OracleKind::Primes: return "primes";
    case OracleKind::Squarefree: return "squarefree";
    case OracleKind::Automaton: return "automaton";
    case OracleKind::Explicit: return "explicit";
  }
  return "?";
}

}  // namespace qtc
