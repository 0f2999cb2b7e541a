#ifndef QTC_AUTOMATON_IO_HPP
#define QTC_AUTOMATON_IO_HPP

#include <iosfwd>
#include <string>

#include "qtc/automaton.hpp"

namespace qtc {

// Line-oriented interchange format (see docs/automaton-format.md):
//
//   states s0 s1 s2
//   start s0
//   accepting s2
//   delta s0 0 = atom s1
//   delta s0 1 = or(atom s1, and(atom s2, atom s0))
//
// '#' starts a comment.  and/or take two or more operands and are
// right-folded into the binary data model.  Throws ParseError.
AlternatingAutomaton parse_automaton(std::istream& in);
AlternatingAutomaton parse_automaton_file(const std::string& path);

std::string format_automaton(const AlternatingAutomaton& aut);

}  // namespace qtc

#endif
