#ifndef LINSERT_DOT_HPP
#define LINSERT_DOT_HPP

#include <string>

#include "linsert/nfa.hpp"

namespace linsert {

/// Graphviz rendering of an automaton; epsilon edges are labeled "ε".
std::string to_dot(const Nfa& n, const std::string& name);

}  // namespace linsert

#endif
