#ifndef LINSERT_REGEX_HPP
#define LINSERT_REGEX_HPP

#include <memory>
#include <string>
#include <vector>

#include "linsert/nfa.hpp"

namespace linsert {

/// Regular-expression AST built programmatically over symbol displays.
/// `alt({})` denotes the empty language, `seq({})` the empty word.
class Regex {
public:
    enum class Kind { Epsilon, Literal, Concat, Union, Star, Plus, Opt };

    static Regex epsilon();
    static Regex lit(std::string display);
    static Regex seq(std::vector<Regex> parts);
    static Regex alt(std::vector<Regex> parts);
    static Regex star(Regex inner);
    static Regex plus(Regex inner);
    static Regex opt(Regex inner);

    /// Union of single-symbol literals.
    static Regex any_of(const std::vector<std::string>& displays);

    Kind kind() const { return kind_; }
    const std::string& literal() const { return literal_; }
    const std::vector<Regex>& children() const { return children_; }

    /// Number of AST nodes; the compiled automaton has O(size) states.
    std::size_t size() const;

private:
    Regex() = default;
    Kind kind_ = Kind::Epsilon;
    std::string literal_;
    std::vector<Regex> children_;
};

/// Thompson-style compilation. Every literal must already be interned in
/// `alphabet`; the result automaton is over that alphabet.
Nfa regex_to_nfa(const Regex& r, const AlphabetRef& alphabet);

}  // namespace linsert

#endif
