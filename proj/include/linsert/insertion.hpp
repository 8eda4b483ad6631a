#ifndef LINSERT_INSERTION_HPP
#define LINSERT_INSERTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "linsert/nfa.hpp"

namespace linsert {

/// A letter-insertion problem: a set of pairwise-distinct insertable letters,
/// a base alphabet, and an automaton over their disjoint union. The question
/// attached to an instance: can every base word absorb all insertable letters
/// (each exactly once, anywhere) and land in the automaton's language?
class InsertionInstance {
public:
    /// `insertables` and `gamma` are disjoint display sets; every symbol of
    /// nfa's alphabet must belong to their union.
    InsertionInstance(std::vector<std::string> insertables,
                      std::vector<std::string> gamma, Nfa nfa);

    const std::vector<std::string>& insertables() const { return insertables_; }
    const std::vector<std::string>& gamma() const { return gamma_; }
    const Nfa& nfa() const { return nfa_; }

    /// Base-alphabet view (symbol ids for words over gamma).
    const AlphabetRef& gamma_alphabet() const { return gamma_alphabet_; }

    std::size_t insertable_count() const { return insertables_.size(); }

private:
    std::vector<std::string> insertables_;
    std::vector<std::string> gamma_;
    Nfa nfa_;
    AlphabetRef gamma_alphabet_;
};

/// How all insertable letters were placed into a base word: the word is cut
/// into segments[0..l], and order[j] names the insertable (by instance index)
/// inserted between segments[j] and segments[j+1].
struct InsertionWitness {
    std::vector<Word> segments;        // over gamma_alphabet, size l+1
    std::vector<std::size_t> order;    // permutation of 0..l-1

    /// The full word over the instance alphabet, insertions applied.
    Word arranged(const InsertionInstance& inst) const;
};

/// Automaton over the base alphabet accepting exactly the words into which
/// all insertable letters can be inserted. States are (q, S) pairs: q a state
/// of the instance automaton, S the set of letters already inserted; each
/// insertable transition of the original becomes an epsilon guess-move.
Nfa closure_nfa(const InsertionInstance& inst);

/// Universal, or a shortest base word admitting no insertion.
UniversalityResult decide(const InsertionInstance& inst,
                          std::size_t cap = Nfa::kDefaultSubsetCap);

/// A concrete insertion of all letters into w accepted by the automaton, or
/// nullopt. w is over the instance's base alphabet.
std::optional<InsertionWitness> insertable(const InsertionInstance& inst, const Word& w);

}  // namespace linsert

#endif
