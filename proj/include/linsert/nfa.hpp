#ifndef LINSERT_NFA_HPP
#define LINSERT_NFA_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "linsert/bitset.hpp"
#include "linsert/errors.hpp"

namespace linsert {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

/// Label value standing for an epsilon transition.
inline constexpr SymbolId kEpsilon = std::numeric_limits<SymbolId>::max();

/// A word is a sequence of symbol ids relative to a fixed alphabet.
using Word = std::vector<SymbolId>;

/// Ordered set of symbols; ids are positions, displays are the external names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> displays);

    /// Adds a display if absent; returns its id either way.
    SymbolId intern(const std::string& display);

    std::optional<SymbolId> find(const std::string& display) const;

    /// Like find, but throws InputError when the display is unknown.
    SymbolId id_of(const std::string& display) const;

    const std::string& display(SymbolId id) const { return displays_.at(id); }
    std::size_t size() const { return displays_.size(); }
    const std::vector<std::string>& displays() const { return displays_; }

    bool operator==(const Alphabet& other) const { return displays_ == other.displays_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// True iff every display of this alphabet occurs in `other`.
    bool subset_of(const Alphabet& other) const;

    Word word(const std::vector<std::string>& displays) const;
    std::vector<std::string> displays_of(const Word& w) const;

private:
    std::vector<std::string> displays_;
    std::unordered_map<std::string, SymbolId> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::vector<std::string> displays) {
    return std::make_shared<const Alphabet>(std::move(displays));
}

struct Transition {
    StateId from;
    SymbolId label;  // kEpsilon for epsilon moves
    StateId to;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.from == b.from && a.label == b.label && a.to == b.to;
    }
    friend bool operator<(const Transition& a, const Transition& b);
};

/// Result of a universality check: either universal, or a shortest rejected
/// word (ties broken towards the smallest symbol ids).
struct Universal {};
struct Counterexample {
    Word word;
};
using UniversalityResult = std::variant<Universal, Counterexample>;

bool is_universal_result(const UniversalityResult& r);
const Word* counterexample_of(const UniversalityResult& r);

/// Nondeterministic finite automaton over an interned alphabet. Immutable
/// after construction; membership caches are built lazily and shared.
class Nfa {
public:
    Nfa(StateId state_count, AlphabetRef alphabet, std::vector<Transition> transitions,
        std::vector<StateId> initial, std::vector<StateId> final_states);

    StateId state_count() const { return state_count_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetRef& alphabet_ref() const { return alphabet_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const std::vector<StateId>& initial() const { return initial_; }
    const std::vector<StateId>& final_states() const { return final_; }
    bool is_final(StateId q) const;

    bool operator==(const Nfa& other) const;

    /// Exploration caps for the subset-based algorithms.
    static constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 22;

private:
    StateId state_count_;
    AlphabetRef alphabet_;
    std::vector<Transition> transitions_;
    std::vector<StateId> initial_;
    std::vector<StateId> final_;

    // Lazily built matcher tables, shared between copies (the automaton is
    // immutable, so copies never diverge).
    struct MatchCache;
    struct LazyCache;
    std::shared_ptr<LazyCache> lazy_;
    const MatchCache& cache() const;

    friend bool accepts(const Nfa&, const Word&);
    friend Nfa complement(const Nfa&, const Alphabet&, std::size_t);
    friend UniversalityResult is_universal(const Nfa&, const Alphabet&, std::size_t);
    friend std::optional<Word> shortest_word(const Nfa&);
    friend Nfa without_epsilons(const Nfa&);
};

/// Membership; letters must belong to the automaton's alphabet.
bool accepts(const Nfa& n, const Word& w);
bool accepts(const Nfa& n, const std::vector<std::string>& displays);

/// L(a) ∪ L(b). The result alphabet is a's extended with b's new symbols.
Nfa union_nfa(const Nfa& a, const Nfa& b);
Nfa union_all(const std::vector<Nfa>& parts);

/// L(a) ∩ L(b) via the product construction.
Nfa intersect(const Nfa& a, const Nfa& b);

/// Complete deterministic automaton for over* \ L(n). Requires
/// n.alphabet ⊆ over. Throws ResourceLimitError past `cap` subset states.
Nfa complement(const Nfa& n, const Alphabet& over,
               std::size_t cap = Nfa::kDefaultSubsetCap);

/// Shortest accepted word (smallest symbol ids among equals), or nullopt if
/// the language is empty.
std::optional<Word> shortest_word(const Nfa& n);

/// Universality of L(n) over `over`*, by on-the-fly determinization with
/// subsumption pruning of subset states. Requires n.alphabet ⊆ over.
UniversalityResult is_universal(const Nfa& n, const Alphabet& over,
                                std::size_t cap = Nfa::kDefaultSubsetCap);

/// Language-preserving cleanups used when composing gadget automata.
Nfa without_epsilons(const Nfa& n);
Nfa trimmed(const Nfa& n);

/// Adds a self-loop on every state for each of the given symbols (interning
/// them into the alphabet if needed).
Nfa with_self_loops(const Nfa& n, const std::vector<std::string>& loop_displays);

/// Rebuilds n over `target`, mapping each symbol through `rename`
/// (display-level map; identity for displays not in the map).
Nfa relabeled(const Nfa& n, const AlphabetRef& target,
              const std::unordered_map<std::string, std::string>& rename);

}  // namespace linsert

#endif
