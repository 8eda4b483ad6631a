#ifndef LINSERT_LIN_CHECK_HPP
#define LINSERT_LIN_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "linsert/memory_model.hpp"
#include "linsert/nfa.hpp"

namespace linsert {

/// Specification automaton; its alphabet must consist of method names of the
/// library under test.
struct SpecNfa {
    Nfa nfa;
};

/// A successful linearization: the chosen completion, the method events of
/// that completion in the order picked, and the induced label word.
struct LinearizationWitness {
    Trace completion;
    std::vector<std::size_t> order;       // indices into method_events(completion)
    std::vector<std::string> labels;      // method names along `order`
};

/// Searches the completions of `trace` (fewest closed calls first) for a
/// total order of method events that respects happens-before and spells a
/// word of the specification. Search states (ordered-set, spec-state-set) are
/// memoized with subsumption on the spec-state sets.
std::optional<LinearizationWitness> trace_linearizable(const Trace& trace,
                                                       const SpecNfa& spec,
                                                       const Library& lib);

struct BoundedCheckStats {
    std::size_t traces_checked = 0;
};

/// First non-linearizable trace (in enumeration order) among all traces of
/// executions with at most max_steps steps, or nullopt if every one is
/// linearizable. A bounded under-approximation: sound for counterexamples.
struct BoundedCheckResult {
    std::optional<Trace> counterexample;
    BoundedCheckStats stats;
};

BoundedCheckResult library_linearizable_bounded(const Library& lib, std::uint32_t k,
                                                const SpecNfa& spec,
                                                std::size_t max_steps,
                                                std::size_t cap = kDefaultFrontierCap);

}  // namespace linsert

#endif
