#ifndef LINSERT_TM_TO_LI_HPP
#define LINSERT_TM_TO_LI_HPP

#include <string>
#include <variant>
#include <vector>

#include "linsert/insertion.hpp"
#include "linsert/tm.hpp"

namespace linsert {

/// Ways a consecutive configuration pair can contradict the machine's rules.
/// The union of the pattern automata over all kinds and rules covers exactly
/// the complement of rule-consistent successor pairs.
enum class ViolationKind {
    WrongStateAfterMove,   // head reached the target cell but in the wrong state
    WrongWrittenBit,       // the head cell's bit is not the written bit
    WrongHeadDirection,    // the target cell exists but the head is not on it
    HeadOffTape,           // the rule pushes the head off the tape edge
    UndefinedTransition,   // no rule applies yet another configuration follows
    FrameViolation,        // a cell changed although the head was not on it
};

std::string to_string(ViolationKind kind);

/// Insertable letters p_1..p_P, m_1..m_P tagging address bits.
std::vector<std::string> insertable_displays(const EncodingParams& params);

struct GadgetComponent {
    std::string name;
    Nfa nfa;
};

/// Words that are not well-formed single configurations: five violation
/// families (shape, state-symbol count, first address, last address, address
/// increment). Over the encoding alphabet only.
Nfa build_not_wf(const EncodingParams& params);
std::vector<GadgetComponent> build_not_wf_components(const EncodingParams& params);

/// Words that are not a well-formed configuration sequence, or whose first
/// configuration is not the initial one for `input`, or whose last
/// configuration is not accepting. Carries insertable-letter self-loops so
/// the violations stay recognizable under forced insertions.
Nfa build_not_seq_cfg(const TuringMachine& tm, const EncodingParams& params,
                      const std::vector<int>& input);
std::vector<GadgetComponent> build_not_seq_cfg_components(
    const TuringMachine& tm, const EncodingParams& params,
    const std::vector<int>& input);

/// Violation detectors for single rule applications: each component finds a
/// tagged cell in one configuration and the matching tagged cell in the next
/// (exactly one "$" apart) and asserts the violated postcondition.
Nfa build_not_delta(const TuringMachine& tm, const EncodingParams& params);
std::vector<GadgetComponent> build_not_delta_components(const TuringMachine& tm,
                                                        const EncodingParams& params);

/// A single pattern-pair automaton (used by the equivalence suites).
Nfa build_violation_pattern(const TuringMachine& tm, const EncodingParams& params,
                            const TmRule& rule, ViolationKind kind);

/// The full reduction: base alphabet = encoding alphabet, insertables as
/// above, automaton = sequence violations ∪ rule violations.
InsertionInstance build_instance(const TuringMachine& tm, const EncodingParams& params,
                                 const std::vector<int>& input);

struct ReachAccepting {
    std::vector<TmConfig> configs;  // decoded from the non-insertable word
    Word word;
};
struct ReachNegative {};
using ReachabilityResult = std::variant<ReachAccepting, ReachNegative>;

/// Decides whether the machine accepts `input` within the bounded tape by
/// deciding the compiled insertion instance; a counterexample word is decoded
/// and validated step-by-step against the rules (an invalid one signals a
/// construction bug and throws).
ReachabilityResult decide_reachability(const TuringMachine& tm,
                                       const EncodingParams& params,
                                       const std::vector<int>& input,
                                       std::size_t cap = Nfa::kDefaultSubsetCap);

/// Oracle-side predicate: does the decoded sequence contain any violation of
/// the machine's rules between consecutive configurations?
bool has_delta_violation(const TuringMachine& tm, const EncodingParams& params,
                         const std::vector<TmConfig>& configs);

/// Oracle-side predicate for a single (rule, kind) pattern.
bool has_specific_violation(const TuringMachine& tm, const EncodingParams& params,
                            const std::vector<TmConfig>& configs, const TmRule& rule,
                            ViolationKind kind);

}  // namespace linsert

#endif
