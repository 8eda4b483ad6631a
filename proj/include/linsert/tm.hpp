#ifndef LINSERT_TM_HPP
#define LINSERT_TM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linsert/nfa.hpp"

namespace linsert {

using TmStateId = std::uint32_t;

enum class HeadMove : std::uint8_t { Left, Right };

struct TmRule {
    TmStateId state;
    int read_bit;
    TmStateId next_state;
    int write_bit;
    HeadMove move;
};

/// Deterministic binary-tape machine. The transition table may be partial: a
/// missing (state, bit) entry makes the machine halt there.
struct TuringMachine {
    TmStateId state_count;
    TmStateId initial;
    TmStateId final;
    std::vector<TmRule> rules;

    void validate() const;
    std::optional<TmRule> rule(TmStateId q, int bit) const;

    /// Display used for a control state inside encoded configurations.
    static std::string state_display(TmStateId q);
};

struct TmConfig {
    std::vector<int> tape;  // length 2^addr_bits
    std::size_t head;
    TmStateId state;

    friend bool operator==(const TmConfig& a, const TmConfig& b) {
        return a.tape == b.tape && a.head == b.head && a.state == b.state;
    }
};

/// Word-encoding parameters: the address width and the alphabet, which is the
/// eight structural symbols plus one display per control state.
class EncodingParams {
public:
    EncodingParams(const TuringMachine& tm, unsigned addr_bits);

    unsigned addr_bits() const { return addr_bits_; }
    std::size_t cell_count() const { return std::size_t{1} << addr_bits_; }
    const AlphabetRef& alphabet() const { return alphabet_; }
    TmStateId tm_state_count() const { return tm_states_; }

    // Structural symbol ids.
    SymbolId zero() const { return 0; }
    SymbolId one() const { return 1; }
    SymbolId begin_marker() const { return 2; }  // "▷"
    SymbolId end_marker() const { return 3; }    // "□"
    SymbolId config_start() const { return 4; }  // "$"
    SymbolId config_end() const { return 5; }    // "↩"
    SymbolId cell_sep() const { return 6; }      // ";"
    SymbolId addr_sep() const { return 7; }      // ":"
    SymbolId state_symbol(TmStateId q) const { return 8 + q; }
    std::optional<TmStateId> state_of_symbol(SymbolId s) const;
    SymbolId bit_symbol(int b) const { return b ? one() : zero(); }

    static const std::vector<std::string>& base_displays();

private:
    unsigned addr_bits_;
    TmStateId tm_states_;
    AlphabetRef alphabet_;
};

TmConfig initial_tm_config(const TuringMachine& tm, const std::vector<int>& input,
                           const EncodingParams& params);

/// Bounded-tape simulation outcomes.
struct RunAccepting {
    std::vector<TmConfig> configs;
};
struct RunHaltedNonFinal {
    std::vector<TmConfig> configs;
};
struct RunOutOfBounds {
    std::vector<TmConfig> configs;
};
struct RunTimeout {
    std::vector<TmConfig> configs;
};
using RunResult =
    std::variant<RunAccepting, RunHaltedNonFinal, RunOutOfBounds, RunTimeout>;

/// Simulates from the initial configuration until the final state, a halt, the
/// head leaving the tape, or max_steps. Input must fit on the tape.
RunResult run(const TuringMachine& tm, const std::vector<int>& input,
              const EncodingParams& params, std::size_t max_steps);

bool run_accepted(const RunResult& r);
const std::vector<TmConfig>& run_configs(const RunResult& r);

/// One configuration as a word: "$", then each cell as address bits, ":",
/// the state symbol when the head is here, the cell bit, ";"; finally "↩".
Word encode_config(const TmConfig& cfg, const EncodingParams& params);
TmConfig decode_config(const Word& w, const EncodingParams& params);

/// A configuration sequence bracketed by "▷" and "□".
Word encode_run(const std::vector<TmConfig>& configs, const EncodingParams& params);
std::vector<TmConfig> decode_run(const Word& w, const EncodingParams& params);

/// Reference predicates implemented by direct parsing; the gadget automata
/// are tested against these.
bool is_well_formed_config(const Word& w, const EncodingParams& params);
bool is_well_formed_seq(const Word& w, const EncodingParams& params);

/// The unique successor of cfg under the machine's rules, or nullopt when the
/// machine halts here or the head would leave the tape.
std::optional<TmConfig> tm_successor(const TuringMachine& tm, const TmConfig& cfg,
                                     const EncodingParams& params);

}  // namespace linsert

#endif
