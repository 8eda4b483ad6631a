#ifndef LINSERT_ORACLE_HPP
#define LINSERT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linsert/insertion.hpp"
#include "linsert/lin_check.hpp"
#include "linsert/memory_model.hpp"
#include "linsert/tm.hpp"

namespace linsert {

/// Seeded generator with portable derived draws (engine output is
/// standard-specified; the helpers avoid distribution objects on purpose).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

struct RandomNfaParams {
    std::uint32_t max_states = 5;
    std::uint32_t transitions_per_state = 2;  // expected, approximately
    std::uint64_t final_num = 1, final_den = 3;
};

Nfa random_nfa(Rng& rng, const AlphabetRef& alphabet, const RandomNfaParams& params);

Word random_word(Rng& rng, std::size_t max_len, std::size_t alphabet_size);

/// Thrown when an oracle's size guard trips; oracles never truncate silently.
class SizeGuardError : public InputError {
public:
    explicit SizeGuardError(const std::string& what) : InputError(what) {}
};

inline constexpr std::size_t kBruteInsertArrangementCap = 500'000;

/// Definitional insertion check: enumerates every permutation of the
/// insertable letters and every split of w, and tests membership of the
/// arranged word. Guarded by the total arrangement count.
bool brute_insert(const InsertionInstance& inst, const Word& w,
                  std::size_t arrangement_cap = kBruteInsertArrangementCap);

/// Definitional linearizability check: enumerates completions (subsets of
/// open calls to drop, every closing order) and all orderings of the method
/// events. Self-contained except for Nfa membership. Guards at `max_events`
/// method events per completion.
bool brute_linearizable(const Trace& trace, const SpecNfa& spec, const Library& lib,
                        std::size_t max_events = 6);

// ---------------------------------------------------------------------------
// Verification suites

struct CaseResult {
    std::string suite;
    std::string id;
    std::string expected;
    std::string got;
    bool pass;
};

struct Report {
    std::vector<CaseResult> cases;

    bool all_pass() const;
    std::size_t failures() const;
    void add(std::string suite, std::string id, std::string expected, std::string got);
    void add_bool(std::string suite, std::string id, bool expected, bool got);
};

/// Committed defaults for the suites; the CLI can override them from a config
/// file so reports stay bit-reproducible.
struct SuiteConfig {
    std::uint64_t seed = 7;
    // insertion-decider agreement
    std::size_t agreement_instances = 200;
    std::size_t agreement_max_word_len = 5;
    // insertion→linearizability reduction
    std::size_t reduction_instances = 50;
    // encoding corpora
    std::size_t corpus_cases_per_p = 260;  // per address width, widths 1 and 2
    std::size_t tm_universality_cap = Nfa::kDefaultSubsetCap;
};

/// Random instances shaped for the suites (small alphabets, few insertables).
InsertionInstance random_instance(Rng& rng, std::size_t max_insertables,
                                  std::size_t max_gamma, std::uint32_t max_states);

/// insertable() versus brute_insert() on seeded instances, all short words.
Report insertion_agreement_suite(const SuiteConfig& cfg);

/// Per-instance equivalence of the insertion decision and the reduced
/// system's linearizability (witness executions replay and fail the checker;
/// universal instances survive bounded exploration).
Report reduction_equivalence_suite(const SuiteConfig& cfg);

/// Corpus of encoded configurations and sequences with seeded mutations.
struct Corpus {
    std::vector<Word> config_words;
    std::vector<Word> seq_words;
};
Corpus corpus_generate(Rng& rng, const TuringMachine& tm, const EncodingParams& params,
                       const std::vector<int>& input, std::size_t cases);

/// Gadget-versus-parser agreement on the mutation corpus (config and
/// sequence level).
Report encoding_gadget_suite(const SuiteConfig& cfg);

/// Insertion-possibility against the rule-violation automata versus the
/// decoded violation predicates; exhaustive two-configuration sequences.
Report delta_gadget_suite(const SuiteConfig& cfg);

/// End-to-end: decide_reachability versus direct simulation on the built-in
/// machine set, both address widths, with decoded-run validation.
Report reachability_suite(const SuiteConfig& cfg);

/// The machines the reachability suite runs: an immediate accepter, a
/// non-final halter, and one whose acceptance depends on a written bit.
std::vector<std::pair<std::string, TuringMachine>> harness_machines();

Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace linsert

#endif
