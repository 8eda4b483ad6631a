#ifndef LINSERT_MEMORY_MODEL_HPP
#define LINSERT_MEMORY_MODEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linsert/errors.hpp"

namespace linsert {

using ValueId = std::uint32_t;
using MethodStateId = std::uint32_t;

enum class MemOp : std::uint8_t { Read, Write };

struct MethodTransition {
    MethodStateId from;
    MemOp op;
    ValueId value;
    MethodStateId to;
};

/// Finite-state method body over the shared variable. Reads guess a value and
/// are enabled only when the guess matches; writes update the variable.
struct Method {
    std::string name;
    MethodStateId state_count;
    MethodStateId initial;
    MethodStateId final;
    std::vector<MethodTransition> delta;
};

struct Library {
    std::vector<std::string> domain;  // value displays; ids are positions
    ValueId initial_value;
    std::vector<Method> methods;

    void validate() const;
    std::size_t method_index(const std::string& name) const;
};

/// Thread status: idle, or running method `method` in state `state`.
struct ThreadStatus {
    bool idle = true;
    std::uint32_t method = 0;
    MethodStateId state = 0;

    friend bool operator==(const ThreadStatus& a, const ThreadStatus& b) {
        if (a.idle != b.idle) return false;
        return a.idle || (a.method == b.method && a.state == b.state);
    }
};

struct Configuration {
    ValueId shared;
    std::vector<ThreadStatus> threads;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.shared == b.shared && a.threads == b.threads;
    }
};

Configuration initial_configuration(const Library& lib, std::uint32_t k);

/// Observable events. Threads and methods are 0-based internally; the textual
/// format uses 1-based ids.
struct Event {
    enum class Kind : std::uint8_t { Call, Ret } kind;
    std::uint32_t thread;
    std::uint32_t method;  // meaningful for Call only

    friend bool operator==(const Event& a, const Event& b) {
        return a.kind == b.kind && a.thread == b.thread &&
               (a.kind == Event::Kind::Ret || a.method == b.method);
    }
};

using Trace = std::vector<Event>;

/// One transition of the interleaved system: the event (absent for internal
/// reads/writes) and the configuration reached.
struct Step {
    std::optional<Event> event;
    Configuration after;
};

/// All steps enabled in γ, in deterministic order: by thread, then
/// call < return < read < write, then method/transition definition order.
std::vector<Step> successors(const Library& lib, std::uint32_t k,
                             const Configuration& gamma);

/// An execution as materialized by the builders: initial configuration plus
/// the step sequence.
struct Execution {
    Configuration initial;
    std::vector<Step> steps;

    Trace trace() const;
};

/// True iff every step of exec is enabled from its predecessor.
bool validate_execution(const Library& lib, std::uint32_t k, const Execution& exec);

/// True iff some execution of at most max_steps steps exhibits the trace.
bool replayable(const Library& lib, std::uint32_t k, const Trace& trace,
                std::size_t max_steps);

inline constexpr std::size_t kDefaultFrontierCap = 20'000'000;

/// Set of traces of all executions of length <= max_steps, deduplicated, in
/// first-reached order. Exploration merges states only when both the trace
/// and the configuration coincide.
std::vector<Trace> enumerate_traces(const Library& lib, std::uint32_t k,
                                    std::size_t max_steps,
                                    std::size_t cap = kDefaultFrontierCap);

/// Streaming variant: visit(trace) is called once per distinct trace, in
/// enumeration order; returning false stops the exploration.
void for_each_trace(const Library& lib, std::uint32_t k, std::size_t max_steps,
                    std::size_t cap, const std::function<bool(const Trace&)>& visit);

/// Per-thread call/ret alternation check (trace invariant).
bool well_nested(const Trace& trace);
bool is_complete(const Trace& trace);
std::vector<std::size_t> open_call_positions(const Trace& trace);

/// All completions of a trace: drop any subset of open calls, close the rest
/// by appending returns in every order. Ordered by number of closed calls.
std::vector<Trace> completions(const Trace& trace, std::size_t cap = 1'000'000);

/// A matched call/return pair of a complete trace.
struct MethodEvent {
    std::uint32_t method;
    std::uint32_t thread;
    std::size_t call_index;
    std::size_t ret_index;
};

struct HappensBefore {
    std::size_t n = 0;
    std::vector<char> before;  // n*n matrix; e1 precedes e2 iff ret(e1) < call(e2)

    bool precedes(std::size_t e1, std::size_t e2) const { return before[e1 * n + e2]; }
};

/// Method events of a complete trace in call order, with the happens-before
/// relation. Throws InputError on an incomplete trace.
std::pair<std::vector<MethodEvent>, HappensBefore> method_events(const Trace& trace);

}  // namespace linsert

#endif
