#include "linsert/lin_check.hpp"

#include <algorithm>

#include "linsert/bitset.hpp"

namespace linsert {

namespace {

// Spec-automaton tables shared across the trace checks of one bounded run.
struct SpecTables {
    std::size_t n;
    Bitset initial_closed;
    Bitset finals;
    std::vector<std::vector<StateId>> closure;                 // per state
    std::vector<std::vector<std::pair<StateId, StateId>>> edges;  // per symbol
    std::vector<std::optional<SymbolId>> label_of;             // per method

    SpecTables(const SpecNfa& spec, const Library& lib) {
        const Nfa& s = spec.nfa;
        n = s.state_count();
        std::vector<std::vector<StateId>> eps(n);
        edges.resize(s.alphabet().size());
        for (const auto& t : s.transitions()) {
            if (t.label == kEpsilon)
                eps[t.from].push_back(t.to);
            else
                edges[t.label].emplace_back(t.from, t.to);
        }
        closure.resize(n);
        for (StateId q = 0; q < n; ++q) {
            std::vector<char> mark(n, 0);
            std::vector<StateId> stack{q};
            mark[q] = 1;
            while (!stack.empty()) {
                StateId cur = stack.back();
                stack.pop_back();
                closure[q].push_back(cur);
                for (StateId nxt : eps[cur])
                    if (!mark[nxt]) {
                        mark[nxt] = 1;
                        stack.push_back(nxt);
                    }
            }
        }
        initial_closed = Bitset(n);
        for (StateId q : s.initial())
            for (StateId r : closure[q]) initial_closed.set(r);
        finals = Bitset(n);
        for (StateId q : s.final_states()) finals.set(q);
        label_of.resize(lib.methods.size());
        for (std::size_t m = 0; m < lib.methods.size(); ++m)
            label_of[m] = s.alphabet().find(lib.methods[m].name);
    }

    Bitset post(const Bitset& set, SymbolId s) const {
        Bitset out(n);
        for (auto [from, to] : edges[s])
            if (set.test(from))
                for (StateId r : closure[to]) out.set(r);
        return out;
    }
};

// Linear-extension search over one completion, memoized on
// (ordered-event mask, spec state set) with subsumption: a state set contained
// in an already-failed one fails as well, so only maximal failures are kept.
struct ExtensionSearch {
    const SpecTables& spec;
    const std::vector<MethodEvent>& events;
    const HappensBefore& hb;
    std::vector<std::uint64_t> pred_mask;
    std::vector<std::vector<Bitset>> failed;  // per mask, maximal failed sets
    std::vector<std::size_t> order;

    ExtensionSearch(const SpecTables& s, const std::vector<MethodEvent>& ev,
                    const HappensBefore& h)
        : spec(s), events(ev), hb(h), failed(std::size_t{1} << ev.size()) {
        pred_mask.assign(events.size(), 0);
        for (std::size_t e = 0; e < events.size(); ++e)
            for (std::size_t p = 0; p < events.size(); ++p)
                if (hb.precedes(p, e)) pred_mask[e] |= std::uint64_t{1} << p;
    }

    bool known_failed(std::uint64_t mask, const Bitset& set) const {
        for (const auto& f : failed[mask])
            if (set.subset_of(f)) return true;
        return false;
    }

    void record_failure(std::uint64_t mask, const Bitset& set) {
        auto& list = failed[mask];
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](const Bitset& f) { return f.subset_of(set); }),
                   list.end());
        list.push_back(set);
    }

    bool search(std::uint64_t mask, const Bitset& set) {
        if (mask == (std::uint64_t{1} << events.size()) - 1)
            return set.intersects(spec.finals);
        if (known_failed(mask, set)) return false;
        for (std::size_t e = 0; e < events.size(); ++e) {
            if (mask & (std::uint64_t{1} << e)) continue;
            if ((pred_mask[e] & mask) != pred_mask[e]) continue;
            auto label = spec.label_of[events[e].method];
            if (!label) continue;
            Bitset next = spec.post(set, *label);
            if (!next.any()) continue;
            order.push_back(e);
            if (search(mask | (std::uint64_t{1} << e), next)) return true;
            order.pop_back();
        }
        record_failure(mask, set);
        return false;
    }
};

std::optional<LinearizationWitness> check_completion(const Trace& completion,
                                                     const SpecTables& tables,
                                                     const Library& lib) {
    auto [events, hb] = method_events(completion);
    if (events.size() > 62)
        throw InputError("trace_linearizable: more than 62 method events");
    ExtensionSearch search(tables, events, hb);
    if (!search.search(0, tables.initial_closed)) return std::nullopt;
    LinearizationWitness w;
    w.completion = completion;
    w.order = search.order;
    for (std::size_t e : search.order) w.labels.push_back(lib.methods[events[e].method].name);
    return w;
}

std::optional<LinearizationWitness> check_trace(const Trace& trace,
                                                const SpecTables& tables,
                                                const Library& lib) {
    const std::vector<std::size_t> opens = open_call_positions(trace);
    const std::size_t n = opens.size();

    // Completions with the fewest closed calls first; the closing order does
    // not affect happens-before (all appended returns follow every call), so
    // one canonical order per subset suffices.
    for (std::size_t close_count = 0; close_count <= n; ++close_count) {
        std::vector<std::size_t> comb(close_count);
        for (std::size_t i = 0; i < close_count; ++i) comb[i] = i;
        for (;;) {
            std::vector<char> keep(trace.size(), 0);
            for (std::size_t i = 0; i < close_count; ++i) keep[opens[comb[i]]] = 1;
            Trace completion;
            for (std::size_t i = 0; i < trace.size(); ++i) {
                bool open_here = std::binary_search(opens.begin(), opens.end(), i);
                if (!open_here || keep[i]) completion.push_back(trace[i]);
            }
            for (std::size_t i = 0; i < close_count; ++i)
                completion.push_back(Event{Event::Kind::Ret, trace[opens[comb[i]]].thread, 0});

            if (auto w = check_completion(completion, tables, lib)) return w;

            if (close_count == 0) break;
            std::size_t i = close_count;
            while (i > 0 && comb[i - 1] == n - close_count + (i - 1)) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < close_count; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LinearizationWitness> trace_linearizable(const Trace& trace,
                                                       const SpecNfa& spec,
                                                       const Library& lib) {
    SpecTables tables(spec, lib);
    return check_trace(trace, tables, lib);
}

BoundedCheckResult library_linearizable_bounded(const Library& lib, std::uint32_t k,
                                                const SpecNfa& spec,
                                                std::size_t max_steps,
                                                std::size_t cap) {
    SpecTables tables(spec, lib);
    BoundedCheckResult result;
    for_each_trace(lib, k, max_steps, cap, [&](const Trace& t) {
        ++result.stats.traces_checked;
        if (!check_trace(t, tables, lib)) {
            result.counterexample = t;
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace linsert
