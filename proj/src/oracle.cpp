#include "linsert/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "linsert/li_to_lin.hpp"
#include "linsert/tm_to_li.hpp"

namespace linsert {

Nfa random_nfa(Rng& rng, const AlphabetRef& alphabet, const RandomNfaParams& params) {
    const StateId n = static_cast<StateId>(1 + rng.below(params.max_states));
    std::vector<Transition> trans;
    for (StateId q = 0; q < n; ++q) {
        const std::uint64_t fan = rng.below(params.transitions_per_state * 2 + 1);
        for (std::uint64_t i = 0; i < fan; ++i) {
            // Occasional epsilon edges keep the closure paths exercised.
            SymbolId label = rng.chance(1, 8)
                                 ? kEpsilon
                                 : static_cast<SymbolId>(rng.below(alphabet->size()));
            trans.push_back({q, label, static_cast<StateId>(rng.below(n))});
        }
    }
    std::vector<StateId> init{0};
    for (StateId q = 1; q < n; ++q)
        if (rng.chance(1, 8)) init.push_back(q);
    std::vector<StateId> fin;
    for (StateId q = 0; q < n; ++q)
        if (rng.chance(params.final_num, params.final_den)) fin.push_back(q);
    return Nfa(n, alphabet, std::move(trans), std::move(init), std::move(fin));
}

Word random_word(Rng& rng, std::size_t max_len, std::size_t alphabet_size) {
    Word w(rng.below(max_len + 1));
    for (auto& s : w) s = static_cast<SymbolId>(rng.below(alphabet_size));
    return w;
}

// ---------------------------------------------------------------------------
// brute_insert

namespace {

std::size_t arrangement_count(std::size_t word_len, std::size_t l) {
    // l! * C(word_len + l, l), saturating.
    std::size_t count = 1;
    for (std::size_t i = 2; i <= l; ++i) count *= i;
    for (std::size_t i = 1; i <= l; ++i) {
        count = count * (word_len + i);
        count /= i;
        if (count > (std::size_t{1} << 40)) return std::size_t{1} << 40;
    }
    return count;
}

}  // namespace

bool brute_insert(const InsertionInstance& inst, const Word& w,
                  std::size_t arrangement_cap) {
    const std::size_t l = inst.insertable_count();
    const std::size_t count = arrangement_count(w.size(), l);
    if (count > arrangement_cap)
        throw SizeGuardError("brute_insert: " + std::to_string(count) +
                             " arrangements exceed the guard of " +
                             std::to_string(arrangement_cap));

    const Alphabet& full = inst.nfa().alphabet();
    const Alphabet& gamma = *inst.gamma_alphabet();
    Word base;  // w mapped into the instance alphabet
    base.reserve(w.size());
    for (SymbolId g : w) base.push_back(full.id_of(gamma.display(g)));
    std::vector<SymbolId> ins_ids;
    for (const auto& d : inst.insertables()) ins_ids.push_back(full.id_of(d));

    if (l == 0) return accepts(inst.nfa(), base);

    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Monotone split points 0 <= p_1 <= ... <= p_l <= |w|.
        std::vector<std::size_t> cuts(l, 0);
        for (;;) {
            Word arranged;
            std::size_t prev = 0;
            for (std::size_t j = 0; j < l; ++j) {
                arranged.insert(arranged.end(), base.begin() + prev,
                                base.begin() + cuts[j]);
                arranged.push_back(ins_ids[perm[j]]);
                prev = cuts[j];
            }
            arranged.insert(arranged.end(), base.begin() + prev, base.end());
            if (accepts(inst.nfa(), arranged)) return true;

            // Next monotone tuple.
            std::size_t j = l;
            while (j > 0 && cuts[j - 1] == base.size()) --j;
            if (j == 0) break;
            ++cuts[j - 1];
            for (std::size_t i = j; i < l; ++i) cuts[i] = cuts[j - 1];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// brute_linearizable

namespace {

struct BruteEvent {
    std::uint32_t method;
    std::size_t call_index;
    std::size_t ret_index;
};

struct MatchedTrace {
    std::vector<BruteEvent> complete;
    std::vector<std::pair<std::size_t, std::uint32_t>> open;  // (call index, method)
};

MatchedTrace match_trace(const Trace& trace) {
    MatchedTrace out;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> stacks;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const Event& e = trace[i];
        if (e.thread >= stacks.size()) stacks.resize(e.thread + 1);
        auto& st = stacks[e.thread];
        if (e.kind == Event::Kind::Call) {
            if (!st.empty()) throw InputError("trace: nested call on one thread");
            st.emplace_back(i, e.method);
        } else {
            if (st.empty()) throw InputError("trace: return without open call");
            out.complete.push_back({st.back().second, st.back().first, i});
            st.pop_back();
        }
    }
    for (std::size_t t = 0; t < stacks.size(); ++t)
        for (auto [idx, m] : stacks[t]) out.open.emplace_back(idx, m);
    std::sort(out.open.begin(), out.open.end());
    return out;
}

}  // namespace

bool brute_linearizable(const Trace& trace, const SpecNfa& spec, const Library& lib,
                        std::size_t max_events) {
    MatchedTrace matched = match_trace(trace);
    const std::size_t n_open = matched.open.size();
    if (n_open > 20) throw SizeGuardError("brute_linearizable: too many open calls");

    std::vector<std::optional<SymbolId>> label_of(lib.methods.size());
    for (std::size_t m = 0; m < lib.methods.size(); ++m)
        label_of[m] = spec.nfa.alphabet().find(lib.methods[m].name);

    for (std::uint32_t keep = 0; keep < (1u << n_open); ++keep) {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < n_open; ++i)
            if (keep & (1u << i)) kept.push_back(i);

        std::sort(kept.begin(), kept.end());
        do {
            // Closing order: kept opens returned at the end in this order.
            std::vector<BruteEvent> events = matched.complete;
            for (std::size_t r = 0; r < kept.size(); ++r)
                events.push_back({matched.open[kept[r]].second,
                                  matched.open[kept[r]].first, trace.size() + r});
            if (events.size() > max_events)
                throw SizeGuardError("brute_linearizable: completion has " +
                                     std::to_string(events.size()) +
                                     " events, guard is " + std::to_string(max_events));

            std::vector<std::size_t> perm(events.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool respects = true;
                for (std::size_t a = 0; a < perm.size() && respects; ++a)
                    for (std::size_t b = a + 1; b < perm.size() && respects; ++b)
                        if (events[perm[b]].ret_index < events[perm[a]].call_index)
                            respects = false;
                if (!respects) continue;

                Word word;
                bool label_ok = true;
                for (std::size_t idx : perm) {
                    if (!label_of[events[idx].method]) {
                        label_ok = false;
                        break;
                    }
                    word.push_back(*label_of[events[idx].method]);
                }
                if (label_ok && accepts(spec.nfa, word)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
        } while (std::next_permutation(kept.begin(), kept.end()));
    }
    return false;
}

// ---------------------------------------------------------------------------
// Reports

bool Report::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

void Report::add(std::string suite, std::string id, std::string expected,
                 std::string got) {
    bool pass = expected == got;
    cases.push_back({std::move(suite), std::move(id), std::move(expected),
                     std::move(got), pass});
}

void Report::add_bool(std::string suite, std::string id, bool expected, bool got) {
    add(std::move(suite), std::move(id), expected ? "true" : "false",
        got ? "true" : "false");
}

}  // namespace linsert
