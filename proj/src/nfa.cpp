#include "linsert/nfa.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

namespace linsert {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> displays) {
    for (auto& d : displays) intern(d);
    (void)displays;
}

SymbolId Alphabet::intern(const std::string& display) {
    auto it = index_.find(display);
    if (it != index_.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(displays_.size());
    displays_.push_back(display);
    index_.emplace(display, id);
    return id;
}

std::optional<SymbolId> Alphabet::find(const std::string& display) const {
    auto it = index_.find(display);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::id_of(const std::string& display) const {
    auto id = find(display);
    if (!id) throw InputError("unknown symbol: '" + display + "'");
    return *id;
}

bool Alphabet::subset_of(const Alphabet& other) const {
    for (const auto& d : displays_)
        if (!other.find(d)) return false;
    return true;
}

Word Alphabet::word(const std::vector<std::string>& displays) const {
    Word w;
    w.reserve(displays.size());
    for (const auto& d : displays) w.push_back(id_of(d));
    return w;
}

std::vector<std::string> Alphabet::displays_of(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (SymbolId s : w) out.push_back(display(s));
    return out;
}

// ---------------------------------------------------------------------------
// Nfa

bool operator<(const Transition& a, const Transition& b) {
    // Epsilon labels order before symbol labels.
    auto key = [](const Transition& t) {
        std::uint64_t l = (t.label == kEpsilon) ? 0 : std::uint64_t{t.label} + 1;
        return std::make_tuple(t.from, l, t.to);
    };
    return key(a) < key(b);
}

namespace {

std::vector<StateId> canonical_states(std::vector<StateId> v, StateId limit,
                                      const char* what) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.back() >= limit)
        throw InputError(std::string(what) + " state out of range: " +
                         std::to_string(v.back()));
    return v;
}

}  // namespace

Nfa::Nfa(StateId state_count, AlphabetRef alphabet, std::vector<Transition> transitions,
         std::vector<StateId> initial, std::vector<StateId> final_states)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(canonical_states(std::move(initial), state_count, "initial")),
      final_(canonical_states(std::move(final_states), state_count, "final")),
      lazy_(std::make_shared<LazyCache>()) {
    if (!alphabet_) throw InputError("nfa: null alphabet");
    for (const auto& t : transitions_) {
        if (t.from >= state_count_ || t.to >= state_count_)
            throw InputError("transition endpoint out of range");
        if (t.label != kEpsilon && t.label >= alphabet_->size())
            throw InputError("transition label out of range");
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
}

bool Nfa::is_final(StateId q) const {
    return std::binary_search(final_.begin(), final_.end(), q);
}

bool Nfa::operator==(const Nfa& other) const {
    return state_count_ == other.state_count_ && *alphabet_ == *other.alphabet_ &&
           transitions_ == other.transitions_ && initial_ == other.initial_ &&
           final_ == other.final_;
}

// Precomputed structures for the subset-based algorithms. `row(s, q)` is the
// epsilon-closed set of states reachable from q by one s-labeled move.
struct Nfa::MatchCache {
    std::vector<std::vector<StateId>> closure;        // per state
    std::vector<std::vector<StateId>> rows;           // [symbol * n + state]
    Bitset initial_closed;
    Bitset final_set;
    std::size_t n = 0;

    const std::vector<StateId>& row(SymbolId s, StateId q) const {
        return rows[static_cast<std::size_t>(s) * n + q];
    }
};

struct Nfa::LazyCache {
    std::once_flag once;
    std::shared_ptr<const MatchCache> cache;
};

const Nfa::MatchCache& Nfa::cache() const {
    std::call_once(lazy_->once, [this] {
        auto c = std::make_shared<MatchCache>();
        const std::size_t n = state_count_;
        c->n = n;

        std::vector<std::vector<StateId>> eps_adj(n);
        std::vector<std::vector<std::pair<SymbolId, StateId>>> sym_adj(n);
        for (const auto& t : transitions_) {
            if (t.label == kEpsilon)
                eps_adj[t.from].push_back(t.to);
            else
                sym_adj[t.from].emplace_back(t.label, t.to);
        }

        c->closure.resize(n);
        std::vector<char> mark(n, 0);
        for (StateId q = 0; q < n; ++q) {
            std::vector<StateId> stack{q};
            mark[q] = 1;
            std::vector<StateId> out;
            while (!stack.empty()) {
                StateId cur = stack.back();
                stack.pop_back();
                out.push_back(cur);
                for (StateId nxt : eps_adj[cur])
                    if (!mark[nxt]) {
                        mark[nxt] = 1;
                        stack.push_back(nxt);
                    }
            }
            std::sort(out.begin(), out.end());
            for (StateId s : out) mark[s] = 0;
            c->closure[q] = std::move(out);
        }

        const std::size_t sigma = alphabet_->size();
        c->rows.resize(sigma * n);
        for (StateId q = 0; q < n; ++q) {
            for (auto [s, to] : sym_adj[q]) {
                auto& rw = c->rows[static_cast<std::size_t>(s) * n + q];
                rw.insert(rw.end(), c->closure[to].begin(), c->closure[to].end());
            }
        }
        for (auto& rw : c->rows) {
            std::sort(rw.begin(), rw.end());
            rw.erase(std::unique(rw.begin(), rw.end()), rw.end());
        }

        c->initial_closed = Bitset(n);
        for (StateId q : initial_)
            for (StateId r : c->closure[q]) c->initial_closed.set(r);
        c->final_set = Bitset(n);
        for (StateId q : final_) c->final_set.set(q);

        lazy_->cache = std::move(c);
    });
    return *lazy_->cache;
}

bool accepts(const Nfa& n, const Word& w) {
    for (SymbolId s : w)
        if (s >= n.alphabet().size())
            throw InputError("accepts: letter not in the automaton's alphabet");
    const auto& c = n.cache();
    Bitset cur = c.initial_closed;
    for (SymbolId s : w) {
        Bitset next(c.n);
        cur.for_each([&](std::size_t q) {
            for (StateId r : c.row(s, static_cast<StateId>(q))) next.set(r);
        });
        cur = std::move(next);
        if (!cur.any()) break;
    }
    return cur.intersects(c.final_set);
}

bool accepts(const Nfa& n, const std::vector<std::string>& displays) {
    return accepts(n, n.alphabet().word(displays));
}

// ---------------------------------------------------------------------------
// Boolean combinations

namespace {

// Alphabet of `a` extended by `b`'s new displays, plus b's label remapping.
std::pair<AlphabetRef, std::vector<SymbolId>> merge_alphabets(const Nfa& a, const Nfa& b) {
    auto merged = std::make_shared<Alphabet>(a.alphabet().displays());
    std::vector<SymbolId> remap(b.alphabet().size());
    for (SymbolId s = 0; s < b.alphabet().size(); ++s)
        remap[s] = merged->intern(b.alphabet().display(s));
    return {merged, remap};
}

}  // namespace

Nfa union_nfa(const Nfa& a, const Nfa& b) {
    auto [alphabet, remap] = merge_alphabets(a, b);
    std::vector<Transition> trans = a.transitions();
    const StateId off = a.state_count();
    for (const auto& t : b.transitions())
        trans.push_back({t.from + off,
                         t.label == kEpsilon ? kEpsilon : remap[t.label],
                         t.to + off});
    std::vector<StateId> init = a.initial();
    std::vector<StateId> fin = a.final_states();
    for (StateId q : b.initial()) init.push_back(q + off);
    for (StateId q : b.final_states()) fin.push_back(q + off);
    return Nfa(a.state_count() + b.state_count(), alphabet, std::move(trans),
               std::move(init), std::move(fin));
}

Nfa union_all(const std::vector<Nfa>& parts) {
    if (parts.empty()) throw InputError("union_all: empty list");
    Nfa out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = union_nfa(out, parts[i]);
    return out;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    auto [alphabet, remap] = merge_alphabets(a, b);

    // Product over reachable pairs; epsilon moves advance one side at a time.
    const auto key = [&](StateId qa, StateId qb) {
        return std::uint64_t{qa} * b.state_count() + qb;
    };
    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    std::deque<StateId> work;
    auto get = [&](StateId qa, StateId qb) {
        auto [it, inserted] = ids.emplace(key(qa, qb), static_cast<StateId>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(qa, qb);
            work.push_back(it->second);
        }
        return it->second;
    };

    std::vector<StateId> init;
    for (StateId qa : a.initial())
        for (StateId qb : b.initial()) init.push_back(get(qa, qb));

    std::vector<std::vector<std::pair<SymbolId, StateId>>> adj_a(a.state_count()),
        adj_b(b.state_count());
    for (const auto& t : a.transitions()) adj_a[t.from].emplace_back(t.label, t.to);
    for (const auto& t : b.transitions())
        adj_b[t.from].emplace_back(t.label == kEpsilon ? kEpsilon : remap[t.label], t.to);

    std::vector<Transition> trans;
    while (!work.empty()) {
        StateId id = work.front();
        work.pop_front();
        auto [qa, qb] = pairs[id];
        for (auto [s, to] : adj_a[qa]) {
            if (s == kEpsilon)
                trans.push_back({id, kEpsilon, get(to, qb)});
            else
                for (auto [s2, to2] : adj_b[qb])
                    if (s2 == s) trans.push_back({id, s, get(to, to2)});
        }
        for (auto [s, to] : adj_b[qb])
            if (s == kEpsilon) trans.push_back({id, kEpsilon, get(qa, to)});
    }

    std::vector<StateId> fin;
    for (StateId id = 0; id < pairs.size(); ++id)
        if (a.is_final(pairs[id].first) && b.is_final(pairs[id].second))
            fin.push_back(id);

    return Nfa(static_cast<StateId>(pairs.size()), alphabet, std::move(trans),
               std::move(init), std::move(fin));
}

// ---------------------------------------------------------------------------
// Subset construction

namespace {

struct SubsetSpace {
    std::vector<Bitset> sets;
    std::unordered_map<std::uint64_t, std::vector<StateId>> buckets;

    // Returns (id, inserted).
    std::pair<StateId, bool> get(const Bitset& s, std::size_t cap) {
        auto& bucket = buckets[s.hash()];
        for (StateId id : bucket)
            if (sets[id] == s) return {id, false};
        if (sets.size() >= cap)
            throw ResourceLimitError("subset construction exceeded state cap", cap);
        StateId id = static_cast<StateId>(sets.size());
        sets.push_back(s);
        bucket.push_back(id);
        return {id, true};
    }
};

}  // namespace

Nfa complement(const Nfa& n, const Alphabet& over, std::size_t cap) {
    if (!n.alphabet().subset_of(over))
        throw InputError("complement: automaton alphabet not contained in target");
    auto target = std::make_shared<const Alphabet>(over.displays());

    const auto& c = n.cache();
    std::vector<SymbolId> to_inner(target->size(), kEpsilon);
    for (SymbolId s = 0; s < target->size(); ++s)
        if (auto id = n.alphabet().find(target->display(s))) to_inner[s] = *id;

    SubsetSpace space;
    auto [root, _] = space.get(c.initial_closed, cap);
    (void)root;

    std::vector<Transition> trans;
    std::vector<StateId> fin;
    for (StateId id = 0; id < space.sets.size(); ++id) {
        Bitset cur = space.sets[id];  // copy: space.sets may reallocate below
        if (!cur.intersects(c.final_set)) fin.push_back(id);
        for (SymbolId s = 0; s < target->size(); ++s) {
            Bitset next(c.n);
            if (to_inner[s] != kEpsilon)
                cur.for_each([&](std::size_t q) {
                    for (StateId r : c.row(to_inner[s], static_cast<StateId>(q)))
                        next.set(r);
                });
            auto [to, __] = space.get(next, cap);
            (void)__;
            trans.push_back({id, s, to});
        }
    }

    return Nfa(static_cast<StateId>(space.sets.size()), target, std::move(trans), {0},
               std::move(fin));
}

// ---------------------------------------------------------------------------
// Shortest accepted word

std::optional<Word> shortest_word(const Nfa& n) {
    const auto& c = n.cache();
    const std::size_t nn = c.n;
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

    // dist[q]: fewest letters needed from q to acceptance (epsilon moves are
    // already folded into the rows, so a state accepts iff its closure meets
    // the final set; rows start from closed states, hence compare via closure).
    std::vector<std::uint32_t> dist(nn, kInf);
    std::deque<StateId> work;
    for (StateId q = 0; q < nn; ++q) {
        bool accepting = false;
        for (StateId r : c.closure[q])
            if (c.final_set.test(r)) accepting = true;
        if (accepting) {
            dist[q] = 0;
            work.push_back(q);
        }
    }
    // Reverse edges of the closed-row graph.
    std::vector<std::vector<StateId>> rev(nn);
    for (SymbolId s = 0; s < n.alphabet().size(); ++s)
        for (StateId q = 0; q < nn; ++q)
            for (StateId r : c.row(s, q)) rev[r].push_back(q);
    for (auto& v : rev) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (StateId p : rev[q])
            if (dist[p] == kInf) {
                dist[p] = dist[q] + 1;
                work.push_back(p);
            }
    }

    std::uint32_t best = kInf;
    c.initial_closed.for_each([&](std::size_t q) { best = std::min(best, dist[q]); });
    if (best == kInf) return std::nullopt;

    // Greedy reconstruction: always take the smallest symbol that keeps the
    // remaining distance on track; yields the id-lexicographically least word.
    Word w;
    Bitset cur = c.initial_closed;
    std::uint32_t remaining = best;
    while (remaining > 0) {
        bool advanced = false;
        for (SymbolId s = 0; s < n.alphabet().size() && !advanced; ++s) {
            Bitset next(nn);
            cur.for_each([&](std::size_t q) {
                for (StateId r : c.row(s, static_cast<StateId>(q))) next.set(r);
            });
            std::uint32_t d = kInf;
            next.for_each([&](std::size_t q) { d = std::min(d, dist[q]); });
            if (d == remaining - 1) {
                w.push_back(s);
                cur = std::move(next);
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("shortest_word: reconstruction failed");
        --remaining;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Universality

bool is_universal_result(const UniversalityResult& r) {
    return std::holds_alternative<Universal>(r);
}

const Word* counterexample_of(const UniversalityResult& r) {
    if (auto* c = std::get_if<Counterexample>(&r)) return &c->word;
    return nullptr;
}

namespace {

// Search node metadata; subsets themselves are kept only while needed.
struct UnivNode {
    std::uint32_t parent;
    SymbolId symbol;
};

}  // namespace

UniversalityResult is_universal(const Nfa& raw, const Alphabet& over, std::size_t cap) {
    if (!raw.alphabet().subset_of(over))
        throw InputError("is_universal: automaton alphabet not contained in target");

    // Trimming preserves the language and sharply reduces subset width on the
    // generated gadget automata.
    Nfa n = trimmed(raw);
    const auto& c = n.cache();
    const std::size_t nn = c.n;

    std::vector<SymbolId> to_inner(over.size(), kEpsilon);
    for (SymbolId s = 0; s < over.size(); ++s)
        if (auto id = n.alphabet().find(over.display(s))) to_inner[s] = *id;

    auto reconstruct = [&](const std::vector<UnivNode>& nodes, std::uint32_t at,
                           SymbolId last) {
        Word w;
        if (last != kEpsilon) w.push_back(last);
        while (at != 0) {
            w.push_back(nodes[at].symbol);
            at = nodes[at].parent;
        }
        std::reverse(w.begin(), w.end());
        return UniversalityResult{Counterexample{std::move(w)}};
    };

    std::vector<UnivNode> nodes;
    nodes.push_back({0, kEpsilon});  // root
    if (!c.initial_closed.intersects(c.final_set))
        return Counterexample{Word{}};

    // Minimal visited subsets; a new subset that contains one of these cannot
    // reject anything the smaller set does not reject sooner.
    struct Member {
        Bitset set;
        std::size_t pop;
        bool alive;
    };
    std::vector<Member> antichain;
    auto subsumed = [&](const Bitset& s, std::size_t pop) {
        for (const auto& m : antichain)
            if (m.alive && m.pop <= pop && m.set.subset_of(s)) return true;
        return false;
    };
    auto add_to_antichain = [&](Bitset s) {
        std::size_t pop = s.count();
        for (auto& m : antichain)
            if (m.alive && pop <= m.pop && s.subset_of(m.set)) m.alive = false;
        antichain.push_back({std::move(s), pop, true});
    };

    add_to_antichain(c.initial_closed);

    struct QueueEntry {
        Bitset set;
        std::uint32_t node;
    };
    std::deque<QueueEntry> queue;
    queue.push_back({c.initial_closed, 0});

    while (!queue.empty()) {
        QueueEntry cur = std::move(queue.front());
        queue.pop_front();
        for (SymbolId s = 0; s < over.size(); ++s) {
            Bitset next(nn);
            if (to_inner[s] != kEpsilon)
                cur.set.for_each([&](std::size_t q) {
                    for (StateId r : c.row(to_inner[s], static_cast<StateId>(q)))
                        next.set(r);
                });
            if (!next.intersects(c.final_set))
                return reconstruct(nodes, cur.node, s);
            std::size_t pop = next.count();
            if (subsumed(next, pop)) continue;
            if (nodes.size() >= cap)
                throw ResourceLimitError("universality check exceeded exploration cap",
                                         cap);
            add_to_antichain(next);
            nodes.push_back({cur.node, s});
            queue.push_back({std::move(next), static_cast<std::uint32_t>(nodes.size() - 1)});
        }
    }
    return Universal{};
}

// ---------------------------------------------------------------------------
// Structural cleanups

Nfa without_epsilons(const Nfa& n) {
    const auto& c = n.cache();
    std::vector<Transition> trans;
    for (StateId q = 0; q < n.state_count(); ++q)
        for (SymbolId s = 0; s < n.alphabet().size(); ++s)
            for (StateId r : c.row(s, q)) trans.push_back({q, s, r});
    std::vector<StateId> fin;
    for (StateId q = 0; q < n.state_count(); ++q)
        for (StateId r : c.closure[q])
            if (c.final_set.test(r)) {
                fin.push_back(q);
                break;
            }
    return Nfa(n.state_count(), n.alphabet_ref(), std::move(trans), n.initial(),
               std::move(fin));
}

Nfa trimmed(const Nfa& n) {
    const StateId nn = n.state_count();
    std::vector<std::vector<StateId>> fwd(nn), bwd(nn);
    for (const auto& t : n.transitions()) {
        fwd[t.from].push_back(t.to);
        bwd[t.to].push_back(t.from);
    }
    auto bfs = [&](const std::vector<StateId>& seeds,
                   const std::vector<std::vector<StateId>>& adj) {
        std::vector<char> seen(nn, 0);
        std::deque<StateId> work(seeds.begin(), seeds.end());
        for (StateId q : seeds) seen[q] = 1;
        while (!work.empty()) {
            StateId q = work.front();
            work.pop_front();
            for (StateId r : adj[q])
                if (!seen[r]) {
                    seen[r] = 1;
                    work.push_back(r);
                }
        }
        return seen;
    };
    auto reach = bfs(n.initial(), fwd);
    auto coreach = bfs(n.final_states(), bwd);

    std::vector<StateId> remap(nn, kEpsilon);
    StateId next_id = 0;
    for (StateId q = 0; q < nn; ++q)
        if (reach[q] && coreach[q]) remap[q] = next_id++;

    std::vector<Transition> trans;
    for (const auto& t : n.transitions())
        if (remap[t.from] != kEpsilon && remap[t.to] != kEpsilon)
            trans.push_back({remap[t.from], t.label, remap[t.to]});
    std::vector<StateId> init, fin;
    for (StateId q : n.initial())
        if (remap[q] != kEpsilon) init.push_back(remap[q]);
    for (StateId q : n.final_states())
        if (remap[q] != kEpsilon) fin.push_back(remap[q]);
    return Nfa(next_id, n.alphabet_ref(), std::move(trans), std::move(init),
               std::move(fin));
}

Nfa with_self_loops(const Nfa& n, const std::vector<std::string>& loop_displays) {
    auto alphabet = std::make_shared<Alphabet>(n.alphabet().displays());
    std::vector<Transition> trans = n.transitions();
    for (const auto& d : loop_displays) {
        SymbolId s = alphabet->intern(d);
        for (StateId q = 0; q < n.state_count(); ++q) trans.push_back({q, s, q});
    }
    return Nfa(n.state_count(), std::move(alphabet), std::move(trans), n.initial(),
               n.final_states());
}

Nfa relabeled(const Nfa& n, const AlphabetRef& target,
              const std::unordered_map<std::string, std::string>& rename) {
    std::vector<SymbolId> remap(n.alphabet().size());
    for (SymbolId s = 0; s < n.alphabet().size(); ++s) {
        const std::string& d = n.alphabet().display(s);
        auto it = rename.find(d);
        remap[s] = target->id_of(it == rename.end() ? d : it->second);
    }
    std::vector<Transition> trans;
    trans.reserve(n.transitions().size());
    for (const auto& t : n.transitions())
        trans.push_back({t.from, t.label == kEpsilon ? kEpsilon : remap[t.label], t.to});
    return Nfa(n.state_count(), target, std::move(trans), n.initial(), n.final_states());
}

}  // namespace linsert
