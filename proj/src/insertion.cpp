#include "linsert/insertion.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace linsert {

namespace {

void check_unique(const std::vector<std::string>& v, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& d : v)
        if (!seen.insert(d).second)
            throw InputError(std::string("duplicate ") + what + ": '" + d + "'");
}

}  // namespace

InsertionInstance::InsertionInstance(std::vector<std::string> insertables,
                                     std::vector<std::string> gamma, Nfa nfa)
    : insertables_(std::move(insertables)), gamma_(std::move(gamma)), nfa_(std::move(nfa)) {
    check_unique(insertables_, "insertable letter");
    check_unique(gamma_, "base letter");
    std::unordered_set<std::string> ins(insertables_.begin(), insertables_.end());
    for (const auto& g : gamma_)
        if (ins.count(g))
            throw InputError("letter '" + g + "' is both insertable and base");
    for (const auto& d : nfa_.alphabet().displays())
        if (!ins.count(d) && std::find(gamma_.begin(), gamma_.end(), d) == gamma_.end())
            throw InputError("automaton symbol '" + d +
                             "' is neither insertable nor a base letter");
    if (insertables_.size() > 20)
        throw InputError("too many insertable letters: " +
                         std::to_string(insertables_.size()));
    gamma_alphabet_ = make_alphabet(gamma_);
}

Word InsertionWitness::arranged(const InsertionInstance& inst) const {
    const Alphabet& full = inst.nfa().alphabet();
    const Alphabet& gamma = *inst.gamma_alphabet();
    Word out;
    for (std::size_t j = 0; j < segments.size(); ++j) {
        for (SymbolId g : segments[j]) out.push_back(full.id_of(gamma.display(g)));
        if (j + 1 < segments.size())
            out.push_back(full.id_of(inst.insertables()[order[j]]));
    }
    return out;
}

namespace {

// Classification of the instance automaton's symbols.
struct SymbolRoles {
    // For each full-alphabet id: index into insertables, or kEpsilon.
    std::vector<std::uint32_t> insertable_index;
    // For each full-alphabet id: base-alphabet id, or kEpsilon.
    std::vector<SymbolId> gamma_id;
    // For each base-alphabet id: full-alphabet id, or kEpsilon when the
    // automaton never mentions the letter.
    std::vector<SymbolId> full_of_gamma;
};

SymbolRoles classify(const InsertionInstance& inst) {
    const Alphabet& full = inst.nfa().alphabet();
    SymbolRoles r;
    r.insertable_index.assign(full.size(), kEpsilon);
    r.gamma_id.assign(full.size(), kEpsilon);
    r.full_of_gamma.assign(inst.gamma().size(), kEpsilon);
    for (std::size_t i = 0; i < inst.insertables().size(); ++i)
        if (auto id = full.find(inst.insertables()[i]))
            r.insertable_index[*id] = static_cast<std::uint32_t>(i);
    for (std::size_t g = 0; g < inst.gamma().size(); ++g)
        if (auto id = full.find(inst.gamma()[g])) {
            r.gamma_id[*id] = static_cast<SymbolId>(g);
            r.full_of_gamma[g] = *id;
        }
    return r;
}

}  // namespace

Nfa closure_nfa(const InsertionInstance& inst) {
    const Nfa& n = inst.nfa();
    const auto roles = classify(inst);
    const std::size_t l = inst.insertable_count();
    const std::size_t masks = std::size_t{1} << l;
    const std::size_t states = n.state_count() * masks;
    const auto id = [&](StateId q, std::size_t mask) {
        return static_cast<StateId>(q * masks + mask);
    };

    std::vector<Transition> trans;
    for (const auto& t : n.transitions()) {
        if (t.label == kEpsilon) {
            for (std::size_t m = 0; m < masks; ++m)
                trans.push_back({id(t.from, m), kEpsilon, id(t.to, m)});
        } else if (roles.insertable_index[t.label] != kEpsilon) {
            const std::size_t bit = std::size_t{1} << roles.insertable_index[t.label];
            for (std::size_t m = 0; m < masks; ++m)
                if (!(m & bit))
                    trans.push_back({id(t.from, m), kEpsilon, id(t.to, m | bit)});
        } else {
            const SymbolId g = roles.gamma_id[t.label];
            for (std::size_t m = 0; m < masks; ++m)
                trans.push_back({id(t.from, m), g, id(t.to, m)});
        }
    }

    std::vector<StateId> init, fin;
    for (StateId q : n.initial()) init.push_back(id(q, 0));
    for (StateId q : n.final_states()) fin.push_back(id(q, masks - 1));
    return Nfa(static_cast<StateId>(states), inst.gamma_alphabet(), std::move(trans),
               std::move(init), std::move(fin));
}

UniversalityResult decide(const InsertionInstance& inst, std::size_t cap) {
    return is_universal(closure_nfa(inst), *inst.gamma_alphabet(), cap);
}

namespace {

enum class MoveKind : std::uint8_t { Root, PlainEps, Consume, Insert };

struct SearchNode {
    std::uint32_t parent;
    MoveKind kind;
    std::uint32_t inserted;  // insertable index for Insert moves
};

}  // namespace

std::optional<InsertionWitness> insertable(const InsertionInstance& inst, const Word& w) {
    for (SymbolId g : w)
        if (g >= inst.gamma().size())
            throw InputError("insertable: letter not in the base alphabet");

    const Nfa& n = inst.nfa();
    const auto roles = classify(inst);
    const std::size_t l = inst.insertable_count();
    const std::size_t masks = std::size_t{1} << l;
    const std::size_t positions = w.size() + 1;
    const std::size_t total = n.state_count() * masks * positions;
    const auto key = [&](StateId q, std::size_t mask, std::size_t pos) {
        return (static_cast<std::size_t>(q) * masks + mask) * positions + pos;
    };

    std::vector<std::vector<std::pair<SymbolId, StateId>>> adj(n.state_count());
    for (const auto& t : n.transitions()) adj[t.from].emplace_back(t.label, t.to);

    std::vector<std::uint32_t> node_at(total, kEpsilon);
    std::vector<SearchNode> nodes;
    std::vector<std::size_t> node_key;
    std::deque<std::uint32_t> work;
    std::uint32_t goal = kEpsilon;

    auto is_goal = [&](StateId q, std::size_t mask, std::size_t pos) {
        return pos == w.size() && mask == masks - 1 && n.is_final(q);
    };
    auto visit = [&](StateId q, std::size_t mask, std::size_t pos, std::uint32_t parent,
                     MoveKind kind, std::uint32_t ins) {
        std::size_t k = key(q, mask, pos);
        if (node_at[k] != kEpsilon) return;
        auto idx = static_cast<std::uint32_t>(nodes.size());
        node_at[k] = idx;
        nodes.push_back({parent, kind, ins});
        node_key.push_back(k);
        work.push_back(idx);
        if (goal == kEpsilon && is_goal(q, mask, pos)) goal = idx;
    };

    for (StateId q : n.initial()) visit(q, 0, 0, 0, MoveKind::Root, 0);

    while (!work.empty() && goal == kEpsilon) {
        std::uint32_t cur = work.front();
        work.pop_front();
        std::size_t k = node_key[cur];
        std::size_t pos = k % positions;
        std::size_t mask = (k / positions) % masks;
        StateId q = static_cast<StateId>(k / positions / masks);

        for (auto [label, to] : adj[q]) {
            if (label == kEpsilon) {
                visit(to, mask, pos, cur, MoveKind::PlainEps, 0);
            } else if (roles.insertable_index[label] != kEpsilon) {
                std::size_t bit = std::size_t{1} << roles.insertable_index[label];
                if (!(mask & bit))
                    visit(to, mask | bit, pos, cur, MoveKind::Insert,
                          roles.insertable_index[label]);
            } else if (pos < w.size() && roles.full_of_gamma[w[pos]] == label) {
                visit(to, mask, pos + 1, cur, MoveKind::Consume, 0);
            }
            if (goal != kEpsilon) break;
        }
    }
    if (goal == kEpsilon) return std::nullopt;

    std::vector<std::pair<MoveKind, std::uint32_t>> path;
    for (std::uint32_t at = goal; nodes[at].kind != MoveKind::Root; at = nodes[at].parent)
        path.emplace_back(nodes[at].kind, nodes[at].inserted);
    std::reverse(path.begin(), path.end());

    InsertionWitness witness;
    Word segment;
    std::size_t pos = 0;
    for (auto [kind, ins] : path) {
        switch (kind) {
            case MoveKind::Consume:
                segment.push_back(w[pos++]);
                break;
            case MoveKind::Insert:
                witness.segments.push_back(segment);
                segment.clear();
                witness.order.push_back(ins);
                break;
            default:
                break;
        }
    }
    witness.segments.push_back(segment);
    return witness;
}

}  // namespace linsert
