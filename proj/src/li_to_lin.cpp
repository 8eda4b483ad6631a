#include "linsert/li_to_lin.hpp"

#include <unordered_set>

namespace linsert {

const std::string ReducedSystem::kTickName = "M_Tick";

std::string ReducedSystem::method_name(const std::string& display) {
    return "M_" + display;
}

namespace {

enum : ValueId { kBegin = 0, kRun = 1, kEnd = 2 };

Method letter_method(const std::string& name) {
    // One read of Run; runnable only inside the tick window.
    return Method{name, 2, 0, 1, {{0, MemOp::Read, kRun, 1}}};
}

Method insertable_method(const std::string& name) {
    // Pinned across the whole window: read Begin, then read End.
    return Method{name, 3, 0, 2, {{0, MemOp::Read, kBegin, 1}, {1, MemOp::Read, kEnd, 2}}};
}

Method tick_method() {
    return Method{ReducedSystem::kTickName, 3, 0, 2,
                  {{0, MemOp::Write, kRun, 1}, {1, MemOp::Write, kEnd, 2}}};
}

}  // namespace

std::pair<Library, std::uint32_t> build_library(const InsertionInstance& inst) {
    Library lib;
    lib.domain = {"Begin", "Run", "End"};
    lib.initial_value = kBegin;
    std::unordered_set<std::string> names;
    auto add = [&](Method m) {
        if (!names.insert(m.name).second)
            throw InputError("reduction: method name collision on '" + m.name + "'");
        lib.methods.push_back(std::move(m));
    };
    for (const auto& a : inst.insertables())
        add(insertable_method(ReducedSystem::method_name(a)));
    for (const auto& g : inst.gamma()) add(letter_method(ReducedSystem::method_name(g)));
    add(tick_method());
    lib.validate();
    return {lib, static_cast<std::uint32_t>(inst.insertable_count() + 2)};
}

SpecNfa build_spec(const InsertionInstance& inst) {
    auto [lib, k] = build_library(inst);
    (void)k;
    std::vector<std::string> names;
    for (const auto& m : lib.methods) names.push_back(m.name);
    AlphabetRef alphabet = make_alphabet(names);

    // Counter accepting words with zero or at least two occurrences of one
    // tracked label; every other label self-loops.
    auto count_not_one = [&](const std::string& tracked) {
        std::vector<Transition> trans;
        SymbolId t = alphabet->id_of(tracked);
        for (SymbolId s = 0; s < alphabet->size(); ++s) {
            if (s == t) continue;
            for (StateId q = 0; q < 3; ++q) trans.push_back({q, s, q});
        }
        trans.push_back({0, t, 1});
        trans.push_back({1, t, 2});
        trans.push_back({2, t, 2});
        return Nfa(3, alphabet, std::move(trans), {0}, {0, 2});
    };

    std::vector<Nfa> parts;
    parts.push_back(count_not_one(ReducedSystem::kTickName));
    for (const auto& a : inst.insertables())
        parts.push_back(count_not_one(ReducedSystem::method_name(a)));

    // The instance automaton over method labels, indifferent to M_Tick.
    std::unordered_map<std::string, std::string> rename;
    for (const auto& d : inst.nfa().alphabet().displays())
        rename[d] = ReducedSystem::method_name(d);
    Nfa projected = relabeled(inst.nfa(), alphabet, rename);
    parts.push_back(with_self_loops(projected, {ReducedSystem::kTickName}));

    return SpecNfa{union_all(parts)};
}

ReducedSystem reduce_insertion_to_lin(const InsertionInstance& inst) {
    auto [lib, k] = build_library(inst);
    return ReducedSystem{std::move(lib), k, build_spec(inst)};
}

Execution violation_execution(const InsertionInstance& inst, const Word& w) {
    for (SymbolId g : w)
        if (g >= inst.gamma().size())
            throw InputError("violation_execution: letter not in the base alphabet");

    auto [lib, k] = build_library(inst);
    const std::uint32_t l = static_cast<std::uint32_t>(inst.insertable_count());
    const std::uint32_t tick_thread = l;
    const std::uint32_t letter_thread = l + 1;
    const std::uint32_t tick_method = static_cast<std::uint32_t>(lib.methods.size() - 1);
    auto letter_method_index = [&](SymbolId g) { return l + g; };

    Execution exec;
    exec.initial = initial_configuration(lib, k);
    Configuration cur = exec.initial;
    auto emit = [&](std::optional<Event> ev) { exec.steps.push_back({ev, cur}); };

    for (std::uint32_t i = 0; i < l; ++i) {
        cur.threads[i] = {false, i, 0};
        emit(Event{Event::Kind::Call, i, i});
    }
    for (std::uint32_t i = 0; i < l; ++i) {
        cur.threads[i].state = 1;  // read Begin
        emit(std::nullopt);
    }
    cur.threads[tick_thread] = {false, tick_method, 0};
    emit(Event{Event::Kind::Call, tick_thread, tick_method});
    cur.shared = kRun;
    cur.threads[tick_thread].state = 1;  // write Run
    emit(std::nullopt);

    for (SymbolId g : w) {
        const std::uint32_t m = letter_method_index(g);
        cur.threads[letter_thread] = {false, m, 0};
        emit(Event{Event::Kind::Call, letter_thread, m});
        cur.threads[letter_thread].state = 1;  // read Run
        emit(std::nullopt);
        cur.threads[letter_thread] = ThreadStatus{};
        emit(Event{Event::Kind::Ret, letter_thread, 0});
    }

    cur.shared = kEnd;
    cur.threads[tick_thread].state = 2;  // write End
    emit(std::nullopt);
    for (std::uint32_t i = 0; i < l; ++i) {
        cur.threads[i].state = 2;  // read End
        emit(std::nullopt);
    }
    for (std::uint32_t i = 0; i < l; ++i) {
        cur.threads[i] = ThreadStatus{};
        emit(Event{Event::Kind::Ret, i, 0});
    }
    cur.threads[tick_thread] = ThreadStatus{};
    emit(Event{Event::Kind::Ret, tick_thread, 0});
    return exec;
}

}  // namespace linsert
