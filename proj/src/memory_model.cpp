#include "linsert/memory_model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace linsert {

void Library::validate() const {
    if (domain.empty()) throw InputError("library: empty domain");
    {
        std::unordered_set<std::string> seen;
        for (const auto& v : domain)
            if (!seen.insert(v).second)
                throw InputError("library: duplicate domain value '" + v + "'");
    }
    if (initial_value >= domain.size())
        throw InputError("library: initial value out of range");
    std::unordered_set<std::string> names;
    for (const auto& m : methods) {
        if (!names.insert(m.name).second)
            throw InputError("library: duplicate method name '" + m.name + "'");
        if (m.initial >= m.state_count || m.final >= m.state_count)
            throw InputError("method '" + m.name + "': initial/final out of range");
        for (const auto& t : m.delta) {
            if (t.from >= m.state_count || t.to >= m.state_count)
                throw InputError("method '" + m.name + "': transition out of range");
            if (t.value >= domain.size())
                throw InputError("method '" + m.name + "': value out of range");
        }
    }
}

std::size_t Library::method_index(const std::string& name) const {
    for (std::size_t j = 0; j < methods.size(); ++j)
        if (methods[j].name == name) return j;
    throw InputError("library: unknown method '" + name + "'");
}

Configuration initial_configuration(const Library& lib, std::uint32_t k) {
    Configuration cfg;
    cfg.shared = lib.initial_value;
    cfg.threads.assign(k, ThreadStatus{});
    return cfg;
}

std::vector<Step> successors(const Library& lib, std::uint32_t k,
                             const Configuration& gamma) {
    if (gamma.threads.size() != k)
        throw InputError("configuration thread count mismatch");
    std::vector<Step> out;
    for (std::uint32_t i = 0; i < k; ++i) {
        const ThreadStatus& st = gamma.threads[i];
        if (st.idle) {
            for (std::uint32_t j = 0; j < lib.methods.size(); ++j) {
                Configuration next = gamma;
                next.threads[i] = {false, j, lib.methods[j].initial};
                out.push_back({Event{Event::Kind::Call, i, j}, std::move(next)});
            }
            continue;
        }
        const Method& m = lib.methods[st.method];
        if (st.state == m.final) {
            Configuration next = gamma;
            next.threads[i] = ThreadStatus{};
            out.push_back({Event{Event::Kind::Ret, i, 0}, std::move(next)});
        }
        for (const auto& t : m.delta) {
            if (t.from != st.state || t.op != MemOp::Read) continue;
            if (t.value != gamma.shared) continue;  // reads guess the value
            Configuration next = gamma;
            next.threads[i].state = t.to;
            out.push_back({std::nullopt, std::move(next)});
        }
        for (const auto& t : m.delta) {
            if (t.from != st.state || t.op != MemOp::Write) continue;
            Configuration next = gamma;
            next.shared = t.value;
            next.threads[i].state = t.to;
            out.push_back({std::nullopt, std::move(next)});
        }
    }
    return out;
}

Trace Execution::trace() const {
    Trace t;
    for (const auto& s : steps)
        if (s.event) t.push_back(*s.event);
    return t;
}

bool validate_execution(const Library& lib, std::uint32_t k, const Execution& exec) {
    if (!(exec.initial == initial_configuration(lib, k))) return false;
    const Configuration* cur = &exec.initial;
    for (const auto& step : exec.steps) {
        bool found = false;
        for (const auto& cand : successors(lib, k, *cur)) {
            if (cand.after == step.after && cand.event == step.event) {
                found = true;
                break;
            }
        }
        if (!found) return false;
        cur = &step.after;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Packed exploration

namespace {

struct Packing {
    std::vector<std::uint32_t> offset;  // per method, into the global state space

    static Packing make(const Library& lib, std::uint32_t k) {
        if (k > 7) throw InputError("exploration supports at most 7 threads");
        Packing p;
        std::uint32_t total = 0;
        for (const auto& m : lib.methods) {
            p.offset.push_back(total);
            total += m.state_count;
        }
        if (total > 254) throw InputError("exploration supports at most 254 states");
        if (lib.domain.size() > 255) throw InputError("domain too large to pack");
        return p;
    }

    std::uint64_t encode(const Configuration& cfg) const {
        std::uint64_t v = cfg.shared;
        for (std::size_t i = 0; i < cfg.threads.size(); ++i) {
            const auto& st = cfg.threads[i];
            std::uint64_t byte =
                st.idle ? 0 : 1 + offset[st.method] + st.state;
            v |= byte << (8 * (i + 1));
        }
        return v;
    }

    Configuration decode(std::uint64_t v, const Library& lib, std::uint32_t k) const {
        Configuration cfg;
        cfg.shared = static_cast<ValueId>(v & 0xff);
        cfg.threads.resize(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint64_t byte = (v >> (8 * (i + 1))) & 0xff;
            if (byte == 0) continue;
            std::uint32_t global = static_cast<std::uint32_t>(byte - 1);
            std::uint32_t j = 0;
            while (j + 1 < lib.methods.size() && offset[j + 1] <= global) ++j;
            cfg.threads[i] = {false, j, global - offset[j]};
        }
        return cfg;
    }
};

std::uint16_t encode_event(const Event& e) {
    if (e.kind == Event::Kind::Call)
        return static_cast<std::uint16_t>(0x8000 | (e.thread << 7) | e.method);
    return static_cast<std::uint16_t>(e.thread);
}

Event decode_event(std::uint16_t v) {
    if (v & 0x8000)
        return Event{Event::Kind::Call, static_cast<std::uint32_t>((v >> 7) & 0xff),
                     static_cast<std::uint32_t>(v & 0x7f)};
    return Event{Event::Kind::Ret, v, 0};
}

struct TraceInterner {
    // id 0 is the empty trace.
    std::vector<std::pair<std::uint32_t, std::uint16_t>> nodes{{0, 0}};
    std::unordered_map<std::uint64_t, std::uint32_t> index;

    std::uint32_t extend(std::uint32_t parent, std::uint16_t ev) {
        std::uint64_t key = (std::uint64_t{parent} << 16) | ev;
        auto [it, inserted] = index.emplace(key, static_cast<std::uint32_t>(nodes.size()));
        if (inserted) nodes.emplace_back(parent, ev);
        return it->second;
    }

    Trace decode(std::uint32_t id) const {
        Trace t;
        while (id != 0) {
            t.push_back(decode_event(nodes[id].second));
            id = nodes[id].first;
        }
        std::reverse(t.begin(), t.end());
        return t;
    }
};

struct ExploreNode {
    std::uint32_t trace;
    std::uint64_t cfg;

    friend bool operator<(const ExploreNode& a, const ExploreNode& b) {
        return a.trace != b.trace ? a.trace < b.trace : a.cfg < b.cfg;
    }
    friend bool operator==(const ExploreNode& a, const ExploreNode& b) {
        return a.trace == b.trace && a.cfg == b.cfg;
    }
};

}  // namespace

void for_each_trace(const Library& lib, std::uint32_t k, std::size_t max_steps,
                    std::size_t cap, const std::function<bool(const Trace&)>& visit) {
    lib.validate();
    const Packing packing = Packing::make(lib, k);
    TraceInterner interner;

    std::vector<ExploreNode> visited;
    std::vector<ExploreNode> level{{0, packing.encode(initial_configuration(lib, k))}};
    visited = level;

    std::vector<char> emitted{1};  // per trace id
    if (!visit(Trace{})) return;

    for (std::size_t depth = 0; depth < max_steps && !level.empty(); ++depth) {
        std::vector<ExploreNode> next;
        for (const auto& node : level) {
            Configuration cfg = packing.decode(node.cfg, lib, k);
            for (const auto& step : successors(lib, k, cfg)) {
                std::uint32_t trace_id =
                    step.event ? interner.extend(node.trace, encode_event(*step.event))
                               : node.trace;
                next.push_back({trace_id, packing.encode(step.after)});
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());

        // Keep only nodes not seen at shallower depths.
        std::vector<ExploreNode> fresh;
        fresh.reserve(next.size());
        std::set_difference(next.begin(), next.end(), visited.begin(), visited.end(),
                            std::back_inserter(fresh));
        if (visited.size() + fresh.size() > cap)
            throw ResourceLimitError("trace exploration frontier exceeded cap", cap);

        emitted.resize(interner.nodes.size(), 0);
        for (const auto& node : fresh) {
            if (!emitted[node.trace]) {
                emitted[node.trace] = 1;
                if (!visit(interner.decode(node.trace))) return;
            }
        }

        std::size_t old = visited.size();
        visited.insert(visited.end(), fresh.begin(), fresh.end());
        std::inplace_merge(visited.begin(), visited.begin() + old, visited.end());
        level = std::move(fresh);
    }
}

std::vector<Trace> enumerate_traces(const Library& lib, std::uint32_t k,
                                    std::size_t max_steps, std::size_t cap) {
    std::vector<Trace> out;
    for_each_trace(lib, k, max_steps, cap, [&](const Trace& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool replayable(const Library& lib, std::uint32_t k, const Trace& trace,
                std::size_t max_steps) {
    const Packing packing = Packing::make(lib, k);
    std::set<std::pair<std::uint64_t, std::size_t>> seen;
    std::vector<std::pair<std::uint64_t, std::size_t>> level{
        {packing.encode(initial_configuration(lib, k)), 0}};
    seen.insert(level.front());
    if (trace.empty()) return true;

    for (std::size_t depth = 0; depth < max_steps && !level.empty(); ++depth) {
        std::vector<std::pair<std::uint64_t, std::size_t>> next;
        for (auto [cfg_bits, pos] : level) {
            Configuration cfg = packing.decode(cfg_bits, lib, k);
            for (const auto& step : successors(lib, k, cfg)) {
                std::size_t npos = pos;
                if (step.event) {
                    if (pos >= trace.size() || !(*step.event == trace[pos])) continue;
                    npos = pos + 1;
                }
                auto key = std::make_pair(packing.encode(step.after), npos);
                if (npos == trace.size()) return true;
                if (seen.insert(key).second) next.push_back(key);
            }
        }
        level = std::move(next);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Trace structure

bool well_nested(const Trace& trace) {
    std::unordered_map<std::uint32_t, bool> busy;
    for (const auto& e : trace) {
        bool& b = busy[e.thread];
        if (e.kind == Event::Kind::Call) {
            if (b) return false;
            b = true;
        } else {
            if (!b) return false;
            b = false;
        }
    }
    return true;
}

bool is_complete(const Trace& trace) { return open_call_positions(trace).empty(); }

std::vector<std::size_t> open_call_positions(const Trace& trace) {
    std::unordered_map<std::uint32_t, std::size_t> open;  // thread -> call index
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const Event& e = trace[i];
        if (e.kind == Event::Kind::Call) {
            if (open.count(e.thread)) throw InputError("trace: nested call on one thread");
            open[e.thread] = i;
        } else {
            if (!open.erase(e.thread)) throw InputError("trace: return without open call");
        }
    }
    std::vector<std::size_t> out;
    for (auto [thread, idx] : open) out.push_back(idx);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Trace> completions(const Trace& trace, std::size_t cap) {
    const std::vector<std::size_t> opens = open_call_positions(trace);
    const std::size_t n = opens.size();
    if (n > 20) throw ResourceLimitError("completions: too many open calls", cap);

    std::vector<Trace> out;
    auto push = [&](const std::vector<std::size_t>& closed_order) {
        std::vector<char> dropped(trace.size(), 0);
        std::vector<char> kept_open(trace.size(), 0);
        for (std::size_t idx : opens) dropped[idx] = 1;
        for (std::size_t idx : closed_order) {
            dropped[idx] = 0;
            kept_open[idx] = 1;
        }
        Trace t;
        for (std::size_t i = 0; i < trace.size(); ++i)
            if (!dropped[i]) t.push_back(trace[i]);
        for (std::size_t idx : closed_order)
            t.push_back(Event{Event::Kind::Ret, trace[idx].thread, 0});
        if (out.size() >= cap)
            throw ResourceLimitError("completions: too many completions", cap);
        out.push_back(std::move(t));
    };

    for (std::size_t close_count = 0; close_count <= n; ++close_count) {
        // All subsets of `opens` of the given size, in combination order.
        std::vector<std::size_t> pick(close_count);
        std::vector<std::size_t> comb(close_count);
        for (std::size_t i = 0; i < close_count; ++i) comb[i] = i;
        for (;;) {
            for (std::size_t i = 0; i < close_count; ++i) pick[i] = opens[comb[i]];
            std::sort(pick.begin(), pick.end());
            do {
                push(pick);
            } while (std::next_permutation(pick.begin(), pick.end()));
            if (close_count == 0) break;
            // Next combination.
            std::size_t i = close_count;
            while (i > 0 && comb[i - 1] == n - close_count + (i - 1)) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < close_count; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (close_count == 0 && n == 0) break;
    }
    return out;
}

std::pair<std::vector<MethodEvent>, HappensBefore> method_events(const Trace& trace) {
    if (!is_complete(trace)) throw InputError("method_events: trace has open calls");
    std::unordered_map<std::uint32_t, std::pair<std::size_t, std::uint32_t>> open;
    std::vector<MethodEvent> events;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const Event& e = trace[i];
        if (e.kind == Event::Kind::Call) {
            open[e.thread] = {i, e.method};
        } else {
            auto it = open.find(e.thread);
            events.push_back({it->second.second, e.thread, it->second.first, i});
            open.erase(it);
        }
    }
    std::sort(events.begin(), events.end(),
              [](const MethodEvent& a, const MethodEvent& b) {
                  return a.call_index < b.call_index;
              });
    HappensBefore hb;
    hb.n = events.size();
    hb.before.assign(hb.n * hb.n, 0);
    for (std::size_t a = 0; a < events.size(); ++a)
        for (std::size_t b = 0; b < events.size(); ++b)
            if (events[a].ret_index < events[b].call_index) hb.before[a * hb.n + b] = 1;
    return {std::move(events), hb};
}

}  // namespace linsert
