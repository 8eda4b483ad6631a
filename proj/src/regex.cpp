#include "linsert/regex.hpp"

namespace linsert {

Regex Regex::epsilon() { return Regex{}; }

Regex Regex::lit(std::string display) {
    Regex r;
    r.kind_ = Kind::Literal;
    r.literal_ = std::move(display);
    return r;
}

Regex Regex::seq(std::vector<Regex> parts) {
    Regex r;
    r.kind_ = Kind::Concat;
    r.children_ = std::move(parts);
    return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
    Regex r;
    r.kind_ = Kind::Union;
    r.children_ = std::move(parts);
    return r;
}

Regex Regex::star(Regex inner) {
    Regex r;
    r.kind_ = Kind::Star;
    r.children_.push_back(std::move(inner));
    return r;
}

Regex Regex::plus(Regex inner) {
    Regex r;
    r.kind_ = Kind::Plus;
    r.children_.push_back(std::move(inner));
    return r;
}

Regex Regex::opt(Regex inner) {
    Regex r;
    r.kind_ = Kind::Opt;
    r.children_.push_back(std::move(inner));
    return r;
}

Regex Regex::any_of(const std::vector<std::string>& displays) {
    std::vector<Regex> parts;
    parts.reserve(displays.size());
    for (const auto& d : displays) parts.push_back(lit(d));
    return alt(std::move(parts));
}

std::size_t Regex::size() const {
    std::size_t n = 1;
    for (const auto& c : children_) n += c.size();
    return n;
}

namespace {

struct Builder {
    const Alphabet& alphabet;
    std::vector<Transition> trans;
    StateId next = 0;

    StateId fresh() { return next++; }
    void edge(StateId a, SymbolId label, StateId b) { trans.push_back({a, label, b}); }

    // Compiles r into a fragment with a single entry and a single exit state.
    std::pair<StateId, StateId> build(const Regex& r) {
        switch (r.kind()) {
            case Regex::Kind::Epsilon: {
                StateId s = fresh();
                return {s, s};
            }
            case Regex::Kind::Literal: {
                StateId a = fresh(), b = fresh();
                edge(a, alphabet.id_of(r.literal()), b);
                return {a, b};
            }
            case Regex::Kind::Concat: {
                StateId a = fresh();
                StateId cur = a;
                for (const auto& c : r.children()) {
                    auto [in, out] = build(c);
                    edge(cur, kEpsilon, in);
                    cur = out;
                }
                return {a, cur};
            }
            case Regex::Kind::Union: {
                StateId a = fresh(), b = fresh();
                for (const auto& c : r.children()) {
                    auto [in, out] = build(c);
                    edge(a, kEpsilon, in);
                    edge(out, kEpsilon, b);
                }
                return {a, b};  // no children: dead fragment = empty language
            }
            case Regex::Kind::Star: {
                StateId a = fresh(), b = fresh();
                auto [in, out] = build(r.children().front());
                edge(a, kEpsilon, in);
                edge(out, kEpsilon, b);
                edge(a, kEpsilon, b);
                edge(out, kEpsilon, in);
                return {a, b};
            }
            case Regex::Kind::Plus: {
                auto [in, out] = build(r.children().front());
                edge(out, kEpsilon, in);
                return {in, out};
            }
            case Regex::Kind::Opt: {
                StateId a = fresh(), b = fresh();
                auto [in, out] = build(r.children().front());
                edge(a, kEpsilon, in);
                edge(out, kEpsilon, b);
                edge(a, kEpsilon, b);
                return {a, b};
            }
        }
        throw std::logic_error("regex_to_nfa: bad node kind");
    }
};

}  // namespace

Nfa regex_to_nfa(const Regex& r, const AlphabetRef& alphabet) {
    Builder b{*alphabet, {}, 0};
    auto [in, out] = b.build(r);
    return Nfa(b.next, alphabet, std::move(b.trans), {in}, {out});
}

}  // namespace linsert
