#ifndef LINSERT_JSON_IO_HPP
#define LINSERT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "linsert/insertion.hpp"
#include "linsert/lin_check.hpp"
#include "linsert/memory_model.hpp"
#include "linsert/oracle.hpp"
#include "linsert/tm.hpp"

namespace linsert {

/// All formats use insertion-ordered objects and a fixed layout so that
/// parse ∘ emit is the identity on emitted bytes.
using Json = nlohmann::ordered_json;

std::string dump_canonical(const Json& j);

Json nfa_to_json(const Nfa& n);
Nfa nfa_from_json(const Json& j);

Json instance_to_json(const InsertionInstance& inst);
InsertionInstance instance_from_json(const Json& j);

Json library_to_json(const Library& lib);
Library library_from_json(const Json& j);

/// Events use 1-based thread and method ids: {"call":[i,j]} / {"ret":i}.
Json trace_to_json(const Trace& t);
Trace trace_from_json(const Json& j, const Library& lib);

Json tm_to_json(const TuringMachine& tm);
TuringMachine tm_from_json(const Json& j);

Json word_to_json(const Word& w, const Alphabet& alphabet);
Word word_from_json(const Json& j, const Alphabet& alphabet);

Json config_to_json(const TmConfig& cfg, const TuringMachine& tm);

Json report_to_json(const Report& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
Json load_json(const std::string& path);

}  // namespace linsert

#endif
