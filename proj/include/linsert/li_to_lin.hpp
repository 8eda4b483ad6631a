#ifndef LINSERT_LI_TO_LIN_HPP
#define LINSERT_LI_TO_LIN_HPP

#include <cstdint>
#include <string>

#include "linsert/insertion.hpp"
#include "linsert/lin_check.hpp"
#include "linsert/memory_model.hpp"

namespace linsert {

/// Compilation of a letter-insertion instance into a bounded-thread
/// linearizability question. The library runs l + 2 threads over the domain
/// {Begin, Run, End}: one 2-step method per insertable letter (read Begin,
/// read End), one 1-step method per base letter (read Run), and M_Tick
/// (write Run, write End).
struct ReducedSystem {
    Library library;
    std::uint32_t threads;  // l + 2
    SpecNfa spec;

    /// Method name used for the base letter / insertable with this display.
    static std::string method_name(const std::string& display);
    static const std::string kTickName;
};

ReducedSystem reduce_insertion_to_lin(const InsertionInstance& inst);

/// Library and thread count alone (methods in instance order: insertables,
/// base letters, then M_Tick).
std::pair<Library, std::uint32_t> build_library(const InsertionInstance& inst);

/// Specification: words with zero or several M_Tick, or zero or several of
/// some insertable's method, or whose projection away from M_Tick spells a
/// relabeled word of the instance automaton.
SpecNfa build_spec(const InsertionInstance& inst);

/// The canonical everything-overlaps execution for a base word w: the letter
/// methods run sequentially on the last thread inside the window where every
/// other method is pinned between its two shared-variable accesses.
Execution violation_execution(const InsertionInstance& inst, const Word& w);

}  // namespace linsert

#endif
