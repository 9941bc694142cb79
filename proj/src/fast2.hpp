#pragma once

#include "ramsey/coloring.hpp"

namespace ramsey::detail {

bool fast2_applicable(const Graph& g, const CliqueTuple& T);

// Same contract as extend(): least total extension in canonical edge/color
// order, or NoExtension / InvalidPartial. Refutations run in vertex-by-vertex
// (colex) order first; the witness pass runs in canonical order.
ExtendOutcome fast2_extend(const Graph& g, const CliqueTuple& T, const Coloring& partial);

} // namespace ramsey::detail
