#pragma once

#include "slsc/formula.hpp"
#include "slsc/model.hpp"

#include <set>

namespace slsc {

// Satisfaction set computed straight from the set-theoretic clauses, with
// adjacency decided pairwise from vertex sets and reachability obtained by
// iterating the stepwise approximants until nothing new is added. Slow and
// deliberately independent of sat(); intended as a reference.
// Throws Error{UnknownAtom}.
std::set<Simplex> denote(const SimplicialModel& model, const Formula& formula, AdjacencyKind kind);

} // namespace slsc
