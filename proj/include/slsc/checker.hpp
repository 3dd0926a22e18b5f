#pragma once

#include "slsc/formula.hpp"
#include "slsc/model.hpp"

#include <vector>

namespace slsc {

// Simplices adjacent to at least one member of `sigma`.
SimplexSet adj_set(const SimplicialComplex& complex, AdjacencyKind kind, const SimplexSet& sigma);

// Least set containing sigma2 and closed under stepping back from a member
// into sigma1. Worklist flooding; each simplex is expanded at most once.
SimplexSet reach(const SimplicialModel& model, const SimplexSet& sigma1, const SimplexSet& sigma2,
                 AdjacencyKind kind);

struct ReachTrace {
    SimplexSet result;
    // T after each round; layers[0] is sigma2.
    std::vector<SimplexSet> layers;
    // Number of simplices expanded from the worklist.
    std::size_t visits = 0;
};

ReachTrace reach_traced(const SimplicialModel& model, const SimplexSet& sigma1, const SimplexSet& sigma2,
                        AdjacencyKind kind);

// Satisfaction set of `formula`, evaluated bottom-up with every distinct
// subformula computed once. Throws Error{UnknownAtom}.
SimplexSet sat(const SimplicialModel& model, const Formula& formula, AdjacencyKind kind);

// Throws Error{SimplexNotInComplex} or Error{UnknownAtom}.
bool check(const SimplicialModel& model, const Simplex& s, const Formula& formula, AdjacencyKind kind);

} // namespace slsc
