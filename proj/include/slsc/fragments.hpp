#pragma once

#include "slsc/formula.hpp"
#include "slsc/model.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace slsc {

// All formulas of the fragment with constructor depth at most `depth` over
// `atoms`, deduplicated structurally and with ∧ taken modulo commutativity
// (left operand never greater than the right). `fragment` selects the modal
// operators: neighborhood adds 𝒩, reach adds ℛ, full adds both.
std::vector<Formula> enumerate_fragment(const std::set<AtomName>& atoms, std::size_t depth, Fragment fragment);

// Every satisfaction set that a fragment formula of bounded depth can have on
// one model, each with a formula realising it. Sets of depth below the bound
// are stored; the deepest level is produced on demand by visit().
class FragmentClosure {
public:
    FragmentClosure(const SimplicialModel& model, AdjacencyKind kind, Fragment fragment, std::size_t depth);

    struct Entry {
        SimplexSet denotation;
        Formula witness;
    };

    // Distinct sets reachable with depth < the bound.
    [[nodiscard]] const std::vector<Entry>& stored() const noexcept { return entries_; }

    // Calls `visit` on the satisfaction set of every formula up to the depth
    // bound (repeats are possible). The second argument rebuilds a formula
    // with that satisfaction set. Stops early when `visit` returns false;
    // returns false in that case.
    using Visitor = std::function<bool(const SimplexSet&, const std::function<Formula()>&)>;
    bool visit(const Visitor& visit) const;

private:
    const SimplicialModel& model_;
    AdjacencyKind kind_;
    Fragment fragment_;
    std::size_t depth_;
    std::vector<Entry> entries_;
};

// Fragment formula true at `a` and false at `b`, searched among formulas of
// the given depth; negated (one level deeper) only if every separating
// formula of that depth holds at `b` instead.
std::optional<Formula> find_fragment_distinguisher(const SimplicialModel& model, AdjacencyKind kind,
                                                   Fragment fragment, std::size_t depth, SimplexId a, SimplexId b);

} // namespace slsc
