#pragma once

#include "slsc/formula.hpp"
#include "slsc/model.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace slsc {

using PairRelation = std::set<std::pair<Simplex, Simplex>>;

enum class Equivalence { bisimulation, branching };

std::string_view to_string(Equivalence relation);

// Square relation over the simplices of one model; row i holds the ids
// related to simplex i.
using RelationMatrix = std::vector<SimplexSet>;

// Both models side by side in one model. Vertices are tagged "1:" and "2:",
// so no simplex of one side is adjacent to a simplex of the other, and the
// left simplices keep their ids while right id j becomes left_size() + j.
class DisjointUnionModel {
public:
    // Throws Error{AtomSetMismatch}.
    DisjointUnionModel(const SimplicialModel& left, const SimplicialModel& right);

    [[nodiscard]] const SimplicialModel& model() const noexcept { return union_; }
    [[nodiscard]] std::size_t left_size() const noexcept { return left_size_; }
    [[nodiscard]] std::size_t right_size() const noexcept { return right_size_; }
    [[nodiscard]] SimplexId from_left(SimplexId id) const noexcept { return id; }
    [[nodiscard]] SimplexId from_right(SimplexId id) const noexcept
    {
        return static_cast<SimplexId>(left_size_ + id);
    }
    [[nodiscard]] bool is_left(SimplexId id) const noexcept { return id < left_size_; }
    // Id within the originating model.
    [[nodiscard]] SimplexId local(SimplexId id) const noexcept
    {
        return is_left(id) ? id : static_cast<SimplexId>(id - left_size_);
    }

private:
    SimplicialModel union_;
    std::size_t left_size_ = 0;
    std::size_t right_size_ = 0;
};

// Ids reachable from `id` by adjacency steps that never leave the label of
// `id`; always contains `id` itself.
SimplexSet cstar_closure(const SimplicialModel& model, AdjacencyKind kind, SimplexId id);

// Throws Error{SimplexNotInComplex}.
bool cstar_reachable(const SimplicialModel& model, AdjacencyKind kind, const Simplex& from, const Simplex& to);

// Largest bisimulation / branching bisimulation of a model with itself,
// computed by deleting clause-violating pairs from label equality until
// nothing changes.
RelationMatrix bisimulation_matrix(const SimplicialModel& model, AdjacencyKind kind);
RelationMatrix branching_bisimulation_matrix(const SimplicialModel& model, AdjacencyKind kind);
RelationMatrix equivalence_matrix(const SimplicialModel& model, Equivalence relation, AdjacencyKind kind);

// Largest relation between two models. Throw Error{AtomSetMismatch}.
PairRelation bisimilarity(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind);
PairRelation branching_bisimilarity(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind);
PairRelation equivalence_relation(const SimplicialModel& m1, const SimplicialModel& m2, Equivalence relation,
                                  AdjacencyKind kind);

// Every simplex of each model is related to some simplex of the other.
bool models_bisimilar(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind);
bool models_branching_bisimilar(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind);
bool models_equivalent(const SimplicialModel& m1, const SimplicialModel& m2, Equivalence relation,
                       AdjacencyKind kind);

// Classes of the model's simplices under the chosen relation, each sorted,
// ordered by their smallest member.
std::vector<std::vector<Simplex>> equivalence_classes(const SimplicialModel& model, Equivalence relation,
                                                      AdjacencyKind kind);

// Partition refinement by neighbour signatures. Level 0 separates labels;
// level k+1 separates simplices whose level-k blocks or sets of neighbouring
// level-k blocks differ. Refinement stops at the first stable level, whose
// blocks are the bisimulation classes.
class Refinement {
public:
    Refinement(const SimplicialModel& model, AdjacencyKind kind);

    [[nodiscard]] std::size_t levels() const noexcept { return blocks_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& blocks(std::size_t level) const { return blocks_.at(level); }
    [[nodiscard]] const std::vector<std::uint32_t>& final_blocks() const { return blocks_.back(); }
    [[nodiscard]] bool equivalent(SimplexId a, SimplexId b) const { return final_blocks()[a] == final_blocks()[b]; }

    // Formula without ℛ true at `a` and false at `b`; none if they share a
    // final block.
    std::optional<Formula> distinguish(SimplexId a, SimplexId b);

private:
    const SimplicialModel& model_;
    AdjacencyKind kind_;
    std::vector<std::vector<std::uint32_t>> blocks_;
    std::map<std::pair<SimplexId, SimplexId>, Formula> memo_;
};

// Formula without ℛ satisfied by s1 in m1 and not by s2 in m2; none iff the
// two are bisimilar. Throws Error{AtomSetMismatch} or
// Error{SimplexNotInComplex}.
std::optional<Formula> distinguishing_formula(const SimplicialModel& m1, const Simplex& s1,
                                              const SimplicialModel& m2, const Simplex& s2, AdjacencyKind kind);

struct UnmatchedSimplex {
    int side = 1; // 1 or 2
    Simplex simplex;
    // Holds at `simplex` and at no simplex of the other model.
    Formula witness;
};

// One entry per simplex without a bisimilar partner in the other model.
std::vector<UnmatchedSimplex> explain_unmatched(const SimplicialModel& m1, const SimplicialModel& m2,
                                                AdjacencyKind kind);

} // namespace slsc
