#pragma once

#include "slsc/simplex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace slsc {

// Selects the relation used by every semantic operation.
enum class AdjacencyKind { lower, upper, spatial };

inline constexpr AdjacencyKind all_adjacency_kinds[] = {AdjacencyKind::lower, AdjacencyKind::upper,
                                                        AdjacencyKind::spatial};

std::string_view to_string(AdjacencyKind kind);
std::optional<AdjacencyKind> parse_adjacency(std::string_view text);

// Index of a simplex within its complex (position in canonical order).
using SimplexId = std::uint32_t;

// Subset of a complex, one bit per simplex id.
using SimplexSet = boost::dynamic_bitset<std::uint64_t>;

// Immutable, face-closed set of simplices. Copies share state; adjacency lists
// are built on first use per kind and are safe to read concurrently.
class SimplicialComplex {
public:
    SimplicialComplex();

    // Accepts an already face-closed set; throws Error{ClosureViolation}
    // naming the first missing face otherwise. Duplicates are removed.
    static SimplicialComplex from_closed(std::vector<Simplex> simplices);

    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }
    // -1 for the empty complex.
    [[nodiscard]] int dimension() const noexcept;

    [[nodiscard]] std::span<const Simplex> simplices() const noexcept;
    [[nodiscard]] const Simplex& simplex(SimplexId id) const;

    [[nodiscard]] std::optional<SimplexId> find(const Simplex& s) const;
    [[nodiscard]] bool contains(const Simplex& s) const { return find(s).has_value(); }
    // Throws Error{SimplexNotInComplex}.
    [[nodiscard]] SimplexId id_of(const Simplex& s) const;

    // Codimension-one faces / cofaces, sorted by id.
    [[nodiscard]] std::span<const SimplexId> boundary(SimplexId id) const;
    [[nodiscard]] std::span<const SimplexId> coboundary(SimplexId id) const;

    // Sorted ids adjacent to `id` under `kind`; never contains `id`.
    [[nodiscard]] std::span<const SimplexId> neighbors(AdjacencyKind kind, SimplexId id) const;

    [[nodiscard]] SimplexSet empty_set() const { return SimplexSet(size()); }
    [[nodiscard]] SimplexSet full_set() const;

    // Throws Error{SimplexNotInComplex} for foreign simplices.
    [[nodiscard]] SimplexSet to_set(std::span<const Simplex> members) const;
    [[nodiscard]] std::vector<Simplex> to_simplices(const SimplexSet& set) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct Impl;
    explicit SimplicialComplex(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Smallest face-closed superset of the generators.
SimplicialComplex close(std::span<const Simplex> generators);
SimplicialComplex close(std::initializer_list<Simplex> generators);

struct MissingFace {
    Simplex face;
    Simplex parent;
    friend bool operator==(const MissingFace&, const MissingFace&) = default;
};

// Checks face-closure of a raw simplex collection. Returns one entry per
// (missing face, parent) pair; empty iff the collection is a complex.
std::vector<MissingFace> validate(std::span<const Simplex> raw);

// Predicate forms of the adjacency relations, evaluated directly from the
// vertex sets. Both simplices must belong to `complex` (SimplexNotInComplex).
bool lower_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b);
bool upper_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b);
bool adjacent(const SimplicialComplex& complex, AdjacencyKind kind, const Simplex& a, const Simplex& b);

std::vector<Simplex> neighbors(const SimplicialComplex& complex, AdjacencyKind kind, const Simplex& s);

} // namespace slsc
