#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slsc {

// Vertex names are nonempty tokens without whitespace or commas.
using VertexId = std::string;

bool is_valid_vertex_id(const VertexId& name);

// A nonempty, strictly increasing sequence of vertex names. Instances are
// only produced through make_simplex (or operations that preserve the
// canonical form), so two simplices are equal iff their vertex sets are.
class Simplex {
public:
    [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t cardinality() const noexcept { return vertices_.size(); }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

    [[nodiscard]] bool contains(const VertexId& v) const;

    // True iff this simplex's vertices are a proper subset of `other`'s.
    [[nodiscard]] bool is_face_of(const Simplex& other) const;

    // "[a1,a2,a3]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    explicit Simplex(std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

    std::vector<VertexId> vertices_;

    friend Simplex make_simplex(std::vector<VertexId> vertices);
    friend Simplex simplex_from_canonical(std::vector<VertexId> sorted);
};

// Canonicalizes by sorting. Throws Error{EmptySimplex} on an empty sequence,
// Error{DuplicateVertex} on repeated names and Error{InvalidVertex} on
// malformed names.
Simplex make_simplex(std::vector<VertexId> vertices);

// Trusted constructor for callers that already hold a strictly increasing,
// valid vertex sequence.
Simplex simplex_from_canonical(std::vector<VertexId> sorted);

// All simplices on nonempty proper subsets of the vertex set; sorted.
// Yields 2^(dim+1) - 2 faces.
std::vector<Simplex> faces(const Simplex& s);

// Faces of codimension one (drop a single vertex); empty for 0-simplices.
std::vector<Simplex> boundary_faces(const Simplex& s);

// Simplex on the shared vertices, if any.
std::optional<Simplex> intersection(const Simplex& a, const Simplex& b);

// Vertex-set intersection is nonempty and the simplices differ. Membership in
// a common complex is the caller's concern.
bool spatial_adjacent(const Simplex& a, const Simplex& b);

std::ostream& operator<<(std::ostream& os, const Simplex& s);

} // namespace slsc
