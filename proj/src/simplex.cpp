#include "slsc/simplex.hpp"

#include "slsc/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace slsc {

bool is_valid_vertex_id(const VertexId& name)
{
    if (name.empty()) {
        return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
    });
}

bool Simplex::contains(const VertexId& v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return vertices_.size() < other.vertices_.size()
        && std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string Simplex::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += vertices_[i];
    }
    out += ']';
    return out;
}

Simplex make_simplex(std::vector<VertexId> vertices)
{
    if (vertices.empty()) {
        throw Error(ErrorCode::EmptySimplex, "a simplex needs at least one vertex");
    }
    for (const auto& v : vertices) {
        if (!is_valid_vertex_id(v)) {
            throw Error(ErrorCode::InvalidVertex, "invalid vertex name '" + v + "'");
        }
    }
    std::sort(vertices.begin(), vertices.end());
    if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
        throw Error(ErrorCode::DuplicateVertex, "vertex '" + *dup + "' occurs more than once");
    }
    return Simplex(std::move(vertices));
}

Simplex simplex_from_canonical(std::vector<VertexId> sorted)
{
    return Simplex(std::move(sorted));
}

std::vector<Simplex> faces(const Simplex& s)
{
    const auto& vs = s.vertices();
    const std::size_t n = vs.size();
    std::vector<Simplex> out;
    if (n <= 1) {
        return out;
    }
    // n is bounded by the size of a representable complex; masks fit easily.
    const std::size_t full = (std::size_t{1} << n) - 1;
    out.reserve(full - 1);
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<VertexId> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                sub.push_back(vs[i]);
            }
        }
        out.push_back(simplex_from_canonical(std::move(sub)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> boundary_faces(const Simplex& s)
{
    const auto& vs = s.vertices();
    std::vector<Simplex> out;
    if (vs.size() <= 1) {
        return out;
    }
    out.reserve(vs.size());
    for (std::size_t skip = 0; skip < vs.size(); ++skip) {
        std::vector<VertexId> sub;
        sub.reserve(vs.size() - 1);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i != skip) {
                sub.push_back(vs[i]);
            }
        }
        out.push_back(simplex_from_canonical(std::move(sub)));
    }
    return out;
}

std::optional<Simplex> intersection(const Simplex& a, const Simplex& b)
{
    std::vector<VertexId> shared;
    std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                          std::back_inserter(shared));
    if (shared.empty()) {
        return std::nullopt;
    }
    return simplex_from_canonical(std::move(shared));
}

bool spatial_adjacent(const Simplex& a, const Simplex& b)
{
    if (a == b) {
        return false;
    }
    auto i = a.vertices().begin();
    auto j = b.vertices().begin();
    while (i != a.vertices().end() && j != b.vertices().end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s)
{
    return os << s.to_string();
}

} // namespace slsc
