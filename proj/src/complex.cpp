#include "slsc/complex.hpp"

#include "slsc/error.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace slsc {

std::string_view to_string(AdjacencyKind kind)
{
    switch (kind) {
    case AdjacencyKind::lower: return "lower";
    case AdjacencyKind::upper: return "upper";
    case AdjacencyKind::spatial: return "spatial";
    }
    return "?";
}

std::optional<AdjacencyKind> parse_adjacency(std::string_view text)
{
    for (auto kind : all_adjacency_kinds) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

namespace {

// Compressed adjacency lists.
struct Csr {
    std::vector<std::uint32_t> offsets{0};
    std::vector<SimplexId> targets;

    [[nodiscard]] std::span<const SimplexId> row(SimplexId id) const
    {
        return {targets.data() + offsets[id], targets.data() + offsets[id + 1]};
    }

    void push_row(std::vector<SimplexId>& row)
    {
        std::sort(row.begin(), row.end());
        targets.insert(targets.end(), row.begin(), row.end());
        offsets.push_back(static_cast<std::uint32_t>(targets.size()));
    }
};

} // namespace

struct SimplicialComplex::Impl {
    std::vector<Simplex> simplices;
    int dimension = -1;
    Csr down;
    Csr up;

    mutable std::array<std::once_flag, 3> built;
    mutable std::array<Csr, 3> adjacency;

    explicit Impl(std::vector<Simplex> sorted) : simplices(std::move(sorted))
    {
        for (const auto& s : simplices) {
            dimension = std::max(dimension, s.dim());
        }
        build_incidence();
    }

    [[nodiscard]] std::optional<SimplexId> find(const Simplex& s) const
    {
        auto it = std::lower_bound(simplices.begin(), simplices.end(), s);
        if (it == simplices.end() || *it != s) {
            return std::nullopt;
        }
        return static_cast<SimplexId>(it - simplices.begin());
    }

    void build_incidence()
    {
        const auto n = simplices.size();
        std::vector<std::vector<SimplexId>> cofaces(n);
        std::vector<SimplexId> row;
        for (SimplexId id = 0; id < n; ++id) {
            row.clear();
            for (const auto& f : boundary_faces(simplices[id])) {
                auto fid = find(f);
                // Callers guarantee closure before constructing Impl.
                row.push_back(*fid);
                cofaces[*fid].push_back(id);
            }
            down.push_row(row);
        }
        for (SimplexId id = 0; id < n; ++id) {
            up.push_row(cofaces[id]);
        }
    }

    const Csr& adjacency_for(AdjacencyKind kind) const
    {
        const auto k = static_cast<std::size_t>(kind);
        std::call_once(built[k], [&] { adjacency[k] = build_adjacency(kind); });
        return adjacency[k];
    }

    [[nodiscard]] Csr build_adjacency(AdjacencyKind kind) const
    {
        const auto n = static_cast<SimplexId>(simplices.size());
        Csr out;
        out.offsets.reserve(n + 1);
        std::vector<SimplexId> stamp(n, n);
        std::vector<SimplexId> row;
        auto add = [&](SimplexId self, SimplexId other) {
            if (other != self && stamp[other] != self) {
                stamp[other] = self;
                row.push_back(other);
            }
        };

        std::vector<std::vector<SimplexId>> star;
        if (kind == AdjacencyKind::spatial) {
            // star[v] lists every simplex containing the vertex with id v.
            star.resize(n);
            for (SimplexId id = 0; id < n; ++id) {
                for (const auto& v : simplices[id].vertices()) {
                    star[*find(simplex_from_canonical({v}))].push_back(id);
                }
            }
        }

        for (SimplexId id = 0; id < n; ++id) {
            row.clear();
            switch (kind) {
            case AdjacencyKind::lower:
                // k-simplices sharing a (k-1)-face.
                for (auto f : down.row(id)) {
                    for (auto other : up.row(f)) {
                        add(id, other);
                    }
                }
                break;
            case AdjacencyKind::upper:
                // k-simplices sharing a (k+1)-coface.
                for (auto c : up.row(id)) {
                    for (auto other : down.row(c)) {
                        add(id, other);
                    }
                }
                break;
            case AdjacencyKind::spatial:
                for (const auto& v : simplices[id].vertices()) {
                    for (auto other : star[*find(simplex_from_canonical({v}))]) {
                        add(id, other);
                    }
                }
                break;
            }
            out.push_row(row);
        }
        return out;
    }
};

SimplicialComplex::SimplicialComplex() : impl_(std::make_shared<const Impl>(std::vector<Simplex>{})) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Simplex> simplices)
{
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    if (auto missing = validate(simplices); !missing.empty()) {
        throw Error(ErrorCode::ClosureViolation,
                    "face " + missing.front().face.to_string() + " of " + missing.front().parent.to_string()
                        + " is missing");
    }
    return SimplicialComplex(std::make_shared<const Impl>(std::move(simplices)));
}

std::size_t SimplicialComplex::size() const noexcept { return impl_->simplices.size(); }

int SimplicialComplex::dimension() const noexcept { return impl_->dimension; }

std::span<const Simplex> SimplicialComplex::simplices() const noexcept { return impl_->simplices; }

const Simplex& SimplicialComplex::simplex(SimplexId id) const { return impl_->simplices.at(id); }

std::optional<SimplexId> SimplicialComplex::find(const Simplex& s) const { return impl_->find(s); }

SimplexId SimplicialComplex::id_of(const Simplex& s) const
{
    if (auto id = impl_->find(s)) {
        return *id;
    }
    throw Error(ErrorCode::SimplexNotInComplex, s.to_string() + " is not a member of the complex");
}

std::span<const SimplexId> SimplicialComplex::boundary(SimplexId id) const { return impl_->down.row(id); }

std::span<const SimplexId> SimplicialComplex::coboundary(SimplexId id) const { return impl_->up.row(id); }

std::span<const SimplexId> SimplicialComplex::neighbors(AdjacencyKind kind, SimplexId id) const
{
    return impl_->adjacency_for(kind).row(id);
}

SimplexSet SimplicialComplex::full_set() const
{
    SimplexSet s(size());
    s.set();
    return s;
}

SimplexSet SimplicialComplex::to_set(std::span<const Simplex> members) const
{
    SimplexSet s(size());
    for (const auto& m : members) {
        s.set(id_of(m));
    }
    return s;
}

std::vector<Simplex> SimplicialComplex::to_simplices(const SimplexSet& set) const
{
    std::vector<Simplex> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != SimplexSet::npos; i = set.find_next(i)) {
        out.push_back(impl_->simplices[i]);
    }
    return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.impl_ == b.impl_ || a.impl_->simplices == b.impl_->simplices;
}

SimplicialComplex close(std::span<const Simplex> generators)
{
    std::vector<Simplex> all;
    for (const auto& g : generators) {
        all.push_back(g);
        auto fs = faces(g);
        all.insert(all.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return SimplicialComplex::from_closed(std::move(all));
}

SimplicialComplex close(std::initializer_list<Simplex> generators)
{
    return close(std::span<const Simplex>(generators.begin(), generators.size()));
}

std::vector<MissingFace> validate(std::span<const Simplex> raw)
{
    std::vector<Simplex> present(raw.begin(), raw.end());
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());

    std::vector<MissingFace> missing;
    for (const auto& s : present) {
        for (auto& f : faces(s)) {
            if (!std::binary_search(present.begin(), present.end(), f)) {
                missing.push_back({std::move(f), s});
            }
        }
    }
    return missing;
}

namespace {

void require_member(const SimplicialComplex& complex, const Simplex& s)
{
    (void)complex.id_of(s);
}

std::size_t shared_vertex_count(const Simplex& a, const Simplex& b)
{
    auto common = intersection(a, b);
    return common ? common->cardinality() : 0;
}

} // namespace

bool lower_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b)
{
    require_member(complex, a);
    require_member(complex, b);
    if (a == b || a.dim() != b.dim() || a.dim() == 0) {
        return false;
    }
    // A shared (k-1)-face means exactly k shared vertices; closure puts that
    // face in the complex.
    return shared_vertex_count(a, b) == static_cast<std::size_t>(a.dim());
}

bool upper_adjacent(const SimplicialComplex& complex, const Simplex& a, const Simplex& b)
{
    require_member(complex, a);
    require_member(complex, b);
    if (a == b || a.dim() != b.dim()) {
        return false;
    }
    std::vector<VertexId> joined;
    std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                   std::back_inserter(joined));
    if (joined.size() != a.cardinality() + 1) {
        return false;
    }
    return complex.contains(simplex_from_canonical(std::move(joined)));
}

bool adjacent(const SimplicialComplex& complex, AdjacencyKind kind, const Simplex& a, const Simplex& b)
{
    switch (kind) {
    case AdjacencyKind::lower: return lower_adjacent(complex, a, b);
    case AdjacencyKind::upper: return upper_adjacent(complex, a, b);
    case AdjacencyKind::spatial:
        require_member(complex, a);
        require_member(complex, b);
        return spatial_adjacent(a, b);
    }
    return false;
}

std::vector<Simplex> neighbors(const SimplicialComplex& complex, AdjacencyKind kind, const Simplex& s)
{
    std::vector<Simplex> out;
    for (auto id : complex.neighbors(kind, complex.id_of(s))) {
        out.push_back(complex.simplex(id));
    }
    return out;
}

} // namespace slsc
