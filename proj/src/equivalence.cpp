#include "slsc/equivalence.hpp"

#include "slsc/error.hpp"

#include <algorithm>
#include <deque>

namespace slsc {

std::string_view to_string(Equivalence relation)
{
    return relation == Equivalence::bisimulation ? "bisim" : "branching";
}

namespace {

SimplicialComplex tagged(const SimplicialComplex& complex, const std::string& prefix)
{
    std::vector<Simplex> out;
    out.reserve(complex.size());
    for (const auto& s : complex.simplices()) {
        std::vector<VertexId> vs;
        vs.reserve(s.cardinality());
        for (const auto& v : s.vertices()) {
            vs.push_back(prefix + v);
        }
        out.push_back(simplex_from_canonical(std::move(vs)));
    }
    return SimplicialComplex::from_closed(std::move(out));
}

} // namespace

DisjointUnionModel::DisjointUnionModel(const SimplicialModel& left, const SimplicialModel& right)
    : left_size_(left.complex().size()), right_size_(right.complex().size())
{
    if (left.atoms() != right.atoms()) {
        throw Error(ErrorCode::AtomSetMismatch, "models are defined over different atom sets");
    }
    std::vector<Simplex> all;
    all.reserve(left_size_ + right_size_);
    const auto l = tagged(left.complex(), "1:");
    const auto r = tagged(right.complex(), "2:");
    all.insert(all.end(), l.simplices().begin(), l.simplices().end());
    all.insert(all.end(), r.simplices().begin(), r.simplices().end());
    auto complex = SimplicialComplex::from_closed(std::move(all));

    std::map<AtomName, SimplexSet> valuation;
    for (const auto& a : left.atoms()) {
        const auto& lv = left.valuation(a);
        const auto& rv = right.valuation(a);
        SimplexSet bits(complex.size());
        for (auto i = lv.find_first(); i != SimplexSet::npos; i = lv.find_next(i)) {
            bits.set(from_left(static_cast<SimplexId>(i)));
        }
        for (auto i = rv.find_first(); i != SimplexSet::npos; i = rv.find_next(i)) {
            bits.set(from_right(static_cast<SimplexId>(i)));
        }
        valuation.emplace(a, std::move(bits));
    }
    union_ = SimplicialModel(std::move(complex), left.atoms(), std::move(valuation));
}

SimplexSet cstar_closure(const SimplicialModel& model, AdjacencyKind kind, SimplexId id)
{
    const auto& complex = model.complex();
    const auto& label = model.label_bits(id);
    SimplexSet seen = complex.empty_set();
    seen.set(id);
    std::vector<SimplexId> stack{id};
    while (!stack.empty()) {
        const SimplexId s = stack.back();
        stack.pop_back();
        for (SimplexId t : complex.neighbors(kind, s)) {
            if (!seen.test(t) && model.label_bits(t) == label) {
                seen.set(t);
                stack.push_back(t);
            }
        }
    }
    return seen;
}

bool cstar_reachable(const SimplicialModel& model, AdjacencyKind kind, const Simplex& from, const Simplex& to)
{
    const auto& complex = model.complex();
    const auto a = complex.id_of(from);
    const auto b = complex.id_of(to);
    return cstar_closure(model, kind, a).test(b);
}

namespace {

using Row = SimplexSet;

struct Workspace {
    std::size_t n;
    std::vector<Row> nbr; // adjacency as bit rows
    RelationMatrix rel;   // rel[i][j]
    RelationMatrix tr;    // transpose of rel

    Workspace(const SimplicialModel& model, AdjacencyKind kind) : n(model.complex().size())
    {
        const auto& complex = model.complex();
        nbr.assign(n, Row(n));
        rel.assign(n, Row(n));
        tr.assign(n, Row(n));
        for (SimplexId i = 0; i < n; ++i) {
            for (SimplexId j : complex.neighbors(kind, i)) {
                nbr[i].set(j);
            }
        }
        const auto labels = label_classes(model);
        for (SimplexId i = 0; i < n; ++i) {
            for (SimplexId j = 0; j < n; ++j) {
                if (labels[i] == labels[j]) {
                    rel[i].set(j);
                    tr[j].set(i);
                }
            }
        }
    }

    void erase(std::size_t i, std::size_t j)
    {
        rel[i].reset(j);
        tr[j].reset(i);
    }
};

// Sweeps all related pairs, deleting those that fail `holds`, until a sweep
// deletes nothing.
template <typename Clause>
RelationMatrix greatest_fixpoint(Workspace& w, Clause&& holds)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.n; ++i) {
            for (auto j = w.rel[i].find_first(); j != Row::npos; j = w.rel[i].find_next(j)) {
                if (!holds(i, j)) {
                    w.erase(i, j);
                    changed = true;
                }
            }
        }
    }
    return std::move(w.rel);
}

template <typename F>
bool all_bits(const Row& row, F&& pred)
{
    for (auto k = row.find_first(); k != Row::npos; k = row.find_next(k)) {
        if (!pred(k)) {
            return false;
        }
    }
    return true;
}

template <typename F>
bool any_bit(const Row& row, F&& pred)
{
    for (auto k = row.find_first(); k != Row::npos; k = row.find_next(k)) {
        if (pred(k)) {
            return true;
        }
    }
    return false;
}

} // namespace

RelationMatrix bisimulation_matrix(const SimplicialModel& model, AdjacencyKind kind)
{
    Workspace w(model, kind);
    return greatest_fixpoint(w, [&](std::size_t i, std::size_t j) {
        // every step from i is answered by a step from j, and vice versa
        const bool forth = all_bits(w.nbr[i], [&](std::size_t i2) { return w.rel[i2].intersects(w.nbr[j]); });
        return forth && all_bits(w.nbr[j], [&](std::size_t j2) { return w.tr[j2].intersects(w.nbr[i]); });
    });
}

RelationMatrix branching_bisimulation_matrix(const SimplicialModel& model, AdjacencyKind kind)
{
    Workspace w(model, kind);
    std::vector<Row> star;
    star.reserve(w.n);
    for (SimplexId i = 0; i < w.n; ++i) {
        star.push_back(cstar_closure(model, kind, i));
    }
    return greatest_fixpoint(w, [&](std::size_t i, std::size_t j) {
        const bool forth = all_bits(w.nbr[i], [&](std::size_t i2) {
            if (w.rel[i2].test(j)) {
                return true;
            }
            return any_bit(star[j], [&](std::size_t j_mid) {
                return w.rel[i].test(j_mid) && w.rel[i2].intersects(w.nbr[j_mid]);
            });
        });
        if (!forth) {
            return false;
        }
        return all_bits(w.nbr[j], [&](std::size_t j2) {
            if (w.rel[i].test(j2)) {
                return true;
            }
            return any_bit(star[i], [&](std::size_t i_mid) {
                return w.rel[i_mid].test(j) && w.tr[j2].intersects(w.nbr[i_mid]);
            });
        });
    });
}

RelationMatrix equivalence_matrix(const SimplicialModel& model, Equivalence relation, AdjacencyKind kind)
{
    return relation == Equivalence::bisimulation ? bisimulation_matrix(model, kind)
                                                 : branching_bisimulation_matrix(model, kind);
}

PairRelation equivalence_relation(const SimplicialModel& m1, const SimplicialModel& m2, Equivalence relation,
                                  AdjacencyKind kind)
{
    const DisjointUnionModel u(m1, m2);
    const auto matrix = equivalence_matrix(u.model(), relation, kind);
    PairRelation out;
    for (SimplexId i = 0; i < u.left_size(); ++i) {
        for (SimplexId j = 0; j < u.right_size(); ++j) {
            if (matrix[i].test(u.from_right(j))) {
                out.emplace(m1.complex().simplex(i), m2.complex().simplex(j));
            }
        }
    }
    return out;
}

PairRelation bisimilarity(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind)
{
    return equivalence_relation(m1, m2, Equivalence::bisimulation, kind);
}

PairRelation branching_bisimilarity(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind)
{
    return equivalence_relation(m1, m2, Equivalence::branching, kind);
}

bool models_equivalent(const SimplicialModel& m1, const SimplicialModel& m2, Equivalence relation,
                       AdjacencyKind kind)
{
    const auto rel = equivalence_relation(m1, m2, relation, kind);
    std::set<Simplex> left;
    std::set<Simplex> right;
    for (const auto& [a, b] : rel) {
        left.insert(a);
        right.insert(b);
    }
    return left.size() == m1.complex().size() && right.size() == m2.complex().size();
}

bool models_bisimilar(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind)
{
    return models_equivalent(m1, m2, Equivalence::bisimulation, kind);
}

bool models_branching_bisimilar(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind)
{
    return models_equivalent(m1, m2, Equivalence::branching, kind);
}

std::vector<std::vector<Simplex>> equivalence_classes(const SimplicialModel& model, Equivalence relation,
                                                      AdjacencyKind kind)
{
    const auto matrix = equivalence_matrix(model, relation, kind);
    const auto& complex = model.complex();
    std::vector<bool> placed(complex.size(), false);
    std::vector<std::vector<Simplex>> out;
    for (SimplexId i = 0; i < complex.size(); ++i) {
        if (placed[i]) {
            continue;
        }
        auto& cls = out.emplace_back();
        for (auto j = matrix[i].find_first(); j != Row::npos; j = matrix[i].find_next(j)) {
            placed[j] = true;
            cls.push_back(complex.simplex(static_cast<SimplexId>(j)));
        }
    }
    return out;
}

Refinement::Refinement(const SimplicialModel& model, AdjacencyKind kind) : model_(model), kind_(kind)
{
    const auto& complex = model.complex();
    blocks_.push_back(label_classes(model));
    auto count = [](const std::vector<std::uint32_t>& b) {
        return b.empty() ? 0U : *std::max_element(b.begin(), b.end()) + 1;
    };
    while (true) {
        const auto& prev = blocks_.back();
        std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(complex.size());
        for (SimplexId i = 0; i < complex.size(); ++i) {
            std::vector<std::uint32_t> sig;
            for (SimplexId j : complex.neighbors(kind, i)) {
                sig.push_back(prev[j]);
            }
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(prev[i], std::move(sig));
            next[i] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first->second;
        }
        if (count(next) == count(prev)) {
            break;
        }
        blocks_.push_back(std::move(next));
    }
}

std::optional<Formula> Refinement::distinguish(SimplexId a, SimplexId b)
{
    if (equivalent(a, b)) {
        return std::nullopt;
    }
    if (auto it = memo_.find({a, b}); it != memo_.end()) {
        return it->second;
    }
    std::size_t level = 0;
    while (blocks_[level][a] == blocks_[level][b]) {
        ++level;
    }

    std::optional<Formula> result;
    if (level == 0) {
        const auto& la = model_.label_bits(a);
        const auto& lb = model_.label_bits(b);
        std::size_t bit = 0;
        for (const auto& atom : model_.atoms()) {
            if (la.test(bit) != lb.test(bit)) {
                auto f = Formula::atom(atom);
                result = la.test(bit) ? f : Formula::negation(f);
                break;
            }
            ++bit;
        }
    } else {
        // Same block one level down, so the neighbour block sets differ there.
        const auto& prev = blocks_[level - 1];
        const auto& complex = model_.complex();
        auto unmatched = [&](SimplexId x, SimplexId y) -> std::optional<SimplexId> {
            for (SimplexId x2 : complex.neighbors(kind_, x)) {
                const auto ny = complex.neighbors(kind_, y);
                if (std::none_of(ny.begin(), ny.end(), [&](SimplexId y2) { return prev[y2] == prev[x2]; })) {
                    return x2;
                }
            }
            return std::nullopt;
        };
        auto lifted = [&](SimplexId x2, SimplexId y) {
            std::set<Formula> conjuncts;
            for (SimplexId y2 : complex.neighbors(kind_, y)) {
                conjuncts.insert(*distinguish(x2, y2));
            }
            return Formula::neighborhood(conjunction_of({conjuncts.begin(), conjuncts.end()}));
        };
        if (auto a2 = unmatched(a, b)) {
            result = lifted(*a2, b);
        } else {
            const auto b2 = unmatched(b, a);
            result = Formula::negation(lifted(*b2, a));
        }
    }
    memo_.emplace(std::make_pair(a, b), *result);
    return result;
}

std::optional<Formula> distinguishing_formula(const SimplicialModel& m1, const Simplex& s1,
                                              const SimplicialModel& m2, const Simplex& s2, AdjacencyKind kind)
{
    const DisjointUnionModel u(m1, m2);
    const auto a = u.from_left(m1.complex().id_of(s1));
    const auto b = u.from_right(m2.complex().id_of(s2));
    Refinement refinement(u.model(), kind);
    return refinement.distinguish(a, b);
}

std::vector<UnmatchedSimplex> explain_unmatched(const SimplicialModel& m1, const SimplicialModel& m2,
                                                AdjacencyKind kind)
{
    const DisjointUnionModel u(m1, m2);
    Refinement refinement(u.model(), kind);
    const auto n = u.left_size() + u.right_size();
    std::vector<UnmatchedSimplex> out;
    for (SimplexId x = 0; x < n; ++x) {
        const bool left = u.is_left(x);
        const SimplexId first = left ? static_cast<SimplexId>(u.left_size()) : 0;
        const SimplexId last = left ? static_cast<SimplexId>(n) : static_cast<SimplexId>(u.left_size());
        bool matched = false;
        std::set<Formula> conjuncts;
        for (SimplexId y = first; y < last && !matched; ++y) {
            if (auto f = refinement.distinguish(x, y)) {
                conjuncts.insert(*f);
            } else {
                matched = true;
            }
        }
        if (!matched) {
            const auto& origin = left ? m1 : m2;
            out.push_back({left ? 1 : 2, origin.complex().simplex(u.local(x)),
                           conjunction_of({conjuncts.begin(), conjuncts.end()})});
        }
    }
    return out;
}

} // namespace slsc
