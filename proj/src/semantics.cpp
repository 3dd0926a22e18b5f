#include "slsc/semantics.hpp"

#include "slsc/error.hpp"

#include <algorithm>
#include <iterator>

namespace slsc {

namespace {

using Set = std::set<Simplex>;

Set all_of(const SimplicialModel& model)
{
    const auto s = model.complex().simplices();
    return Set(s.begin(), s.end());
}

Set intersect(const Set& a, const Set& b)
{
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Set subtract(const Set& a, const Set& b)
{
    Set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// { σ ∈ K : ∃σ' ∈ target. σ 𝒞 σ' }
Set step_into(const SimplicialModel& model, AdjacencyKind kind, const Set& target)
{
    Set out;
    for (const auto& s : model.complex().simplices()) {
        for (const auto& t : target) {
            if (adjacent(model.complex(), kind, s, t)) {
                out.insert(s);
                break;
            }
        }
    }
    return out;
}

Set denote_rec(const SimplicialModel& model, const Formula& f, AdjacencyKind kind)
{
    switch (f.kind()) {
    case FormulaKind::atom: {
        const auto& bits = model.valuation(f.name());
        Set out;
        for (const auto& s : model.complex().simplices()) {
            if (bits.test(model.complex().id_of(s))) {
                out.insert(s);
            }
        }
        return out;
    }
    case FormulaKind::top: return all_of(model);
    case FormulaKind::negation: return subtract(all_of(model), denote_rec(model, f.operand(), kind));
    case FormulaKind::conjunction:
        return intersect(denote_rec(model, f.lhs(), kind), denote_rec(model, f.rhs(), kind));
    case FormulaKind::neighborhood: return step_into(model, kind, denote_rec(model, f.operand(), kind));
    case FormulaKind::reach: {
        const Set s1 = denote_rec(model, f.lhs(), kind);
        // R⁰ = ⟦φ2⟧;  R^{i+1} = ⟦φ1⟧ ∩ { σ : σ 𝒞 σ' for some σ' ∈ R^i }
        Set layer = denote_rec(model, f.rhs(), kind);
        Set acc = layer;
        while (true) {
            layer = intersect(s1, step_into(model, kind, layer));
            const Set fresh = subtract(layer, acc);
            if (fresh.empty()) {
                return acc;
            }
            acc.insert(fresh.begin(), fresh.end());
        }
    }
    }
    return {};
}

} // namespace

std::set<Simplex> denote(const SimplicialModel& model, const Formula& formula, AdjacencyKind kind)
{
    for (const auto& a : atoms_of(formula)) {
        if (!model.has_atom(a)) {
            throw Error(ErrorCode::UnknownAtom, "formula uses unknown atom '" + a + "'");
        }
    }
    return denote_rec(model, formula, kind);
}

} // namespace slsc
