#include "slsc/checker.hpp"

#include "slsc/error.hpp"

#include <map>

namespace slsc {

SimplexSet adj_set(const SimplicialComplex& complex, AdjacencyKind kind, const SimplexSet& sigma)
{
    SimplexSet out = complex.empty_set();
    // Every adjacency relation is symmetric, so scattering from each member
    // of sigma reaches exactly the simplices adjacent to some member.
    for (auto i = sigma.find_first(); i != SimplexSet::npos; i = sigma.find_next(i)) {
        for (SimplexId j : complex.neighbors(kind, static_cast<SimplexId>(i))) {
            out.set(j);
        }
    }
    return out;
}

namespace {

template <typename OnRound>
SimplexSet flood(const SimplicialComplex& complex, const SimplexSet& sigma1, const SimplexSet& sigma2,
                 AdjacencyKind kind, std::size_t& visits, OnRound&& on_round)
{
    SimplexSet reached = sigma2;
    std::vector<SimplexId> frontier;
    for (auto i = sigma2.find_first(); i != SimplexSet::npos; i = sigma2.find_next(i)) {
        frontier.push_back(static_cast<SimplexId>(i));
    }
    on_round(reached);
    std::vector<SimplexId> next;
    while (!frontier.empty()) {
        next.clear();
        for (SimplexId s : frontier) {
            ++visits;
            for (SimplexId t : complex.neighbors(kind, s)) {
                if (sigma1.test(t) && !reached.test(t)) {
                    reached.set(t);
                    next.push_back(t);
                }
            }
        }
        frontier.swap(next);
        if (!frontier.empty()) {
            on_round(reached);
        }
    }
    return reached;
}

} // namespace

SimplexSet reach(const SimplicialModel& model, const SimplexSet& sigma1, const SimplexSet& sigma2,
                 AdjacencyKind kind)
{
    std::size_t visits = 0;
    return flood(model.complex(), sigma1, sigma2, kind, visits, [](const SimplexSet&) {});
}

ReachTrace reach_traced(const SimplicialModel& model, const SimplexSet& sigma1, const SimplexSet& sigma2,
                        AdjacencyKind kind)
{
    ReachTrace trace;
    trace.result = flood(model.complex(), sigma1, sigma2, kind, trace.visits,
                         [&](const SimplexSet& t) { trace.layers.push_back(t); });
    return trace;
}

namespace {

class Evaluator {
public:
    Evaluator(const SimplicialModel& model, AdjacencyKind kind) : model_(model), kind_(kind) {}

    const SimplexSet& eval(const Formula& f)
    {
        if (auto it = cache_.find(f); it != cache_.end()) {
            return it->second;
        }
        SimplexSet result = compute(f);
        return cache_.emplace(f, std::move(result)).first->second;
    }

private:
    SimplexSet compute(const Formula& f)
    {
        const auto& complex = model_.complex();
        switch (f.kind()) {
        case FormulaKind::atom: return model_.valuation(f.name());
        case FormulaKind::top: return complex.full_set();
        case FormulaKind::negation: return ~eval(f.operand());
        case FormulaKind::conjunction: {
            SimplexSet out = eval(f.lhs());
            out &= eval(f.rhs());
            return out;
        }
        case FormulaKind::neighborhood: return adj_set(complex, kind_, eval(f.operand()));
        case FormulaKind::reach: {
            const SimplexSet& lhs = eval(f.lhs());
            return reach(model_, lhs, eval(f.rhs()), kind_);
        }
        }
        return complex.empty_set();
    }

    const SimplicialModel& model_;
    AdjacencyKind kind_;
    std::map<Formula, SimplexSet> cache_;
};

} // namespace

SimplexSet sat(const SimplicialModel& model, const Formula& formula, AdjacencyKind kind)
{
    for (const auto& a : atoms_of(formula)) {
        if (!model.has_atom(a)) {
            throw Error(ErrorCode::UnknownAtom, "formula uses unknown atom '" + a + "'");
        }
    }
    Evaluator ev(model, kind);
    return ev.eval(formula);
}

bool check(const SimplicialModel& model, const Simplex& s, const Formula& formula, AdjacencyKind kind)
{
    const auto id = model.complex().id_of(s);
    return sat(model, formula, kind).test(id);
}

} // namespace slsc
