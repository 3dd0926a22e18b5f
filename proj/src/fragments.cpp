#include "slsc/fragments.hpp"

#include "slsc/checker.hpp"

namespace slsc {

namespace {

bool has_neighborhood(Fragment f) { return f == Fragment::neighborhood || f == Fragment::full; }
bool has_reach(Fragment f) { return f == Fragment::reach || f == Fragment::full; }

} // namespace

std::vector<Formula> enumerate_fragment(const std::set<AtomName>& atoms, std::size_t depth, Fragment fragment)
{
    std::set<Formula> seen;
    std::vector<Formula> all;
    auto add = [&](Formula f) {
        if (seen.insert(f).second) {
            all.push_back(std::move(f));
        }
    };
    for (const auto& a : atoms) {
        add(Formula::atom(a));
    }
    add(Formula::top());
    for (std::size_t d = 1; d <= depth; ++d) {
        const std::vector<Formula> prev = all;
        for (const auto& f : prev) {
            add(Formula::negation(f));
            if (has_neighborhood(fragment)) {
                add(Formula::neighborhood(f));
            }
        }
        for (const auto& f : prev) {
            for (const auto& g : prev) {
                if (!(g < f)) {
                    add(Formula::conjunction(f, g));
                }
                if (has_reach(fragment)) {
                    add(Formula::reach(f, g));
                }
            }
        }
    }
    return all;
}

FragmentClosure::FragmentClosure(const SimplicialModel& model, AdjacencyKind kind, Fragment fragment,
                                 std::size_t depth)
    : model_(model), kind_(kind), fragment_(fragment), depth_(depth)
{
    if (depth == 0) {
        return;
    }
    const auto& complex = model.complex();
    std::set<SimplexSet> seen;
    auto add = [&](SimplexSet s, auto&& make) {
        if (seen.insert(s).second) {
            entries_.push_back({std::move(s), make()});
        }
    };
    for (const auto& a : model.atoms()) {
        add(model.valuation(a), [&] { return Formula::atom(a); });
    }
    add(complex.full_set(), [] { return Formula::top(); });
    for (std::size_t d = 1; d < depth; ++d) {
        const std::size_t n = entries_.size();
        for (std::size_t i = 0; i < n; ++i) {
            add(~entries_[i].denotation, [&] { return Formula::negation(entries_[i].witness); });
            if (has_neighborhood(fragment)) {
                add(adj_set(complex, kind, entries_[i].denotation),
                    [&] { return Formula::neighborhood(entries_[i].witness); });
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (j >= i) {
                    add(entries_[i].denotation & entries_[j].denotation,
                        [&] { return Formula::conjunction(entries_[i].witness, entries_[j].witness); });
                }
                if (has_reach(fragment)) {
                    add(reach(model, entries_[i].denotation, entries_[j].denotation, kind),
                        [&] { return Formula::reach(entries_[i].witness, entries_[j].witness); });
                }
            }
        }
    }
}

bool FragmentClosure::visit(const Visitor& visit) const
{
    const auto& complex = model_.complex();
    if (depth_ == 0) {
        for (const auto& a : model_.atoms()) {
            if (!visit(model_.valuation(a), [&] { return Formula::atom(a); })) {
                return false;
            }
        }
        return visit(complex.full_set(), [] { return Formula::top(); });
    }
    for (const auto& e : entries_) {
        if (!visit(e.denotation, [&] { return e.witness; })) {
            return false;
        }
    }
    for (const auto& x : entries_) {
        if (!visit(~x.denotation, [&] { return Formula::negation(x.witness); })) {
            return false;
        }
        if (has_neighborhood(fragment_) &&
            !visit(adj_set(complex, kind_, x.denotation), [&] { return Formula::neighborhood(x.witness); })) {
            return false;
        }
        for (const auto& y : entries_) {
            if (!visit(x.denotation & y.denotation, [&] { return Formula::conjunction(x.witness, y.witness); })) {
                return false;
            }
            if (has_reach(fragment_) && !visit(reach(model_, x.denotation, y.denotation, kind_),
                                               [&] { return Formula::reach(x.witness, y.witness); })) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Formula> find_fragment_distinguisher(const SimplicialModel& model, AdjacencyKind kind,
                                                   Fragment fragment, std::size_t depth, SimplexId a, SimplexId b)
{
    const FragmentClosure closure(model, kind, fragment, depth);
    std::optional<Formula> found;
    std::optional<Formula> flipped;
    closure.visit([&](const SimplexSet& s, const std::function<Formula()>& witness) {
        if (s.test(a) == s.test(b)) {
            return true;
        }
        if (s.test(a)) {
            found = witness();
            return false;
        }
        if (!flipped) {
            flipped = witness();
        }
        return true;
    });
    if (!found && flipped) {
        found = Formula::negation(*flipped);
    }
    return found;
}

} // namespace slsc
