#pragma once

#include "slsc/complex.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slsc {

using AtomName = std::string;

// Complex plus a valuation mapping each atom to a set of its simplices.
// Valuations need not be face-closed.
class SimplicialModel {
public:
    SimplicialModel() = default;

    // Throws Error{UnknownAtom} for valuation keys outside `atoms` and
    // Error{SimplexNotInComplex} for valued simplices outside the complex.
    SimplicialModel(SimplicialComplex complex, std::set<AtomName> atoms,
                    const std::map<AtomName, std::set<Simplex>>& valuation);

    SimplicialModel(SimplicialComplex complex, std::set<AtomName> atoms, std::map<AtomName, SimplexSet> valuation);

    [[nodiscard]] const SimplicialComplex& complex() const noexcept { return complex_; }
    [[nodiscard]] const std::set<AtomName>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] bool has_atom(std::string_view atom) const;

    // ν(atom); throws Error{UnknownAtom}.
    [[nodiscard]] const SimplexSet& valuation(std::string_view atom) const;

    // Atoms holding at the simplex with the given id, as a bitset over atoms()
    // in sorted order.
    [[nodiscard]] const boost::dynamic_bitset<>& label_bits(SimplexId id) const { return labels_.at(id); }

    friend bool operator==(const SimplicialModel&, const SimplicialModel&);

private:
    void index_labels();

    SimplicialComplex complex_;
    std::set<AtomName> atoms_;
    std::map<AtomName, SimplexSet, std::less<>> valuation_;
    std::vector<boost::dynamic_bitset<>> labels_;
};

// λ(σ); throws Error{SimplexNotInComplex}.
std::set<AtomName> label_of(const SimplicialModel& model, const Simplex& s);

// σ1 ≡ν σ2 across two models over the same atom set. Throws
// Error{AtomSetMismatch} or Error{SimplexNotInComplex}.
bool nu_equiv(const SimplicialModel& m1, const Simplex& s1, const SimplicialModel& m2, const Simplex& s2);

// Label-equality classes of a model as dense ids, one per simplex.
std::vector<std::uint32_t> label_classes(const SimplicialModel& model);

} // namespace slsc
