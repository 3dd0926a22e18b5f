#include "slsc/model.hpp"

#include "slsc/error.hpp"

namespace slsc {

SimplicialModel::SimplicialModel(SimplicialComplex complex, std::set<AtomName> atoms,
                                 const std::map<AtomName, std::set<Simplex>>& valuation)
    : complex_(std::move(complex)), atoms_(std::move(atoms))
{
    for (const auto& a : atoms_) {
        valuation_.emplace(a, complex_.empty_set());
    }
    for (const auto& [atom, members] : valuation) {
        auto it = valuation_.find(atom);
        if (it == valuation_.end()) {
            throw Error(ErrorCode::UnknownAtom, "valuation uses undeclared atom '" + atom + "'");
        }
        for (const auto& s : members) {
            it->second.set(complex_.id_of(s));
        }
    }
    index_labels();
}

SimplicialModel::SimplicialModel(SimplicialComplex complex, std::set<AtomName> atoms,
                                 std::map<AtomName, SimplexSet> valuation)
    : complex_(std::move(complex)), atoms_(std::move(atoms))
{
    for (const auto& a : atoms_) {
        valuation_.emplace(a, complex_.empty_set());
    }
    for (auto& [atom, members] : valuation) {
        auto it = valuation_.find(atom);
        if (it == valuation_.end()) {
            throw Error(ErrorCode::UnknownAtom, "valuation uses undeclared atom '" + atom + "'");
        }
        if (members.size() != complex_.size()) {
            throw Error(ErrorCode::SimplexNotInComplex, "valuation of '" + atom + "' is not sized to the complex");
        }
        it->second = std::move(members);
    }
    index_labels();
}

void SimplicialModel::index_labels()
{
    labels_.assign(complex_.size(), boost::dynamic_bitset<>(atoms_.size()));
    std::size_t bit = 0;
    for (const auto& [atom, members] : valuation_) {
        for (auto i = members.find_first(); i != SimplexSet::npos; i = members.find_next(i)) {
            labels_[i].set(bit);
        }
        ++bit;
    }
}

bool SimplicialModel::has_atom(std::string_view atom) const
{
    return valuation_.find(atom) != valuation_.end();
}

const SimplexSet& SimplicialModel::valuation(std::string_view atom) const
{
    auto it = valuation_.find(atom);
    if (it == valuation_.end()) {
        throw Error(ErrorCode::UnknownAtom, "unknown atom '" + std::string(atom) + "'");
    }
    return it->second;
}

bool operator==(const SimplicialModel& a, const SimplicialModel& b)
{
    return a.complex_ == b.complex_ && a.atoms_ == b.atoms_ && a.valuation_ == b.valuation_;
}

std::set<AtomName> label_of(const SimplicialModel& model, const Simplex& s)
{
    const auto id = model.complex().id_of(s);
    std::set<AtomName> out;
    for (const auto& a : model.atoms()) {
        if (model.valuation(a).test(id)) {
            out.insert(a);
        }
    }
    return out;
}

bool nu_equiv(const SimplicialModel& m1, const Simplex& s1, const SimplicialModel& m2, const Simplex& s2)
{
    if (m1.atoms() != m2.atoms()) {
        throw Error(ErrorCode::AtomSetMismatch, "models are defined over different atom sets");
    }
    return m1.label_bits(m1.complex().id_of(s1)) == m2.label_bits(m2.complex().id_of(s2));
}

std::vector<std::uint32_t> label_classes(const SimplicialModel& model)
{
    std::map<boost::dynamic_bitset<>, std::uint32_t> ids;
    std::vector<std::uint32_t> out(model.complex().size());
    for (SimplexId i = 0; i < out.size(); ++i) {
        auto [it, fresh] = ids.emplace(model.label_bits(i), static_cast<std::uint32_t>(ids.size()));
        out[i] = it->second;
    }
    return out;
}

} // namespace slsc
