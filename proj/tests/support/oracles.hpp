#pragma once

// Reference implementations of the equivalence relations, built only from
// the pairwise adjacency predicates and the clause definitions. Pairs are
// (index in model 1, index in model 2).

#include "slsc/complex.hpp"
#include "slsc/equivalence.hpp"
#include "slsc/model.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace slsc::testing {

using IndexPair = std::pair<std::size_t, std::size_t>;
using IndexRelation = std::set<IndexPair>;

class PairOracle {
public:
    PairOracle(const SimplicialModel& m1, const SimplicialModel& m2, AdjacencyKind kind)
        : m1_(m1), m2_(m2), kind_(kind)
    {
        index(m1, n1_, star1_, lab1_);
        index(m2, n2_, star2_, lab2_);
    }

    [[nodiscard]] std::size_t size1() const { return lab1_.size(); }
    [[nodiscard]] std::size_t size2() const { return lab2_.size(); }
    [[nodiscard]] bool same_label(std::size_t i, std::size_t j) const { return lab1_[i] == lab2_[j]; }
    [[nodiscard]] const std::vector<std::size_t>& star1(std::size_t i) const { return star1_[i]; }
    [[nodiscard]] const std::vector<std::size_t>& star2(std::size_t j) const { return star2_[j]; }

    [[nodiscard]] std::vector<IndexPair> candidates() const
    {
        std::vector<IndexPair> out;
        for (std::size_t i = 0; i < size1(); ++i) {
            for (std::size_t j = 0; j < size2(); ++j) {
                if (same_label(i, j)) {
                    out.emplace_back(i, j);
                }
            }
        }
        return out;
    }

    // Clause-by-clause check of a candidate relation.
    [[nodiscard]] bool is_relation(const IndexRelation& r, Equivalence relation) const
    {
        for (const auto& p : r) {
            if (!same_label(p.first, p.second) || obligation(p, r, {}, relation).has_value()) {
                return false;
            }
        }
        return true;
    }

    // Options that would discharge the first obligation of `p` not met by
    // pairs in `r` or `assumed`; none when every obligation is met.
    [[nodiscard]] std::optional<std::vector<std::vector<IndexPair>>>
    obligation(const IndexPair& p, const IndexRelation& r, const IndexRelation& assumed, Equivalence relation) const
    {
        auto in = [&](const IndexPair& q) { return r.count(q) != 0 || assumed.count(q) != 0; };
        auto met = [&](const std::vector<std::vector<IndexPair>>& options) {
            for (const auto& opt : options) {
                bool all = true;
                for (const auto& q : opt) {
                    all = all && in(q);
                }
                if (all) {
                    return true;
                }
            }
            return false;
        };
        const auto [i, j] = p;
        for (std::size_t i2 : n1_[i]) {
            std::vector<std::vector<IndexPair>> options;
            if (relation == Equivalence::bisimulation) {
                for (std::size_t j2 : n2_[j]) {
                    options.push_back({{i2, j2}});
                }
            } else {
                options.push_back({{i2, j}});
                for (std::size_t jm : star2_[j]) {
                    for (std::size_t j2 : n2_[jm]) {
                        options.push_back({{i, jm}, {i2, j2}});
                    }
                }
            }
            if (!met(options)) {
                return options;
            }
        }
        for (std::size_t j2 : n2_[j]) {
            std::vector<std::vector<IndexPair>> options;
            if (relation == Equivalence::bisimulation) {
                for (std::size_t i2 : n1_[i]) {
                    options.push_back({{i2, j2}});
                }
            } else {
                options.push_back({{i, j2}});
                for (std::size_t im : star1_[i]) {
                    for (std::size_t i2 : n1_[im]) {
                        options.push_back({{im, j}, {i2, j2}});
                    }
                }
            }
            if (!met(options)) {
                return options;
            }
        }
        return std::nullopt;
    }

    // Union of every subset of the label-equal pairs that passes the clause
    // check. Only feasible for a handful of candidates.
    [[nodiscard]] IndexRelation exhaustive(Equivalence relation) const
    {
        const auto cand = candidates();
        IndexRelation out;
        const std::uint64_t total = std::uint64_t{1} << cand.size();
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            IndexRelation r;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if ((mask >> b) & 1U) {
                    r.insert(cand[b]);
                }
            }
            if (is_relation(r, relation)) {
                out.insert(r.begin(), r.end());
            }
        }
        return out;
    }

    [[nodiscard]] PairRelation to_pairs(const IndexRelation& r) const
    {
        PairRelation out;
        for (const auto& [i, j] : r) {
            out.emplace(m1_.complex().simplex(static_cast<SimplexId>(i)),
                        m2_.complex().simplex(static_cast<SimplexId>(j)));
        }
        return out;
    }

    [[nodiscard]] IndexRelation from_pairs(const PairRelation& r) const
    {
        IndexRelation out;
        for (const auto& [a, b] : r) {
            out.emplace(m1_.complex().id_of(a), m2_.complex().id_of(b));
        }
        return out;
    }

private:
    void index(const SimplicialModel& m, std::vector<std::vector<std::size_t>>& nbr,
               std::vector<std::vector<std::size_t>>& star, std::vector<std::set<AtomName>>& labels) const
    {
        const auto all = m.complex().simplices();
        const std::size_t n = all.size();
        nbr.assign(n, {});
        for (std::size_t a = 0; a < n; ++a) {
            labels.push_back(label_of(m, all[a]));
            for (std::size_t b = 0; b < n; ++b) {
                if (adjacent(m.complex(), kind_, all[a], all[b])) {
                    nbr[a].push_back(b);
                }
            }
        }
        // Label-preserving reachability by breadth-first search.
        star.assign(n, {});
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<bool> seen(n, false);
            std::vector<std::size_t> queue{a};
            seen[a] = true;
            for (std::size_t k = 0; k < queue.size(); ++k) {
                for (std::size_t b : nbr[queue[k]]) {
                    if (!seen[b] && labels[b] == labels[a]) {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
            std::sort(queue.begin(), queue.end());
            star[a] = std::move(queue);
        }
    }

    const SimplicialModel& m1_;
    const SimplicialModel& m2_;
    AdjacencyKind kind_;
    std::vector<std::vector<std::size_t>> n1_, n2_, star1_, star2_;
    std::vector<std::set<AtomName>> lab1_, lab2_;
};

enum class Verdict { related, unrelated, inconclusive };

// Decides whether some relation passing the clause check contains a given
// pair, by backtracking over the ways of meeting each obligation. Pairs
// proven related are reused as already discharged; the union of valid
// relations is valid, so this is sound.
class WitnessSearch {
public:
    WitnessSearch(const PairOracle& oracle, Equivalence relation, std::size_t budget = 2'000'000)
        : oracle_(oracle), relation_(relation), budget_(budget)
    {
    }

    Verdict decide(const IndexPair& p)
    {
        if (known_true_.count(p) != 0) {
            return Verdict::related;
        }
        if (known_false_.count(p) != 0 || !oracle_.same_label(p.first, p.second)) {
            return Verdict::unrelated;
        }
        nodes_ = 0;
        exhausted_ = false;
        IndexRelation cur{p};
        std::vector<IndexPair> order{p};
        const bool ok = extend(cur, order, 0);
        if (exhausted_) {
            return Verdict::inconclusive;
        }
        if (ok) {
            known_true_.insert(cur.begin(), cur.end());
            return Verdict::related;
        }
        known_false_.insert(p);
        return Verdict::unrelated;
    }

private:
    bool extend(IndexRelation& cur, std::vector<IndexPair>& order, std::size_t k)
    {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (k == order.size()) {
            return true;
        }
        const auto options = oracle_.obligation(order[k], cur, known_true_, relation_);
        if (!options) {
            return extend(cur, order, k + 1);
        }
        for (const auto& opt : *options) {
            bool usable = true;
            for (const auto& q : opt) {
                usable = usable && oracle_.same_label(q.first, q.second) && known_false_.count(q) == 0;
            }
            if (!usable) {
                continue;
            }
            std::vector<IndexPair> added;
            for (const auto& q : opt) {
                if (cur.count(q) == 0 && known_true_.count(q) == 0) {
                    cur.insert(q);
                    order.push_back(q);
                    added.push_back(q);
                }
            }
            if (extend(cur, order, k)) {
                return true;
            }
            if (exhausted_) {
                return false;
            }
            for (const auto& q : added) {
                cur.erase(q);
            }
            order.resize(order.size() - added.size());
        }
        return false;
    }

    const PairOracle& oracle_;
    Equivalence relation_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
    IndexRelation known_true_;
    IndexRelation known_false_;
};

// Greatest relation according to the witness search; nullopt if any pair
// was inconclusive.
inline std::optional<IndexRelation> witness_relation(const PairOracle& oracle, Equivalence relation)
{
    WitnessSearch search(oracle, relation);
    IndexRelation out;
    for (const auto& p : oracle.candidates()) {
        switch (search.decide(p)) {
        case Verdict::related: out.insert(p); break;
        case Verdict::unrelated: break;
        case Verdict::inconclusive: return std::nullopt;
        }
    }
    return out;
}

} // namespace slsc::testing
