#include "slsc/formula.hpp"

#include "slsc/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace slsc {

struct Formula::Node {
    FormulaKind kind;
    std::string name;
    std::vector<Formula> children;
};

namespace {

const std::array<std::string_view, 6> keywords = {"true", "false", "N", "C", "R", "S"};

} // namespace

Formula Formula::atom(std::string name)
{
    if (!is_valid_atom_name(name)) {
        throw Error(ErrorCode::InvalidAtomName, "invalid atom name '" + name + "'");
    }
    return Formula(std::make_shared<const Node>(Node{FormulaKind::atom, std::move(name), {}}));
}

Formula Formula::top()
{
    static const Formula t(std::make_shared<const Node>(Node{FormulaKind::top, {}, {}}));
    return t;
}

Formula Formula::negation(Formula operand)
{
    return Formula(std::make_shared<const Node>(Node{FormulaKind::negation, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs)
{
    return Formula(
        std::make_shared<const Node>(Node{FormulaKind::conjunction, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::neighborhood(Formula operand)
{
    return Formula(std::make_shared<const Node>(Node{FormulaKind::neighborhood, {}, {std::move(operand)}}));
}

Formula Formula::reach(Formula lhs, Formula rhs)
{
    return Formula(std::make_shared<const Node>(Node{FormulaKind::reach, {}, {std::move(lhs), std::move(rhs)}}));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::operand() const
{
    if (node_->children.size() != 1) {
        throw std::logic_error("formula has no single operand");
    }
    return node_->children[0];
}

const Formula& Formula::lhs() const
{
    if (node_->children.size() != 2) {
        throw std::logic_error("formula is not binary");
    }
    return node_->children[0];
}

const Formula& Formula::rhs() const
{
    if (node_->children.size() != 2) {
        throw std::logic_error("formula is not binary");
    }
    return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    if (auto c = a.node_->kind <=> b.node_->kind; c != 0) {
        return c;
    }
    if (auto c = a.node_->name <=> b.node_->name; c != 0) {
        return c;
    }
    const auto& ac = a.node_->children;
    const auto& bc = b.node_->children;
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (auto c = ac[i] <=> bc[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

bool is_valid_atom_name(std::string_view name)
{
    if (name.empty() || std::isalpha(static_cast<unsigned char>(name.front())) == 0) {
        return false;
    }
    if (!std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; })) {
        return false;
    }
    return std::find(keywords.begin(), keywords.end(), name) == keywords.end();
}

Formula falsum() { return Formula::negation(Formula::top()); }

Formula disjunction(Formula lhs, Formula rhs)
{
    return Formula::negation(
        Formula::conjunction(Formula::negation(std::move(lhs)), Formula::negation(std::move(rhs))));
}

Formula closure(Formula operand)
{
    auto n = Formula::neighborhood(operand);
    return disjunction(std::move(operand), std::move(n));
}

Formula surround(Formula lhs, Formula rhs)
{
    auto escape = Formula::negation(disjunction(lhs, std::move(rhs)));
    return Formula::conjunction(lhs, Formula::negation(Formula::reach(lhs, std::move(escape))));
}

Formula conjunction_of(const std::vector<Formula>& conjuncts)
{
    if (conjuncts.empty()) {
        return Formula::top();
    }
    Formula out = conjuncts.front();
    for (std::size_t i = 1; i < conjuncts.size(); ++i) {
        out = Formula::conjunction(std::move(out), conjuncts[i]);
    }
    return out;
}

std::size_t size(const Formula& f)
{
    switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::top: return 1;
    case FormulaKind::negation:
    case FormulaKind::neighborhood: return 1 + size(f.operand());
    case FormulaKind::conjunction:
    case FormulaKind::reach: return size(f.lhs()) + size(f.rhs());
    }
    return 0;
}

std::size_t depth(const Formula& f)
{
    switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::top: return 0;
    case FormulaKind::negation:
    case FormulaKind::neighborhood: return 1 + depth(f.operand());
    case FormulaKind::conjunction:
    case FormulaKind::reach: return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
    }
    return 0;
}

std::string_view to_string(Fragment fragment)
{
    switch (fragment) {
    case Fragment::boolean: return "boolean";
    case Fragment::neighborhood: return "L_N";
    case Fragment::reach: return "L_R";
    case Fragment::full: return "full";
    }
    return "?";
}

namespace {

void scan_operators(const Formula& f, bool& has_n, bool& has_r)
{
    switch (f.kind()) {
    case FormulaKind::atom:
    case FormulaKind::top: return;
    case FormulaKind::neighborhood: has_n = true; [[fallthrough]];
    case FormulaKind::negation: scan_operators(f.operand(), has_n, has_r); return;
    case FormulaKind::reach: has_r = true; [[fallthrough]];
    case FormulaKind::conjunction:
        scan_operators(f.lhs(), has_n, has_r);
        scan_operators(f.rhs(), has_n, has_r);
        return;
    }
}

void collect_atoms(const Formula& f, std::set<std::string>& out)
{
    switch (f.kind()) {
    case FormulaKind::atom: out.insert(f.name()); return;
    case FormulaKind::top: return;
    case FormulaKind::negation:
    case FormulaKind::neighborhood: collect_atoms(f.operand(), out); return;
    case FormulaKind::conjunction:
    case FormulaKind::reach:
        collect_atoms(f.lhs(), out);
        collect_atoms(f.rhs(), out);
        return;
    }
}

} // namespace

Fragment fragment_of(const Formula& f)
{
    bool has_n = false;
    bool has_r = false;
    scan_operators(f, has_n, has_r);
    if (has_n && has_r) {
        return Fragment::full;
    }
    if (has_n) {
        return Fragment::neighborhood;
    }
    if (has_r) {
        return Fragment::reach;
    }
    return Fragment::boolean;
}

bool in_fragment(const Formula& f, Fragment fragment)
{
    const auto least = fragment_of(f);
    return least == fragment || least == Fragment::boolean || fragment == Fragment::full;
}

std::set<std::string> atoms_of(const Formula& f)
{
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

} // namespace slsc
