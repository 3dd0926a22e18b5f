#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slsc {

enum class FormulaKind { atom, top, negation, conjunction, neighborhood, reach };

// Immutable formula tree over the six core constructors. Copies share nodes.
// Derived operators (false, or, closure, surround) are expanded by the
// helper functions below and by the parser.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula top();
    static Formula negation(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula neighborhood(Formula operand);
    static Formula reach(Formula lhs, Formula rhs);

    [[nodiscard]] FormulaKind kind() const noexcept;
    // Atom name; empty for other kinds.
    [[nodiscard]] const std::string& name() const noexcept;
    // Single operand of ¬ and 𝒩.
    [[nodiscard]] const Formula& operand() const;
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;

    // Node identity, stable across copies.
    [[nodiscard]] const void* node_id() const noexcept { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Letter followed by letters, digits or underscores, and not a keyword of
// the concrete syntax.
bool is_valid_atom_name(std::string_view name);

Formula falsum();
Formula disjunction(Formula lhs, Formula rhs);
// 𝒞φ ≡ φ ∨ 𝒩φ
Formula closure(Formula operand);
// φ1 𝒮 φ2 ≡ φ1 ∧ ¬(φ1 ℛ ¬(φ1 ∨ φ2))
Formula surround(Formula lhs, Formula rhs);
// Left-nested conjunction; ⊤ for an empty list.
Formula conjunction_of(const std::vector<Formula>& conjuncts);

// size(⊤) = size(p) = 1; size(¬φ) = size(𝒩φ) = 1 + size(φ);
// size(φ1 ∧ φ2) = size(φ1 ℛ φ2) = size(φ1) + size(φ2).
std::size_t size(const Formula& f);

// Constructor nesting depth; 0 for atoms and ⊤.
std::size_t depth(const Formula& f);

enum class Fragment {
    boolean,      // neither 𝒩 nor ℛ
    neighborhood, // L_N: no ℛ
    reach,        // L_R: no 𝒩
    full,
};

std::string_view to_string(Fragment fragment);

// Least fragment containing the formula.
Fragment fragment_of(const Formula& f);

// True iff `f` belongs to `fragment` (boolean formulas belong to all).
bool in_fragment(const Formula& f, Fragment fragment);

std::set<std::string> atoms_of(const Formula& f);

// Grammar, loosest to tightest binding:
//   reach    := or (('R' | 'S') reach)?        right-associative
//   or       := and ('|' and)*
//   and      := unary ('&' unary)*
//   unary    := ('!' | 'N' | 'C') unary | primary
//   primary  := 'true' | 'false' | ident | '(' reach ')'
// ¬ ∧ ∨ ⊤ are accepted for ! & | true. Throws Error{SyntaxError} or
// Error{UnbalancedParens} with the offending position.
Formula parse_formula(std::string_view text);

// Minimal parenthesization; parse_formula(render(f)) == f.
std::string render(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

} // namespace slsc
