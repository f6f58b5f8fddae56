#ifndef SPST_EXPR_HPP
#define SPST_EXPR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

#include "spst/partition.hpp"
#include "spst/symfunc.hpp"
#include "spst/transitions.hpp"

namespace spst {

/// AST of the expression language:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom | atom '@[' expr ']' | '(' expr ')' | integer
///   atom   := ('s'|'h'|'e'|'p'|'m'|'sdag'|'L'|'Hseries'|'Lseries')
///             optional '[' int-list ']'
///
/// Whitespace is insignificant. Bracket indices must be well-formed
/// partitions; L takes exactly one positive index; the named series take
/// none. Every node carries its source span for error reporting.
struct Expr {
    enum class Kind { Integer, Atom, LyndonAtom, HSeries, LSeries, Add, Sub, Mul, Plethysm };

    Kind kind;
    mpz_class number;       // Integer
    char letter = 0;        // Atom: 's','h','e','p','m'
    bool dagger = false;    // Atom: true for sdag
    Partition index;        // Atom
    int lyndon_index = 0;   // LyndonAtom
    std::shared_ptr<const Expr> lhs, rhs;  // binary nodes and Plethysm
    std::size_t begin = 0, end = 0;

    bool operator==(const Expr& other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws ParseError (with offset and expectation) on bad input, including
// trailing garbage.
ExprPtr parse_expression(std::string_view text);

// Canonical text that reparses to an equal AST.
std::string render(const Expr& expr);

// Evaluates in the power basis, all arithmetic truncated at cap. Atoms whose
// degree exceeds the cap are rejected rather than silently truncated to
// zero. Module errors are rethrown as EvalError with the node's span.
SymFunc eval(const Expr& expr, int cap, ExpansionCache& cache = ExpansionCache::global());

}  // namespace spst

#endif
