#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinst/qalgebra.hpp"

namespace qinst {

/// Syntax error with source position and the token set that was expected.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& what_arg)
        : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what_arg),
          line_(line),
          col_(col) {}
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    int line_, col_;
};

/// AST for the expression language over {a, A, b, B, q, rationals}:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*          (juxtaposition is product)
///   factor := atom ('^' signed-int)?
///   atom   := 'a' | 'A' | 'b' | 'B' | 'q' | rational | '(' expr ')'
struct Expr {
    enum class Kind { Sum, Prod, Pow, Gen, Q, Num };
    using Ptr = std::shared_ptr<const Expr>;

    Kind kind;
    std::vector<Ptr> children;  // Sum, Prod members; Pow base as children[0]
    std::vector<char> signs;    // Sum: '+'/'-' per child (first is '+')
    int exponent = 0;           // Pow
    char gen = 0;               // Gen: 'a','A','b','B'
    Rational value;             // Num
    int line = 1, col = 1;

    friend bool operator==(const Expr& x, const Expr& y);
};

Expr::Ptr parse(const std::string& src);

/// Canonical rendering; parse(print(t)) reproduces t.
std::string print(const Expr::Ptr& t);

/// Evaluation into the algebra. Negative powers are defined only for
/// invertible scalars (q-monomials and nonzero rationals); anything else
/// throws parse_error-style std::invalid_argument.
HElement eval(const Expr::Ptr& t);

}  // namespace qinst
