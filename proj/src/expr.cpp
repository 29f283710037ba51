#include "qinst/expr.hpp"

#include <cctype>
#include <sstream>

namespace qinst {

bool operator==(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Gen: return x.gen == y.gen;
        case Expr::Kind::Q: return true;
        case Expr::Kind::Num: return x.value == y.value;
        case Expr::Kind::Pow:
            return x.exponent == y.exponent && *x.children[0] == *y.children[0];
        case Expr::Kind::Sum:
            if (x.signs != y.signs) return false;
            [[fallthrough]];
        case Expr::Kind::Prod: {
            if (x.children.size() != y.children.size()) return false;
            for (std::size_t i = 0; i < x.children.size(); ++i)
                if (!(*x.children[i] == *y.children[i])) return false;
            return true;
        }
    }
    return false;
}

namespace {

enum class Tok { Plus, Minus, Star, Caret, LParen, RParen, Gen, Q, Number, End };

struct Token {
    Tok kind;
    char gen = 0;
    Rational value;
    int line = 1, col = 1;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
            ++pos_;
        }
        cur_ = Token{Tok::End, 0, Rational(0), line_, col_, "<end>"};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            cur_ = Token{k, 0, Rational(0), line_, col_, std::string(1, c)};
            ++pos_;
            ++col_;
        };
        switch (c) {
            case '+': single(Tok::Plus); return;
            case '-': single(Tok::Minus); return;
            case '*': single(Tok::Star); return;
            case '^': single(Tok::Caret); return;
            case '(': single(Tok::LParen); return;
            case ')': single(Tok::RParen); return;
            case 'a': case 'A': case 'b': case 'B':
                cur_ = Token{Tok::Gen, c, Rational(0), line_, col_, std::string(1, c)};
                ++pos_;
                ++col_;
                return;
            case 'q': single(Tok::Q); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start_col = col_;
            std::string digits;
            auto read_digits = [&] {
                std::string d;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    d += src_[pos_++];
                    ++col_;
                }
                return d;
            };
            digits = read_digits();
            std::string text = digits;
            Rational v(BigInt::from_string(digits), BigInt(1));
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                ++col_;
                std::string den = read_digits();
                if (den.empty() || BigInt::from_string(den).is_zero())
                    throw parse_error(line_, col_, "expected a nonzero denominator");
                v = Rational(BigInt::from_string(digits), BigInt::from_string(den));
                text += "/" + den;
            }
            cur_ = Token{Tok::Number, 0, v, line_, start_col, text};
            return;
        }
        throw parse_error(line_, col_,
                          std::string("unexpected character '") + c +
                              "', expected one of: a A b B q rational + - ^ ( )");
    }
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Expr::Ptr run() {
        Expr::Ptr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw parse_error(t.line, t.col, "unexpected '" + t.text +
                                                 "', expected one of: + - ^ <end>");
        return e;
    }

private:
    Lexer lex_;

    static bool starts_atom(const Token& t) {
        return t.kind == Tok::Gen || t.kind == Tok::Q || t.kind == Tok::Number ||
               t.kind == Tok::LParen;
    }

    Expr::Ptr parse_expr() {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Sum;
        const Token& first = lex_.peek();
        node->line = first.line;
        node->col = first.col;
        node->children.push_back(parse_term());
        node->signs.push_back('+');
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.take();
            node->children.push_back(parse_term());
            node->signs.push_back(op.kind == Tok::Plus ? '+' : '-');
        }
        if (node->children.size() == 1 && node->signs[0] == '+') return node->children[0];
        return node;
    }

    Expr::Ptr parse_term() {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Prod;
        const Token& first = lex_.peek();
        node->line = first.line;
        node->col = first.col;
        node->children.push_back(parse_factor());
        for (;;) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                node->children.push_back(parse_factor());
            } else if (starts_atom(lex_.peek())) {
                node->children.push_back(parse_factor());
            } else {
                break;
            }
        }
        if (node->children.size() == 1) return node->children[0];
        return node;
    }

    Expr::Ptr parse_factor() {
        Expr::Ptr base = parse_atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        int sign = 1;
        if (lex_.peek().kind == Tok::Minus) { lex_.take(); sign = -1; }
        else if (lex_.peek().kind == Tok::Plus) { lex_.take(); }
        const Token& t = lex_.peek();
        if (t.kind != Tok::Number || !t.value.is_integer())
            throw parse_error(t.line, t.col,
                              "unexpected '" + t.text + "', expected a signed integer exponent");
        Token num = lex_.take();
        if (!num.value.num().fits_int64())
            throw parse_error(num.line, num.col, "exponent out of range");
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Pow;
        node->children.push_back(base);
        node->exponent = sign * int(num.value.num().to_int64());
        node->line = base->line;
        node->col = base->col;
        return node;
    }

    Expr::Ptr parse_atom() {
        const Token& t = lex_.peek();
        auto node = std::make_shared<Expr>();
        node->line = t.line;
        node->col = t.col;
        switch (t.kind) {
            case Tok::Gen:
                node->kind = Expr::Kind::Gen;
                node->gen = t.gen;
                lex_.take();
                return node;
            case Tok::Q:
                node->kind = Expr::Kind::Q;
                lex_.take();
                return node;
            case Tok::Number:
                node->kind = Expr::Kind::Num;
                node->value = t.value;
                lex_.take();
                return node;
            case Tok::LParen: {
                lex_.take();
                Expr::Ptr inner = parse_expr();
                const Token& close = lex_.peek();
                if (close.kind != Tok::RParen)
                    throw parse_error(close.line, close.col,
                                      "unexpected '" + close.text + "', expected ')'");
                lex_.take();
                return inner;
            }
            default:
                throw parse_error(t.line, t.col,
                                  "unexpected '" + t.text +
                                      "', expected one of: a A b B q rational '('");
        }
    }
};

void print_node(const Expr::Ptr& t, std::ostream& os, bool parenthesize_sum_only);

void print_child(const Expr::Ptr& c, std::ostream& os, bool force_paren) {
    if (force_paren) {
        os << "(";
        print_node(c, os, false);
        os << ")";
    } else {
        print_node(c, os, false);
    }
}

void print_node(const Expr::Ptr& t, std::ostream& os, bool) {
    switch (t->kind) {
        case Expr::Kind::Gen: os << t->gen; break;
        case Expr::Kind::Q: os << 'q'; break;
        case Expr::Kind::Num: os << t->value.to_string(); break;
        case Expr::Kind::Pow:
            print_child(t->children[0], os,
                        t->children[0]->kind == Expr::Kind::Sum ||
                            t->children[0]->kind == Expr::Kind::Prod ||
                            t->children[0]->kind == Expr::Kind::Pow);
            os << '^' << t->exponent;
            break;
        case Expr::Kind::Prod: {
            for (std::size_t i = 0; i < t->children.size(); ++i) {
                if (i) os << ' ';
                const Expr::Ptr& c = t->children[i];
                // nested sums/products only arise from explicit parentheses;
                // keep them grouped so the parse is reproduced
                bool paren = c->kind == Expr::Kind::Sum || c->kind == Expr::Kind::Prod;
                print_child(c, os, paren);
            }
            break;
        }
        case Expr::Kind::Sum: {
            for (std::size_t i = 0; i < t->children.size(); ++i) {
                if (i) os << (t->signs[i] == '+' ? " + " : " - ");
                print_child(t->children[i], os, t->children[i]->kind == Expr::Kind::Sum);
            }
            break;
        }
    }
}

}  // namespace

Expr::Ptr parse(const std::string& src) { return Parser(src).run(); }

std::string print(const Expr::Ptr& t) {
    std::ostringstream os;
    print_node(t, os, false);
    return os.str();
}

HElement eval(const Expr::Ptr& t) {
    switch (t->kind) {
        case Expr::Kind::Gen:
            switch (t->gen) {
                case 'a': return HElement::alpha();
                case 'A': return HElement::alpha_star();
                case 'b': return HElement::beta();
                default: return HElement::beta_star();
            }
        case Expr::Kind::Q: return HElement(QLaurent::q());
        case Expr::Kind::Num: return HElement(QLaurent(t->value));
        case Expr::Kind::Prod: {
            HElement r = HElement::one();
            for (const auto& c : t->children) r *= eval(c);
            return r;
        }
        case Expr::Kind::Sum: {
            HElement r;
            for (std::size_t i = 0; i < t->children.size(); ++i) {
                if (t->signs[i] == '+')
                    r += eval(t->children[i]);
                else
                    r -= eval(t->children[i]);
            }
            return r;
        }
        case Expr::Kind::Pow: {
            HElement base = eval(t->children[0]);
            int e = t->exponent;
            if (e >= 0) {
                HElement r = HElement::one();
                for (int i = 0; i < e; ++i) r *= base;
                return r;
            }
            auto scalar = base.scalar_part();
            if (!scalar || !scalar->is_monomial())
                throw std::invalid_argument(
                    "negative powers are defined only for invertible scalars "
                    "(nonzero rationals and q-monomials)");
            return HElement(scalar->inverse().pow(-e));
        }
    }
    return {};
}

}  // namespace qinst
