#include "spst/expr.hpp"

#include <cctype>

#include "spst/errors.hpp"
#include "spst/plethysm.hpp"

namespace spst {

bool Expr::operator==(const Expr& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Integer: return number == other.number;
        case Kind::Atom:
            return letter == other.letter && dagger == other.dagger && index == other.index;
        case Kind::LyndonAtom: return lyndon_index == other.lyndon_index;
        case Kind::HSeries:
        case Kind::LSeries: return true;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Plethysm: return *lhs == *other.lhs && *rhs == *other.rhs;
    }
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        ExprPtr out = expression();
        skip_whitespace();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_whitespace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_whitespace();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(pos_, what);
    }

    ExprPtr expression() {
        ExprPtr left = term();
        for (;;) {
            bool plus = peek('+');
            if (!plus && !peek('-')) return left;
            ++pos_;
            ExprPtr right = term();
            auto node = std::make_shared<Expr>();
            node->kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            node->begin = left->begin;
            node->end = right->end;
            node->lhs = std::move(left);
            node->rhs = std::move(right);
            left = std::move(node);
        }
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (peek('*')) {
            ++pos_;
            ExprPtr right = factor();
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Mul;
            node->begin = left->begin;
            node->end = right->end;
            node->lhs = std::move(left);
            node->rhs = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr factor() {
        skip_whitespace();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "an atom, integer, or parenthesized expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expression();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ExprPtr node = atom();
            skip_whitespace();
            if (pos_ < text_.size() && text_[pos_] == '@') {
                std::size_t begin = node->begin;
                ++pos_;
                expect('[', "'[' after '@'");
                ExprPtr inner = expression();
                expect(']', "']' closing the plethysm argument");
                auto pleth = std::make_shared<Expr>();
                pleth->kind = Expr::Kind::Plethysm;
                pleth->begin = begin;
                pleth->end = pos_;
                pleth->lhs = std::move(node);
                pleth->rhs = std::move(inner);
                return pleth;
            }
            return node;
        }
        throw ParseError(pos_, "an atom, integer, or parenthesized expression");
    }

    ExprPtr integer_literal() {
        std::size_t begin = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Integer;
        node->number = mpz_class(digits, 10);
        node->begin = begin;
        node->end = pos_;
        return node;
    }

    int bare_integer(const char* what) {
        skip_whitespace();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, what);
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw ParseError(pos_, "a smaller integer");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    std::vector<int> bracket_list() {
        expect('[', "'['");
        std::vector<int> values;
        if (consume(']')) return values;
        values.push_back(bare_integer("a part"));
        while (consume(',')) values.push_back(bare_integer("a part"));
        expect(']', "']' or ','");
        return values;
    }

    ExprPtr atom() {
        skip_whitespace();
        std::size_t begin = pos_;
        std::string name;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];

        auto node = std::make_shared<Expr>();
        node->begin = begin;
        if (name == "Hseries" || name == "Lseries") {
            if (peek('['))
                throw ParseError(pos_, "no index (" + name + " takes none)");
            node->kind = name == "Hseries" ? Expr::Kind::HSeries : Expr::Kind::LSeries;
            node->end = pos_;
            return node;
        }
        if (name == "L") {
            std::vector<int> values = bracket_list();
            if (values.size() != 1 || values[0] < 1)
                throw ParseError(begin, "L[n] with a single positive index");
            node->kind = Expr::Kind::LyndonAtom;
            node->lyndon_index = values[0];
            node->end = pos_;
            return node;
        }
        if (name == "s" || name == "h" || name == "e" || name == "p" || name == "m" ||
            name == "sdag") {
            std::vector<int> parts;
            if (peek('[')) parts = bracket_list();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] < 1 || (i > 0 && parts[i - 1] < parts[i]))
                    throw ParseError(begin, "a weakly decreasing list of positive parts");
            }
            node->kind = Expr::Kind::Atom;
            node->dagger = name == "sdag";
            node->letter = node->dagger ? 's' : name[0];
            node->index = Partition(std::move(parts));
            node->end = pos_;
            return node;
        }
        throw ParseError(begin, "one of s, h, e, p, m, sdag, L, Hseries, Lseries");
    }
};

std::string atom_text(const Expr& expr) {
    switch (expr.kind) {
        case Expr::Kind::Atom:
            return (expr.dagger ? std::string("sdag") : std::string(1, expr.letter)) +
                   expr.index.to_string();
        case Expr::Kind::LyndonAtom: return "L[" + std::to_string(expr.lyndon_index) + "]";
        case Expr::Kind::HSeries: return "Hseries";
        case Expr::Kind::LSeries: return "Lseries";
        default: break;
    }
    throw std::logic_error("atom_text: not an atom");
}

bool is_additive(const Expr& expr) {
    return expr.kind == Expr::Kind::Add || expr.kind == Expr::Kind::Sub;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string render(const Expr& expr) {
    switch (expr.kind) {
        case Expr::Kind::Integer: return expr.number.get_str();
        case Expr::Kind::Atom:
        case Expr::Kind::LyndonAtom:
        case Expr::Kind::HSeries:
        case Expr::Kind::LSeries: return atom_text(expr);
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            std::string right = render(*expr.rhs);
            if (is_additive(*expr.rhs)) right = "(" + right + ")";
            return render(*expr.lhs) + (expr.kind == Expr::Kind::Add ? " + " : " - ") + right;
        }
        case Expr::Kind::Mul: {
            auto wrap = [](const Expr& e, bool also_mul) {
                std::string s = render(e);
                if (is_additive(e) || (also_mul && e.kind == Expr::Kind::Mul))
                    return "(" + s + ")";
                return s;
            };
            return wrap(*expr.lhs, false) + "*" + wrap(*expr.rhs, true);
        }
        case Expr::Kind::Plethysm: return atom_text(*expr.lhs) + "@[" + render(*expr.rhs) + "]";
    }
    throw std::logic_error("render: unknown node");
}

SymFunc eval(const Expr& expr, int cap, ExpansionCache& cache) {
    try {
        switch (expr.kind) {
            case Expr::Kind::Integer:
                return SymFunc::constant(mpq_class(expr.number), cap);
            case Expr::Kind::Atom: {
                if (expr.index.size() > cap)
                    throw EvalError(expr.begin, expr.end,
                                    "degree " + std::to_string(expr.index.size()) +
                                        " exceeds cap " + std::to_string(cap));
                if (expr.dagger) {
                    StableSpechtExpansion e;
                    e.cap = cap;
                    e.terms[expr.index] = 1;
                    return to_power(stable_specht_to_schur(e, cache));
                }
                Basis basis;
                switch (expr.letter) {
                    case 's': basis = Basis::Schur; break;
                    case 'h': basis = Basis::Homogeneous; break;
                    case 'e': basis = Basis::Elementary; break;
                    case 'p': basis = Basis::Power; break;
                    case 'm': basis = Basis::Monomial; break;
                    default: throw std::logic_error("eval: bad atom letter");
                }
                return to_power(SymFunc::basis_element(basis, expr.index, cap));
            }
            case Expr::Kind::LyndonAtom:
                if (expr.lyndon_index > cap)
                    throw EvalError(expr.begin, expr.end,
                                    "degree " + std::to_string(expr.lyndon_index) +
                                        " exceeds cap " + std::to_string(cap));
                return lyndon(expr.lyndon_index, cap);
            case Expr::Kind::HSeries: return series(SeriesKind::HWithOne, cap);
            case Expr::Kind::LSeries: return series(SeriesKind::Lyndon, cap);
            case Expr::Kind::Add: return add(eval(*expr.lhs, cap, cache), eval(*expr.rhs, cap, cache));
            case Expr::Kind::Sub: return sub(eval(*expr.lhs, cap, cache), eval(*expr.rhs, cap, cache));
            case Expr::Kind::Mul:
                return multiply(eval(*expr.lhs, cap, cache), eval(*expr.rhs, cap, cache));
            case Expr::Kind::Plethysm:
                return plethysm(eval(*expr.lhs, cap, cache), eval(*expr.rhs, cap, cache));
        }
        throw std::logic_error("eval: unknown node");
    } catch (const EvalError&) {
        throw;
    } catch (const Error& err) {
        throw EvalError(expr.begin, expr.end, err.what());
    }
}

}  // namespace spst
