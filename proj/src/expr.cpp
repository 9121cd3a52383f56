#include "ncfrieze/expr.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "ncfrieze/errors.hpp"

namespace ncfrieze {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_scalar(const ExprPtr& e) { return e->kind == Expr::Kind::scalar; }

}  // namespace

ExprPtr make_scalar(Rational value) {
    Expr e;
    e.kind = Expr::Kind::scalar;
    e.scalar_value = std::move(value);
    return node(std::move(e));
}

ExprPtr make_symbol(std::string name) {
    Expr e;
    e.kind = Expr::Kind::symbol;
    e.symbol_name = std::move(name);
    return node(std::move(e));
}

ExprPtr make_sum(std::vector<ExprPtr> children) {
    std::vector<ExprPtr> flat;
    for (ExprPtr& child : children) {
        if (child->kind == Expr::Kind::sum)
            flat.insert(flat.end(), child->children.begin(), child->children.end());
        else
            flat.push_back(std::move(child));
    }
    // Scalars commute with everything; combine them at the first scalar slot.
    Rational scalar_total(0);
    std::ptrdiff_t first_scalar = -1;
    std::vector<ExprPtr> kept;
    for (ExprPtr& child : flat) {
        if (is_scalar(child)) {
            if (first_scalar < 0) first_scalar = static_cast<std::ptrdiff_t>(kept.size());
            scalar_total += child->scalar_value;
        } else {
            kept.push_back(std::move(child));
        }
    }
    if (scalar_total != 0 && first_scalar >= 0)
        kept.insert(kept.begin() + first_scalar, make_scalar(scalar_total));
    if (kept.empty()) return make_scalar(Rational(0));
    if (kept.size() == 1) return kept.front();
    Expr e;
    e.kind = Expr::Kind::sum;
    e.children = std::move(kept);
    return node(std::move(e));
}

ExprPtr make_product(std::vector<ExprPtr> children) {
    std::vector<ExprPtr> flat;
    for (ExprPtr& child : children) {
        if (child->kind == Expr::Kind::product)
            flat.insert(flat.end(), child->children.begin(), child->children.end());
        else
            flat.push_back(std::move(child));
    }
    Rational coefficient(1);
    std::vector<ExprPtr> kept;
    for (ExprPtr& child : flat) {
        if (is_scalar(child))
            coefficient *= child->scalar_value;
        else
            kept.push_back(std::move(child));
    }
    if (coefficient == 0) return make_scalar(Rational(0));
    if (kept.empty()) return make_scalar(coefficient);
    if (coefficient != 1) kept.insert(kept.begin(), make_scalar(coefficient));
    if (kept.size() == 1) return kept.front();
    Expr e;
    e.kind = Expr::Kind::product;
    e.children = std::move(kept);
    return node(std::move(e));
}

ExprPtr make_power(ExprPtr base, long exponent) {
    if (exponent == 0) return make_scalar(Rational(1));
    if (exponent == 1) return base;
    if (base->kind == Expr::Kind::power) return make_power(base->base, base->exponent * exponent);
    if (is_scalar(base) && !(base->scalar_value == 0 && exponent < 0)) {
        Rational q = base->scalar_value;
        Rational acc(1);
        for (long n = 0; n < (exponent < 0 ? -exponent : exponent); ++n) acc *= q;
        if (exponent < 0) acc = 1 / acc;
        return make_scalar(acc);
    }
    Expr e;
    e.kind = Expr::Kind::power;
    e.base = std::move(base);
    e.exponent = exponent;
    return node(std::move(e));
}

ExprPtr expr_neg(const ExprPtr& e) { return make_product({make_scalar(Rational(-1)), e}); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingDescriptor& ring) : text_(text), ring_(ring) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
        return e;
    }

private:
    std::string_view text_;
    const RingDescriptor& ring_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    ExprPtr parse_sum() {
        std::vector<ExprPtr> terms{parse_term()};
        while (true) {
            if (consume('+'))
                terms.push_back(parse_term());
            else if (consume('-'))
                terms.push_back(expr_neg(parse_term()));
            else
                break;
        }
        return make_sum(std::move(terms));
    }

    ExprPtr parse_term() {
        bool negated = consume('-');
        std::vector<ExprPtr> factors{parse_factor()};
        while (consume('*')) factors.push_back(parse_factor());
        ExprPtr p = make_product(std::move(factors));
        return negated ? expr_neg(p) : p;
    }

    ExprPtr parse_factor() {
        ExprPtr atom = parse_atom();
        if (consume('^')) {
            long exponent = parse_signed_int();
            if (exponent == 0) throw SyntaxError("exponent must be a nonzero integer", pos_);
            return make_power(std::move(atom), exponent);
        }
        return atom;
    }

    long parse_signed_int() {
        skip_space();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        long value = 0;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++digits;
            ++pos_;
        }
        if (digits == 0) throw SyntaxError("expected integer exponent", start);
        return negative ? -value : value;
    }

    mpz_class parse_digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected digits", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    ExprPtr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class numerator = parse_digits();
            mpz_class denominator = 1;
            // '/' is part of the rational literal; there is no division operator.
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t den_pos = pos_;
                denominator = parse_digits();
                if (denominator == 0) throw SyntaxError("denominator must be positive", den_pos);
            }
            return make_scalar(rational_from_parts(numerator, denominator));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            check_symbol(name, start);
            return make_symbol(std::move(name));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_sum();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        throw SyntaxError("unexpected character", pos_);
    }

    void check_symbol(const std::string& name, std::size_t position) {
        switch (ring_.kind) {
            case RingKind::quaternion:
                if (name == "i" || name == "j" || name == "k") return;
                throw UnknownSymbol("'" + name + "' is not a quaternion generator (position " +
                                    std::to_string(position) + ")");
            case RingKind::free_skew:
                for (const std::string& var : ring_.vars)
                    if (var == name) return;
                throw UnknownSymbol("'" + name + "' is not a declared variable of " + ring_.name() +
                                    " (position " + std::to_string(position) + ")");
            default:
                throw UnknownSymbol("'" + name + "' used in the symbol-free ring " + ring_.name() +
                                    " (position " + std::to_string(position) + ")");
        }
    }
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const RingDescriptor& ring) {
    return Parser(text, ring).run();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_product(const Expr& e, bool allow_leading_minus);

std::string render_factor(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::scalar: {
            std::string s = rational_to_string(e->scalar_value);
            return e->scalar_value < 0 ? "(" + s + ")" : s;
        }
        case Expr::Kind::symbol:
            return e->symbol_name;
        case Expr::Kind::power: {
            std::string base;
            if (e->base->kind == Expr::Kind::symbol)
                base = e->base->symbol_name;
            else if (e->base->kind == Expr::Kind::scalar && !(e->base->scalar_value < 0))
                base = rational_to_string(e->base->scalar_value);
            else
                base = "(" + render_expr(e->base) + ")";
            return base + "^" + std::to_string(e->exponent);
        }
        case Expr::Kind::sum:
        case Expr::Kind::product:
            return "(" + render_expr(*e) + ")";
    }
    return "?";
}

std::string render_product(const Expr& e, bool allow_leading_minus) {
    std::ostringstream out;
    std::size_t start = 0;
    if (allow_leading_minus && is_scalar(e.children[0]) && e.children[0]->scalar_value < 0) {
        Rational magnitude = -e.children[0]->scalar_value;
        out << "-";
        if (magnitude != 1) out << rational_to_string(magnitude) << "*";
        start = 1;
    }
    for (std::size_t n = start; n < e.children.size(); ++n) {
        if (n > start) out << "*";
        out << render_factor(e.children[n]);
    }
    return out.str();
}

// Splits a sum child into a sign and the rendering of its magnitude.
std::pair<bool, std::string> render_signed_term(const ExprPtr& e) {
    if (e->kind == Expr::Kind::scalar && e->scalar_value < 0)
        return {true, rational_to_string(Rational(-e->scalar_value))};
    if (e->kind == Expr::Kind::product && is_scalar(e->children[0]) &&
        e->children[0]->scalar_value < 0) {
        std::vector<ExprPtr> rest(e->children.begin() + 1, e->children.end());
        Rational magnitude = -e->children[0]->scalar_value;
        if (magnitude != 1) rest.insert(rest.begin(), make_scalar(magnitude));
        ExprPtr body = make_product(std::move(rest));
        return {true, body->kind == Expr::Kind::product ? render_product(*body, false)
                                                        : render_factor(body)};
    }
    if (e->kind == Expr::Kind::product) return {false, render_product(*e, false)};
    return {false, render_factor(e)};
}

}  // namespace

std::string render_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::scalar:
            return rational_to_string(e.scalar_value);
        case Expr::Kind::symbol:
            return e.symbol_name;
        case Expr::Kind::power:
        case Expr::Kind::product: {
            if (e.kind == Expr::Kind::product) return render_product(e, true);
            Expr wrapper = e;
            return render_factor(node(std::move(wrapper)));
        }
        case Expr::Kind::sum: {
            std::ostringstream out;
            for (std::size_t n = 0; n < e.children.size(); ++n) {
                auto [negative, body] = render_signed_term(e.children[n]);
                if (n == 0)
                    out << (negative ? "-" : "") << body;
                else
                    out << (negative ? " - " : " + ") << body;
            }
            return out.str();
        }
    }
    return "?";
}

std::string render_expr(const ExprPtr& e) { return render_expr(*e); }

std::vector<std::string> expr_symbols(const Expr& e) {
    std::set<std::string> seen;
    auto walk = [&](auto&& self, const Expr& n) -> void {
        switch (n.kind) {
            case Expr::Kind::symbol: seen.insert(n.symbol_name); break;
            case Expr::Kind::sum:
            case Expr::Kind::product:
                for (const ExprPtr& child : n.children) self(self, *child);
                break;
            case Expr::Kind::power: self(self, *n.base); break;
            case Expr::Kind::scalar: break;
        }
    };
    walk(walk, e);
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

RingValue value_power(const RingValue& v, long exponent, const RingDescriptor& ring) {
    // exponent >= 1; powers of one element commute with each other, so
    // square-and-multiply is order-safe.
    RingValue acc = ring_one(ring);
    RingValue base = v;
    long n = exponent;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

}  // namespace

RingValue evaluate(const Expr& e, const RingDescriptor& ring, const Binding& binding) {
    switch (e.kind) {
        case Expr::Kind::scalar:
            return scalar_embed(e.scalar_value, ring);
        case Expr::Kind::symbol: {
            if (ring.kind == RingKind::quaternion) {
                if (e.symbol_name == "i") return make_quaternion_value(Quaternion::unit_i());
                if (e.symbol_name == "j") return make_quaternion_value(Quaternion::unit_j());
                if (e.symbol_name == "k") return make_quaternion_value(Quaternion::unit_k());
            }
            auto it = binding.find(e.symbol_name);
            if (it == binding.end()) throw UnboundSymbol("symbol '" + e.symbol_name + "' is not bound");
            if (!(it->second.ring == ring))
                throw DescriptorMismatch("binding for '" + e.symbol_name + "' lives in " +
                                         it->second.ring.name() + ", expected " + ring.name());
            return it->second;
        }
        case Expr::Kind::sum: {
            RingValue acc = evaluate(*e.children[0], ring, binding);
            for (std::size_t n = 1; n < e.children.size(); ++n)
                acc = add(acc, evaluate(*e.children[n], ring, binding));
            return acc;
        }
        case Expr::Kind::product: {
            RingValue acc = evaluate(*e.children[0], ring, binding);
            for (std::size_t n = 1; n < e.children.size(); ++n)
                acc = mul(acc, evaluate(*e.children[n], ring, binding));
            return acc;
        }
        case Expr::Kind::power: {
            RingValue base = evaluate(*e.base, ring, binding);
            if (e.exponent > 0) return value_power(base, e.exponent, ring);
            RingValue inverse = [&] {
                try {
                    return invert(base);
                } catch (const NotInvertible& err) {
                    throw NotInvertible("cannot invert '" + render_expr(e.base) + "': " + err.what());
                }
            }();
            return value_power(inverse, -e.exponent, ring);
        }
    }
    throw Error("unreachable expression kind");
}

RingValue evaluate(const ExprPtr& e, const RingDescriptor& ring, const Binding& binding) {
    return evaluate(*e, ring, binding);
}

}  // namespace ncfrieze
