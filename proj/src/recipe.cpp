#include "binv/recipe.hpp"

#include <cctype>

namespace binv {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw RecipeError("recipe parse error at position " + std::to_string(pos) +
                          ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (c) ++pos;
        return c;
    }
    void expect(char c) {
        if (take() != c) fail(std::string("expected '") + c + "'");
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rat parse_rational() {
        long num = parse_integer();
        if (pos < s.size() && s[pos] == '/') {  // no space allowed inside a literal
            ++pos;
            long den = parse_integer();
            if (den == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    static std::shared_ptr<const Recipe> node(Recipe r) {
        return std::make_shared<const Recipe>(std::move(r));
    }

    // expr := ['-'] term (('+'|'-') term)*
    Recipe parse_expr() {
        Recipe sum;
        sum.kind = Recipe::Kind::Sum;
        int sign = 1;
        if (peek() == '-') { take(); sign = -1; }
        sum.signs.push_back(sign);
        sum.children.push_back(node(parse_term()));
        while (peek() == '+' || peek() == '-') {
            sum.signs.push_back(take() == '+' ? 1 : -1);
            sum.children.push_back(node(parse_term()));
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1)
            return Recipe(*sum.children[0]);
        return sum;
    }

    bool starts_factor() {
        char c = peek();
        return c == 'l' || c == 'c' || c == 'q' || c == '(' || c == '[' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    // term := factor+
    Recipe parse_term() {
        Recipe prod;
        prod.kind = Recipe::Kind::Product;
        if (!starts_factor()) fail("expected an atom, literal, '(' or '['");
        while (starts_factor()) prod.children.push_back(node(parse_factor()));
        if (prod.children.size() == 1) return Recipe(*prod.children[0]);
        return prod;
    }

    // factor := primary ('^' integer)?
    Recipe parse_factor() {
        Recipe base = parse_primary();
        if (peek() == '^') {
            take();
            Recipe pw;
            pw.kind = Recipe::Kind::Power;
            pw.index = static_cast<int>(parse_integer());
            pw.children.push_back(node(std::move(base)));
            return pw;
        }
        return base;
    }

    Recipe parse_primary() {
        char c = peek();
        if (c == 'l' || c == 'c' || c == 'q') {
            take();
            Recipe r;
            r.kind = Recipe::Kind::Atom;
            r.atom = c;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Recipe r;
            r.kind = Recipe::Kind::Scalar;
            r.scalar = parse_rational();
            return r;
        }
        if (c == '[') {
            take();
            Recipe inner = parse_expr();
            expect(']');
            return inner;
        }
        if (c == '(') {
            take();
            Recipe first = parse_expr();
            if (peek() == ',') {
                take();
                Recipe second = parse_expr();
                expect(')');
                expect('_');
                Recipe tr;
                tr.kind = Recipe::Kind::Transvectant;
                tr.index = static_cast<int>(parse_integer());
                tr.children.push_back(node(std::move(first)));
                tr.children.push_back(node(std::move(second)));
                return tr;
            }
            expect(')');
            return first;
        }
        fail("unexpected character");
    }
};

}  // namespace

Recipe parse_recipe(const std::string& text) {
    Parser p(text);
    Recipe r = p.parse_expr();
    if (p.peek() != '\0') p.fail("trailing input");
    return r;
}

std::string recipe_to_string(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Atom:
            return std::string(1, r.atom);
        case Recipe::Kind::Scalar:
            return rat_to_string(r.scalar);
        case Recipe::Kind::Product: {
            std::string s;
            for (const auto& ch : r.children) {
                bool wrap = ch->kind == Recipe::Kind::Sum;
                s += wrap ? "[" + recipe_to_string(*ch) + "]" : recipe_to_string(*ch);
            }
            return s;
        }
        case Recipe::Kind::Power: {
            const Recipe& b = *r.children[0];
            bool wrap = b.kind != Recipe::Kind::Atom && b.kind != Recipe::Kind::Transvectant &&
                        b.kind != Recipe::Kind::Scalar;
            std::string bs = recipe_to_string(b);
            if (b.kind == Recipe::Kind::Transvectant) wrap = true;  // (..)_p^n is ambiguous
            return (wrap ? "[" + bs + "]" : bs) + "^" + std::to_string(r.index);
        }
        case Recipe::Kind::Transvectant:
            return "(" + recipe_to_string(*r.children[0]) + "," +
                   recipe_to_string(*r.children[1]) + ")_" + std::to_string(r.index);
        case Recipe::Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < r.children.size(); ++i) {
                if (i == 0) s += r.signs[i] < 0 ? "-" : "";
                else s += r.signs[i] < 0 ? " - " : " + ";
                s += recipe_to_string(*r.children[i]);
            }
            return s;
        }
    }
    throw RecipeError("corrupt recipe node");
}

Form evaluate_recipe(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Atom:
            if (r.atom == 'l') return GenericForms::linear();
            if (r.atom == 'c') return GenericForms::cubic();
            return GenericForms::quartic();
        case Recipe::Kind::Scalar: {
            Form f = Form::zero(0);
            f.coeffs[0] = CoeffPoly(r.scalar);
            return f;
        }
        case Recipe::Kind::Product: {
            Form f = evaluate_recipe(*r.children[0]);
            for (std::size_t i = 1; i < r.children.size(); ++i)
                f = form_mul(f, evaluate_recipe(*r.children[i]));
            return f;
        }
        case Recipe::Kind::Power:
            return form_pow(evaluate_recipe(*r.children[0]), r.index);
        case Recipe::Kind::Transvectant: {
            Form a = evaluate_recipe(*r.children[0]);
            Form b = evaluate_recipe(*r.children[1]);
            try {
                return transvectant(a, b, r.index);
            } catch (const std::domain_error& e) {
                throw RecipeError(e.what());
            }
        }
        case Recipe::Kind::Sum: {
            Form acc;
            bool started = false;
            for (std::size_t i = 0; i < r.children.size(); ++i) {
                Form t = evaluate_recipe(*r.children[i]);
                if (r.signs[i] < 0) t = form_scale(t, Rat(-1));
                if (!started) { acc = std::move(t); started = true; continue; }
                if (acc.order != t.order)
                    throw RecipeError("sum of forms of different orders (" +
                                      std::to_string(acc.order) + " vs " +
                                      std::to_string(t.order) + ")");
                acc = form_add(acc, t);
            }
            return acc;
        }
    }
    throw RecipeError("corrupt recipe node");
}

Form evaluate_recipe(const std::string& text) { return evaluate_recipe(parse_recipe(text)); }

}  // namespace binv
