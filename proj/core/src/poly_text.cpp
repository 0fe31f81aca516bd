#include <cctype>
#include <string>

#include "varcode/mpoly.hpp"

namespace varcode {
namespace {

// Recursive-descent parser for the polynomial grammar:
//   poly := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
//   factor := base ('^' uint)? ; base := var | elem | '(' poly ')' ;
//   var := letter (letter|digit|'_')* ; elem := uint | 'g' ('^' uint)?
// An identifier that names a ring variable is a var; a bare 'g' otherwise is
// the generator literal.
class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    SparsePoly run() {
        SparsePoly p = poly();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    unsigned long long uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an unsigned integer", pos_);
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    SparsePoly poly() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        SparsePoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    SparsePoly factor() {
        SparsePoly b = base();
        if (eat('^')) {
            unsigned long long e = uint();
            if (e > 0xffff) throw ParseError("exponent too large", pos_);
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    SparsePoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly p = poly();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long v = uint();
            return SparsePoly::constant(ring_,
                                        static_cast<unsigned>(v % ring_->field()->p()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (auto idx = ring_->vars().index_of(name))
                return SparsePoly::variable(ring_, *idx);
            if (name == "g") {
                unsigned long long e = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    // distinguish the literal g^k from a '^' belonging to factor:
                    // elem greedily takes the exponent, exactly as the grammar says
                    ++pos_;
                    e = uint();
                }
                unsigned v = ring_->field()->pow(ring_->field()->generator(),
                                                 static_cast<long long>(e));
                return SparsePoly::constant(ring_, v);
            }
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("expected a variable, element literal or '('", pos_);
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

SparsePoly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

std::string format_poly(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    const auto& names = p.ring()->vars().names;
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string mono;
        for (std::size_t i = names.size(); i-- > 0;) {
            if (!t.mono.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
        }
        if (mono.empty()) {
            out += format_element_value(t.coeff, *p.ring()->field());
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += format_element_value(t.coeff, *p.ring()->field()) + "*" + mono;
        }
    }
    return out;
}

} // namespace varcode
