#include "qtsym/symfunc.hpp"

#include <cctype>
#include <sstream>

// Parsers for the canonical text forms produced by IntPoly::str and
// RatQT::str, used by the disk cache and the CLI.

namespace qtsym {
namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }
};

mpz_class parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) c.fail("expected integer");
    return mpz_class(c.s.substr(start, c.pos - start));
}

std::string parse_name(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
        ++c.pos;
    if (c.pos == start) c.fail("expected name");
    return c.s.substr(start, c.pos - start);
}

// term := [int] [ '*'? var ['^' int] ]*
IntPoly parse_term(Cursor& c, const VarListPtr& vars) {
    mpz_class coeff = 1;
    Expo ex{};
    bool any = false;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        coeff = parse_int(c);
        any = true;
    }
    while (true) {
        c.skip_ws();
        std::size_t save = c.pos;
        if (c.peek() == '*') c.eat('*');
        if (c.pos >= c.s.size() || !std::isalpha(static_cast<unsigned char>(c.s[c.pos]))) {
            c.pos = save;
            break;
        }
        std::string name = parse_name(c);
        int idx = vars->index_of(name);
        if (idx < 0) c.fail("unknown variable " + name);
        unsigned long e = 1;
        if (c.eat('^')) e = parse_int(c).get_ui();
        ex.e[static_cast<std::size_t>(idx)] =
            static_cast<std::uint16_t>(ex.e[static_cast<std::size_t>(idx)] + e);
        ex.recount();
        any = true;
    }
    if (!any) c.fail("expected term");
    return IntPoly::monomial(vars, ex, coeff);
}

IntPoly parse_poly(Cursor& c, const VarListPtr& vars) {
    IntPoly acc(vars);
    bool neg = false;
    if (c.eat('-')) neg = true;
    else c.eat('+');
    while (true) {
        IntPoly t = parse_term(c, vars);
        acc = neg ? acc - t : acc + t;
        c.skip_ws();
        if (c.eat('+')) { neg = false; continue; }
        if (c.eat('-')) { neg = true; continue; }
        break;
    }
    return acc;
}

RatQT parse_ratqt(const std::string& text, const VarListPtr& vars) {
    Cursor c{text};
    IntPoly num(vars), den = IntPoly::constant(vars, 1);
    if (c.peek() == '(') {
        c.eat('(');
        num = parse_poly(c, vars);
        if (!c.eat(')')) c.fail("expected ')'");
        if (c.eat('/')) {
            if (!c.eat('(')) c.fail("expected '('");
            den = parse_poly(c, vars);
            if (!c.eat(')')) c.fail("expected ')'");
        }
    } else {
        num = parse_poly(c, vars);
    }
    c.skip_ws();
    if (c.pos != c.s.size()) c.fail("trailing input");
    return RatQT(std::move(num), std::move(den));
}

}  // namespace

SymFunc SymFunc::deserialize(const std::string& text, const VarListPtr& vars) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "basis=p;")
        throw std::invalid_argument("SymFunc::deserialize: bad header");
    SymFunc f(vars);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::size_t sep = line.find(" : ");
        if (sep == std::string::npos)
            throw std::invalid_argument("SymFunc::deserialize: bad line: " + line);
        Partition la = Partition::parse_dotted(line.substr(0, sep));
        RatQT c = parse_ratqt(line.substr(sep + 3), vars);
        if (!c.is_zero()) f.set_coeff(la, c);
    }
    return f;
}

}  // namespace qtsym
