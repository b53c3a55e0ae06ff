#include "qtsym/operators.hpp"

#include <cctype>

namespace qtsym {

LinearOp LinearOp::identity() {
    return LinearOp("id", 0, [](MacBasis&, const SymFunc& F) { return F; });
}

LinearOp LinearOp::nabla_op(bool inverse) {
    return LinearOp(inverse ? "nabla^-1" : "nabla", 0,
                    [inverse](MacBasis& B, const SymFunc& F) { return nabla(B, F, inverse); });
}

LinearOp LinearOp::delta(const SymFunc& f, bool primed, bool inverse, const std::string& label) {
    std::string name = std::string("delta") + (primed ? "'" : "") + (inverse ? "^-1" : "") +
                       "(" + label + ")";
    return LinearOp(name, 0, [f, primed, inverse](MacBasis& B, const SymFunc& F) {
        return delta_op(B, f, F, primed, inverse);
    });
}

LinearOp LinearOp::pi(bool inverse) {
    return LinearOp(inverse ? "pi^-1" : "pi", 0,
                    [inverse](MacBasis& B, const SymFunc& F) { return pi_op(B, F, inverse); });
}

LinearOp LinearOp::theta_(const SymFunc& f, const std::string& label) {
    return LinearOp("theta(" + label + ")", f.degree(),
                    [f](MacBasis& B, const SymFunc& F) { return theta(B, f, F); });
}

LinearOp LinearOp::mult(const SymFunc& f, const std::string& label) {
    return LinearOp("mult(" + label + ")", f.degree(),
                    [f](MacBasis&, const SymFunc& F) { return f * F; });
}

LinearOp LinearOp::skew(const SymFunc& f, const std::string& label) {
    return LinearOp("skew(" + label + ")", -f.degree(),
                    [f](MacBasis&, const SymFunc& F) { return perp(f, F); });
}

LinearOp LinearOp::pleth_conj(const std::string& which) {
    if (which == "omega")
        return LinearOp("omega", 0, [](MacBasis&, const SymFunc& F) { return omega(F); });
    if (which == "omegabar")
        return LinearOp("omegabar", 0, [](MacBasis&, const SymFunc& F) { return omega_bar(F); });
    throw std::invalid_argument("pleth_conj: unknown conjugation " + which);
}

LinearOp LinearOp::scalar(const RatQT& c) {
    return LinearOp("scalar(" + c.str() + ")", 0,
                    [c](MacBasis&, const SymFunc& F) { return F.scale(c); });
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
    std::string name = name_ == "id" ? o.name_ : (o.name_ == "id" ? name_ : name_ + " . " + o.name_);
    Fn a = fn_, b = o.fn_;
    return LinearOp(std::move(name), shift_ + o.shift_,
                    [a, b](MacBasis& B, const SymFunc& F) { return a(B, b(B, F)); });
}

namespace {

struct Tok {
    std::string name;   // identifier
    bool primed = false;
    bool inverse = false;
    std::string arg;    // inside parentheses, empty if none
    std::string index;  // digits or [..] directly after the name
    std::size_t pos = 0;
};

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Tok> tokenize(const std::string& s) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '.'))
            ++i;
    };
    skip();
    while (i < s.size()) {
        Tok t;
        t.pos = i;
        if (!std::isalpha(static_cast<unsigned char>(s[i]))) parse_fail(i, "expected a name");
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) t.name += s[i++];
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '[')) {
            if (s[i] == '[') {
                std::size_t close = s.find(']', i);
                if (close == std::string::npos) parse_fail(i, "missing ']'");
                t.index = s.substr(i, close - i + 1);
                i = close + 1;
            } else {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.index += s[i++];
            }
        }
        if (i < s.size() && s[i] == '\'') { t.primed = true; ++i; }
        if (i + 2 < s.size() && s.compare(i, 3, "^-1") == 0) { t.inverse = true; i += 3; }
        if (i < s.size() && s[i] == '(') {
            int depth = 1;
            std::size_t start = ++i;
            while (i < s.size() && depth > 0) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') --depth;
                ++i;
            }
            if (depth != 0) parse_fail(start, "missing ')'");
            t.arg = s.substr(start, i - start - 1);
        }
        if (i + 2 < s.size() && s.compare(i, 3, "^-1") == 0) { t.inverse = true; i += 3; }
        toks.push_back(std::move(t));
        skip();
    }
    return toks;
}

Partition parse_index(const std::string& index, std::size_t pos) {
    if (index.empty()) parse_fail(pos, "expected an index");
    if (index[0] != '[') {
        int n = std::stoi(index);
        return Partition::single(n);
    }
    std::vector<int> parts;
    std::string body = index.substr(1, index.size() - 2);
    std::size_t p = 0;
    while (p < body.size()) {
        std::size_t comma = body.find(',', p);
        if (comma == std::string::npos) comma = body.size();
        parts.push_back(std::stoi(body.substr(p, comma - p)));
        p = comma + 1;
    }
    return Partition(std::move(parts));
}

bool is_operand(const Tok& t) {
    static const std::string letters = "ehpsmH";
    return t.name.size() == 1 && letters.find(t.name[0]) != std::string::npos &&
           !t.index.empty();
}

SymFunc parse_operand(MacBasis& B, const Tok& t, const VarListPtr& vars) {
    Partition la = parse_index(t.index, t.pos);
    if (t.name == "H") return B.H(la).embed(vars);
    return basis_element(t.name[0], vars, la);
}

// scalar literal: integer or monomial fraction like 3*q^2*t / q, parsed via
// the polynomial reader in textio through a SymFunc round trip
RatQT parse_scalar(const std::string& text, const VarListPtr& vars, std::size_t pos) {
    try {
        SymFunc f = SymFunc::deserialize("basis=p;\n0 : " + text + "\n", vars);
        return f.constant_term();
    } catch (const std::exception& e) {
        parse_fail(pos, std::string("bad scalar: ") + e.what());
    }
}

LinearOp atom_to_op(MacBasis& B, const Tok& t, const VarListPtr& vars) {
    auto arg_fn = [&](void) -> std::pair<SymFunc, std::string> {
        auto sub = tokenize(t.arg);
        if (sub.size() != 1 || !is_operand(sub[0]))
            parse_fail(t.pos, "expected a basis element argument in " + t.name + "(...)");
        return {parse_operand(B, sub[0], vars), t.arg};
    };
    if (t.name == "nabla") return LinearOp::nabla_op(t.inverse);
    if (t.name == "pi") return LinearOp::pi(t.inverse);
    if (t.name == "omega") return LinearOp::pleth_conj("omega");
    if (t.name == "omegabar") return LinearOp::pleth_conj("omegabar");
    if (t.name == "delta") {
        auto [f, label] = arg_fn();
        if (t.primed && t.inverse) parse_fail(t.pos, "delta' has no inverse form here");
        return LinearOp::delta(f, t.primed, t.inverse, label);
    }
    if (t.name == "theta") {
        auto [f, label] = arg_fn();
        if (t.inverse) parse_fail(t.pos, "theta is not invertible");
        return LinearOp::theta_(f, label);
    }
    if (t.name == "mult") {
        auto [f, label] = arg_fn();
        return LinearOp::mult(f, label);
    }
    if (t.name == "skew") {
        auto [f, label] = arg_fn();
        return LinearOp::skew(f, label);
    }
    if (t.name == "scalar") return LinearOp::scalar(parse_scalar(t.arg, vars, t.pos));
    parse_fail(t.pos, "unknown operator " + t.name);
}

}  // namespace

LinearOp op_from_word(const std::string& word, const VarListPtr& vars) {
    auto toks = tokenize(word);
    LinearOp op = LinearOp::identity();
    MacBasis& B = mac_basis();
    for (const auto& t : toks) {
        if (is_operand(t)) parse_fail(t.pos, "operand not allowed inside an operator word");
        op = op * atom_to_op(B, t, vars);
    }
    return op;
}

SymFunc eval_expression(MacBasis& B, const std::string& expr, const VarListPtr& vars) {
    auto toks = tokenize(expr);
    if (toks.empty()) throw std::invalid_argument("parse error at position 0: empty expression");
    if (!is_operand(toks.back()))
        parse_fail(toks.back().pos, "expression must end with an operand");
    SymFunc F = parse_operand(B, toks.back(), vars);
    LinearOp op = LinearOp::identity();
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (is_operand(toks[i])) parse_fail(toks[i].pos, "operand in the middle of the word");
        op = op * atom_to_op(B, toks[i], vars);
    }
    return op(B, F);
}

}  // namespace qtsym
