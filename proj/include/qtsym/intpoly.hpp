#pragma once

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtsym {

// Ordered list of variable names shared by all values of one coefficient
// field instance.  Lists are interned so that pointer equality is the fast
// path when checking field compatibility.
class VarList {
public:
    static constexpr std::size_t max_vars = 8;

    static std::shared_ptr<const VarList> get(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a variable, or -1 if absent.
    int index_of(const std::string& n) const;

private:
    explicit VarList(std::vector<std::string> names);
    std::vector<std::string> names_;
};

using VarListPtr = std::shared_ptr<const VarList>;

// The base coefficient field vars for the whole library: {q, t}.
VarListPtr qt_vars();
// {q, t, extras...} in the given order.
VarListPtr qt_vars_plus(const std::vector<std::string>& extras);

// Exponent vector, zero-padded beyond the active variable count.  The
// total degree is cached; call recount() after writing exponents directly.
struct Expo {
    std::array<std::uint16_t, VarList::max_vars> e{};
    std::uint32_t tot = 0;

    void recount() {
        tot = 0;
        for (auto x : e) tot += x;
    }
    unsigned total() const { return tot; }
    bool operator==(const Expo& o) const { return e == o.e; }
};

// Graded-lexicographic comparison; this is the canonical term order.
inline int cmp_grlex(const Expo& a, const Expo& b) {
    if (a.tot != b.tot) return a.tot < b.tot ? -1 : 1;
    for (std::size_t i = 0; i < VarList::max_vars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct ExpoHash {
    std::size_t operator()(const Expo& x) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : x.e) { h ^= v; h *= 1099511628211ull; }
        return static_cast<std::size_t>(h);
    }
};

// Sparse multivariate polynomial over Z.  Terms are kept in descending
// graded-lex order with no zero coefficients, so equality is structural.
class IntPoly {
public:
    struct Term {
        Expo ex;
        mpz_class c;
    };

    IntPoly() : vars_(qt_vars()) {}
    explicit IntPoly(VarListPtr vars) : vars_(std::move(vars)) {}

    static IntPoly constant(VarListPtr vars, const mpz_class& c);
    static IntPoly variable(VarListPtr vars, const std::string& name, unsigned power = 1);
    static IntPoly monomial(VarListPtr vars, const Expo& ex, const mpz_class& c);

    const VarListPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].ex.total() == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    // Constant coefficient as mpz (requires is_constant()).
    mpz_class constant_value() const;

    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    const Term& leading() const;  // largest term in graded-lex order

    bool operator==(const IntPoly& o) const { return vars_ == o.vars_ && equal_terms(o); }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { *this = *this + o; return *this; }
    IntPoly& operator-=(const IntPoly& o) { *this = *this - o; return *this; }
    IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }

    IntPoly mul_scalar(const mpz_class& c) const;
    IntPoly mul_monomial(const Expo& ex, const mpz_class& c) const;
    IntPoly pow(unsigned k) const;

    // Exact division; nullopt when o does not divide *this.
    std::optional<IntPoly> divexact(const IntPoly& o) const;
    // Divide by a scalar that divides every coefficient.
    IntPoly div_scalar_exact(const mpz_class& c) const;

    // gcd of all integer coefficients, >= 0 (0 for the zero polynomial).
    mpz_class content() const;
    // Componentwise minimum exponent over all terms (monomial content).
    Expo monomial_content() const;

    // Every variable x replaced by x^k (ring homomorphism).
    IntPoly substitute_powers(unsigned k) const;
    // Substitute a small integer for one variable.
    IntPoly eval_var(std::size_t var, long value) const;
    // Exponent flip e -> maxdeg - e in one variable (used for x -> 1/x).
    IntPoly reverse_var(std::size_t var, unsigned maxdeg) const;

    // Re-express over a superset variable list (match by name).
    IntPoly embed(const VarListPtr& newvars) const;

    // Canonical text: terms in ascending degree, e.g. "1 - q*t".
    std::string str() const;

    // Construction from unsorted term data (sorts, merges, drops zeros).
    static IntPoly from_terms(VarListPtr vars, std::vector<Term> terms);

private:
    bool equal_terms(const IntPoly& o) const;

    VarListPtr vars_;
    std::vector<Term> terms_;
};

// Multivariate gcd over Z[vars]: includes the integer content, result has
// positive leading coefficient.  gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace qtsym
