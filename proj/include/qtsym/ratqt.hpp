#pragma once

#include "qtsym/intpoly.hpp"

namespace qtsym {

// Element of the fraction field of Z[vars], kept in canonical form:
// gcd(num, den) = 1 with joint integer content removed, den != 0 with
// positive leading coefficient, and 0 represented as 0/1.  Structural
// equality of canonical forms is field equality.
class RatQT {
public:
    RatQT() : num_(qt_vars()), den_(IntPoly::constant(qt_vars(), 1)) {}
    explicit RatQT(VarListPtr vars)
        : num_(vars), den_(IntPoly::constant(std::move(vars), 1)) {}
    RatQT(IntPoly num, IntPoly den);           // normalizes
    explicit RatQT(IntPoly num);               // denominator 1

    static RatQT integer(VarListPtr vars, long v);
    static RatQT integer(VarListPtr vars, const mpz_class& v);
    static RatQT rational(VarListPtr vars, long num, long den);
    static RatQT variable(VarListPtr vars, const std::string& name, int power = 1);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    const VarListPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_integer() const { return den_.is_one() && num_.is_constant(); }

    bool operator==(const RatQT& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatQT& o) const { return !(*this == o); }

    RatQT operator-() const;
    RatQT operator+(const RatQT& o) const;
    RatQT operator-(const RatQT& o) const;
    RatQT operator*(const RatQT& o) const;
    RatQT operator/(const RatQT& o) const;    // throws on division by zero
    RatQT& operator+=(const RatQT& o) { *this = *this + o; return *this; }
    RatQT& operator-=(const RatQT& o) { *this = *this - o; return *this; }
    RatQT& operator*=(const RatQT& o) { *this = *this * o; return *this; }
    RatQT& operator/=(const RatQT& o) { *this = *this / o; return *this; }

    RatQT inverse() const;
    RatQT pow(int k) const;                   // negative exponents allowed

    // Every variable x replaced by x^k; ring homomorphism on the field.
    RatQT substitute_powers(unsigned k) const;
    // q -> 1/q, t -> 1/t (only the two base variables).
    RatQT invert_qt() const;
    // x -> 1/x for one variable.
    RatQT invert_var(const std::string& name) const;
    // Substitute a small integer for one variable; throws if the
    // denominator vanishes there (residual pole).
    RatQT eval_var(const std::string& name, long value) const;

    bool depends_on(const std::string& name) const;
    // Coefficients of u^k when the value is polynomial in u (the
    // denominator must be free of u).
    std::vector<RatQT> coeffs_in(const std::string& name) const;

    RatQT embed(const VarListPtr& newvars) const;

    // Canonical text: "(<num>)/(<den>)", omitting "/(1)" and the
    // parentheses for plain polynomials.
    std::string str() const;

private:
    void normalize();
    IntPoly num_, den_;
};

inline RatQT operator*(long a, const RatQT& b) { return RatQT::integer(b.vars(), a) * b; }

// Pairwise (balanced-tree) sum; much cheaper than a left fold when the
// addends carry structured denominators.
RatQT balanced_sum(std::vector<RatQT> xs, const VarListPtr& vars);

}  // namespace qtsym
