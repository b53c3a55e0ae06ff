#pragma once

#include "qtsym/ratqt.hpp"

namespace qtsym {

// Binomial coefficient C(m, 2) = m(m-1)/2, defined for any integer m the
// way it appears in exponents of q.
inline long choose2(long m) { return m * (m - 1) / 2; }

// [n]_q = 1 + q + ... + q^{n-1}, [0]_q = 0; `var` picks the base (q or t).
RatQT qint(VarListPtr vars, long n, const std::string& var = "q");

// [n]_q!
RatQT qfactorial(VarListPtr vars, long n, const std::string& var = "q");

// Gaussian binomial; 0 when n < k, k < 0 or n < 0.
RatQT qbinom(VarListPtr vars, long n, long k, const std::string& var = "q");

// q-rising factorial (a; q)_s = prod_{i=0..s-1} (1 - q^i a).
RatQT qrising(const RatQT& a, unsigned s, const std::string& var = "q");

// q^k for any integer k (negative exponents land in the field).
RatQT qpow(VarListPtr vars, long k, const std::string& var = "q");

}  // namespace qtsym
