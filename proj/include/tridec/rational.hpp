#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tridec/common.hpp"

namespace tridec {

// Exact field: arbitrary-precision rationals.  All ring operations are exact;
// this is the scalar used whenever a tensor document carries "p/q" strings.
using Rat = mpq_class;

inline Rat rat_from_string(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw MalformedInput("empty rational literal");
    Rat r;
    if (r.set_str(t, 10) != 0) throw MalformedInput("bad rational literal: " + t);
    if (r.get_den() == 0) throw MalformedInput("zero denominator: " + t);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

// Exact nonnegative square root of a rational, when one exists.
inline bool exact_sqrt(const Rat& x, Rat& root) {
    if (sgn(x) < 0) return false;
    if (sgn(x) == 0) {
        root = 0;
        return true;
    }
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

// --- scalar-mode helpers shared by the templated modules -------------------

template <class K>
inline constexpr bool is_exact_field_v = false;
template <>
inline constexpr bool is_exact_field_v<Rat> = true;

inline double approx(double x) { return x; }
inline double approx(const Rat& x) { return x.get_d(); }

inline std::string scalar_repr(double x);
inline std::string scalar_repr(const Rat& x) { return x.get_str(); }

}  // namespace tridec

#include <cstdio>

namespace tridec {

inline std::string scalar_repr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace tridec
