#pragma once

#include <gmpxx.h>

#include <string>

namespace ecc {

// All counts, volumes and bounds are exact: arbitrary-precision integers and
// reduced rationals, never floating point.
using Nat = mpz_class;
using Rat = mpq_class;

inline Nat binomial(unsigned long n, unsigned long k) {
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Nat nat_pow(const Nat& base, unsigned long exp) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Nat nat_pow(unsigned long base, unsigned long exp) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    r.canonicalize();
    return r;
}

// q^n as an exact integer.
inline Nat space_size(unsigned q, unsigned n) { return nat_pow(static_cast<unsigned long>(q), n); }

inline Rat make_rat(const Nat& num, const Nat& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Nat& x) { return x.get_str(); }

// "num/den" in lowest terms, or plain "num" for integers.
inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_str();
}

// floor(log2(x)) for x >= 1.
inline unsigned long floor_log2(const Nat& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) - 1; }

}  // namespace ecc
