#ifndef MERTENSFF_BIGINT_HPP
#define MERTENSFF_BIGINT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace mff {

using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(std::int64_t base, unsigned long e) {
    Int b(static_cast<long>(base));
    return int_pow(b, e);
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Exact division; returns false if it does not divide.
inline bool divide_exact(Int& quot, const Int& num, const Int& den) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(quot.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}

} // namespace mff

#endif
