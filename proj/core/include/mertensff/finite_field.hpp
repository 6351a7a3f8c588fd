#ifndef MERTENSFF_FINITE_FIELD_HPP
#define MERTENSFF_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mertensff/bigint.hpp"
#include "mertensff/errors.hpp"

namespace mff {

// Polynomial over the prime field F_p: coefficients in [0,p), low degree
// first, no trailing zeros (except the zero polynomial [0]).
using PrimePoly = std::vector<std::uint32_t>;

class FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

// F_{p^(m*n)} realised as F_p[x]/(modulus), modulus the lexicographically
// first monic irreducible of degree m*n (coefficient vector read as a base-p
// integer, low digit first). Elements are addressed by their index
// sum_i c_i p^i, so the representation is reproducible across runs.
//
// Immutable after construction; safe to share across threads.
class FieldDesc {
  public:
    // q = p^m is the base field order, Q = q^n the order of this field.
    static Field make(std::int64_t p, int m, int n = 1);

    std::int64_t p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int degree() const { return e_; }
    const Int& cardinality() const { return Q_; }
    std::int64_t cardinality_i64() const { return q_i64_; }
    const PrimePoly& modulus() const { return modulus_; }

    // ---- index arithmetic ----
    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a * q_i64_ + b)];
        return add_generic(a, b);
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a * q_i64_ + b)];
        return mul_generic(a, b);
    }
    std::int64_t neg(std::int64_t a) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
    std::int64_t inv(std::int64_t a) const; // throws InvalidParameterError on 0
    std::int64_t pow(std::int64_t a, const Int& e) const;

    // quadratic character: 0 on 0, +1 on nonzero squares, -1 otherwise;
    // computed as a^((Q-1)/2) unless the lookup table is present.
    int chi(std::int64_t a) const {
        if (!chi_table_.empty()) return chi_table_[static_cast<std::size_t>(a)];
        return chi_generic(a);
    }
    int chi_by_power(std::int64_t a) const { return chi_generic(a); }

    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }
    // image of a prime-field residue (constant polynomial)
    std::int64_t from_prime(std::int64_t c) const;

    std::vector<std::uint32_t> digits(std::int64_t a) const;
    std::int64_t from_digits(const std::vector<std::uint32_t>& d) const;

    bool has_tables() const { return !mul_table_.empty(); }

    std::string describe() const; // "GF(3^4)"

  private:
    FieldDesc() = default;
    std::int64_t add_generic(std::int64_t a, std::int64_t b) const;
    std::int64_t mul_generic(std::int64_t a, std::int64_t b) const;
    int chi_generic(std::int64_t a) const;
    void build_tables();

    std::int64_t p_ = 0;
    int m_ = 0, n_ = 0, e_ = 0;
    Int Q_;
    std::int64_t q_i64_ = 0;
    PrimePoly modulus_;
    std::vector<std::int64_t> ppow_;           // p^0..p^e
    std::vector<std::vector<std::uint32_t>> red_rows_; // x^(e+j) mod modulus
    std::vector<std::int32_t> mul_table_, add_table_;
    std::vector<std::int8_t> chi_table_;
};

// One element of a finite field; `coeffs` are the residues of the polynomial
// representation, length degree(), low degree first.
struct FFElement {
    Field field;
    std::vector<std::uint32_t> coeffs;

    static FFElement from_index(Field f, std::int64_t idx);
    std::int64_t index() const { return field->from_digits(coeffs); }
    bool is_zero() const;

    friend FFElement operator+(const FFElement& a, const FFElement& b);
    friend FFElement operator-(const FFElement& a, const FFElement& b);
    friend FFElement operator*(const FFElement& a, const FFElement& b);
    FFElement inverse() const;
    FFElement pow(const Int& e) const;
    friend bool operator==(const FFElement& a, const FFElement& b);
};

// Polynomial over a finite field, stored as element indices, low degree
// first, canonical (no trailing zeros; the zero polynomial is {0}).
struct FFPoly {
    Field field;
    std::vector<std::int64_t> c;

    static FFPoly make(Field f, std::vector<std::int64_t> coeffs);
    static FFPoly from_elements(const std::vector<FFElement>& coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
    bool is_monic() const { return c.back() == 1; }

    std::int64_t eval_index(std::int64_t x) const;
    FFPoly derivative() const;
    FFPoly monic() const;
    friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
    // polynomial division; divisor must be nonzero
    static std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
    static FFPoly gcd(FFPoly a, FFPoly b); // monic gcd

    std::string str(const std::string& var = "x") const;
};

// ---- module operations ----

// FieldDesc with q = p^e, n = 1.
Field make_field(std::int64_t p, int e);

int quadratic_character(const FFElement& a);

// true iff gcd(f, f') is constant
bool poly_is_squarefree(const FFPoly& f);

FFElement poly_eval(const FFPoly& f, const FFElement& x);

// ---- prime-field polynomial helpers (exposed for tests) ----
bool prime_poly_irreducible(const PrimePoly& f, std::int64_t p);
PrimePoly first_irreducible(std::int64_t p, int e);

} // namespace mff

#endif
