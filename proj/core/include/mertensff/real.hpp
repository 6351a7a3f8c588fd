#ifndef MERTENSFF_REAL_HPP
#define MERTENSFF_REAL_HPP

#include <mpfr.h>
#include <cstdint>
#include <string>
#include <utility>

#include "mertensff/bigint.hpp"

namespace mff {

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations allocate the result at the larger of the two operand
// precisions. Rounding is always to nearest.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    Real(double v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    Real(const Int& v, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    static Real inf(mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_inf(r.x_, 1);
        return r;
    }

    bool is_inf() const { return mpfr_inf_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Nearest integer as an exact Int.
    Int round() const {
        Real t(prec());
        mpfr_rint(t.x_, x_, MPFR_RNDN);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t.x_, MPFR_RNDZ);
        return z;
    }

    std::string str(std::size_t digits = 0) const;

    Real& operator+=(const Real& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }

    friend Real sqrt(const Real& a) { return unop(a, mpfr_sqrt); }
    friend Real abs(const Real& a) { return unop(a, mpfr_abs); }
    friend Real sin(const Real& a) { return unop(a, mpfr_sin); }
    friend Real cos(const Real& a) { return unop(a, mpfr_cos); }
    friend Real acos(const Real& a) { return unop(a, mpfr_acos); }
    friend Real asin(const Real& a) { return unop(a, mpfr_asin); }
    friend Real log(const Real& a) { return unop(a, mpfr_log); }
    friend Real atan2(const Real& y, const Real& x) { return binop(y, x, mpfr_atan2); }

    // a * 2^k
    friend Real ldexp(const Real& a, long k) {
        Real r(a.prec());
        mpfr_mul_2si(r.x_, a.x_, k, MPFR_RNDN);
        return r;
    }
    friend Real pow_ui(const Real& a, unsigned long k) {
        Real r(a.prec());
        mpfr_pow_ui(r.x_, a.x_, k, MPFR_RNDN);
        return r;
    }

  private:
    using unfn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    using binfn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real unop(const Real& a, unfn f) {
        Real r(a.prec());
        f(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    static Real binop(const Real& a, const Real& b, binfn f) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    mpfr_t x_;
};

// Minimal complex type on Real; only what zero refinement and the explicit
// formula need.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    friend Real abs(const Complex& a) { return sqrt(a.norm()); }
    // principal argument via atan2
    Real arg() const { return atan2(im, re); }
    Complex recip() const {
        Real d = norm();
        return {re / d, -im / d};
    }
};

} // namespace mff

#endif
