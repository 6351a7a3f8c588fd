#include "mertensff/finite_field.hpp"

#include <algorithm>
#include <cstdio>

namespace mff {

namespace {

constexpr std::int64_t kIndexLimit = std::int64_t{1} << 62;
constexpr std::int64_t kMulTableLimit = 2048;   // dense Q x Q tables
constexpr std::int64_t kChiTableLimit = 1 << 17;

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    Int z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

// ---- arithmetic in F_p[x], coefficients uint32 mod p ----

void pp_trim(PrimePoly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

PrimePoly pp_mul(const PrimePoly& a, const PrimePoly& b, std::int64_t p) {
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    pp_trim(r);
    return r;
}

// remainder of a mod b (b nonzero)
PrimePoly pp_mod(PrimePoly a, const PrimePoly& b, std::int64_t p) {
    pp_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return a;
    // inverse of leading coefficient of b mod p
    std::int64_t lb = b.back(), li = 1, base = lb, e = p - 2;
    while (e) {
        if (e & 1) li = li * base % p;
        base = base * base % p;
        e >>= 1;
    }
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        std::uint64_t coef = a[static_cast<std::size_t>(i)];
        if (!coef) continue;
        std::uint64_t f = coef * static_cast<std::uint64_t>(li) % p;
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<std::size_t>(i - db + j)];
            t = static_cast<std::uint32_t>(
                (t + static_cast<std::uint64_t>(p) * p - f * b[static_cast<std::size_t>(j)] % p) % p);
        }
    }
    a.resize(static_cast<std::size_t>(db > 0 ? db : 1));
    pp_trim(a);
    return a;
}

PrimePoly pp_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& mod, std::int64_t p) {
    return pp_mod(pp_mul(a, b, p), mod, p);
}

PrimePoly pp_gcd(PrimePoly a, PrimePoly b, std::int64_t p) {
    pp_trim(a);
    pp_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        PrimePoly r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// t^p mod f by square-and-multiply over the exponent bits of p
PrimePoly pp_pow_p(const PrimePoly& t, const PrimePoly& f, std::int64_t p) {
    PrimePoly result{1};
    PrimePoly base = t;
    std::int64_t e = p;
    while (e) {
        if (e & 1) result = pp_mulmod(result, base, f, p);
        base = pp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

} // namespace

bool prime_poly_irreducible(const PrimePoly& f, std::int64_t p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e < 1) return false;
    if (e == 1) return true;
    // Rabin: x^(p^e) == x mod f, and gcd(x^(p^(e/l)) - x, f) = 1 for prime l | e
    const PrimePoly x{0, 1};
    std::vector<PrimePoly> frob(static_cast<std::size_t>(e) + 1);
    frob[0] = pp_mod(x, f, p);
    for (int j = 1; j <= e; ++j) frob[static_cast<std::size_t>(j)] = pp_pow_p(frob[static_cast<std::size_t>(j - 1)], f, p);

    auto minus_x_gcd_trivial = [&](const PrimePoly& t) {
        PrimePoly d = t;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
        pp_trim(d);
        PrimePoly g = pp_gcd(f, d, p);
        return g.size() == 1 && g[0] != 0;
    };

    {
        PrimePoly d = frob[static_cast<std::size_t>(e)];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
        pp_trim(d);
        if (!(d.size() == 1 && d[0] == 0)) return false;
    }
    for (int l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        if (!minus_x_gcd_trivial(frob[static_cast<std::size_t>(e / l)])) return false;
    }
    return true;
}

PrimePoly first_irreducible(std::int64_t p, int e) {
    // scan monic degree-e polynomials in base-p counting order of the
    // coefficient vector (c_0 least significant)
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(e), 0);
    while (true) {
        PrimePoly f(digits.begin(), digits.end());
        f.push_back(1);
        if (prime_poly_irreducible(f, p)) return f;
        int i = 0;
        while (i < e) {
            if (++digits[static_cast<std::size_t>(i)] < p) break;
            digits[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == e) throw InternalError("no irreducible polynomial found");
    }
}

// ---- FieldDesc ----

Field FieldDesc::make(std::int64_t p, int m, int n) {
    if (p < 3 || !is_prime_i64(p) || p % 2 == 0)
        throw InvalidParameterError("characteristic must be an odd prime, got " + std::to_string(p));
    if (m < 1 || n < 1) throw InvalidParameterError("extension degrees must be >= 1");
    const int e = m * n;
    // index representation requires p^e to fit a machine word
    Int Q = int_pow(p, static_cast<unsigned long>(e));
    if (Q >= kIndexLimit)
        throw ResourceLimitError("field of order " + Q.get_str() + " exceeds the index representation limit");

    auto fd = std::shared_ptr<FieldDesc>(new FieldDesc());
    fd->p_ = p;
    fd->m_ = m;
    fd->n_ = n;
    fd->e_ = e;
    fd->Q_ = Q;
    fd->q_i64_ = Q.get_si();
    fd->modulus_ = first_irreducible(p, e);

    fd->ppow_.resize(static_cast<std::size_t>(e) + 1);
    fd->ppow_[0] = 1;
    for (int i = 1; i <= e; ++i) fd->ppow_[static_cast<std::size_t>(i)] = fd->ppow_[static_cast<std::size_t>(i - 1)] * p;

    // reduction rows: x^(e+j) mod modulus, for j = 0..e-2
    if (e >= 1) {
        PrimePoly x_e(static_cast<std::size_t>(e) + 1, 0);
        x_e[static_cast<std::size_t>(e)] = 1;
        PrimePoly cur = pp_mod(x_e, fd->modulus_, p);
        for (int j = 0; j + 2 <= e; ++j) {
            PrimePoly row = cur;
            row.resize(static_cast<std::size_t>(e), 0);
            fd->red_rows_.push_back(row);
            // multiply by x and reduce
            PrimePoly nxt(cur.size() + 1, 0);
            for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] = cur[i];
            cur = pp_mod(nxt, fd->modulus_, p);
        }
    }

    fd->build_tables();
    return fd;
}

void FieldDesc::build_tables() {
    const std::int64_t Q = q_i64_;
    if (Q <= kMulTableLimit) {
        mul_table_.resize(static_cast<std::size_t>(Q * Q));
        add_table_.resize(static_cast<std::size_t>(Q * Q));
        for (std::int64_t a = 0; a < Q; ++a)
            for (std::int64_t b = a; b < Q; ++b) {
                const auto s = static_cast<std::int32_t>(add_generic(a, b));
                const auto m = static_cast<std::int32_t>(mul_generic(a, b));
                add_table_[static_cast<std::size_t>(a * Q + b)] = s;
                add_table_[static_cast<std::size_t>(b * Q + a)] = s;
                mul_table_[static_cast<std::size_t>(a * Q + b)] = m;
                mul_table_[static_cast<std::size_t>(b * Q + a)] = m;
            }
    }
    if (Q <= kChiTableLimit) {
        chi_table_.assign(static_cast<std::size_t>(Q), -1);
        chi_table_[0] = 0;
        for (std::int64_t t = 1; t < Q; ++t) chi_table_[static_cast<std::size_t>(mul(t, t))] = 1;
    }
}

std::vector<std::uint32_t> FieldDesc::digits(std::int64_t a) const {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return d;
}

std::int64_t FieldDesc::from_digits(const std::vector<std::uint32_t>& d) const {
    std::int64_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
}

std::int64_t FieldDesc::add_generic(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0;
    for (int i = 0; i < e_ && (a | b); ++i) {
        const std::int64_t da = a % p_, db = b % p_;
        r += (da + db) % p_ * ppow_[static_cast<std::size_t>(i)];
        a /= p_;
        b /= p_;
    }
    return r;
}

std::int64_t FieldDesc::neg(std::int64_t a) const {
    std::int64_t r = 0;
    for (int i = 0; i < e_ && a; ++i) {
        const std::int64_t da = a % p_;
        if (da) r += (p_ - da) * ppow_[static_cast<std::size_t>(i)];
        a /= p_;
    }
    return r;
}

std::int64_t FieldDesc::mul_generic(std::int64_t a, std::int64_t b) const {
    if (a == 0 || b == 0) return 0;
    // schoolbook product of digit vectors, then reduce with the cached rows
    std::uint64_t prod[128] = {0};
    std::uint32_t da[64], db[64];
    int na = 0, nb = 0;
    for (std::int64_t t = a; t; t /= p_) da[na++] = static_cast<std::uint32_t>(t % p_);
    for (std::int64_t t = b; t; t /= p_) db[nb++] = static_cast<std::uint32_t>(t % p_);
    for (int i = 0; i < na; ++i)
        if (da[i])
            for (int j = 0; j < nb; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    const int np = na + nb - 1;
    // fold x^(e+j) back using red_rows_
    std::uint64_t acc[64] = {0};
    for (int i = 0; i < np && i < e_; ++i) acc[i] = prod[i];
    for (int i = e_; i < np; ++i) {
        const std::uint64_t c = prod[i] % static_cast<std::uint64_t>(p_);
        if (!c) continue;
        const auto& row = red_rows_[static_cast<std::size_t>(i - e_)];
        for (int j = 0; j < e_; ++j) acc[j] += c * row[static_cast<std::size_t>(j)];
    }
    std::int64_t r = 0;
    for (int i = e_ - 1; i >= 0; --i)
        r = r * p_ + static_cast<std::int64_t>(acc[i] % static_cast<std::uint64_t>(p_));
    return r;
}

std::int64_t FieldDesc::pow(std::int64_t a, const Int& e) const {
    if (e < 0) return pow(inv(a), -e);
    std::int64_t result = 1, base = a;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return 1;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::int64_t FieldDesc::inv(std::int64_t a) const {
    if (a == 0) throw InvalidParameterError("inverse of zero");
    return pow(a, Q_ - 2);
}

int FieldDesc::chi_generic(std::int64_t a) const {
    if (a == 0) return 0;
    const Int e = (Q_ - 1) / 2;
    const std::int64_t r = pow(a, e);
    return r == 1 ? 1 : -1;
}

std::int64_t FieldDesc::from_prime(std::int64_t c) const {
    c %= p_;
    if (c < 0) c += p_;
    return c;
}

std::string FieldDesc::describe() const {
    if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

// ---- FFElement ----

FFElement FFElement::from_index(Field f, std::int64_t idx) {
    return FFElement{f, f->digits(idx)};
}

bool FFElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

static void check_same_field(const FFElement& a, const FFElement& b) {
    if (a.field->p() != b.field->p() || a.field->degree() != b.field->degree() ||
        a.field->modulus() != b.field->modulus())
        throw InvalidParameterError("field mismatch with no embedding");
}

FFElement operator+(const FFElement& a, const FFElement& b) {
    check_same_field(a, b);
    return FFElement::from_index(a.field, a.field->add(a.index(), b.index()));
}

FFElement operator-(const FFElement& a, const FFElement& b) {
    check_same_field(a, b);
    return FFElement::from_index(a.field, a.field->sub(a.index(), b.index()));
}

FFElement operator*(const FFElement& a, const FFElement& b) {
    check_same_field(a, b);
    return FFElement::from_index(a.field, a.field->mul(a.index(), b.index()));
}

FFElement FFElement::inverse() const {
    return from_index(field, field->inv(index()));
}

FFElement FFElement::pow(const Int& e) const {
    return from_index(field, field->pow(index(), e));
}

bool operator==(const FFElement& a, const FFElement& b) {
    return a.field->modulus() == b.field->modulus() && a.field->p() == b.field->p() &&
           a.coeffs == b.coeffs;
}

// ---- FFPoly ----

static void poly_trim(std::vector<std::int64_t>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

FFPoly FFPoly::make(Field f, std::vector<std::int64_t> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0);
    for (auto v : coeffs)
        if (v < 0 || v >= f->cardinality_i64())
            throw InvalidParameterError("coefficient index out of range");
    poly_trim(coeffs);
    return FFPoly{std::move(f), std::move(coeffs)};
}

FFPoly FFPoly::from_elements(const std::vector<FFElement>& coeffs) {
    if (coeffs.empty()) throw InvalidParameterError("empty coefficient list");
    std::vector<std::int64_t> idx;
    idx.reserve(coeffs.size());
    for (const auto& e : coeffs) idx.push_back(e.index());
    return make(coeffs.front().field, std::move(idx));
}

std::int64_t FFPoly::eval_index(std::int64_t x) const {
    const auto& F = *field;
    std::int64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
    return acc;
}

FFPoly FFPoly::derivative() const {
    const auto& F = *field;
    if (c.size() <= 1) return make(field, {0});
    std::vector<std::int64_t> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        const std::int64_t k = static_cast<std::int64_t>(i % static_cast<std::size_t>(F.p()));
        std::int64_t t = 0;
        for (std::int64_t r = 0; r < k; ++r) t = F.add(t, c[i]);
        d[i - 1] = t;
    }
    poly_trim(d);
    return FFPoly{field, std::move(d)};
}

FFPoly FFPoly::monic() const {
    if (is_zero()) return *this;
    const auto& F = *field;
    if (c.back() == 1) return *this;
    const std::int64_t s = F.inv(c.back());
    std::vector<std::int64_t> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = F.mul(c[i], s);
    return FFPoly{field, std::move(r)};
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
    const auto& F = *a.field;
    std::vector<std::int64_t> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_trim(r);
    return FFPoly{a.field, std::move(r)};
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) {
    const auto& F = *a.field;
    std::vector<std::int64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::int64_t x = i < a.c.size() ? a.c[i] : 0;
        const std::int64_t y = i < b.c.size() ? b.c[i] : 0;
        r[i] = F.sub(x, y);
    }
    poly_trim(r);
    return FFPoly{a.field, std::move(r)};
}

std::pair<FFPoly, FFPoly> FFPoly::divmod(const FFPoly& a, const FFPoly& b) {
    if (b.is_zero()) throw InvalidParameterError("division by zero polynomial");
    const auto& F = *a.field;
    std::vector<std::int64_t> rem = a.c;
    const int db = b.degree();
    if (a.degree() < db) return {make(a.field, {0}), a};
    std::vector<std::int64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const std::int64_t li = F.inv(b.c.back());
    for (int i = a.degree(); i >= db; --i) {
        const std::int64_t coef = rem[static_cast<std::size_t>(i)];
        if (!coef) continue;
        const std::int64_t f = F.mul(coef, li);
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& t = rem[static_cast<std::size_t>(i - db + j)];
            t = F.sub(t, F.mul(f, b.c[static_cast<std::size_t>(j)]));
        }
    }
    poly_trim(quot);
    poly_trim(rem);
    return {FFPoly{a.field, std::move(quot)}, FFPoly{a.field, std::move(rem)}};
}

FFPoly FFPoly::gcd(FFPoly a, FFPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string FFPoly::str(const std::string& var) const {
    std::string out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0 && !(c.size() == 1)) continue;
        if (!first) out += " + ";
        first = false;
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i >= 1) {
            if (c[i] != 1) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

// ---- module-level operations ----

Field make_field(std::int64_t p, int e) { return FieldDesc::make(p, e, 1); }

int quadratic_character(const FFElement& a) {
    return a.field->chi(a.index());
}

bool poly_is_squarefree(const FFPoly& f) {
    if (f.is_zero()) throw InvalidParameterError("squarefree test on the zero polynomial");
    const FFPoly d = f.derivative();
    if (d.is_zero()) return false; // p-th power
    return FFPoly::gcd(f, d).degree() == 0;
}

FFElement poly_eval(const FFPoly& f, const FFElement& x) {
    if (f.field->modulus() != x.field->modulus() || f.field->p() != x.field->p())
        throw InvalidParameterError("field mismatch with no embedding");
    return FFElement::from_index(f.field, f.eval_index(x.index()));
}

} // namespace mff
