#include "torusdisc/intpoly.hpp"

#include "torusdisc/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace torusdisc {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x() { return IntPoly({Int(0), Int(1)}); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t deg) {
    std::vector<Int> v(deg + 1);
    v[deg] = c;
    return IntPoly(std::move(v));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& x : c_) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (lc() < 0) g = -g;
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_variable() const {
    std::vector<Int> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

Int IntPoly::evaluate(const Int& x) const {
    Int r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat IntPoly::evaluate(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& c) const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    RatPoly q, r;
    std::tie(q, r) = RatPoly::from_int(*this).divmod(RatPoly::from_int(d));
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    std::vector<Int> v(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        if (q.c[i].get_den() != 1)
            throw std::domain_error("divide_exact: non-integral quotient");
        v[i] = q.c[i].get_num();
    }
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& d) const {
    assert(d.is_monic());
    std::vector<Int> rem = c_;
    long dd = d.degree();
    long n = degree();
    if (n < dd) return {IntPoly(), *this};
    std::vector<Int> quo(n - dd + 1);
    for (long i = n; i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // primitive PRS with pseudo-remainders
    while (!b.is_zero()) {
        long da = a.degree(), db = b.degree();
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // pseudo-remainder of lc(b)^(da-db+1) * a by b
        IntPoly r = a * pow_int(b.lc(), da - db + 1);
        RatPoly qr, rr;
        std::tie(qr, rr) = RatPoly::from_int(r).divmod(RatPoly::from_int(b));
        std::vector<Int> rem(rr.c.size());
        for (std::size_t i = 0; i < rr.c.size(); ++i) {
            assert(rr.c[i].get_den() == 1);
            rem[i] = rr.c[i].get_num();
        }
        a = b;
        b = IntPoly(std::move(rem)).primitive_part();
    }
    return a.primitive_part();
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return Int(0);
    const long m = f.degree(), n = g.degree();
    if (m == 0) return pow_int(f.lc(), n);
    if (n == 0) return pow_int(g.lc(), m);
    IntMat s(m + n, m + n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s.at(i, i + j) = f.coeff(m - j);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s.at(n + i, i + j) = g.coeff(n - j);
    return s.det_bareiss();
}

Int poly_discriminant(const IntPoly& f) {
    const long n = f.degree();
    if (n < 1) throw std::domain_error("discriminant of constant");
    Int res = resultant(f, f.derivative());
    Int d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) r.c.emplace_back(x);
    return r;
}

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < c.size()) r.c[i] += c[i];
        if (i < o.c.size()) r.c[i] += o.c[i];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < c.size()) r.c[i] += c[i];
        if (i < o.c.size()) r.c[i] -= o.c[i];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    RatPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("poly division by zero");
    RatPoly rem = *this, quo;
    long dd = d.degree();
    if (degree() < dd) return {quo, rem};
    quo.c.assign(degree() - dd + 1, Rat(0));
    for (long i = degree(); i >= dd; --i) {
        if ((long)rem.c.size() <= i || rem.c[i] == 0) continue;
        Rat q = rem.c[i] / d.c[dd];
        quo.c[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem.c[i - dd + j] -= q * d.c[j];
    }
    quo.trim();
    rem.trim();
    return {quo, rem};
}

IntPoly RatPoly::to_primitive_int() const {
    if (is_zero()) return IntPoly();
    Int den(1);
    for (const Rat& x : c) den = lcm(den, x.get_den());
    std::vector<Int> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat s = c[i] * Rat(den);
        v[i] = s.get_num();
    }
    return IntPoly(std::move(v)).primitive_part();
}

void rat_poly_xgcd(const RatPoly& a, const RatPoly& b, RatPoly& g, RatPoly& s,
                   RatPoly& t) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0, s1, t0, t1;
    s0.c = {Rat(1)};
    t1.c = {Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // normalize monic
    Rat l = r0.c.back();
    for (Rat& x : r0.c) x /= l;
    for (Rat& x : s0.c) x /= l;
    for (Rat& x : t0.c) x /= l;
    g = r0;
    s = s0;
    t = t0;
}

} // namespace torusdisc
