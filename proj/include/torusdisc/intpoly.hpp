#ifndef TORUSDISC_INTPOLY_HPP
#define TORUSDISC_INTPOLY_HPP

#include "torusdisc/numq.hpp"

#include <string>
#include <vector>

namespace torusdisc {

// Univariate polynomial over Z, coefficients ascending. Content is the
// caller's concern; the zero polynomial has no coefficients.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly x();
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& lc() const { return c_.back(); }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int content() const; // nonnegative; sign of lc preserved separately
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    IntPoly negated_variable() const; // f(-x)

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const = default;

    // Exact division; throws if the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& d) const;
    // Division when d is monic: quotient and remainder over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<Int> c_;
    void trim();
};

// gcd of primitive parts (primitive PRS); result primitive with positive lc.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Resultant via Sylvester matrix (fraction-free determinant).
Int resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f)
Int poly_discriminant(const IntPoly& f);

// Rational-coefficient polynomial helpers used where monic arithmetic over Q
// is required (idempotents, resolvents).
struct RatPoly {
    std::vector<Rat> c; // ascending

    static RatPoly from_int(const IntPoly& p);
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    void trim();

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

    // scale so the result is primitive integer with positive lc
    IntPoly to_primitive_int() const;
};

// Extended gcd over Q: g = gcd (monic), with s*a + t*b = g.
void rat_poly_xgcd(const RatPoly& a, const RatPoly& b, RatPoly& g, RatPoly& s,
                   RatPoly& t);

} // namespace torusdisc

#endif
