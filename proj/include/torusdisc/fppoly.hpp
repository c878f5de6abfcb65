#ifndef TORUSDISC_FPPOLY_HPP
#define TORUSDISC_FPPOLY_HPP

#include "torusdisc/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace torusdisc {

// Arithmetic mod a word-size prime p (p < 2^31).
namespace fp {

using u64 = std::uint64_t;

inline u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
inline u64 mulm(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
u64 powm(u64 a, u64 e, u64 p);
u64 invm(u64 a, u64 p);

// Polynomial over F_p, ascending coefficients, trimmed.
using Poly = std::vector<u64>;

Poly reduce(const IntPoly& f, u64 p);
void trim(Poly& f);
long degree(const Poly& f);
bool is_zero(const Poly& f);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p); // monic
Poly derivative(const Poly& a, u64 p);
// x^e mod f
Poly xpow_mod(u64 e, const Poly& f, u64 p);
Poly powmod(const Poly& base, const Int& e, const Poly& f, u64 p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p);

// Monic irreducible factors with multiplicity of nonzero f mod p
// (Berlekamp; multiplicities via squarefree split by gcd chains).
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, u64 p);

// Monic irreducible factors of a squarefree monic f (Berlekamp).
std::vector<Poly> berlekamp(const Poly& f, u64 p);

bool is_squarefree(const Poly& f, u64 p);

// Dense matrix over F_p.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<u64> e;
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, 0) {}
    u64& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    u64 at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

// Basis of { x : M x = 0 } as rows.
Mat kernel(Mat m, u64 p);
u64 det(Mat m, u64 p);

} // namespace fp

} // namespace torusdisc

#endif
