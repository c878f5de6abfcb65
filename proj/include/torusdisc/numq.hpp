#ifndef TORUSDISC_NUMQ_HPP
#define TORUSDISC_NUMQ_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace torusdisc {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
Rat make_rat(const Int& num, const Int& den);

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// Largest k with p^k | n  (n != 0).
unsigned long valuation(const Int& n, const Int& p);

bool is_perfect_square(const Int& n);

// floor(n^(1/k)) for n >= 0, k >= 1.
Int kth_root_floor(const Int& n, unsigned long k);

// Exact q-th root of a positive rational if it exists.
bool exact_kth_root(const Rat& x, unsigned long k, Rat& out);

// Deterministic factorization: trial division then Pollard rho with Brent.
// Returns (prime, exponent) pairs, primes increasing.
std::vector<std::pair<Int, unsigned long>> factor_integer(Int n);

bool is_probable_prime(const Int& n);

// "p/q" (or bare integer) formatting used by JSON/CSV reports.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// SplitMix64; stream derivation for item k of a seeded family is
// splitmix starting from seed + (k+1) * 0x9E3779B97F4A7C15.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // value in [0, bound)
    std::uint64_t below(std::uint64_t bound);
};

inline SplitMix64 family_stream(std::uint64_t seed, std::uint64_t item) {
    return SplitMix64(seed + (item + 1) * 0x9E3779B97F4A7C15ull);
}

} // namespace torusdisc

#endif
