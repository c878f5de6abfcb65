#include "torusdisc/numq.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace torusdisc {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: zero to negative power");
        return Rat(1) / pow_rat(base, -e);
    }
    Int num = base.get_num(), den = base.get_den();
    return make_rat(pow_int(num, (unsigned long)e), pow_int(den, (unsigned long)e));
}

unsigned long valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    Int m = abs(n);
    unsigned long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int kth_root_floor(const Int& n, unsigned long k) {
    if (n < 0) throw std::domain_error("kth_root_floor: negative");
    if (k == 0) throw std::domain_error("kth_root_floor: k = 0");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

bool exact_kth_root(const Rat& x, unsigned long k, Rat& out) {
    if (x <= 0) return false;
    Int num = x.get_num(), den = x.get_den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
    out = make_rat(rn, rd);
    return true;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n, unsigned long c0) {
    // Brent's cycle detection; returns a nontrivial factor of composite n.
    Int c(c0);
    for (;;) {
        Int x(2), y(2), d(1), q(1), ys, r(1);
        while (d == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k(0);
            while (k < r && d == 1) {
                ys = y;
                Int lim = r - k;
                if (lim > 128) lim = 128;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
        c += 1;
    }
}

void factor_rec(const Int& n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n, 1);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

std::vector<std::pair<Int, unsigned long>> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("factor_integer: zero");
    std::vector<Int> primes;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                            29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        Int P(p);
        while (n % P == 0) {
            primes.push_back(P);
            n /= P;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned long>> out;
    for (const Int& p : primes) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) {
        Int n(s);
        return Rat(n);
    }
    Int num(s.substr(0, pos));
    Int den(s.substr(pos + 1));
    return make_rat(num, den);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // rejection sampling keeps the stream derivation rule simple to state
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

} // namespace torusdisc
