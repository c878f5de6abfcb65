#include "torusdisc/wedge.hpp"

#include "torusdisc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace torusdisc {

Int binomial(unsigned long m, unsigned long d) {
    if (d > m) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), m, d);
    return r;
}

std::uint64_t subset_rank(const std::vector<unsigned>& subset, unsigned m) {
    // lexicographic rank among increasing subsets of size d
    const unsigned d = subset.size();
    Int rank(0);
    unsigned prev = 0;
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned v = prev; v < subset[i]; ++v)
            rank += binomial(m - v - 1, d - i - 1);
        prev = subset[i] + 1;
    }
    assert(rank.fits_ulong_p());
    return rank.get_ui();
}

std::vector<unsigned> subset_unrank(std::uint64_t rank, unsigned m, unsigned d) {
    std::vector<unsigned> out(d);
    Int r(static_cast<unsigned long>(rank));
    unsigned v = 0;
    for (unsigned i = 0; i < d; ++i) {
        for (;; ++v) {
            Int block = binomial(m - v - 1, d - i - 1);
            if (r < block) {
                out[i] = v++;
                break;
            }
            r -= block;
        }
    }
    return out;
}

WedgeVector::WedgeVector(unsigned m, unsigned d) : m_(m), d_(d) {
    Int n = binomial(m, d);
    dense_ = n <= kDenseLimit;
    if (dense_) coords_.assign(n.get_ui(), Rat(0));
}

std::uint64_t WedgeVector::size() const {
    Int n = binomial(m_, d_);
    if (!n.fits_ulong_p())
        throw std::overflow_error("wedge dimension exceeds 64 bits");
    return n.get_ui();
}

Rat WedgeVector::get(std::uint64_t idx) const {
    if (dense_) return coords_[idx];
    auto it = sparse_.find(idx);
    return it == sparse_.end() ? Rat(0) : it->second;
}

void WedgeVector::set(std::uint64_t idx, const Rat& v) {
    if (dense_) {
        coords_[idx] = v;
    } else if (v == 0) {
        sparse_.erase(idx);
    } else {
        sparse_[idx] = v;
    }
}

bool WedgeVector::is_zero() const {
    if (dense_) {
        for (const Rat& x : coords_)
            if (x != 0) return false;
        return true;
    }
    return sparse_.empty();
}

Rat WedgeVector::content() const {
    // gcd of rationals: gcd of numerators / lcm of denominators
    Int g(0), l(1);
    auto feed = [&](const Rat& x) {
        if (x == 0) return;
        g = gcd(g, x.get_num());
        l = lcm(l, x.get_den());
    };
    if (dense_)
        for (const Rat& x : coords_) feed(x);
    else
        for (const auto& [k, x] : sparse_) feed(x);
    if (g == 0) return Rat(0);
    return make_rat(g, l);
}

WedgeVector WedgeVector::scaled(const Rat& c) const {
    WedgeVector out = *this;
    if (dense_) {
        for (Rat& x : out.coords_) x *= c;
    } else {
        if (c == 0) {
            out.sparse_.clear();
        } else {
            for (auto& [k, x] : out.sparse_) x *= c;
        }
    }
    return out;
}

std::vector<Rat> WedgeVector::to_dense() const {
    if (dense_) return coords_;
    std::uint64_t n = size();
    if (n > kDenseLimit * 64)
        throw std::overflow_error("wedge vector too large to expand");
    std::vector<Rat> out(n, Rat(0));
    for (const auto& [k, x] : sparse_) out[k] = x;
    return out;
}

namespace {

Rat minor_det(const std::vector<std::vector<Rat>>& rows,
              const std::vector<unsigned>& cols) {
    const unsigned d = cols.size();
    RatMatrix m(d, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) m.at(i, j) = rows[i][cols[j]];
    return m.det();
}

bool next_subset(std::vector<unsigned>& s, unsigned m) {
    const unsigned d = s.size();
    for (unsigned i = d; i-- > 0;) {
        if (s[i] < m - (d - i)) {
            ++s[i];
            for (unsigned j = i + 1; j < d; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

WedgeVector wedge(const std::vector<std::vector<Rat>>& vectors, unsigned m) {
    const unsigned d = vectors.size();
    if (d < 1 || d > m) throw std::invalid_argument("wedge: need 1 <= d <= m");
    for (const auto& v : vectors)
        if (v.size() != m) throw std::invalid_argument("wedge: bad vector size");
    WedgeVector out(m, d);
    if (out.is_dense()) {
        std::vector<unsigned> s(d);
        for (unsigned i = 0; i < d; ++i) s[i] = i;
        std::uint64_t idx = 0;
        do {
            out.set(idx++, minor_det(vectors, s));
        } while (next_subset(s, m));
    } else {
        // minors vanish outside the union of supports
        std::vector<unsigned> support;
        for (unsigned c = 0; c < m; ++c)
            for (const auto& v : vectors)
                if (v[c] != 0) {
                    support.push_back(c);
                    break;
                }
        if (support.size() < d) return out;
        std::vector<unsigned> pick(d);
        for (unsigned i = 0; i < d; ++i) pick[i] = i;
        do {
            std::vector<unsigned> cols(d);
            for (unsigned i = 0; i < d; ++i) cols[i] = support[pick[i]];
            Rat v = minor_det(vectors, cols);
            if (v != 0) out.set(subset_rank(cols, m), v);
        } while (next_subset(pick, support.size()));
    }
    return out;
}

Int finite_height(const std::vector<Rat>& v) {
    Int l(1);
    for (const Rat& x : v) l = lcm(l, x.get_den());
    return l;
}

Int finite_height(const WedgeVector& v) {
    Int l(1);
    v.for_each_nonzero([&](std::uint64_t, const Rat& x) { l = lcm(l, x.get_den()); });
    return l;
}

} // namespace torusdisc
