#include "torusdisc/etale.hpp"

#include "torusdisc/errors.hpp"

#include <cassert>

namespace torusdisc {

EtaleAlgebra EtaleAlgebra::from_factors(
    const std::vector<std::pair<IntPoly, unsigned>>& factors) {
    EtaleAlgebra E;
    unsigned dim = 0;
    for (const auto& [f, mult] : factors) {
        if (mult < 1) throw error("etale factor multiplicity must be >= 1");
        auto K = std::make_shared<NumberField>(NumberField::create(f));
        dim += K->degree() * mult;
        E.factors_.push_back(Factor{K, mult});
    }
    if (dim < 1) throw error("etale algebra must have dimension >= 1");
    if (dim > 16) throw degree_too_large("etale dimension cap is 16");
    E.dim_ = dim;
    E.gram_ = RatMatrix(dim, dim);
    E.mult_.assign(static_cast<std::size_t>(dim) * dim * dim, Int(0));
    unsigned offset = 0;
    for (unsigned fi = 0; fi < E.factors_.size(); ++fi) {
        const auto& K = *E.factors_[fi].field;
        const unsigned n = K.degree();
        for (unsigned copy = 0; copy < E.factors_[fi].multiplicity; ++copy) {
            E.blocks_.push_back(Block{fi, copy, offset, n});
            for (unsigned i = 0; i < n; ++i) {
                E.labels_.push_back("L" + std::to_string(fi + 1) + "#" +
                                    std::to_string(copy) + ":b" +
                                    std::to_string(i));
                for (unsigned j = 0; j < n; ++j) {
                    E.gram_.at(offset + i, offset + j) = K.trace_gram().at(i, j);
                    for (unsigned k = 0; k < n; ++k)
                        E.mult_[((offset + i) * dim + offset + j) * dim +
                                (offset + k)] = K.structure(i, j, k);
                }
            }
            offset += n;
        }
        Int dabs = abs(K.field_disc());
        int dsgn = K.field_disc() < 0 ? -1 : 1;
        for (unsigned copy = 0; copy < E.factors_[fi].multiplicity; ++copy) {
            E.disc_abs_ *= dabs;
            E.disc_sign_ *= dsgn;
        }
    }
    return E;
}

std::vector<Rat> EtaleAlgebra::one() const {
    std::vector<Rat> out(dim_, Rat(0));
    for (const Block& b : blocks_) {
        auto block_one = factors_[b.factor].field->one();
        for (unsigned i = 0; i < b.size; ++i) out[b.offset + i] = block_one[i];
    }
    return out;
}

std::vector<Rat> EtaleAlgebra::multiply(const std::vector<Rat>& x,
                                        const std::vector<Rat>& y) const {
    assert(x.size() == dim_ && y.size() == dim_);
    std::vector<Rat> z(dim_, Rat(0));
    for (const Block& b : blocks_) {
        const auto& K = *factors_[b.factor].field;
        for (unsigned i = 0; i < b.size; ++i) {
            if (x[b.offset + i] == 0) continue;
            for (unsigned j = 0; j < b.size; ++j) {
                if (y[b.offset + j] == 0) continue;
                Rat xy = x[b.offset + i] * y[b.offset + j];
                for (unsigned k = 0; k < b.size; ++k) {
                    const Int& c = K.structure(i, j, k);
                    if (c != 0) z[b.offset + k] += xy * Rat(c);
                }
            }
        }
    }
    return z;
}

Rat EtaleAlgebra::trace(const std::vector<Rat>& coords) const {
    Rat tr(0);
    for (const Block& b : blocks_) {
        std::vector<Rat> c(coords.begin() + b.offset,
                           coords.begin() + b.offset + b.size);
        tr += factors_[b.factor].field->trace_on_basis(c);
    }
    return tr;
}

Int etale_discriminant(const EtaleAlgebra& E) { return E.discriminant(); }

Int c_bound(unsigned n) {
    if (n < 1) throw error("c_bound: n >= 1 required");
    if (n > 10) throw degree_too_large("c_bound: result size cap at n = 10");
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    Int exp = Int(n) + fact;
    assert(exp.fits_ulong_p());
    return pow_int(Int(n), exp.get_ui()) * fact;
}

bool DiscBounds::contains(const Int& dL_abs) const {
    if (dL_abs < lower) return false;
    if (base <= 1) return dL_abs <= 1;
    // dL <= base^exponent  <=>  smallest k with base^k >= dL is <= exponent
    Int power(1), k(0);
    while (power < dL_abs) {
        power *= base;
        ++k;
        if (k > exponent) return false;
    }
    return true;
}

DiscBounds splitting_disc_bounds(const EtaleAlgebra& E) {
    Int c = c_bound(E.dim());
    Int dE = E.discriminant();
    DiscBounds out;
    out.base = dE;
    out.exponent = c;
    assert(c.fits_ulong_p() || dE == 1);
    out.lower = dE == 1 ? Int(1) : kth_root_floor(dE, c.get_ui());
    // expand the upper bound only when it stays small (< 2^20 bits)
    if (dE <= 1) {
        out.expanded_upper = Int(1);
    } else {
        unsigned long bits = mpz_sizeinbase(dE.get_mpz_t(), 2);
        if (c * Int(static_cast<unsigned long>(bits)) <= (1 << 20))
            out.expanded_upper = pow_int(dE, c.get_ui());
    }
    return out;
}

std::optional<Int> exact_splitting_disc(const NumberField& K) {
    if (K.degree() > 4)
        throw degree_too_large("exact_splitting_disc: degree cap is 4");
    switch (K.degree()) {
        case 1:
        case 2: return K.field_disc();
        case 3:
            if (is_perfect_square(K.field_disc())) return K.field_disc();
            return std::nullopt;
        default: {
            GaloisType t = galois_type_exact(K.defining_poly());
            if (t == GaloisType::C4 || t == GaloisType::V4) return K.field_disc();
            return std::nullopt;
        }
    }
}

} // namespace torusdisc
