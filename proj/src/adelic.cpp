#include "torusdisc/adelic.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/etale.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace torusdisc {

Int OrderPair::index() const {
    return lattice_index(lambda, IntegerLattice::full(E->dim()));
}

unsigned conductor_exponent(const OrderPair& pair, const Int& p) {
    // exponent of O/Lambda = last elementary divisor of Lambda's basis
    std::vector<Int> d = snf_diagonal(pair.lambda.basis());
    Int last = d.back();
    if (last == 0) throw error("order lattice is rank deficient");
    if (last % p != 0) return 0;
    return static_cast<unsigned>(valuation(last, p));
}

LocalIndexReport local_unit_index(const OrderPair& pair, const Int& p,
                                  std::uint64_t budget) {
    LocalIndexReport rep;
    rep.p = p;
    unsigned cond = conductor_exponent(pair, p);
    rep.k = std::max(cond, 1u);
    FiniteRing R(*pair.E, pair.lambda, p, rep.k);
    if (R.size() <= Int(static_cast<unsigned long>(budget))) {
        rep.units_O = R.count_units(budget);
        rep.units_Lambda = R.count_subring_units(budget);
        rep.enumerated = true;
    } else {
        rep.units_O = R.count_units_fast();
        rep.units_Lambda = R.count_subring_units_fast();
        rep.enumerated = false;
    }
    if (rep.units_O % rep.units_Lambda != 0)
        throw error("unit counts violate the group-subgroup divisibility");
    rep.index = rep.units_O / rep.units_Lambda;
    if ((rep.index == 1) != (cond == 0))
        throw error("support property violated: index 1 iff p splits off");
    return rep;
}

Int global_index(const OrderPair& pair, std::uint64_t budget) {
    Int idx = pair.index();
    Int out(1);
    if (idx == 1) return out;
    for (const auto& [p, e] : factor_integer(idx))
        out *= local_unit_index(pair, p, budget).index;
    return out;
}

Int power_index(const OrderPair& pair, const Int& p, unsigned h,
                std::uint64_t budget) {
    if (h < 1) throw error("power_index: h >= 1 required");
    unsigned cond = conductor_exponent(pair, p);
    unsigned k = std::max(cond, 1u);
    FiniteRing R(*pair.E, pair.lambda, p, k);
    auto us = R.units(budget);
    // Theta = set of h-th powers, closed under multiplication (the unit
    // group is abelian, so the closure pass is a verification)
    std::map<std::vector<Int>, bool> theta;
    for (const auto& u : us) theta.emplace(R.pow(u, Int(h)), true);
    for (;;) {
        std::vector<std::vector<Int>> fresh;
        for (auto it1 = theta.begin(); it1 != theta.end(); ++it1)
            for (auto it2 = theta.begin(); it2 != theta.end(); ++it2) {
                auto prod = R.mul(it1->first, it2->first);
                if (!theta.count(prod)) fresh.push_back(prod);
            }
        if (fresh.empty()) break;
        for (auto& x : fresh) theta.emplace(std::move(x), true);
    }
    Int in_sub(0);
    for (const auto& [x, _] : theta)
        if (R.in_subring(x)) ++in_sub;
    Int total(static_cast<long>(theta.size()));
    if (in_sub == 0 || total % in_sub != 0)
        throw error("power subgroup index is not integral");
    return total / in_sub;
}

DiscReport disc_K(const EmbeddedTorus& T, std::uint64_t budget) {
    DiscReport rep;
    const EtaleAlgebra& E = T.etale();
    rep.d_E = E.discriminant();
    rep.index_OL = T.index_in_maximal();
    rep.delta = T.delta();
    // exact splitting field: all factors Galois-certified and the
    // non-rational ones share a single defining polynomial
    bool exact = true;
    std::optional<IntPoly> the_poly;
    Int dL(1);
    for (const auto& fac : E.factors()) {
        if (fac.field->degree() > 4) {
            exact = false;
            break;
        }
        auto d = exact_splitting_disc(*fac.field);
        if (!d) {
            exact = false;
            break;
        }
        if (fac.field->degree() >= 2) {
            if (the_poly && !(*the_poly == fac.field->defining_poly())) {
                exact = false;
                break;
            }
            the_poly = fac.field->defining_poly();
            dL = abs(*d);
        }
    }
    if (exact) {
        rep.d_mode = "exact";
        rep.d_value = dL;
    } else {
        rep.d_mode = "bounded-by-lemma";
        rep.d_value = rep.d_E;
    }
    OrderPair pair = OrderPair::of(T);
    rep.global_index = 1;
    if (rep.index_OL > 1)
        for (const auto& [p, e] : factor_integer(rep.index_OL)) {
            auto loc = local_unit_index(pair, p, budget);
            rep.global_index *= loc.index;
            rep.locals.push_back(std::move(loc));
        }
    rep.disc_value = rep.d_value * rep.global_index;
    return rep;
}

EyextReport eyext_scan(
    const std::vector<std::pair<const EmbeddedTorus*, Int>>& family,
    std::uint64_t budget) {
    EyextReport rep;
    rep.min_c = Rat(1);
    for (const auto& [T, p] : family) {
        auto loc = local_unit_index(OrderPair::of(*T), p, budget);
        if (loc.index == 1) continue;
        EyextRow row;
        row.p = p;
        row.index = loc.index;
        row.ratio = make_rat(p, loc.index);
        if (row.ratio > rep.min_c) rep.min_c = row.ratio;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace torusdisc
