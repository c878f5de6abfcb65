#include "torusdisc/atlas.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/factor.hpp"
#include "torusdisc/fppoly.hpp"
#include "torusdisc/numfield.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace torusdisc {

IntegerLattice fixed_lattice(const PermGroup& U) {
    const unsigned N = U.degree();
    if (N > 8) throw degree_too_large("fixed_lattice: degree cap is 8");
    auto orbits = U.orbits();
    IntMat rows(orbits.size(), N);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (unsigned x : orbits[i]) rows.at(i, x) = 1;
    return hnf(rows);
}

namespace {

// subgroup bitsets over the element list of S_N
struct GroupTable {
    std::vector<Perm> elems; // sorted
    std::map<Perm, unsigned> index;
    std::vector<std::vector<std::uint16_t>> mult; // mult[a][b] = index(ab)
    std::vector<std::vector<std::uint16_t>> conj; // conj[s][a] = index(s a s^-1)

    explicit GroupTable(unsigned N) {
        PermGroup G = PermGroup::symmetric(N);
        elems = G.elements();
        for (unsigned i = 0; i < elems.size(); ++i) index[elems[i]] = i;
        const unsigned n = elems.size();
        mult.assign(n, std::vector<std::uint16_t>(n));
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                mult[a][b] = index.at(perm_compose(elems[a], elems[b]));
        conj.assign(n, std::vector<std::uint16_t>(n));
        for (unsigned s = 0; s < n; ++s) {
            Perm inv = perm_inverse(elems[s]);
            unsigned si = index.at(inv);
            for (unsigned a = 0; a < n; ++a)
                conj[s][a] = mult[mult[s][a]][si];
        }
    }
};

using Bits = std::vector<std::uint64_t>;

Bits bits_make(unsigned n) { return Bits((n + 63) / 64, 0); }
void bits_set(Bits& b, unsigned i) { b[i / 64] |= 1ull << (i % 64); }
bool bits_get(const Bits& b, unsigned i) { return (b[i / 64] >> (i % 64)) & 1; }

Bits subgroup_closure(const GroupTable& T, Bits seed) {
    std::vector<unsigned> members;
    for (unsigned i = 0; i < T.elems.size(); ++i)
        if (bits_get(seed, i)) members.push_back(i);
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            for (unsigned prod : {static_cast<unsigned>(T.mult[members[a]][members[b]]),
                                  static_cast<unsigned>(T.mult[members[b]][members[a]])})
                if (!bits_get(seed, prod)) {
                    bits_set(seed, prod);
                    members.push_back(prod);
                }
        }
    return seed;
}

unsigned bits_count(const Bits& b) {
    unsigned c = 0;
    for (std::uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

} // namespace

std::vector<SubgroupClass> subgroup_conjugacy_classes(unsigned N) {
    if (N > 5) throw degree_too_large("subgroup enumeration caps at degree 5");
    GroupTable T(N);
    const unsigned n = T.elems.size();
    // breadth-first closure over element subsets: all subgroups
    std::set<Bits> subgroups;
    std::vector<Bits> queue;
    Bits triv = bits_make(n);
    bits_set(triv, 0); // identity has index 0 (sorted first)
    assert(T.elems[0] == perm_identity(N));
    subgroups.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        Bits H = queue.back();
        queue.pop_back();
        for (unsigned g = 1; g < n; ++g) {
            if (bits_get(H, g)) continue;
            Bits seed = H;
            bits_set(seed, g);
            Bits K = subgroup_closure(T, seed);
            if (subgroups.insert(K).second) queue.push_back(K);
        }
    }
    // conjugacy: bucket by cycle-type multiset, then exact conjugation search
    auto signature = [&](const Bits& H) {
        std::vector<std::vector<unsigned>> sig;
        for (unsigned i = 0; i < n; ++i)
            if (bits_get(H, i)) sig.push_back(cycle_type(T.elems[i]));
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::map<std::vector<std::vector<unsigned>>, std::vector<Bits>> buckets;
    for (const Bits& H : subgroups) buckets[signature(H)].push_back(H);
    std::vector<std::pair<Bits, unsigned>> reps; // representative, class size
    for (auto& [sig, list] : buckets) {
        std::vector<bool> used(list.size(), false);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (used[i]) continue;
            std::vector<Bits> orbit{list[i]};
            used[i] = true;
            // conjugate by every s in S_N
            for (std::size_t scan = 0; scan < orbit.size(); ++scan)
                for (unsigned s = 0; s < n; ++s) {
                    Bits img = bits_make(n);
                    for (unsigned a = 0; a < n; ++a)
                        if (bits_get(orbit[scan], a)) bits_set(img, T.conj[s][a]);
                    bool found = false;
                    for (const Bits& o : orbit)
                        if (o == img) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        orbit.push_back(img);
                        for (std::size_t j = 0; j < list.size(); ++j)
                            if (!used[j] && list[j] == img) used[j] = true;
                    }
                }
            Bits best = *std::min_element(orbit.begin(), orbit.end());
            reps.emplace_back(best, orbit.size());
        }
    }
    std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
        unsigned oa = bits_count(a.first), ob = bits_count(b.first);
        if (oa != ob) return oa < ob;
        return a.first < b.first;
    });
    std::vector<SubgroupClass> out;
    std::map<unsigned, unsigned> order_counter;
    for (const auto& [H, csize] : reps) {
        std::vector<Perm> members;
        for (unsigned i = 0; i < n; ++i)
            if (bits_get(H, i)) members.push_back(T.elems[i]);
        // small generating set, greedy
        std::vector<Perm> gens;
        PermGroup cur = PermGroup::trivial(N);
        for (const Perm& p : members) {
            if (cur.contains(p)) continue;
            gens.push_back(p);
            cur = PermGroup::generated(N, gens);
            if (cur.order() == members.size()) break;
        }
        SubgroupClass cls{PermGroup::generated(N, gens), "", bits_count(H),
                          static_cast<unsigned>(csize)};
        unsigned idx = ++order_counter[cls.order];
        cls.label = "o" + std::to_string(cls.order) + "n" + std::to_string(idx);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<SubtorusClass> enumerate_fixed_lattice_classes(unsigned N) {
    auto classes = subgroup_conjugacy_classes(N);
    std::vector<SubtorusClass> out;
    for (const auto& cls : classes) {
        IntegerLattice L = fixed_lattice(cls.rep);
        bool merged = false;
        for (auto& sc : out) {
            if (sc.rank != L.rank()) continue;
            if (sc.lattice == L || weyl_conjugate_test(sc.lattice, L, N)) {
                sc.witnesses.push_back(cls.label);
                merged = true;
                break;
            }
        }
        if (!merged) {
            SubtorusClass sc;
            sc.lattice = L;
            sc.rank = L.rank();
            sc.witnesses = {cls.label};
            out.push_back(std::move(sc));
        }
    }
    std::sort(out.begin(), out.end(), [](const SubtorusClass& a, const SubtorusClass& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.lattice.basis().to_string() < b.lattice.basis().to_string();
    });
    return out;
}

std::optional<Perm> weyl_conjugate_test(const IntegerLattice& L1,
                                        const IntegerLattice& L2, unsigned N) {
    if (L1.ambient_dim() != N || L2.ambient_dim() != N) return std::nullopt;
    if (L1.rank() != L2.rank()) return std::nullopt;
    if (L1.rank() == 0) return perm_identity(N);
    // projector diagonal signature (covariant under coordinate permutation)
    auto proj_diag = [&](const IntegerLattice& L) {
        RatMatrix B = RatMatrix::from_int(L.basis());
        RatMatrix G = B * B.transpose();
        RatMatrix P = B.transpose() * G.inverse() * B;
        std::vector<Rat> d(N);
        for (unsigned i = 0; i < N; ++i) d[i] = P.at(i, i);
        return d;
    };
    std::vector<Rat> d1 = proj_diag(L1), d2 = proj_diag(L2);
    {
        std::vector<Rat> s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    std::vector<unsigned> sigma(N);
    for (unsigned i = 0; i < N; ++i) sigma[i] = i;
    do {
        // sigma moves coordinate i to sigma[i]; diag must match
        bool ok = true;
        for (unsigned i = 0; i < N && ok; ++i)
            if (d1[i] != d2[sigma[i]]) ok = false;
        if (!ok) continue;
        // permute columns of L1's basis: new[j] = old[sigma^-1(j)]
        IntMat B = L1.basis();
        IntMat Bp(B.rows(), N);
        for (std::size_t r = 0; r < B.rows(); ++r)
            for (unsigned j = 0; j < N; ++j) Bp.at(r, sigma[j]) = B.at(r, j);
        if (hnf(Bp) == L2) {
            Perm p(N);
            for (unsigned i = 0; i < N; ++i) p[i] = sigma[i];
            return p;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

StableSubspaces stable_subspace_enumeration(const PermGroup& U) {
    const unsigned N = U.degree();
    if (N > 6) throw degree_too_large("stable subspace enumeration caps at 6");
    // orbitals of U on pairs: the centralizer algebra basis
    std::vector<std::vector<int>> orbital_id(N, std::vector<int>(N, -1));
    unsigned orbitals = 0;
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j) {
            if (orbital_id[i][j] >= 0) continue;
            std::vector<std::pair<unsigned, unsigned>> orbit{{i, j}};
            orbital_id[i][j] = orbitals;
            for (std::size_t scan = 0; scan < orbit.size(); ++scan)
                for (const Perm& g : U.generators()) {
                    unsigned a = g[orbit[scan].first], b = g[orbit[scan].second];
                    if (orbital_id[a][b] < 0) {
                        orbital_id[a][b] = orbitals;
                        orbit.emplace_back(a, b);
                    }
                }
            ++orbitals;
        }
    // <chi, chi> by exact character arithmetic must equal the orbital count
    {
        Rat inner(0);
        for (const Perm& g : U.elements()) {
            unsigned fix = 0;
            for (unsigned i = 0; i < N; ++i)
                if (g[i] == i) ++fix;
            inner += Rat(static_cast<long>(fix) * fix);
        }
        inner /= Rat(static_cast<long>(U.order()));
        if (inner != Rat(static_cast<long>(orbitals)))
            throw error("character inner product disagrees with orbit count");
    }
    std::vector<IntMat> basis;
    for (unsigned o = 0; o < orbitals; ++o) {
        IntMat M(N, N);
        for (unsigned i = 0; i < N; ++i)
            for (unsigned j = 0; j < N; ++j)
                if (orbital_id[i][j] == static_cast<int>(o)) M.at(i, j) = 1;
        basis.push_back(M);
    }
    // multiplicity-free <=> the centralizer algebra is commutative
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!(basis[a] * basis[b] == basis[b] * basis[a])) {
                IsotypicReport rep;
                rep.centralizer_dim = orbitals;
                rep.trivial_multiplicity = U.orbits().size();
                rep.note = "noncommutative centralizer: infinitely many stable "
                           "subspaces";
                return rep;
            }
    // split the commutative centralizer via a primitive element
    const unsigned r = orbitals;
    RatMatrix c(N, N);
    RatPoly minp;
    {
        bool found = false;
        for (long seed = 1; seed <= 200 && !found; ++seed) {
            RatMatrix cand(N, N);
            Rat w(1);
            for (unsigned o = 0; o < r; ++o) {
                for (unsigned i = 0; i < N; ++i)
                    for (unsigned j = 0; j < N; ++j)
                        if (basis[o].at(i, j) != 0) cand.at(i, j) += w;
                w *= Rat(seed);
            }
            // matrix minimal polynomial by Krylov on flattened powers
            std::vector<std::vector<Rat>> pw{RatMatrix::identity(N).flatten()};
            RatMatrix acc = RatMatrix::identity(N);
            RatPoly mp;
            for (;;) {
                RatMatrix stack(pw.size(), N * N);
                for (std::size_t i = 0; i < pw.size(); ++i) stack.set_row(i, pw[i]);
                RatMatrix rr = stack;
                if (rref(rr).size() < pw.size()) {
                    // solve dependence
                    RatMatrix prev(pw.size() - 1, N * N);
                    for (std::size_t i = 0; i + 1 < pw.size(); ++i)
                        prev.set_row(i, pw[i]);
                    // least squares style solve through pivots
                    RatMatrix pr = prev;
                    auto piv = rref(pr);
                    RatMatrix sq(prev.rows(), prev.rows());
                    for (std::size_t i = 0; i < prev.rows(); ++i)
                        for (std::size_t j = 0; j < piv.size(); ++j)
                            sq.at(i, j) = prev.at(i, piv[j]);
                    RatMatrix sqinv = sq.inverse();
                    std::vector<Rat> coeff(prev.rows());
                    for (std::size_t i = 0; i < prev.rows(); ++i) {
                        Rat s(0);
                        for (std::size_t j = 0; j < piv.size(); ++j)
                            s += pw.back()[piv[j]] * sqinv.at(j, i);
                        coeff[i] = s;
                    }
                    mp.c.assign(pw.size(), Rat(0));
                    for (std::size_t i = 0; i + 1 < pw.size(); ++i)
                        mp.c[i] = -coeff[i];
                    mp.c[pw.size() - 1] = 1;
                    break;
                }
                acc = acc * cand;
                pw.push_back(acc.flatten());
            }
            if (mp.degree() == static_cast<long>(r)) {
                c = cand;
                minp = mp;
                found = true;
            }
        }
        if (!found) throw error("no primitive centralizer element found");
    }
    // idempotents from the factorization of the minimal polynomial
    IntPoly mint = minp.to_primitive_int();
    auto factors = factor_over_Q(mint);
    std::vector<RatMatrix> idems;
    {
        RatPoly g = RatPoly::from_int(mint);
        // normalize monic over Q
        Rat lc = g.c.back();
        for (Rat& x : g.c) x /= lc;
        for (const auto& [q, mlt] : factors) {
            assert(mlt == 1);
            RatPoly qq = RatPoly::from_int(q);
            Rat qlc = qq.c.back();
            for (Rat& x : qq.c) x /= qlc;
            RatPoly u = g.divmod(qq).first;
            RatPoly gg, s, t;
            rat_poly_xgcd(u, qq, gg, s, t);
            RatPoly e = (u * s).divmod(g).second;
            // evaluate at the matrix c
            RatMatrix acc(N, N);
            RatMatrix power = RatMatrix::identity(N);
            for (std::size_t k = 0; k < e.c.size(); ++k) {
                if (e.c[k] != 0) acc = acc + power.scaled(e.c[k]);
                if (k + 1 < e.c.size()) power = power * c;
            }
            idems.push_back(acc);
        }
    }
    // stable lattices: saturations of sums of isotypic row spaces
    std::vector<IntegerLattice> lattices;
    const unsigned pieces = idems.size();
    for (unsigned mask = 0; mask < (1u << pieces); ++mask) {
        if (mask == 0) {
            lattices.push_back(IntegerLattice::zero(N));
            continue;
        }
        std::vector<std::vector<Rat>> rows;
        for (unsigned j = 0; j < pieces; ++j)
            if (mask & (1u << j))
                for (unsigned i = 0; i < N; ++i) rows.push_back(idems[j].row(i));
        // clear denominators and saturate
        IntMat cleared(rows.size(), N);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Int den(1);
            for (unsigned j = 0; j < N; ++j) den = lcm(den, rows[i][j].get_den());
            for (unsigned j = 0; j < N; ++j) {
                Rat v = rows[i][j] * Rat(den);
                cleared.at(i, j) = v.get_num();
            }
        }
        lattices.push_back(saturate(hnf(cleared)));
    }
    // verify stability under the generators
    for (const IntegerLattice& L : lattices) {
        for (const Perm& g : U.generators()) {
            IntMat B = L.basis();
            IntMat Bp(B.rows(), N);
            for (std::size_t rr2 = 0; rr2 < B.rows(); ++rr2)
                for (unsigned j = 0; j < N; ++j) Bp.at(rr2, g[j]) = B.at(rr2, j);
            if (!(hnf(Bp) == L)) throw error("stable lattice fails stability");
        }
    }
    std::sort(lattices.begin(), lattices.end(),
              [](const IntegerLattice& a, const IntegerLattice& b) {
                  if (a.rank() != b.rank()) return a.rank() < b.rank();
                  return a.basis().to_string() < b.basis().to_string();
              });
    lattices.erase(std::unique(lattices.begin(), lattices.end()), lattices.end());
    return lattices;
}

namespace {

PermGroup group_of_type(GaloisType t) {
    auto perm = [](std::initializer_list<std::uint8_t> v) { return Perm(v); };
    switch (t) {
        case GaloisType::C1: return PermGroup::trivial(1);
        case GaloisType::C2: return PermGroup::generated(2, {perm({1, 0})});
        case GaloisType::C3: return PermGroup::cyclic_shift(3);
        case GaloisType::S3: return PermGroup::symmetric(3);
        case GaloisType::C4: return PermGroup::cyclic_shift(4);
        case GaloisType::V4:
            return PermGroup::generated(4, {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})});
        case GaloisType::D4:
            return PermGroup::generated(4, {perm({1, 2, 3, 0}), perm({2, 1, 0, 3})});
        case GaloisType::A4:
            return PermGroup::generated(4, {perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
        case GaloisType::S4: return PermGroup::symmetric(4);
    }
    throw error("unknown galois type");
}

} // namespace

GaloisPermReport galois_perm_action(const IntPoly& f, bool exact_mode) {
    if (!is_irreducible(f))
        throw not_irreducible("galois_perm_action: polynomial reducible");
    const unsigned N = f.degree();
    GaloisPermReport rep{PermGroup::trivial(1), false, {}, {}, ""};
    if (exact_mode) {
        GaloisType t = galois_type_exact(f); // throws DegreeTooLarge past 4
        rep.group = group_of_type(t);
        rep.certified = true;
        rep.candidate_classes = {galois_type_name(t)};
        return rep;
    }
    // sampled mode: cycle types of Frobenius at the first 50 good primes
    Int disc = poly_discriminant(f);
    std::set<std::vector<unsigned>> types;
    Int p(2);
    unsigned good = 0;
    while (good < 50) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (disc % p == 0) continue;
        fp::u64 pp = p.get_ui();
        fp::Poly fq = fp::reduce(f, pp);
        if (fp::degree(fq) != static_cast<long>(N)) continue;
        std::vector<unsigned> type;
        for (const auto& [q, m] : fp::factor(fq, pp))
            for (unsigned i = 0; i < m; ++i) type.push_back(fp::degree(q));
        std::sort(type.rbegin(), type.rend());
        types.insert(type);
        ++good;
    }
    rep.observed_types.assign(types.begin(), types.end());
    if (N <= 5) {
        auto classes = subgroup_conjugacy_classes(N);
        std::vector<const SubgroupClass*> consistent;
        for (const auto& cls : classes) {
            if (!cls.rep.is_transitive()) continue;
            // every observed type must occur among the class's element types
            std::set<std::vector<unsigned>> have;
            for (const Perm& g : cls.rep.elements()) have.insert(cycle_type(g));
            bool ok = true;
            for (const auto& t : types)
                if (!have.count(t)) {
                    ok = false;
                    break;
                }
            if (ok) consistent.push_back(&cls);
        }
        std::sort(consistent.begin(), consistent.end(),
                  [](const SubgroupClass* a, const SubgroupClass* b) {
                      return a->order < b->order;
                  });
        if (consistent.empty()) throw error("no transitive group fits the data");
        rep.group = consistent.front()->rep;
        for (const auto* c : consistent) rep.candidate_classes.push_back(c->label);
        rep.certified = consistent.size() == 1;
        if (!rep.certified)
            rep.note = "sampled cycle types; smallest consistent candidate shown";
    } else {
        rep.group = PermGroup::symmetric(N);
        rep.certified = false;
        rep.note = "degree beyond the exhaustive candidate enumeration; "
                   "observed cycle types only";
    }
    return rep;
}

} // namespace torusdisc
