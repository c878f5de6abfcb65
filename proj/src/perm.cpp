#include "torusdisc/perm.hpp"

#include "torusdisc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace torusdisc {

Perm perm_identity(unsigned n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = i;
    return c;
}

std::vector<unsigned> cycle_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<unsigned> type;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = a[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string perm_to_string(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == i) {
            seen[i] = true;
            continue;
        }
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << (j + 1);
            first = false;
            j = a[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

PermGroup PermGroup::generated(unsigned degree, std::vector<Perm> gens) {
    for (const Perm& g : gens) {
        if (g.size() != degree) throw error("generator has wrong degree");
        Perm s = g;
        std::sort(s.begin(), s.end());
        for (unsigned i = 0; i < degree; ++i)
            if (s[i] != i) throw error("generator is not a permutation");
    }
    std::set<Perm> closed;
    std::vector<Perm> queue{perm_identity(degree)};
    closed.insert(queue[0]);
    while (!queue.empty()) {
        Perm cur = queue.back();
        queue.pop_back();
        for (const Perm& g : gens) {
            Perm nxt = perm_compose(cur, g);
            if (closed.insert(nxt).second) {
                if (closed.size() > 10000)
                    throw error("group order exceeds the materialization cap");
                queue.push_back(nxt);
            }
        }
    }
    PermGroup G;
    G.degree_ = degree;
    G.generators_ = std::move(gens);
    G.elements_.assign(closed.begin(), closed.end());
    return G;
}

PermGroup PermGroup::trivial(unsigned degree) { return generated(degree, {}); }

PermGroup PermGroup::symmetric(unsigned degree) {
    std::vector<Perm> gens;
    if (degree >= 2) {
        Perm t = perm_identity(degree);
        std::swap(t[0], t[1]);
        gens.push_back(t);
        if (degree >= 3) {
            Perm c(degree);
            for (unsigned i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
            gens.push_back(c);
        }
    }
    return generated(degree, std::move(gens));
}

PermGroup PermGroup::cyclic_shift(unsigned degree) {
    Perm c(degree);
    for (unsigned i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    return generated(degree, {c});
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

std::vector<std::vector<unsigned>> PermGroup::orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<unsigned>> out;
    for (unsigned i = 0; i < degree_; ++i) {
        if (seen[i]) continue;
        std::vector<unsigned> orbit{i};
        seen[i] = true;
        for (std::size_t scan = 0; scan < orbit.size(); ++scan)
            for (const Perm& g : generators_) {
                unsigned img = g[orbit[scan]];
                if (!seen[img]) {
                    seen[img] = true;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<std::vector<unsigned>> PermGroup::cycle_type_signature() const {
    std::vector<std::vector<unsigned>> sig;
    for (const Perm& g : elements_) sig.push_back(cycle_type(g));
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace torusdisc
