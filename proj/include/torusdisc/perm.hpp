#ifndef TORUSDISC_PERM_HPP
#define TORUSDISC_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace torusdisc {

// Permutation of {0..n-1} as its image list.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(unsigned n);
// (a * b)(i) = b[a[i]]  (apply a, then b)
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
// cycle lengths, descending
std::vector<unsigned> cycle_type(const Perm& a);
std::string perm_to_string(const Perm& a); // cycle notation, 1-based

class PermGroup {
  public:
    static PermGroup generated(unsigned degree, std::vector<Perm> gens);
    static PermGroup trivial(unsigned degree);
    static PermGroup symmetric(unsigned degree);
    static PermGroup cyclic_shift(unsigned degree); // <(1 2 ... n)>

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    bool contains(const Perm& p) const;
    bool is_transitive() const;

    std::vector<std::vector<unsigned>> orbits() const;

    // multiset of element cycle types, sorted (conjugation invariant)
    std::vector<std::vector<unsigned>> cycle_type_signature() const;

  private:
    unsigned degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_; // sorted
};

} // namespace torusdisc

#endif
