#ifndef TORUSDISC_EQUIV_HPP
#define TORUSDISC_EQUIV_HPP

#include "torusdisc/numq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdisc {

// Family of sampled values >= 1 (the numerical functions being compared).
struct SampledFunction {
    std::vector<std::string> labels;
    std::vector<Rat> values;

    static SampledFunction of(std::vector<std::string> labels,
                              std::vector<Rat> values);
    std::size_t size() const { return values.size(); }
};

SampledFunction pointwise_product(const SampledFunction& f, const SampledFunction& g);
SampledFunction pointwise_max(const SampledFunction& f, const SampledFunction& g);

// Witness for f <= c * g^a across a sample. Validity is decidable exactly:
// with a = p/q in lowest terms, f_i^q <= c^q * g_i^p.
struct DominationWitness {
    Rat exponent; // a >= 0
    Rat constant; // c >= 1
};

bool verify_witness(const SampledFunction& f, const SampledFunction& g,
                    const DominationWitness& w);

struct FitOptions {
    unsigned long exponent_grid = 1000; // a quantized to 1/grid
    unsigned long constant_grid = 1000000;
};

// Two-stage grid fit: the exponent is the least grid point at which the
// exactly-minimal constant (reached at the upper-hull maximal slope) still
// covers every sample; the witness is verified exactly before return.
// The exponent is minimal over the sample only up to the grid - finite data
// cannot certify more, and every report flags this.
DominationWitness fit_domination(const SampledFunction& f, const SampledFunction& g,
                                 const FitOptions& opts = {});

struct EquivReport {
    bool equivalent = false;
    std::optional<DominationWitness> fg; // f <= c g^a
    std::optional<DominationWitness> gf; // g <= c f^a
    std::optional<std::size_t> violation_index;
    std::optional<Rat> violation_ratio; // residual at the exponent cap
    std::string note;
};

// Witnesses both ways, or a failure certificate at the integer exponent cap.
EquivReport check_equivalence(const SampledFunction& f, const SampledFunction& g,
                              const Rat& exponent_cap = Rat(16),
                              const FitOptions& opts = {});

// From h <= c1 (f g)^a1 and g <= c2 f^a2, the substitution witness
// g h <= c3 f^(a2 + a1 + a1 a2) with c3 = c1 c2^(1+a1) (rounded up to the
// grid when fractional); inputs are re-verified, output is re-verified.
DominationWitness dichotomy_combine(const DominationWitness& w1,
                                    const DominationWitness& w2,
                                    const SampledFunction& f,
                                    const SampledFunction& g,
                                    const SampledFunction& h,
                                    const FitOptions& opts = {});

// From f <= c1 g^a1 and g <= c2 h^a2: f <= (c1 c2^a1) h^(a1 a2).
DominationWitness compose_transitive(const DominationWitness& w_fg,
                                     const DominationWitness& w_gh,
                                     const SampledFunction& f,
                                     const SampledFunction& g,
                                     const SampledFunction& h,
                                     const FitOptions& opts = {});

struct BracketPair {
    DominationWitness max_le_product;    // a = 1, c = 1
    DominationWitness product_le_max_sq; // a = 2, c = 1
};

// max(f,g) <= f*g and f*g <= max(f,g)^2, verified exactly on the sample.
BracketPair max_product_bracket(const SampledFunction& f, const SampledFunction& g);

} // namespace torusdisc

#endif
