#ifndef TORUSDISC_CONFIG_HPP
#define TORUSDISC_CONFIG_HPP

#include "torusdisc/torus.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torusdisc {

// One torus specification from the configuration file: either an abstract
// algebra with its multiplication representation, or explicit generator
// matrices; optionally a conjugator or a conjugator family.
struct TorusSpec {
    std::string label;
    // algebra route
    std::vector<std::pair<IntPoly, unsigned>> algebra; // empty if generators
    std::optional<IntMat> order_in_oe;
    // generators route
    std::vector<RatMatrix> generators;
    unsigned ambient = 0; // for the generators route
    // conjugation
    std::optional<RatMatrix> conjugator;
    enum class Family { none, diagonal, unimodular } family = Family::none;
    long range_lo = 0, range_hi = 0; // diagonal family m range
    bool primes_only = false;
    unsigned count = 0; // unimodular family size
    long bound = 2;     // unimodular shear entry bound
    std::optional<Int> prime; // for eyext on explicit items
};

struct EquivBands {
    std::optional<Rat> max_a_fg, max_c_fg, max_a_gf, max_c_gf;
};

struct Config {
    std::vector<TorusSpec> tori;
    EquivBands bands;
};

// Parse the "torusdisc/1" JSON config; throws config_error.
Config parse_config(const std::string& json_text);

// A concrete family member ready for evaluation.
struct BuiltTorus {
    std::string label;
    Int param = 1;            // family parameter (m), 1 for single items
    std::optional<Int> prime; // for eyext scans
    EmbeddedTorus torus;
};

// Expand families and construct every torus. Unimodular conjugators are
// drawn from the documented SplitMix64 stream for the given seed.
std::vector<BuiltTorus> build_tori(const Config& cfg, std::uint64_t seed);

} // namespace torusdisc

#endif
