#ifndef TORUSDISC_ERRORS_HPP
#define TORUSDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torusdisc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ratlin
struct not_sublattice : error { using error::error; };
struct rank_mismatch : error { using error::error; };
struct degenerate_form : error { using error::error; };
struct degree_too_large : error { using error::error; };

// numfield
struct not_irreducible : error { using error::error; };
struct not_monic : error { using error::error; };

// torus
struct non_commuting : error { using error::error; };
struct non_semisimple : error { using error::error; };
struct singular_matrix : error { using error::error; };

// Internal consistency failure: a saturated lattice produced an imprimitive
// wedge vector. Must never fire on valid inputs.
struct primitivity_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// adelic
struct modulus_too_large : error { using error::error; };

// equiv
struct all_ones : error { using error::error; };
struct invalid_witness : error { using error::error; };

// cli
struct config_error : error { using error::error; };

} // namespace torusdisc

#endif
