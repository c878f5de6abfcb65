#include "torusdisc/config.hpp"

#include "torusdisc/errors.hpp"

#include <json.hpp>

namespace torusdisc {

namespace {

using nlohmann::json;

Rat parse_rat(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw config_error("rational values must be integers or \"p/q\" strings");
}

RatMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("matrix must be a nonempty array");
    std::size_t rows = j.size(), cols = j[0].size();
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw config_error("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = parse_rat(j[i][k]);
    }
    return m;
}

IntMat parse_int_matrix(const json& j) {
    RatMatrix m = parse_matrix(j);
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m.at(i, k).get_den() != 1)
                throw config_error("integer matrix entry has a denominator");
            out.at(i, k) = m.at(i, k).get_num();
        }
    return out;
}

IntPoly parse_poly(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("poly must be a coefficient array");
    std::vector<Int> c;
    for (const auto& x : j) {
        Rat r = parse_rat(x);
        if (r.get_den() != 1) throw config_error("poly coefficients must be integers");
        c.push_back(r.get_num());
    }
    return IntPoly(std::move(c));
}

TorusSpec parse_torus(const json& j, std::size_t idx) {
    TorusSpec spec;
    spec.label = j.value("label", "torus" + std::to_string(idx));
    if (j.contains("algebra")) {
        for (const auto& f : j.at("algebra"))
            spec.algebra.emplace_back(parse_poly(f.at("poly")),
                                      f.value("mult", 1u));
        std::string emb = "regular";
        if (j.contains("embedding")) {
            if (j.at("embedding").is_string())
                emb = j.at("embedding").get<std::string>();
            else
                throw config_error("embedding must be \"regular\" for the algebra route");
        }
        if (emb != "regular")
            throw config_error("unknown embedding mode: " + emb);
        if (j.contains("order")) spec.order_in_oe = parse_int_matrix(j.at("order"));
    } else if (j.contains("generators")) {
        for (const auto& g : j.at("generators"))
            spec.generators.push_back(parse_matrix(g));
        if (spec.generators.empty()) throw config_error("generators list is empty");
        spec.ambient = j.value("ambient", (unsigned)spec.generators[0].rows());
        if (spec.ambient != spec.generators[0].rows())
            throw config_error("ambient does not match the generator size");
    } else {
        throw config_error("torus needs either \"algebra\" or \"generators\"");
    }
    if (j.contains("prime")) {
        Rat p = parse_rat(j.at("prime"));
        if (p.get_den() != 1) throw config_error("prime must be an integer");
        spec.prime = p.get_num();
    }
    if (j.contains("conjugator")) {
        const json& c = j.at("conjugator");
        if (c.contains("matrix")) {
            spec.conjugator = parse_matrix(c.at("matrix"));
        } else if (c.contains("family")) {
            std::string fam = c.at("family").get<std::string>();
            if (fam == "diagonal") {
                spec.family = TorusSpec::Family::diagonal;
                auto r = c.at("range");
                spec.range_lo = r.at(0).get<long>();
                spec.range_hi = r.at(1).get<long>();
                if (spec.range_lo < 1 || spec.range_hi < spec.range_lo)
                    throw config_error("diagonal family range must be 1 <= lo <= hi");
                spec.primes_only = c.value("primes_only", false);
            } else if (fam == "unimodular") {
                spec.family = TorusSpec::Family::unimodular;
                spec.count = c.value("count", 1u);
                spec.bound = c.value("bound", 2l);
                if (spec.count < 1) throw config_error("unimodular family count must be >= 1");
                if (spec.bound < 1) throw config_error("unimodular bound must be >= 1");
            } else {
                throw config_error("unknown conjugator family: " + fam);
            }
        } else {
            throw config_error("conjugator needs \"matrix\" or \"family\"");
        }
    }
    return spec;
}

} // namespace

Config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw config_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("schema") || j.at("schema") != "torusdisc/1")
        throw config_error("config schema must be \"torusdisc/1\"");
    Config cfg;
    if (!j.contains("tori") || !j.at("tori").is_array() || j.at("tori").empty())
        throw config_error("config needs a nonempty \"tori\" array");
    std::size_t idx = 0;
    for (const auto& t : j.at("tori")) cfg.tori.push_back(parse_torus(t, idx++));
    if (j.contains("bands")) {
        const json& b = j.at("bands");
        auto get = [&](const char* k) -> std::optional<Rat> {
            if (!b.contains(k)) return std::nullopt;
            return parse_rat(b.at(k));
        };
        cfg.bands.max_a_fg = get("max_a_fg");
        cfg.bands.max_c_fg = get("max_c_fg");
        cfg.bands.max_a_gf = get("max_a_gf");
        cfg.bands.max_c_gf = get("max_c_gf");
    }
    return cfg;
}

namespace {

EmbeddedTorus base_torus(const TorusSpec& spec) {
    if (!spec.algebra.empty())
        return EmbeddedTorus::embed_regular(spec.algebra, spec.order_in_oe);
    return EmbeddedTorus::from_generators(spec.ambient, spec.generators);
}

RatMatrix diagonal_conjugator(unsigned n, long m) {
    RatMatrix g = RatMatrix::identity(n);
    for (unsigned i = 1; i < n; ++i) g.at(i, i) = Rat(m);
    return g;
}

RatMatrix unimodular_from_stream(unsigned n, SplitMix64& rng, long bound) {
    // product of elementary shears and row swaps
    RatMatrix g = RatMatrix::identity(n);
    const unsigned steps = 4 + rng.below(5);
    for (unsigned s = 0; s < steps; ++s) {
        if (n >= 2 && rng.below(4) == 0) {
            // swap two rows (as a permutation matrix factor)
            unsigned a = rng.below(n), b = rng.below(n);
            if (a != b) {
                RatMatrix e(n, n);
                for (unsigned i = 0; i < n; ++i) {
                    unsigned j = i == a ? b : i == b ? a : i;
                    e.at(i, j) = 1;
                }
                g = g * e;
                continue;
            }
        }
        unsigned i = rng.below(n), j = rng.below(n);
        if (i == j) j = (j + 1) % n;
        long v = static_cast<long>(rng.below(2 * bound + 1)) - bound;
        RatMatrix e = RatMatrix::identity(n);
        e.at(i, j) = Rat(v);
        g = g * e;
    }
    return g;
}

bool is_prime_long(long m) {
    Int M(m);
    return is_probable_prime(M);
}

} // namespace

std::vector<BuiltTorus> build_tori(const Config& cfg, std::uint64_t seed) {
    std::vector<BuiltTorus> out;
    std::uint64_t item_counter = 0;
    for (const TorusSpec& spec : cfg.tori) {
        EmbeddedTorus base = base_torus(spec);
        auto push = [&](std::string label, Int param, EmbeddedTorus T,
                        std::optional<Int> prime) {
            out.push_back(BuiltTorus{std::move(label), std::move(param),
                                     std::move(prime), std::move(T)});
        };
        switch (spec.family) {
            case TorusSpec::Family::none: {
                EmbeddedTorus T =
                    spec.conjugator ? base.conjugate(*spec.conjugator) : base;
                push(spec.label, Int(1), std::move(T), spec.prime);
                break;
            }
            case TorusSpec::Family::diagonal: {
                for (long m = spec.range_lo; m <= spec.range_hi; ++m) {
                    if (spec.primes_only && !is_prime_long(m)) continue;
                    EmbeddedTorus T =
                        m == 1 ? base
                               : base.conjugate(
                                     diagonal_conjugator(base.ambient_n(), m));
                    std::optional<Int> prime;
                    if (spec.primes_only) prime = Int(m);
                    push(spec.label + "#m=" + std::to_string(m), Int(m),
                         std::move(T), prime);
                }
                break;
            }
            case TorusSpec::Family::unimodular: {
                for (unsigned k = 0; k < spec.count; ++k) {
                    SplitMix64 stream = family_stream(seed, item_counter + k);
                    RatMatrix g = unimodular_from_stream(base.ambient_n(), stream,
                                                         spec.bound);
                    push(spec.label + "#u=" + std::to_string(k), Int(k),
                         base.conjugate(g), spec.prime);
                }
                break;
            }
        }
        item_counter += 1000; // family streams never overlap across specs
    }
    return out;
}

} // namespace torusdisc
