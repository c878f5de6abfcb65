#include "torusdisc/commands.hpp"

#include "torusdisc/adelic.hpp"
#include "torusdisc/atlas.hpp"
#include "torusdisc/equiv.hpp"
#include "torusdisc/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <future>
#include <sstream>
#include <thread>

namespace torusdisc {

namespace {

using nlohmann::json;

json rat_json(const Rat& x) { return rat_to_string(x); }
json int_json(const Int& x) { return x.get_str(); }

json report_shell(const char* command, const RunOptions& opts) {
    json j;
    j["schema"] = "torusdisc/1";
    j["command"] = command;
    j["seed"] = opts.seed;
    j["budget"] = opts.budget;
    return j;
}

// evaluate fn(i) for i in [0, n) on opts.jobs workers; results ordered
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// wall-clock timing goes to the stderr side channel so that reports stay
// byte-deterministic for a fixed (config, seed)
struct TimedDiagnostics {
    CommandResult* res;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~TimedDiagnostics() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        res->diagnostics += "timing_ms=" + std::to_string(ms) + "\n";
    }
};

int exit_for(const std::exception& e) {
    if (dynamic_cast<const modulus_too_large*>(&e)) return kExitResourceCap;
    return kExitConfigError;
}

std::string csv_escape(const std::string& s) { return s; } // fields never need quoting

} // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::size_t start = 0;
        for (;;) {
            std::size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                row.push_back(line.substr(start));
                break;
            }
            row.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string emit_csv(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(row[i]);
        out << "\n";
    }
    return out.str();
}

CommandResult cmd_delta(const Config& cfg, const RunOptions& opts) {
    CommandResult res;
    TimedDiagnostics timer{&res};
    try {
        auto tori = build_tori(cfg, opts.seed);
        std::vector<json> items(tori.size());
        std::vector<bool> equal(tori.size(), true);
        parallel_for(tori.size(), opts.jobs, [&](std::size_t i) {
            const BuiltTorus& bt = tori[i];
            auto rep = verify_height_equals_disc_sample(bt.torus);
            json it;
            it["label"] = bt.label;
            it["param"] = int_json(bt.param);
            it["n"] = bt.torus.ambient_n();
            it["dim"] = bt.torus.dim();
            it["delta"] = int_json(rep.delta);
            it["disc_lambda"] = int_json(rep.disc);
            it["height_equals_disc"] = rep.equal;
            it["index_OL"] = int_json(bt.torus.index_in_maximal());
            it["d_E"] = int_json(bt.torus.etale().discriminant());
            json nu = json::array();
            for (const Int& x : bt.torus.nu()) nu.push_back(int_json(x));
            it["nu"] = nu;
            items[i] = std::move(it);
            equal[i] = rep.equal;
        });
        bool all_equal = true;
        for (bool e : equal) all_equal &= e;
        if (opts.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"label", "n", "dim", "delta", "disc_lambda",
                            "index_ol", "d_e"});
            for (std::size_t i = 0; i < tori.size(); ++i)
                rows.push_back({tori[i].label,
                                std::to_string(tori[i].torus.ambient_n()),
                                std::to_string(tori[i].torus.dim()),
                                items[i]["delta"].get<std::string>(),
                                items[i]["disc_lambda"].get<std::string>(),
                                items[i]["index_OL"].get<std::string>(),
                                items[i]["d_E"].get<std::string>()});
            res.output = emit_csv(rows);
        } else {
            json j = report_shell("delta", opts);
            j["items"] = items;
            j["ok"] = all_equal;
            res.output = j.dump(2) + "\n";
        }
        if (!all_equal) res.exit_code = kExitVerificationFailure;
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_for(e);
    }
    return res;
}

CommandResult cmd_disc(const Config& cfg, const RunOptions& opts) {
    CommandResult res;
    TimedDiagnostics timer{&res};
    try {
        auto tori = build_tori(cfg, opts.seed);
        std::vector<json> items(tori.size());
        parallel_for(tori.size(), opts.jobs, [&](std::size_t i) {
            const BuiltTorus& bt = tori[i];
            DiscReport rep = disc_K(bt.torus, opts.budget);
            json it;
            it["label"] = bt.label;
            it["param"] = int_json(bt.param);
            it["d_E"] = int_json(rep.d_E);
            it["d_mode"] = rep.d_mode;
            it["d_value"] = int_json(rep.d_value);
            it["global_index"] = int_json(rep.global_index);
            it["disc"] = int_json(rep.disc_value);
            it["delta"] = int_json(rep.delta);
            it["index_OL"] = int_json(rep.index_OL);
            json locals = json::array();
            for (const auto& loc : rep.locals) {
                json l;
                l["p"] = int_json(loc.p);
                l["k"] = loc.k;
                l["units_O"] = int_json(loc.units_O);
                l["units_Lambda"] = int_json(loc.units_Lambda);
                l["index"] = int_json(loc.index);
                l["enumerated"] = loc.enumerated;
                locals.push_back(std::move(l));
            }
            it["locals"] = std::move(locals);
            items[i] = std::move(it);
        });
        if (opts.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"label", "d_value", "d_mode", "global_index", "disc",
                            "delta", "index_ol"});
            for (std::size_t i = 0; i < tori.size(); ++i)
                rows.push_back({tori[i].label,
                                items[i]["d_value"].get<std::string>(),
                                items[i]["d_mode"].get<std::string>(),
                                items[i]["global_index"].get<std::string>(),
                                items[i]["disc"].get<std::string>(),
                                items[i]["delta"].get<std::string>(),
                                items[i]["index_OL"].get<std::string>()});
            res.output = emit_csv(rows);
        } else {
            json j = report_shell("disc", opts);
            j["items"] = items;
            j["ok"] = true;
            res.output = j.dump(2) + "\n";
        }
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_for(e);
    }
    return res;
}

namespace {

json witness_json(const DominationWitness& w) {
    json j;
    j["exponent"] = rat_json(w.exponent);
    j["constant"] = rat_json(w.constant);
    return j;
}

} // namespace

CommandResult cmd_verify_thm51(const Config& cfg, const RunOptions& opts) {
    CommandResult res;
    TimedDiagnostics timer{&res};
    try {
        auto tori = build_tori(cfg, opts.seed);
        struct Row {
            Int param, delta, disc;
            Rat ratio;
        };
        std::vector<Row> rows(tori.size());
        parallel_for(tori.size(), opts.jobs, [&](std::size_t i) {
            const BuiltTorus& bt = tori[i];
            DiscReport rep = disc_K(bt.torus, opts.budget);
            rows[i] = Row{bt.param, rep.delta, rep.disc_value,
                          make_rat(rep.delta, rep.disc_value)};
        });
        // equivalence fit across the family
        std::vector<std::string> labels;
        std::vector<Rat> deltas, discs;
        for (std::size_t i = 0; i < tori.size(); ++i) {
            labels.push_back(tori[i].label);
            deltas.emplace_back(rows[i].delta);
            discs.emplace_back(rows[i].disc);
        }
        auto f = SampledFunction::of(labels, deltas);
        auto g = SampledFunction::of(labels, discs);
        EquivReport eq = check_equivalence(f, g);
        bool ok = eq.equivalent;
        auto band_ok = [&](const std::optional<Rat>& cap, const Rat& v) {
            return !cap || v <= *cap;
        };
        if (eq.fg) {
            ok &= band_ok(cfg.bands.max_a_fg, eq.fg->exponent);
            ok &= band_ok(cfg.bands.max_c_fg, eq.fg->constant);
        }
        if (eq.gf) {
            ok &= band_ok(cfg.bands.max_a_gf, eq.gf->exponent);
            ok &= band_ok(cfg.bands.max_c_gf, eq.gf->constant);
        }
        json wj;
        wj["equivalent"] = eq.equivalent;
        if (eq.fg) wj["delta_vs_disc"] = witness_json(*eq.fg);
        if (eq.gf) wj["disc_vs_delta"] = witness_json(*eq.gf);
        wj["note"] = eq.note;
        if (opts.format == "csv") {
            std::vector<std::vector<std::string>> csv;
            csv.push_back({"m", "delta", "disc", "ratio"});
            for (const Row& r : rows)
                csv.push_back({r.param.get_str(), r.delta.get_str(),
                               r.disc.get_str(), rat_to_string(r.ratio)});
            res.output = emit_csv(csv);
            res.diagnostics = wj.dump(2) + "\n";
        } else {
            json j = report_shell("verify-thm51", opts);
            json items = json::array();
            for (const Row& r : rows) {
                json it;
                it["m"] = int_json(r.param);
                it["delta"] = int_json(r.delta);
                it["disc"] = int_json(r.disc);
                it["ratio"] = rat_json(r.ratio);
                items.push_back(std::move(it));
            }
            j["items"] = items;
            j["witnesses"] = wj;
            j["ok"] = ok;
            res.output = j.dump(2) + "\n";
        }
        if (!ok) res.exit_code = kExitVerificationFailure;
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_for(e);
    }
    return res;
}

CommandResult cmd_classify(unsigned N, const RunOptions& opts) {
    CommandResult res;
    TimedDiagnostics timer{&res};
    try {
        auto classes = enumerate_fixed_lattice_classes(N);
        if (opts.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"class", "rank", "witnesses", "basis"});
            for (std::size_t i = 0; i < classes.size(); ++i) {
                std::string wit;
                for (std::size_t k = 0; k < classes[i].witnesses.size(); ++k)
                    wit += (k ? "+" : "") + classes[i].witnesses[k];
                std::string basis;
                const IntMat& b = classes[i].lattice.basis();
                for (std::size_t r = 0; r < b.rows(); ++r) {
                    if (r) basis += ";";
                    for (std::size_t c = 0; c < b.cols(); ++c)
                        basis += (c ? ":" : "") + b.at(r, c).get_str();
                }
                rows.push_back({std::to_string(i), std::to_string(classes[i].rank),
                                wit, basis});
            }
            res.output = emit_csv(rows);
        } else {
            json j = report_shell("classify", opts);
            j["N"] = N;
            json arr = json::array();
            for (const auto& cls : classes) {
                json c;
                c["rank"] = cls.rank;
                c["witnesses"] = cls.witnesses;
                json basis = json::array();
                const IntMat& b = cls.lattice.basis();
                for (std::size_t r = 0; r < b.rows(); ++r) {
                    json row = json::array();
                    for (std::size_t cc = 0; cc < b.cols(); ++cc)
                        row.push_back(b.at(r, cc).get_str());
                    basis.push_back(row);
                }
                c["basis"] = basis;
                arr.push_back(std::move(c));
            }
            j["classes"] = arr;
            j["count"] = classes.size();
            j["ok"] = true;
            res.output = j.dump(2) + "\n";
        }
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_for(e);
    }
    return res;
}

CommandResult cmd_eyext(const Config& cfg, const RunOptions& opts) {
    CommandResult res;
    TimedDiagnostics timer{&res};
    try {
        auto tori = build_tori(cfg, opts.seed);
        std::vector<std::pair<const EmbeddedTorus*, Int>> family;
        for (const BuiltTorus& bt : tori) {
            if (!bt.prime)
                throw config_error("eyext needs a prime per item (a primes_only "
                                   "diagonal family or explicit \"prime\")");
            family.emplace_back(&bt.torus, *bt.prime);
        }
        // per-prime work is independent; evaluate in parallel, then assemble
        std::vector<std::optional<EyextRow>> rows(family.size());
        parallel_for(family.size(), opts.jobs, [&](std::size_t i) {
            auto loc = local_unit_index(OrderPair::of(*family[i].first),
                                        family[i].second, opts.budget);
            if (loc.index != 1)
                rows[i] = EyextRow{family[i].second, loc.index,
                                   make_rat(family[i].second, loc.index)};
        });
        EyextReport rep;
        rep.min_c = Rat(1);
        for (auto& r : rows)
            if (r) {
                if (r->ratio > rep.min_c) rep.min_c = r->ratio;
                rep.rows.push_back(std::move(*r));
            }
        json summary;
        summary["min_c"] = rat_json(rep.min_c);
        summary["nontrivial"] = rep.rows.size();
        if (opts.format == "csv") {
            std::vector<std::vector<std::string>> csv;
            csv.push_back({"p", "index", "ratio"});
            for (const auto& row : rep.rows)
                csv.push_back({row.p.get_str(), row.index.get_str(),
                               rat_to_string(row.ratio)});
            res.output = emit_csv(csv);
            res.diagnostics = summary.dump(2) + "\n";
        } else {
            json j = report_shell("eyext", opts);
            json arr = json::array();
            for (const auto& row : rep.rows) {
                json r;
                r["p"] = int_json(row.p);
                r["index"] = int_json(row.index);
                r["ratio"] = rat_json(row.ratio);
                arr.push_back(std::move(r));
            }
            j["rows"] = arr;
            j["summary"] = summary;
            j["ok"] = true;
            res.output = j.dump(2) + "\n";
        }
    } catch (const std::exception& e) {
        res.diagnostics = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_for(e);
    }
    return res;
}

} // namespace torusdisc
