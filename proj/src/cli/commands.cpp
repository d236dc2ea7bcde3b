#include "kg/cli/commands.hpp"
#include "kg/errors.hpp"
#include "kg/oracle.hpp"
#include "kg/scatter.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

namespace kg::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void parallel_for(int jobs, int n, const std::function<void(int)>& body) {
    jobs = std::max(1, std::min(jobs, n));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw ConfigError("cannot open output file: " + path);
    return file;
}

// (E-, E+) root pair for one quantum-number group; NaN when a branch is missing.
struct BranchPair {
    double e_minus = kNaN;
    double e_plus = kNaN;
    int count = 0;
};

BranchPair split_branches(const std::vector<double>& roots) {
    BranchPair b;
    b.count = static_cast<int>(roots.size());
    if (roots.empty()) return b;
    if (roots.size() == 1) {
        (roots[0] < 0 ? b.e_minus : b.e_plus) = roots[0];
        return b;
    }
    b.e_minus = roots.front();
    b.e_plus = roots.back();
    return b;
}

std::vector<double> energies_of(const std::vector<BoundState>& states) {
    std::vector<double> es;
    es.reserve(states.size());
    for (const auto& s : states) es.push_back(s.energy);
    return es;
}

BranchPair solve_pair(const QuantumNumbers& qn, const PotentialParams& p, const MassParams& m,
                      const SearchConfig& search, const std::string& solver) {
    if (solver == "oracle") {
        auto grid = oracle::RadialGrid::bound_defaults(p);
        return split_branches(oracle::oracle_bound_energies(qn, p, m, grid, search).energies);
    }
    return split_branches(energies_of(solve_bound_energies(qn, p, m, search)));
}

} // namespace

int cmd_table1(const RunConfig& cfg, const GlobalOptions& opt) {
    if (cfg.table1.reference.empty()) {
        std::cerr << "table1: config has no reference rows\n";
        return 1;
    }
    double tol = opt.tol > 0.0 ? opt.tol : cfg.table1.tol;
    const int n_rows = static_cast<int>(cfg.table1.reference.size());
    struct Row {
        int n, l, D;
        BranchPair got;
        double ref_plus, ref_minus;
    };
    std::vector<Row> rows(n_rows);
    parallel_for(opt.jobs, n_rows, [&](int i) {
        const auto& r = cfg.table1.reference[i];
        Row row;
        row.n = static_cast<int>(r[0]);
        row.l = static_cast<int>(r[1]);
        row.D = static_cast<int>(r[2]);
        row.ref_plus = r[3];
        row.ref_minus = r[4];
        QuantumNumbers qn{row.n, row.l, row.D};
        row.got = solve_pair(qn, cfg.potential, cfg.mass, cfg.search, opt.solver);
        rows[i] = row;
    });

    std::ofstream file;
    auto& os = open_out(file, opt.out.empty() ? cfg.out : opt.out);
    os << "n,l,D,E_plus,E_minus,E_plus_ref,E_minus_ref,abs_err_plus,abs_err_minus\r\n";
    bool all_ok = true;
    double worst = 0.0;
    for (const auto& row : rows) {
        double ep = std::abs(row.got.e_plus - row.ref_plus);
        double em = std::abs(row.got.e_minus - row.ref_minus);
        if (!(ep < tol) || !(em < tol)) all_ok = false;
        worst = std::max({worst, ep, em});
        os << row.n << ',' << row.l << ',' << row.D << ',' << fmt(row.got.e_plus) << ','
           << fmt(row.got.e_minus) << ',' << fmt(row.ref_plus) << ',' << fmt(row.ref_minus)
           << ',' << fmt(ep) << ',' << fmt(em) << "\r\n";
    }
    if (all_ok) return 0;

    std::cerr << "table1: worst |err| = " << fmt(worst) << " exceeds tol = " << fmt(tol) << "\n";
    if (opt.solver != "oracle") {
        // the reference caption omits S0; scan it once and report (no value is
        // asserted as intended -- the best fit is informational)
        double best_s0 = 0.0, best_err = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 80; ++i) {
            double s0 = -1.0 + 2.0 * i / 80.0;
            PotentialParams p = cfg.potential;
            p.S0 = s0;
            double err = 0.0;
            try {
                for (const auto& r : cfg.table1.reference) {
                    QuantumNumbers qn{(int)r[0], (int)r[1], (int)r[2]};
                    if (qn.n > 0 || qn.l > 0 || qn.D != 3) continue;
                    auto got = split_branches(energies_of(
                        solve_bound_energies(qn, p, cfg.mass, cfg.search)));
                    double ep = std::abs(got.e_plus - r[3]);
                    double em = std::abs(got.e_minus - r[4]);
                    if (std::isnan(ep) || std::isnan(em))
                        err = std::numeric_limits<double>::infinity();
                    else
                        err = std::max({err, ep, em});
                }
            } catch (const Error&) {
                continue;
            }
            if (!std::isfinite(err)) continue;
            if (err < best_err) {
                best_err = err;
                best_s0 = s0;
            }
        }
        std::cerr << "table1: S0 scan over [-1, 1]: best S0 = " << fmt(best_s0)
                  << " with worst |err| = " << fmt(best_err)
                  << " (still a miss; reference values are not reproducible from the implemented"
                     " coefficient set)\n";
    }
    return 2;
}

int cmd_sweep(const RunConfig& cfg, const GlobalOptions& opt) {
    if (cfg.sweep.variable.empty()) {
        std::cerr << "sweep: no sweep block in config\n";
        return 1;
    }
    if (cfg.quantum.empty()) {
        std::cerr << "sweep: no quantum numbers in config\n";
        return 1;
    }
    const auto& sw = cfg.sweep;
    const int np = sw.samples;
    const int nq = static_cast<int>(cfg.quantum.size());
    struct Row {
        double value;
        QuantumNumbers qn;
        BranchPair pair;
        bool solver_error = false;
    };
    std::vector<Row> rows(np * nq);
    parallel_for(opt.jobs, np * nq, [&](int idx) {
        int i = idx / nq, iq = idx % nq;
        double v = sw.from + (sw.to - sw.from) * i / (np - 1);
        PotentialParams p = cfg.potential;
        MassParams m = cfg.mass;
        if (sw.variable == "V0") p.V0 = v;
        else if (sw.variable == "V1") p.V1 = v;
        else if (sw.variable == "S0") p.S0 = v;
        else if (sw.variable == "S1") p.S1 = v;
        else if (sw.variable == "q") p.q = v;
        else if (sw.variable == "alpha") p.alpha = v;
        else if (sw.variable == "m1") m.m1 = v;
        Row row;
        row.value = v;
        row.qn = cfg.quantum[iq];
        try {
            row.pair = split_branches(energies_of(solve_bound_energies(row.qn, p, m, cfg.search)));
        } catch (const Error&) {
            row.solver_error = true;
        }
        rows[idx] = row;
    });

    std::ofstream file;
    auto& os = open_out(file, opt.out.empty() ? cfg.out : opt.out);
    os << sw.variable << ",n,l,D,E_plus,E_minus,status\r\n";
    for (const auto& row : rows) {
        std::string status = row.solver_error ? "error"
                             : row.pair.count == 0 ? "no_root"
                                                   : "ok";
        auto cell = [&](double x) { return std::isnan(x) ? std::string() : fmt(x); };
        os << fmt(row.value) << ',' << row.qn.n << ',' << row.qn.l << ',' << row.qn.D << ','
           << cell(row.pair.e_plus) << ',' << cell(row.pair.e_minus) << ',' << status << "\r\n";
    }
    return 0;
}

int cmd_scatter(const RunConfig& cfg, const GlobalOptions& opt) {
    if (cfg.quantum.empty()) {
        std::cerr << "scatter: no quantum numbers in config\n";
        return 1;
    }
    const auto& sc = cfg.scatter;
    QuantumNumbers qn = cfg.quantum.front();

    PotentialParams p = cfg.potential;
    MassParams m = cfg.mass;
    if (sc.kind == ScatterCase::Hulthen) {
        p = hulthen_mapped(sc.hulthen);
        m = MassParams{sc.hulthen.m0, 0.0};
    } else if (sc.kind == ScatterCase::WoodsSaxon) {
        p = woods_saxon_mapped(sc.woods_saxon);
        m = MassParams{sc.woods_saxon.m0, 0.0};
    }

    auto [e_hi, e_lo] = threshold_energy(p, m);
    int usable = 0;
    std::vector<double> energies(sc.samples);
    for (int i = 0; i < sc.samples; ++i) {
        double e = sc.samples == 1 ? sc.e_from
                                   : sc.e_from + (sc.e_to - sc.e_from) * i / (sc.samples - 1);
        energies[i] = e;
        if (e > e_hi || e < e_lo) ++usable;
    }
    if (usable == 0) {
        std::cerr << "scatter: energy range lies entirely inside the gap (" << fmt(e_lo) << ", "
                  << fmt(e_hi) << ")\n";
        return 1;
    }

    struct Row {
        double E = kNaN, k = kNaN, raw = kNaN, red = kNaN, dor = kNaN, norm = kNaN;
        double ded_delta = kNaN, ded_norm = kNaN;
        bool ok = false;
    };
    std::vector<Row> rows(sc.samples);
    parallel_for(opt.jobs, sc.samples, [&](int i) {
        Row row;
        row.E = energies[i];
        try {
            auto terms = phase_shift_terms(row.E, qn, p, m);
            row.k = wave_number(row.E, qn, p, m);
            row.raw = terms.raw;
            row.red = terms.reduced;
            row.norm = scatter_normalization(row.E, qn, p, m);
            if (sc.oracle) {
                auto grid = oracle::RadialGrid::scattering_defaults(p);
                row.dor = oracle::oracle_phase_shift(row.E, qn, p, m, grid);
            }
            if (sc.kind == ScatterCase::Hulthen)
                std::tie(row.ded_delta, row.ded_norm) = hulthen_dedicated(sc.hulthen, row.E, qn);
            else if (sc.kind == ScatterCase::WoodsSaxon)
                std::tie(row.ded_delta, row.ded_norm) =
                    woods_saxon_dedicated(sc.woods_saxon, row.E, qn);
            row.ok = true;
        } catch (const Error&) {
            row.ok = false;
        }
        rows[i] = row;
    });

    std::ofstream file;
    auto& os = open_out(file, opt.out.empty() ? cfg.out : opt.out);
    bool dedicated = sc.kind != ScatterCase::General;
    os << "E,k,delta_raw,delta_reduced,delta_oracle,N";
    if (dedicated) os << ",delta_dedicated,N_dedicated";
    os << "\r\n";
    auto cell = [&](double x) { return std::isnan(x) ? std::string() : fmt(x); };
    for (const auto& row : rows) {
        os << fmt(row.E) << ',' << cell(row.k) << ',' << cell(row.raw) << ',' << cell(row.red)
           << ',' << cell(row.dor) << ',' << cell(row.norm);
        if (dedicated) os << ',' << cell(row.ded_delta) << ',' << cell(row.ded_norm);
        os << "\r\n";
    }
    return 0;
}

namespace {

struct Check {
    std::string name;
    bool pass = false;
    double metric = kNaN;
    double bound = kNaN;
    std::string note;
};

void emit_checks(const std::vector<Check>& checks, const nlohmann::json& extra,
                 const std::string& out_path) {
    nlohmann::json report;
    report["checks"] = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks) {
        nlohmann::json jc{{"name", c.name}, {"pass", c.pass}};
        if (std::isfinite(c.metric)) jc["metric"] = c.metric;
        if (std::isfinite(c.bound)) jc["bound"] = c.bound;
        if (!c.note.empty()) jc["note"] = c.note;
        report["checks"].push_back(jc);
        all = all && c.pass;
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (std::isfinite(c.metric)) std::cout << "  metric=" << fmt(c.metric);
        if (std::isfinite(c.bound)) std::cout << " bound=" << fmt(c.bound);
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    report["all_pass"] = all;
    if (!extra.is_null()) report["report_only"] = extra;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << report.dump(2) << "\n";
    }
}

} // namespace

int cmd_verify(const RunConfig& cfg, const GlobalOptions& opt) {
    PotentialParams p = cfg.potential;
    MassParams m = cfg.mass;
    QuantumNumbers qn = cfg.quantum.empty() ? QuantumNumbers{0, 0, 3} : cfg.quantum.front();
    std::string out_path = opt.out.empty() ? cfg.out : opt.out;

    if (opt.report_only == "approximation") {
        std::ofstream file;
        auto& os = open_out(file, out_path);
        os << "alpha_r,exact,hyperbolic,greene_aldrich,rel_err_hyperbolic,rel_err_greene"
           << "\r\n";
        for (int i = 1; i <= 60; ++i) {
            double ar = 0.005 * i;
            double r = ar / p.alpha;
            double ex = centrifugal(r, p, CentrifugalScheme::Exact);
            double hy = centrifugal(r, p, CentrifugalScheme::Hyperbolic);
            double ga = centrifugal(r, p, CentrifugalScheme::GreeneAldrich);
            os << fmt(ar) << ',' << fmt(ex) << ',' << fmt(hy) << ',' << fmt(ga) << ','
               << fmt(std::abs(hy - ex) / ex) << ',' << fmt(std::abs(ga - ex) / ex) << "\r\n";
        }
        return 0;
    } else if (!opt.report_only.empty()) {
        std::cerr << "verify: unknown --report-only section\n";
        return 1;
    }

    std::vector<Check> checks;
    const double m0 = m.m0;

    std::vector<BoundState> states;
    try {
        states = solve_bound_energies(qn, p, m, cfg.search);
    } catch (const Error& e) {
        std::cerr << "verify: bound solve failed: " << e.what() << "\n";
        return 1;
    }
    if (states.empty()) {
        std::cerr << "verify: fixture has no bound states\n";
        return 1;
    }
    const BoundState& gs = states.back();

    { // Riccati residual, sup over the standard window
        auto om = omega_coeffs(gs.energy, qn, p, m);
        auto f = susy_factors(om, p);
        double e0 = -f.P * f.P + om.omega3;
        // negative control: corrupt only the potential side so the identity breaks
        double w2 = opt.corrupt_omega ? -om.omega2 : om.omega2;
        double sup = 0.0;
        double base = std::max(0.0, p.r_floor());
        for (int i = 0; i <= 1000; ++i) {
            double r = base + (0.01 + (20.0 - 0.01) * i / 1000.0) / p.alpha;
            double w = superpotential(r, f, p);
            double u = std::exp(-2.0 * p.alpha * r);
            double d = 1.0 - p.q * u;
            double wp = -2.0 * p.alpha * f.Q * u / (d * d);
            double rhs = (om.omega1 * u * u + w2 * u + om.omega3) / (d * d) - e0;
            sup = std::max(sup, std::abs(w * w - wp - rhs));
        }
        checks.push_back({"riccati_residual_sup", sup < 1e-9, sup, 1e-9,
                          opt.corrupt_omega ? "omega2 sign corrupted" : ""});
    }

    { // shape invariance: V+(rho0) - V-(rho1) constant and equal to R(rho1)
        auto om = omega_coeffs(gs.energy, qn, p, m);
        auto f0 = susy_factors(om, p);
        SusyFactors f1 = f0;
        f1.Q = f0.Q - 2.0 * p.alpha * p.q;
        f1.P = (f1.Q * f1.Q - om.omega1 + om.omega3 * p.q * p.q) / (2.0 * p.q * f1.Q);
        double base = std::max(0.0, p.r_floor());
        double mean = 0.0, m2 = 0.0;
        int npts = 1000;
        std::vector<double> vals(npts);
        for (int i = 0; i < npts; ++i) {
            double r = base + (0.01 + (20.0 - 0.01) * i / (npts - 1.0)) / p.alpha;
            double vp = partner_potentials(r, f0, p).first;
            double vm = partner_potentials(r, f1, p).second;
            vals[i] = vp - vm;
            mean += vals[i];
        }
        mean /= npts;
        for (double v : vals) m2 += (v - mean) * (v - mean);
        double sd = std::sqrt(m2 / npts);
        double rr = shape_invariance_remainder(1, f0, om, p);
        bool pass = sd < 1e-9 && std::abs(mean - rr) < 1e-9;
        checks.push_back({"shape_invariance", pass, std::max(sd, std::abs(mean - rr)), 1e-9, ""});
    }

    { // interdimensional degeneracy
        QuantumNumbers qa{qn.n, qn.l + 1, qn.D};
        QuantumNumbers qb{qn.n, qn.l, qn.D + 2};
        auto ea = energies_of(solve_bound_energies(qa, p, m, cfg.search));
        auto eb = energies_of(solve_bound_energies(qb, p, m, cfg.search));
        double worst = (ea.size() == eb.size() && !ea.empty())
                           ? 0.0
                           : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
            worst = std::max(worst, std::abs(ea[i] - eb[i]));
        checks.push_back({"interdimensional_degeneracy", worst < 1e-10, worst, 1e-10, ""});
    }

    { // pole-bound duality
        auto poles = smatrix_pole_energies(qn, p, m, cfg.search);
        auto bound = energies_of(states);
        double worst = (poles.size() == bound.size() && !poles.empty())
                           ? 0.0
                           : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < poles.size() && i < bound.size(); ++i)
            worst = std::max(worst, std::abs(poles[i] - bound[i]));
        checks.push_back({"pole_bound_duality", worst < 1e-8, worst, 1e-8, ""});
    }

    { // analytic vs finite-difference oracle
        auto grid = oracle::RadialGrid::bound_defaults(p);
        auto ore = oracle::oracle_bound_energies(qn, p, m, grid, cfg.search);
        double worst = std::numeric_limits<double>::infinity();
        if (!ore.energies.empty() && ore.energies.size() == states.size()) {
            worst = 0.0;
            for (std::size_t i = 0; i < states.size(); ++i)
                worst = std::max(worst, std::abs(states[i].energy - ore.energies[i]) /
                                            std::abs(states[i].energy));
        }
        checks.push_back({"analytic_vs_oracle_rel", worst < 1e-4, worst, 1e-4,
                          ore.dirichlet_tail_warning ? "dirichlet tail warning" : ""});
    }

    { // primary energy route vs explicit-sigma route
        double worst = 0.0;
        for (const auto& st : states) {
            double g = energy_residual_sigma_form(st.energy, qn, p, m);
            worst = std::max(worst, std::abs(g) / std::max(1.0, st.energy * st.energy));
        }
        checks.push_back({"energy_route_32_vs_33", worst < 1e-8, worst, 1e-8, ""});
    }

    // informational: the transcribed phase-shift variant vs the corrected
    // one and the matching oracle, at one energy above the edge
    nlohmann::json extra;
    try {
        auto [e_hi, e_lo] = threshold_energy(p, m);
        double Es = e_hi + 0.8 * std::abs(e_hi != 0.0 ? e_hi : 1.0);
        auto t = phase_shift_terms(Es, qn, p, m);
        extra["phase_shift_terms"] = {{"E", Es},
                                      {"primary_raw", t.raw},
                                      {"primary_reduced", t.reduced},
                                      {"transcribed_raw", t.transcribed_raw},
                                      {"offset", t.offset},
                                      {"arg_gamma_2ik", t.arg_gamma_2ik},
                                      {"arg_gamma_31", t.arg_gamma_31},
                                      {"arg_gamma_32", t.arg_gamma_32},
                                      {"q_term", t.q_term}};
        auto grid = oracle::RadialGrid::scattering_defaults(p);
        double dor = oracle::oracle_phase_shift(Es, qn, p, m, grid);
        double dpm = std::remainder(t.reduced - dor, 3.14159265358979323846);
        double dpp = std::remainder(t.transcribed_raw - dor, 3.14159265358979323846);
        extra["phase_shift_terms"]["oracle"] = dor;
        extra["phase_shift_terms"]["primary_minus_oracle_mod_pi"] = dpm;
        extra["phase_shift_terms"]["transcribed_minus_oracle_mod_pi"] = dpp;
    } catch (const Error& e) {
        extra["phase_shift_terms"] = {{"error", e.what()}};
    }
    (void)m0;

    emit_checks(checks, extra, out_path);
    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    return all ? 0 : 2;
}

} // namespace kg::cli
