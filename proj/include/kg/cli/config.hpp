#ifndef KG_CLI_CONFIG_HPP
#define KG_CLI_CONFIG_HPP

#include "kg/bound.hpp"
#include "kg/potential.hpp"
#include "kg/scatter.hpp"

#include <array>
#include <string>
#include <vector>

namespace kg::cli {

struct Table1Block {
    double tol = 1e-5;
    // rows: n, l, D, E_plus_ref, E_minus_ref
    std::vector<std::array<double, 5>> reference;
};

struct SweepBlock {
    std::string variable; // V0 V1 S0 S1 q alpha m1
    double from = 0.0;
    double to = 1.0;
    int samples = 2;
};

enum class ScatterCase { General, Hulthen, WoodsSaxon };

struct ScatterBlock {
    ScatterCase kind = ScatterCase::General;
    double e_from = 0.0;
    double e_to = 0.0;
    int samples = 1;
    bool oracle = true;
    HulthenParams hulthen;
    WoodsSaxonParams woods_saxon;
};

struct RunConfig {
    PotentialParams potential;
    MassParams mass;
    std::vector<QuantumNumbers> quantum;
    SearchConfig search;
    Table1Block table1;
    SweepBlock sweep;
    ScatterBlock scatter;
    std::string out;

    /// Parses UTF-8 JSON; unknown keys are ConfigErrors, physical invariants
    /// of the embedded types are re-validated.
    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);
};

/// Built-in defaults, identical to the files under presets/.
const std::string& table1_preset();
const std::string& hulthen_preset();
const std::string& woods_saxon_preset();

} // namespace kg::cli

#endif
