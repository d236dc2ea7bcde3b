#include "kg/cli/config.hpp"
#include "kg/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace kg::cli {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

double num(const json& j, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number()) throw ConfigError(std::string(key) + ": expected a number");
    return j[key].get<double>();
}

int integer(const json& j, const char* key, int dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number_integer()) throw ConfigError(std::string(key) + ": expected an integer");
    return j[key].get<int>();
}

} // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    require_keys(j, "config",
                 {"potential", "mass", "quantum", "search", "table1", "sweep", "scatter", "out"});
    RunConfig cfg;

    if (j.contains("potential")) {
        const auto& p = j["potential"];
        require_keys(p, "potential", {"V0", "V1", "S0", "S1", "q", "alpha"});
        cfg.potential.V0 = num(p, "V0", 0.0);
        cfg.potential.V1 = num(p, "V1", 0.0);
        cfg.potential.S0 = num(p, "S0", 0.0);
        cfg.potential.S1 = num(p, "S1", 0.0);
        cfg.potential.q = num(p, "q", 1.0);
        cfg.potential.alpha = num(p, "alpha", 1.0);
        cfg.potential.validate();
    }
    if (j.contains("mass")) {
        const auto& mj = j["mass"];
        require_keys(mj, "mass", {"m0", "m1"});
        cfg.mass.m0 = num(mj, "m0", 1.0);
        cfg.mass.m1 = num(mj, "m1", 0.0);
    }
    if (j.contains("quantum")) {
        if (!j["quantum"].is_array()) throw ConfigError("quantum: expected an array");
        for (const auto& qj : j["quantum"]) {
            require_keys(qj, "quantum[]", {"n", "l", "D"});
            QuantumNumbers qn;
            qn.n = integer(qj, "n", 0);
            qn.l = integer(qj, "l", 0);
            qn.D = integer(qj, "D", 3);
            qn.validate();
            cfg.quantum.push_back(qn);
        }
    }
    if (j.contains("search")) {
        const auto& s = j["search"];
        require_keys(s, "search", {"E_max", "grid_points", "tol"});
        cfg.search.E_max = num(s, "E_max", 0.0);
        cfg.search.grid_points = integer(s, "grid_points", 400);
        cfg.search.tol = num(s, "tol", 1e-12);
    }
    if (j.contains("table1")) {
        const auto& t = j["table1"];
        require_keys(t, "table1", {"tol", "reference"});
        cfg.table1.tol = num(t, "tol", 1e-5);
        if (t.contains("reference")) {
            for (const auto& row : t["reference"]) {
                if (!row.is_array() || row.size() != 5)
                    throw ConfigError("table1.reference: rows are [n, l, D, E+, E-]");
                std::array<double, 5> r{};
                for (int i = 0; i < 5; ++i) r[i] = row[i].get<double>();
                cfg.table1.reference.push_back(r);
            }
        }
    }
    if (j.contains("sweep")) {
        const auto& s = j["sweep"];
        require_keys(s, "sweep", {"variable", "from", "to", "samples"});
        if (!s.contains("variable") || !s["variable"].is_string())
            throw ConfigError("sweep.variable: expected a string");
        cfg.sweep.variable = s["variable"].get<std::string>();
        static const std::set<std::string> vars{"V0", "V1", "S0", "S1", "q", "alpha", "m1"};
        if (!vars.count(cfg.sweep.variable))
            throw ConfigError("sweep.variable: must be one of V0 V1 S0 S1 q alpha m1");
        cfg.sweep.from = num(s, "from", 0.0);
        cfg.sweep.to = num(s, "to", 1.0);
        cfg.sweep.samples = integer(s, "samples", 2);
        if (cfg.sweep.samples < 2) throw ConfigError("sweep.samples: need >= 2");
    }
    if (j.contains("scatter")) {
        const auto& s = j["scatter"];
        require_keys(s, "scatter",
                     {"case", "e_from", "e_to", "samples", "oracle", "hulthen", "woods_saxon"});
        std::string kind = s.contains("case") ? s["case"].get<std::string>() : "general";
        if (kind == "general")
            cfg.scatter.kind = ScatterCase::General;
        else if (kind == "hulthen")
            cfg.scatter.kind = ScatterCase::Hulthen;
        else if (kind == "woods_saxon")
            cfg.scatter.kind = ScatterCase::WoodsSaxon;
        else
            throw ConfigError("scatter.case: general | hulthen | woods_saxon");
        cfg.scatter.e_from = num(s, "e_from", 0.0);
        cfg.scatter.e_to = num(s, "e_to", cfg.scatter.e_from);
        cfg.scatter.samples = integer(s, "samples", 1);
        if (s.contains("oracle")) cfg.scatter.oracle = s["oracle"].get<bool>();
        if (s.contains("hulthen")) {
            const auto& h = s["hulthen"];
            require_keys(h, "scatter.hulthen", {"V0", "q", "alpha", "m0"});
            cfg.scatter.hulthen.V0 = num(h, "V0", 0.0);
            cfg.scatter.hulthen.q = num(h, "q", 1.0);
            cfg.scatter.hulthen.alpha = num(h, "alpha", 1.0);
            cfg.scatter.hulthen.m0 = num(h, "m0", 1.0);
        }
        if (s.contains("woods_saxon")) {
            const auto& w = s["woods_saxon"];
            require_keys(w, "scatter.woods_saxon", {"V0", "R", "theta", "m0"});
            cfg.scatter.woods_saxon.V0 = num(w, "V0", 0.0);
            cfg.scatter.woods_saxon.R = num(w, "R", 1.0);
            cfg.scatter.woods_saxon.theta = num(w, "theta", 1.0);
            cfg.scatter.woods_saxon.m0 = num(w, "m0", 1.0);
        }
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

const std::string& table1_preset() {
    static const std::string s = R"JSON({
  "potential": {"V0": 2.0, "V1": 0.5, "S0": 0.0, "S1": 3.0, "q": 1.0, "alpha": 0.01},
  "mass": {"m0": -5.0, "m1": -0.2},
  "table1": {
    "tol": 1e-5,
    "reference": [
      [0, 0, 3,  2.569172676, -2.203041203],
      [0, 1, 3,  2.569304187, -2.203280640],
      [0, 0, 4,  2.569221997, -2.203130998],
      [0, 2, 2,  2.569419235, -2.203490115],
      [0, 1, 1,  2.569172676, -2.203041203],
      [1, 0, 3,  2.595363031, -2.251003944],
      [1, 3, 1,  2.596121109, -2.252400688],
      [2, 0, 3,  2.620547699, -2.297667736],
      [2, 4, 3,  2.621762582, -2.299932564]
    ]
  },
  "out": "table1.csv"
})JSON";
    return s;
}

const std::string& hulthen_preset() {
    static const std::string s = R"JSON({
  "quantum": [{"n": 0, "l": 0, "D": 3}],
  "scatter": {
    "case": "hulthen",
    "e_from": 1.05,
    "e_to": 3.0,
    "samples": 10,
    "oracle": true,
    "hulthen": {"V0": 0.15, "q": 1.0, "alpha": 0.4, "m0": 1.0}
  },
  "out": "scatter_hulthen.csv"
})JSON";
    return s;
}

const std::string& woods_saxon_preset() {
    static const std::string s = R"JSON({
  "quantum": [{"n": 0, "l": 0, "D": 3}],
  "scatter": {
    "case": "woods_saxon",
    "e_from": 1.05,
    "e_to": 3.0,
    "samples": 10,
    "oracle": true,
    "woods_saxon": {"V0": 0.4, "R": 0.8, "theta": 1.6, "m0": 1.0}
  },
  "out": "scatter_woods_saxon.csv"
})JSON";
    return s;
}

} // namespace kg::cli
