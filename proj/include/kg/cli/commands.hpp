#ifndef KG_CLI_COMMANDS_HPP
#define KG_CLI_COMMANDS_HPP

#include "kg/cli/config.hpp"

#include <string>

namespace kg::cli {

struct GlobalOptions {
    std::string solver = "analytic"; // analytic | oracle
    int jobs = 1;
    double tol = 0.0; // 0: keep config value
    std::string out;  // overrides config
    bool corrupt_omega = false;       // verify negative control
    std::string report_only;          // verify: "approximation"
};

// exit codes: 0 success, 1 usage/config error, 2 check failure
int cmd_table1(const RunConfig& cfg, const GlobalOptions& opt);
int cmd_sweep(const RunConfig& cfg, const GlobalOptions& opt);
int cmd_scatter(const RunConfig& cfg, const GlobalOptions& opt);
int cmd_verify(const RunConfig& cfg, const GlobalOptions& opt);

} // namespace kg::cli

#endif
