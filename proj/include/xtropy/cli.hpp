#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xtropy {

enum class Command { compute, rss, srs, compare, sample, verify, table };
enum class MethodChoice { quad, closed, mc };
enum class OutputFormat { json, csv, tsv };

/// Parsed command line. `parse_args` fills it from argv (applying a JSON
/// config file first when --config is given, flags taking precedence).
struct RunConfig {
    Command command = Command::compute;
    std::string dist_spec;
    std::string dist2_spec;    // compare only
    std::string weight_spec = "unit";
    std::string weight2_spec;  // compare only; defaults to weight_spec
    int n = 1;
    MethodChoice method = MethodChoice::quad;
    double tol = 1e-10;
    std::uint64_t seed = 42;
    long draws = 1000000;
    OutputFormat output = OutputFormat::json;
    std::string suite;                    // verify only
    std::vector<int> odd_n = {1, 3, 5};   // verify symmetry
    std::vector<int> n_list = {2, 3, 4};  // verify bound
    int i_index = 1;                      // reserved for order-statistic output
    int pairs = 50;                       // verify disp/delta randomized pairs
    double c = 2.0;                       // verify scale-transformation factor
    // table sweeps
    std::string family = "power";
    std::vector<double> thetas = {2.0};
    std::vector<double> lambdas = {1.0};
    std::vector<double> alphas = {2.0};
    std::vector<double> ms = {1.0};
    std::vector<int> ns = {1, 2};
};

/// Exit codes: 0 ok, 1 parse error, 2 domain/divergence error,
/// 3 theorem-suite failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv into a RunConfig and run it (the main() body).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Canonical rendering of a config (parse/render round-trip support).
std::string render_config(const RunConfig& config);

}  // namespace xtropy
