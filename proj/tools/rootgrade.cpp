#include "rootgrade/jobspec.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char **argv) {
    CLI::App app{"Exact constructions for weakly root-graded Lie algebras: "
                 "parabolics, coinduced section modules, realization and "
                 "Frobenius checks, and big-cell factorizations."};

    std::string command, specfile, output = "json";
    unsigned long max_weyl = 1152, max_rank = 4;
    std::string commands_help;
    for (const auto &c : rootgrade::job_commands())
        commands_help += (commands_help.empty() ? "" : ", ") + c;

    app.add_option("command", command, "one of: " + commands_help)->required();
    app.add_option("specfile", specfile, "JSON job specification file")
        ->required();
    app.add_option("--max-weyl-order", max_weyl,
                   "refuse root systems with a larger Weyl group");
    app.add_option("--max-rank", max_rank, "refuse root systems above this rank");
    app.add_option("--output", output, "json (compact) or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(specfile);
    if (!in) {
        std::cerr << "cannot open spec file: " << specfile << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    rootgrade::JobOptions opts;
    opts.rs_config.max_weyl_order = max_weyl;
    opts.rs_config.max_rank = max_rank;
    opts.pretty = (output == "pretty");

    auto res = rootgrade::run_job(command, buf.str(), opts);
    std::cout << res.document;
    return res.exit_code;
}
