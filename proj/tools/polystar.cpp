// Copyright 2026 The polystar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "polystar/cli/commands.hpp"

int main(int argc, char** argv) {
    using polystar::cli::Command;
    using polystar::cli::Format;

    CLI::App app{"polystar: shuffle algebra, stars of the plane and polylogarithms"};
    app.require_subcommand(1);

    bool json = false, csv = false;
    std::string z_text, route = "rec";
    double eps = 1e-15;
    std::uint64_t seed = 0, n = 0;
    bool factor = false;

    app.add_flag("--json", json, "JSON output");
    app.add_flag("--csv", csv, "CSV output");
    app.add_option("--z", z_text, "evaluation point, re or re,im");
    app.add_option("--eps", eps, "series truncation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--route", route, "Li^- route: T, R, F or rec");
    auto* seed_opt = app.add_option("--seed", seed, "random rewriting strategy seed (nf, kernel)");
    auto* n_opt = app.add_option("--n", n, "sequence length (demo-discontinuity) or N (table hsum)");
    app.add_flag("--factor", factor, "lyndon: factorize the given word");
    app.fallthrough();

    std::vector<std::string> args;
    struct VerbSpec {
        const char* name;
        const char* help;
    };
    const VerbSpec verbs[] = {
        {"lyndon", "Lyndon words up to a length, or --factor WORD"},
        {"shuffle", "shuffle product of two X-expressions"},
        {"stuffle", "stuffle product of two Y-expressions"},
        {"nf", "normal form modulo the kernel ideal"},
        {"kernel", "membership in the kernel of Li"},
        {"eval", "numeric polylogarithm value"},
        {"lineg", "closed form of Li^- in powers of 1/(1-z)"},
        {"hsum", "exact harmonic sum H_s(N)"},
        {"taylor-neg", "Taylor coefficient of Li^-_s at z^N"},
        {"table", "regression tables: lineg, hsum, lyndon"},
        {"demo-discontinuity", "the discontinuity of iota0 on two sequences"},
    };
    std::string chosen;
    for (const auto& v : verbs) {
        auto* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("args", args, "arguments");
        sub->callback([&chosen, name = v.name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : polystar::cli::exit_usage;
    }

    Command cmd;
    cmd.verb = chosen;
    cmd.args = args;
    cmd.format = json ? Format::json : csv ? Format::csv : Format::text;
    cmd.eps = eps;
    cmd.route = route;
    if (*seed_opt) cmd.seed = seed;
    if (*n_opt) cmd.n = n;
    cmd.factor = factor;
    if (!z_text.empty()) {
        try {
            cmd.z = polystar::cli::parse_complex(z_text);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return polystar::cli::exit_usage;
        }
    }
    return polystar::cli::run(cmd, std::cout, std::cerr);
}
