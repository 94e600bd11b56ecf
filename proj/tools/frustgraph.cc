// Copyright 2026 The frustgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: frustgraph <analyze|canonical|entanglement|verify>.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frustgraph/error.h"
#include "frustgraph/report.h"

namespace {

using frustgraph::Error;
using frustgraph::ErrorCode;

struct Options {
    std::string input;
    std::string builtin;
    uint32_t d = 0;
    size_t n = 0;
    std::string format = "text";
    frustgraph::CommandFlags flags;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<frustgraph::InputDocument> load_document(const Options &opt) {
    if (!opt.builtin.empty() && !opt.input.empty()) {
        throw Error(ErrorCode::InvalidConfig, "give either an input file or --builtin, not both");
    }
    if (!opt.builtin.empty()) {
        if (opt.d == 0) {
            throw Error(ErrorCode::InvalidConfig, "--builtin needs --d");
        }
        size_t n = opt.n;
        if (n == 0) {
            n = opt.builtin == "five_qudit" ? 5 : 3;
        }
        return frustgraph::builtin_document(opt.builtin, opt.d, n);
    }
    if (!opt.input.empty()) {
        return frustgraph::parse_document(read_input(opt.input));
    }
    return std::nullopt;
}

void add_common(CLI::App *sub, Options &opt) {
    sub->add_option("input", opt.input, "Input document ('-' for stdin)");
    sub->add_option("--builtin", opt.builtin, "Built-in stabilizer: ghz or five_qudit");
    sub->add_option("--d", opt.d, "Qudit dimension for --builtin, --swap and --lagrange");
    sub->add_option("--n", opt.n, "Site count for --builtin");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.flags.optimizer.seed, "Optimizer seed");
    sub->add_option("--restarts", opt.flags.optimizer.restarts, "Optimizer restarts");
    sub->add_option("--max-iters", opt.flags.optimizer.max_iters, "Optimizer iterations per restart");
    sub->add_option("--tol", opt.flags.optimizer.tol, "Optimizer convergence tolerance");
    sub->add_option("--cap-vertices", opt.flags.cap_vertices, "Largest commutation graph to build");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Frustration-graph analysis of qudit Pauli groups and stabilizers"};
    app.set_version_flag("--version", std::string(frustgraph::kVersion));
    app.require_subcommand(1);
    Options opt;

    auto *analyze = app.add_subcommand("analyze", "Generating graph, rank, clique number and bounds");
    add_common(analyze, opt);
    analyze->add_flag("--chromatic", opt.flags.chromatic, "Also compute the exact chromatic number");

    auto *canonical = app.add_subcommand("canonical", "Symplectic normal form of the generating graph");
    add_common(canonical, opt);

    auto *entanglement = app.add_subcommand("entanglement", "Geometric measures per bipartition");
    add_common(entanglement, opt);
    entanglement->add_flag("--overlap", opt.flags.overlap, "Numeric product-state overlap per bipartition");

    auto *verify = app.add_subcommand("verify", "Dense numeric checks of the closed forms");
    add_common(verify, opt);
    verify->add_flag("--swap", opt.flags.swap, "Check the swap-operator identity at --d");
    verify->add_flag("--lagrange", opt.flags.lagrange, "Check the Lagrange extremum and theta state at --d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto cmd = frustgraph::parse_command(app.get_subcommands().front()->get_name());
        opt.flags.check_d = opt.d;
        auto doc = load_document(opt);
        auto report = frustgraph::run_command(cmd, doc, opt.flags);
        std::cout << frustgraph::emit_report(report, frustgraph::parse_format(opt.format));
        return report.passed ? 0 : 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return frustgraph::is_validation_error(e.code()) ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return 1;
    }
}
