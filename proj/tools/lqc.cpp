// Copyright 2026 The lqcsim Authors
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

// lqc: command-line front end over the lqcsim C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lqc/lqc.h"

namespace {

struct Flags {
    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> r;
    std::optional<std::uint64_t> r_prime;
    std::optional<double> chi;
    std::optional<double> delta_p;
    std::optional<double> c;
    std::optional<std::string> subset;
    std::optional<std::uint64_t> n;
    std::optional<std::string> yes;
    std::optional<double> suppress;
    std::optional<std::string> terms;
    std::string out;
    std::string format = "json";
};

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

int exit_code(lqc_status status) {
    switch (status) {
    case LQC_OK:
        return 0;
    case LQC_ERR_INVALID_ARGUMENT:
    case LQC_ERR_PARSE:
    case LQC_ERR_SIZE_LIMIT:
        return 2;
    default:
        return 1;
    }
}

nlohmann::json options_of(const std::string &command, const Flags &f) {
    nlohmann::json o = nlohmann::json::object();
    auto put = [&o](const char *key, const auto &value) {
        if (value) {
            o[key] = *value;
        }
    };
    put("seed", f.seed);
    put("shots", f.shots);
    put("mode", f.mode);
    put("r", f.r);
    put("r_prime", f.r_prime);
    put("chi", f.chi);
    put("delta_p", f.delta_p);
    put("c", f.c);
    put("subset", f.subset);
    put("n", f.n);
    put("suppress", f.suppress);
    if (f.yes) {
        if (command == "postselect") {
            o["yes"] = split_list(*f.yes);
        } else {
            o["yes"] = *f.yes;
        }
    }
    if (f.terms) {
        o["terms"] = split_list(*f.terms);
    }
    return o;
}

void add_flags(CLI::App *sub, Flags &f, bool takes_input, bool input_required) {
    if (takes_input) {
        auto *opt = sub->add_option("input", f.input, "Input file");
        if (input_required) {
            opt->required();
        }
    }
    sub->add_option("--seed", f.seed, "64-bit seed");
    sub->add_option("--shots", f.shots, "Number of sampled shots");
    sub->add_option("--mode", f.mode, "exact or montecarlo");
    sub->add_option("--r", f.r, "Repetitions of the amplification block");
    sub->add_option("--r-prime", f.r_prime, "Repetitions of the final CV block");
    sub->add_option("--chi", f.chi, "Rotation parameter chi");
    sub->add_option("--delta-p", f.delta_p, "Target excess probability delta_p");
    sub->add_option("--c", f.c, "Error base c, epsilon = c^-n");
    sub->add_option("--subset", f.subset, "Candidate subset bitstring");
    sub->add_option("--n", f.n, "Work register width");
    sub->add_option("--yes", f.yes, "Yes terms (comma separated) or the yes wire label");
    sub->add_option("--suppress", f.suppress, "Amplitude of yes terms relative to no terms");
    sub->add_option("--terms", f.terms, "Comma-separated work bitstrings");
    sub->add_option("--out", f.out, "Write the report to this path");
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Lorentz quantum computer simulator"};
    app.set_version_flag("--version", std::string("lqc ") + lqc_version());
    app.require_subcommand(1);
    Flags flags;
    struct Entry {
        const char *name;
        const char *help;
        bool takes_input;
        bool input_required;
    };
    const Entry entries[] = {
        {"run", "Execute a circuit JSON file", true, true},
        {"mis", "Maximum independent set on a DIMACS graph", true, true},
        {"majsat", "Majority satisfiability of a DIMACS CNF", true, true},
        {"maxkis", "Counts of independent sets by size", true, true},
        {"pathsum", "Path-sum cross-check of a circuit (random when no file)", true, false},
        {"postselect", "Postselection demonstration", false, false},
        {"superpostselect", "Super-postselection demonstration", false, false},
    };
    for (const Entry &e : entries) {
        add_flags(app.add_subcommand(e.name, e.help), flags, e.takes_input, e.input_required);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    std::string input;
    if (!flags.input.empty()) {
        std::ifstream in(flags.input, std::ios::binary);
        if (!in) {
            std::cerr << "lqc: cannot read '" << flags.input << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        input = buf.str();
    }

    char *report = nullptr;
    const std::string options = options_of(command, flags).dump();
    const lqc_status status = lqc_command(command.c_str(), input.c_str(), options.c_str(), flags.format.c_str(), &report);
    if (status != LQC_OK) {
        std::cerr << "lqc " << command << ": " << lqc_status_name(status) << ": " << lqc_last_error() << "\n";
        return exit_code(status);
    }
    int rc = 0;
    if (flags.out.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(flags.out, std::ios::binary);
        out << report;
        if (!out) {
            std::cerr << "lqc: cannot write '" << flags.out << "'\n";
            rc = 2;
        }
    }
    lqc_string_free(report);
    return rc;
}
