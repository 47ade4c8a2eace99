#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gwci::cli {

enum class Format { text, json };

struct RunConfig {
    std::string command;
    std::string relative_command; // euler, phi, porteous, linear-cy
    int n = 0;
    std::vector<int> degrees;
    int d = 0;
    int max_degree = 4;
    int a = 0;
    int b = 0;
    Format format = Format::text;
    std::string out_path;
    int base_cutoff = 2;
    bool trivial_bundle = false;
    std::optional<int> criterion;
};

enum ExitCode { ok = 0, math_error = 1, usage_error = 2 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gwci::cli
