#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace grl::cli {

enum class Format { json, csv };

struct Request {
    std::string command;
    std::optional<double> a, b, c;
    std::optional<int> n1, n2, m;
    std::optional<double> z_re, z_im;
    double tol = 1e-10;
    int max_nodes = 512;
    std::uint64_t seed = 20240611;
    Format format = Format::json;

    int example = 0;          // verify-example
    std::string kind = "011"; // cfrac: 011 or 010
    int count = 20;           // cfrac
    std::string bank = "upper";
    std::optional<double> x;  // boundary, single point
    std::optional<double> x_from, x_to;
    int points = 0;
    std::string which = "all"; // moments
    bool pick_check = false;   // classify
    std::string output;        // csv destination, stdout when empty
};

// bad or missing flags; the tool maps this to exit code 64
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes one JSON document (or CSV) to out and returns the exit code:
// 0 success, 2 named precondition failure, 1 internal error.
int run(const Request& r, std::ostream& out, std::ostream& err);

} // namespace grl::cli
