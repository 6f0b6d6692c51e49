#pragma once

// End-to-end acceptance checks, one line each. Shared by the `acceptance`
// binary and `hecke_lab selftest`.

#include <functional>
#include <string>
#include <vector>

namespace hecke::acceptance {

struct Line {
    std::string id;  // "1".."10" for the criteria, "D1".. for density invariants
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Every check id in run order.
const std::vector<std::string>& ids();

/// Runs the checks in `only` (all when empty), calling `sink` as each finishes.
std::vector<Line> run(const std::vector<std::string>& only = {}, const std::function<void(const Line&)>& sink = {});

std::string format_line(const Line& l);

}  // namespace hecke::acceptance
