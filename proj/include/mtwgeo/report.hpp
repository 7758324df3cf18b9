#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtw {

/// One exact verification check. `expected` and `actual` are exact strings
/// (rationals, Gaussian rationals, or polynomials), never rounded.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    std::string provenance; // "paper" | "trivial" | "derived"
    bool pass = false;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
    /// Deterministic JSON (schema_version 1); only the timing field varies
    /// between identical runs.
    std::string to_json() const;
};

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Run one verification suite ("all" concatenates every suite, with check
/// names prefixed by the suite name). Throws std::invalid_argument for an
/// unknown suite name.
Report run_suite(const std::string& suite, std::uint64_t seed);

} // namespace mtw
