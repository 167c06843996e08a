#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "resheight/bigint.hpp"

namespace resheight {

struct failure_record {
    std::string case_key; // canonical sort key
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string provenance; // printed-table | oracle-expansion | closed-form | recurrence
};

struct suite_report {
    std::string suite;
    long cases_run = 0;
    std::vector<failure_record> failures; // sorted by case_key
    double wall_seconds = 0;              // reported to humans, kept out of serialized output
    bool passed() const { return failures.empty(); }
};

// Suites: quad-oracle | cubic-oracle | f-sweep | homogeneity | tables |
// asymptotics | symmetry. n_max <= 0 means the suite's safe default.
suite_report run_suite(const std::string& name, int n_max = 0);

const std::vector<std::string>& suite_names();

// Frozen printed-table data the suites regress against.
// an: A_n = a for every lo <= n <= hi, covering 3..99.
struct an_group {
    int a, lo, hi;
};
const std::vector<an_group>& printed_an_groups();
// hl: canonical maximizing-layer set per n, rows 1..19.
const std::map<int, std::set<int>>& printed_hl_rows();

struct conjecture_result {
    int m = 0;
    int n = 0;
    bigint full_height;
    bigint binomial_height; // g specialized to g_0 + g_n x^n
    bool equal = false;
};

// Height of the full generic resultant vs the two-term-g specialization,
// both by exact expansion. Envelope: m <= 4, n <= 12.
conjecture_result conjecture_probe(int m, int n);

struct monotonic_report {
    std::string which;          // quad | cubic
    int n_lo = 3;               // heights considered for n in [n_lo, n_max]
    int n_max = 0;
    int first_violation = 0;    // smallest n > n_lo with H(n) <= H(n-1); 0 if none
    std::vector<bigint> heights; // H(n_lo) .. H(n_max)
};

// Strict-increase probe of the exact height series starting at n = 3.
// quad: n_max <= 25 by closed form; cubic: n_max <= 12 by the oracle routes.
monotonic_report monotonic_probe(const std::string& which, int n_max);

} // namespace resheight
