#pragma once

#include "mfb/sigma10.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mfb::corpus {

// ---- the published boundary graphs of the example families ----

PlumbingGraph expected_crosscap();          // (-1)-(-2)-(-1; -2, -2)
PlumbingGraph expected_s1();                // (-1) = (-6), one minus edge
PlumbingGraph expected_s1_alt();            // -4 with a minus loop
PlumbingGraph expected_s_even(long n);      // k = 2n
PlumbingGraph expected_s_odd(long n);       // k = 2n + 1
PlumbingGraph expected_b_odd(long k);
PlumbingGraph expected_b_even(long k);
PlumbingGraph expected_c_odd(long n);       // k = 2n + 1
PlumbingGraph expected_c_even(long n);      // k = 2n, n >= 2
PlumbingGraph expected_c_k2();              // k = 2 degeneration
PlumbingGraph expected_f4();
PlumbingGraph expected_h(long k);
PlumbingGraph expected_corank2();

// ---- input-side fixtures ----

BivarPoly d_crosscap();
BivarPoly d_s_family(long k);  // t^2 + s^k
BivarPoly d_b_family(long k);  // s^2 + t^(2k)
BivarPoly d_c_family(long k);  // s t^2 + s^k
BivarPoly d_f4();              // s^3 + t^4

// combinatorial fixtures (not sigma^{1,0})
ResolutionGraph h_family_graph(long k);     // (-2)^(3k-3) chain into -1, two arrows
PairingData h_family_pairs(long k);         // vi = -3k - 1
ResolutionGraph corank2_graph();            // -1 with five arrows
PairingData corank2_pairs();                // five self-pairs, vi = -4

// ---- verification ----

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // failure explanation or a one-line summary
};

// Every acceptance criterion, in order, plus the property suites.
std::vector<CheckResult> run_all_checks();

} // namespace mfb::corpus
