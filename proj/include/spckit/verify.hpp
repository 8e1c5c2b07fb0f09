#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spckit {

/// Outcome of one verification suite. `details` is a short human-readable
/// account of what was exercised (ranges, counts, witnesses on failure).
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string details;
};

// The fourteen suites, in their canonical order. Every range and expected
// value is pinned in the implementation; `seed` only drives the randomized
// sampling portions (suite "necklace").
CheckResult check_orders();                        // 1  partial orders, glb, lub
CheckResult check_necklace(std::uint32_t seed);    // 2  compatibility criterion
CheckResult check_lattice_flag();                  // 3  lattice iff n=1 or |G|=1
CheckResult check_wreath();                        // 4  L-order anti-isomorphism
CheckResult check_groupoid();                      // 5  subgroupoid correspondence
CheckResult check_rhodes_trivial();                // 6  H_n(1) vs U + graphic
CheckResult check_rhodes_graphic();                // 7  H_n(G) vs U + |G|K_n
CheckResult check_rhodes_lift();                   // 8  H^_n(G) vs U + lift, rank 2n
CheckResult check_facet_counts();                  // 9  basis counts vs closed forms
CheckResult check_group_reconstruction();          // 10 gain group from the matroid
CheckResult check_brsc_properties();               // 11 matroid/BRSC/circuits/flats
CheckResult check_minimal_reps();                  // 12 minimal lattice representations
CheckResult check_mindeg();                        // 13 minimal degrees
CheckResult check_oracle_guards();                 // 14 greedy = exhaustive

std::vector<CheckResult> run_all_checks(std::uint32_t seed);

/// Run one suite by name ("orders", "necklace", ..., "oracle-guards");
/// returns false in .passed with an "unknown suite" detail for bad names.
bool known_suite(const std::string& name);
CheckResult run_suite(const std::string& name, std::uint32_t seed);
std::vector<std::string> suite_names();

}  // namespace spckit
