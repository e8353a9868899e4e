#pragma once

#include <cstddef>

#include "polar/report.hpp"

namespace polar {

struct VerifyOptions {
  std::size_t group_cap = 10'000'000;     // max enumerated group elements
  std::size_t twograph_cap = 300;         // max materialized two-graph order
  std::uint64_t samples = 10'000;         // random samples for large configs
  std::uint64_t seed = 1;
};

/// Strongly regular parameters of every family instance against the
/// closed formulas.
Report verify_families();

/// Orbit structure of Sp(2m,q) on forms: group order, orbit sizes and the
/// trace criterion, 2-transitivity, stabilizers, and the two complements
/// of the translation subgroup.
Report verify_orbits(int q, int m, const VerifyOptions& opts = {});

/// Transvection identities, the transvection-equivalence solver, group
/// order formulas, and stabilizer orbits.
Report verify_appendix(int q, int m, const VerifyOptions& opts = {});

/// The switching-equivalence theorem for the graph pair at a given m:
/// two-graph equalities (when materializable) and the switching
/// certificate with its explicit switching sets.
Report verify_theorem(int m, const VerifyOptions& opts = {});

}  // namespace polar
