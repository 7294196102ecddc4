#pragma once

#include <cstdint>
#include <iosfwd>

namespace ffgeom {

/// Runs the library invariant suites (ultrametric laws, second-theorem
/// identities, decomposition residues, covering agreement, oracle
/// equivalence, shift search, box certificates, Dirichlet bounds), printing
/// one `ok`/`FAIL` line per suite. Returns the number of failures.
int selftest_run(std::ostream& out, std::uint64_t seed);

}  // namespace ffgeom
