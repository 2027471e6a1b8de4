#pragma once

// Independent oracles the implementation is checked against. These stay
// deliberately separate from the library code paths they validate:
//   - partial_trace_spectrum diagonalizes an explicitly accumulated
//     reduced density matrix (never touches regroup / SVD),
//   - t_transform_reachable decides majorization by exhaustive transfer
//     search in exact integer arithmetic.

#include <set>
#include <vector>

#include "loccgate/state.hpp"

namespace testsupport {

/// Eigenvalues (descending) of the reduced density matrix on `left`,
/// accumulated entry by entry from the raw amplitude vector.
std::vector<double> partial_trace_spectrum(const loccgate::PureState& s,
                                           const std::vector<int>& left);

/// All sorted vectors reachable from x (integer units, descending order
/// not required on input) by at most `depth` transfers of an integer
/// amount from a larger entry to a smaller one. Every transfer is a
/// T-transform, so reachability within any depth implies majorization;
/// for n entries, n-1 transfers suffice whenever majorization holds.
std::set<std::vector<int>> t_transform_reachable(std::vector<int> x,
                                                 int depth);

/// Does some composition of at most `depth` transfers map x to y (as
/// multisets, exact integer arithmetic)?
bool t_transform_oracle(const std::vector<int>& x, const std::vector<int>& y,
                        int depth);

/// All compositions of `total` into `parts` nonnegative integers.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace testsupport
