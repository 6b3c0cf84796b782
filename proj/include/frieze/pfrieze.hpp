#pragma once

#include "frieze/cyclic.hpp"
#include "frieze/grassmann.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frieze {

// Entry of the Plücker frieze at position (r, m), m in [1, n+k-1]:
// o([r']^{k-1}, m') with r' = reduce(r), m' = reduce(m + r' - 1).
SignedTuple phi(int k, int n, int r, int m);

struct StructureReport {
    int k_diamonds = 0;
    int k1_diamonds = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// For every r and every grid diamond: det(k-diamond) equals the consecutive product
// times p_{o([m]^k)}, and det((k+1)-diamond) vanishes.
StructureReport verify_slk_structure(const GrassmannPoint& P);

// Pairwise non-crossing, non-consecutive subsets of the frieze of size (k-1)(n-k-1),
// or nullopt when none exist.
std::optional<std::vector<Subset>> find_noncrossing_cluster(int k, int n);

// Grid of subset labels, rows m = n+k-1 down to 1, staggered.
std::string render_plucker(int k, int n, int columns);

std::string subset_label(const Subset& I);

}  // namespace frieze
