#pragma once

#include <vector>

#include "magnitude/chains.hpp"
#include "magnitude/series.hpp"

namespace mag {

/// Smith normal form data: `rank` invariant factors d_1 | d_2 | ... | d_rank,
/// all positive, including the unit ones.
struct SnfResult {
    int rank = 0;
    std::vector<Int> invariant_factors;

    /// Factors greater than 1, i.e. the torsion part of the cokernel.
    std::vector<Int> nonunit_factors() const {
        std::vector<Int> t;
        for (const Int& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/// Exact Smith normal form over Z. Unit (±1) entries are eliminated first
/// with a sparsity-aware pivot order; whatever survives is finished densely.
SnfResult smith_normal_form(const SparseIntMatrix& m);

/// Homology of one length grading: free rank and torsion of MH_k for
/// each degree k = 0..ell.
struct HomologySlice {
    int ell = 0;
    std::vector<int> ranks;                  // index k
    std::vector<std::vector<Int>> torsions;  // index k
};

HomologySlice homology_slice(const ChainSlice& s);

/// Alternating sum of basis dimensions, sum_k (-1)^k dim C_k.
Int euler_characteristic(const ChainSlice& s);

}  // namespace mag
