#pragma once

// Exact linear algebra over the rationals for the invariant oracles.
// Inputs are sparse integer rows; arithmetic is exact (GMP-backed), results
// are returned as integer-scaled vectors.

#include <cstdint>
#include <vector>

namespace dessinlab::linalg {

struct SparseRow {
    // (column, coefficient); columns need not be sorted or unique.
    std::vector<std::pair<int, long long>> entries;
};

int rank(const std::vector<SparseRow>& rows, int columns);

// Basis of {x : A x = 0}, each vector scaled to coprime integers.
std::vector<std::vector<long long>> nullspace_basis(const std::vector<SparseRow>& rows,
                                                    int columns);

} // namespace dessinlab::linalg
