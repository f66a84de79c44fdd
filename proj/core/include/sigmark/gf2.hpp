#pragma once

#include <cstdint>
#include <vector>

#include "sigmark/bitvec.hpp"

namespace sigmark {

// Sparse parity-check rows: each row lists its column indices (sorted, distinct).
using SparseRows = std::vector<std::vector<std::uint32_t>>;

struct NullspaceResult {
  std::size_t rank = 0;
  std::vector<BitVec> basis;        // k independent n-bit vectors spanning the null space
  std::vector<std::uint32_t> free_cols;  // the RREF free columns, ascending; basis[j] owns free_cols[j]
};

// Null-space basis of a sparse GF(2) matrix via dense bitset elimination.
// Every returned vector x satisfies, for each row, XOR of x over the row's columns = 0.
NullspaceResult gf2_nullspace(const SparseRows& rows, std::size_t n);

// Dense k x k matrix as row bit vectors.
using SquareBits = std::vector<BitVec>;

// y = A * x over GF(2), A given as rows.
BitVec gf2_mat_vec(const SquareBits& rows, const BitVec& x);

// Inverse of an invertible k x k matrix; throws std::invalid_argument if singular.
SquareBits gf2_invert(const SquareBits& rows);

// A = L * U with unit diagonals and pseudorandom strict triangles drawn from
// `bits` (consumed row-major); always invertible.
class ChaChaStream;
SquareBits gf2_random_lu(std::size_t k, ChaChaStream& bits);

}  // namespace sigmark
