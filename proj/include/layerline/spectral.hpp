#pragma once

#include <map>
#include <vector>

#include "layerline/graph.hpp"
#include "layerline/layer_graphs.hpp"

namespace layerline {

// Dense matrix of exact arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);  // zero-filled

    static IntMatrix identity(int dim);
    static IntMatrix adjacency(const Graph& g);  // symmetric 0/1, zero diagonal

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int r, int c);
    const BigInt& at(int r, int c) const;

    bool is_zero() const;
    bool is_symmetric() const;

    // Naive exact product; throws PreconditionViolated on a dimension
    // mismatch.
    IntMatrix mul(const IntMatrix& other) const;

    // A - lambda * I; throws NotSquare.
    IntMatrix minus_scalar(long long lambda) const;

private:
    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

// Number of linearly independent rows, by fraction-free (Bareiss-style)
// integer elimination with row pivoting on the first nonzero entry.  All
// divisions are exact; no floating point anywhere.
int matrix_rank(IntMatrix m);

// True iff the product of (A - lambda I) over the given roots is the zero
// matrix.  Throws NotSquare.
bool annihilation_check(const IntMatrix& a, const std::vector<long long>& roots);

// True iff lambda is an eigenvalue: rank(A - lambda I) < dim.  Throws
// NotSquare.
bool eigenvalue_present(const IntMatrix& a, long long lambda);

// Map root -> dim - rank(A - root I), i.e. the eigenspace dimension of
// each candidate root (0 when the root is not an eigenvalue).
std::map<long long, int> eigenvalue_multiplicities(const IntMatrix& a,
                                                   const std::vector<long long>& roots);

} // namespace layerline
