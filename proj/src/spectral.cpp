#include "layerline/spectral.hpp"

#include <utility>

#include "layerline/errors.hpp"

namespace layerline {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ParamsOutOfRange("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
    IntMatrix m(g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

BigInt& IntMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

const BigInt& IntMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix index out of range");
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

bool IntMatrix::is_zero() const {
    for (const BigInt& x : data_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw PreconditionViolated("matrix dimensions do not match for multiplication");
    IntMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& f = at(r, k);
            if (f == 0) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += f * other.at(k, c);
        }
    return out;
}

IntMatrix IntMatrix::minus_scalar(long long lambda) const {
    if (rows_ != cols_) throw NotSquare("matrix is not square");
    IntMatrix out = *this;
    for (int i = 0; i < rows_; ++i) out.at(i, i) -= lambda;
    return out;
}

int matrix_rank(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0, row = 0;
    BigInt prev = 1;  // divisor for the fraction-free update, always exact
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

bool annihilation_check(const IntMatrix& a, const std::vector<long long>& roots) {
    if (a.rows() != a.cols()) throw NotSquare("matrix is not square");
    IntMatrix product = IntMatrix::identity(a.rows());
    for (long long lambda : roots) product = product.mul(a.minus_scalar(lambda));
    return product.is_zero();
}

bool eigenvalue_present(const IntMatrix& a, long long lambda) {
    if (a.rows() != a.cols()) throw NotSquare("matrix is not square");
    return matrix_rank(a.minus_scalar(lambda)) < a.rows();
}

std::map<long long, int> eigenvalue_multiplicities(const IntMatrix& a,
                                                   const std::vector<long long>& roots) {
    if (a.rows() != a.cols()) throw NotSquare("matrix is not square");
    std::map<long long, int> out;
    for (long long lambda : roots)
        out[lambda] = a.rows() - matrix_rank(a.minus_scalar(lambda));
    return out;
}

} // namespace layerline
