#pragma once

#include <cstddef>
#include <vector>

#include "greenring/numeric.hpp"

namespace greenring {

// Dense matrix over arbitrary-precision integers. Rows of a matrix are used
// throughout as generators of an integer lattice.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void append_row(const std::vector<Int>& r);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Canonical row-style Hermite normal form of the lattice spanned by the
    // rows: echelon with strictly increasing pivot columns, positive pivots,
    // entries above each pivot reduced into [0, pivot). Zero rows dropped.
    IntMatrix hnf() const;

    std::size_t rank() const { return hnf().rows(); }

    // Basis (as rows) of { v : v * (*this) = 0 }.
    IntMatrix left_kernel() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

// Lattice predicates on row-span lattices.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
bool lattice_contains(const IntMatrix& lattice, const std::vector<Int>& v);

// Basis of the intersection of two row-span lattices in the same ambient space.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

}  // namespace greenring
