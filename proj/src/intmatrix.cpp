#include "greenring/intmatrix.hpp"

#include <cassert>
#include <utility>

namespace greenring {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::append_row(const std::vector<Int>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    assert(r.size() == cols_);
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// dst += q * src
void add_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

IntMatrix IntMatrix::hnf() const {
    using boost::multiprecision::abs;
    IntMatrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        // Euclid on the entries at/below pivot_row: repeatedly bring the
        // smallest nonzero into pivot position and reduce the rest mod it.
        // The pivot magnitude strictly decreases, so this terminates.
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = pivot_row; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                if (best == m.rows() || abs(m.at(i, col)) < abs(m.at(best, col))) best = i;
            }
            if (best == m.rows()) break;  // column clear below pivot_row
            swap_rows(m, pivot_row, best);
            bool clear = true;
            for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                Int q = floor_div(m.at(i, col), m.at(pivot_row, col));
                add_multiple(m, i, pivot_row, -q);
                if (m.at(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (m.at(pivot_row, col) != 0) {
            if (m.at(pivot_row, col) < 0) negate_row(m, pivot_row);
            for (std::size_t i = 0; i < pivot_row; ++i) {
                Int q = floor_div(m.at(i, col), m.at(pivot_row, col));
                add_multiple(m, i, pivot_row, -q);
            }
            ++pivot_row;
        }
    }
    IntMatrix out(pivot_row, cols_);
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IntMatrix IntMatrix::left_kernel() const {
    // HNF of [A | I]; rows whose A-part vanished carry a kernel basis.
    IntMatrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    IntMatrix h = aug.hnf();
    IntMatrix ker;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols_; ++j)
            if (h.at(i, j) != 0) { zero = false; break; }
        if (!zero) continue;
        std::vector<Int> v(rows_);
        for (std::size_t j = 0; j < rows_; ++j) v[j] = h.at(i, cols_ + j);
        ker.append_row(v);
    }
    if (ker.rows() == 0) return IntMatrix(0, rows_);
    return ker.hnf();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return a.hnf() == b.hnf();
}

bool lattice_contains(const IntMatrix& lattice, const std::vector<Int>& v) {
    IntMatrix h = lattice.hnf();
    assert(v.size() == h.cols() || h.rows() == 0);
    std::vector<Int> w = v;
    for (std::size_t row = 0; row < h.rows(); ++row) {
        std::size_t piv = 0;
        while (piv < h.cols() && h.at(row, piv) == 0) ++piv;
        if (piv == h.cols()) break;
        if (w[piv] % h.at(row, piv) != 0) continue;  // final check rejects
        Int q = w[piv] / h.at(row, piv);
        for (std::size_t j = 0; j < h.cols(); ++j) w[j] -= q * h.at(row, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols() == b.cols());
    const std::size_t p = a.rows(), q = b.rows(), n = a.cols();
    // v lies in both spans iff v = u*a = w*b; the pairs (u, w) form the left
    // kernel of the stacked matrix [a; -b].
    IntMatrix stacked(p + q, n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(p + i, j) = -b.at(i, j);
    IntMatrix ker = stacked.left_kernel();
    IntMatrix result;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Int> v(n, Int(0));
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t j = 0; j < n; ++j) v[j] += ker.at(i, k) * a.at(k, j);
        result.append_row(v);
    }
    if (result.rows() == 0) return IntMatrix(0, n);
    return result.hnf();
}

}  // namespace greenring
