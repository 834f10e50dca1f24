#include "greenring/oracle.hpp"

#include <cassert>
#include <chrono>
#include <sstream>

namespace greenring {

CycMatrix::CycMatrix(const CycField& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

CycMatrix CycMatrix::identity(const CycField& f, std::size_t n) {
    CycMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    CycMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    CycMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    CycMatrix out(*field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyc& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * rhs.at(k, j);
            }
        }
    return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == rhs.data_[i])) return false;
    return true;
}

bool CycMatrix::is_zero() const {
    for (const Cyc& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

CycMatrix CycMatrix::pow(unsigned long e) const {
    assert(rows_ == cols_);
    CycMatrix acc = identity(*field_, rows_);
    for (unsigned long i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

CycMatrix CycMatrix::kronecker(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix out(a.field(), a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

namespace {

// Row-reduce a copy; returns the echelon matrix and records pivot columns.
CycMatrix row_echelon(CycMatrix m, std::vector<std::size_t>& pivot_cols) {
    pivot_cols.clear();
    std::size_t prow = 0;
    for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = prow; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel == m.rows()) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(prow, j), m.at(sel, j));
        Cyc inv = m.at(prow, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(prow, j) = m.at(prow, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == prow || m.at(i, col).is_zero()) continue;
            Cyc factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(prow, j);
        }
        pivot_cols.push_back(col);
        ++prow;
    }
    return m;
}

}  // namespace

std::size_t CycMatrix::rank() const {
    std::vector<std::size_t> pivots;
    row_echelon(*this, pivots);
    return pivots.size();
}

CycMatrix CycMatrix::kernel_columns() const {
    std::vector<std::size_t> pivots;
    CycMatrix e = row_echelon(*this, pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycMatrix out(*field_, cols_, free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        out.at(fc, fi) = field_->one();
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            out.at(pivots[pi], fi) = -e.at(pi, fc);
    }
    return out;
}

CycMatrix CycMatrix::column_space_basis() const {
    std::vector<std::size_t> pivots;
    row_echelon(*this, pivots);
    CycMatrix out(*field_, rows_, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, pivots[j]);
    return out;
}

CycMatrix CycMatrix::hstack(const CycMatrix& a, const CycMatrix& b) {
    assert(a.rows() == b.rows());
    CycMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

CycMatrix CycMatrix::vstack(const CycMatrix& a, const CycMatrix& b) {
    assert(a.cols() == b.cols());
    CycMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

CycMatrix CycMatrix::intersect_columns(const CycMatrix& a, const CycMatrix& b) {
    // x = a u = b w; solve [a | -b] (u, w)^T = 0 and map the u part through a.
    CycMatrix neg_b = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) neg_b.at(i, j) = -b.at(i, j);
    CycMatrix ker = hstack(a, neg_b).kernel_columns();
    CycMatrix u_part(a.field(), a.cols(), ker.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) u_part.at(i, j) = ker.at(i, j);
    return (a * u_part).column_space_basis();
}

Oracle::Oracle(const GreenRing& ring) : ring_(&ring), field_(ring.datum().exponent()) {}

ModuleRealization Oracle::realize(const Label& label) const {
    const Datum& d = ring_->datum();
    const std::size_t nf = d.num_factors();
    ModuleRealization m;
    const std::size_t dim =
        label.kind == Label::Kind::M ? static_cast<std::size_t>(label.k)
                                     : static_cast<std::size_t>(d.n());
    m.dim = dim;
    // grade t carries the character tau^t(idx)
    for (std::size_t f = 0; f < nf; ++f) {
        CycMatrix g(field_, dim, dim);
        std::vector<long long> gen(nf, 0);
        gen[f] = 1;
        for (std::size_t t = 0; t < dim; ++t)
            g.at(t, t) = field_.zeta_pow(
                d.char_value_exp(d.tau_pow(label.idx, static_cast<long long>(t)), gen));
        m.generator_action.push_back(g);
    }
    CycMatrix y(field_, dim, dim);
    for (std::size_t t = 0; t + 1 < dim; ++t) y.at(t + 1, t) = field_.one();
    if (label.kind == Label::Kind::P) {
        // y wraps the top grade with the scalar lambda_j - 1
        y.at(0, dim - 1) = field_.zeta_pow(d.lambda_exp(label.idx)) - field_.one();
    }
    m.y_action = y;
    return m;
}

CycMatrix Oracle::group_element_action(const ModuleRealization& m,
                                       const std::vector<long long>& elem) const {
    CycMatrix acc = CycMatrix::identity(field_, m.dim);
    for (std::size_t f = 0; f < elem.size(); ++f)
        acc = acc * m.generator_action[f].pow(static_cast<unsigned long>(
                  mod_reduce(elem[f], ring_->datum().raw().cyclic_orders[f])));
    return acc;
}

CycMatrix Oracle::idempotent_e_action(const ModuleRealization& m) const {
    const Datum& d = ring_->datum();
    std::vector<long long> gn(d.num_factors());
    for (std::size_t f = 0; f < d.num_factors(); ++f)
        gn[f] = mod_reduce(d.n() * d.raw().g[f], d.raw().cyclic_orders[f]);
    CycMatrix gn_action = group_element_action(m, gn);
    CycMatrix acc(field_, m.dim, m.dim);
    CycMatrix p = CycMatrix::identity(field_, m.dim);
    for (long long s = 0; s < d.r(); ++s) {
        acc = acc + p;
        p = p * gn_action;
    }
    Rat inv_r(1, static_cast<long long>(d.r()));
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) acc.at(i, j) = acc.at(i, j) * inv_r;
    return acc;
}

void Oracle::check_relations(const ModuleRealization& m) const {
    const Datum& d = ring_->datum();
    const auto& orders = d.raw().cyclic_orders;
    for (std::size_t f = 0; f < d.num_factors(); ++f) {
        if (!(m.generator_action[f].pow(static_cast<unsigned long>(orders[f])) ==
              CycMatrix::identity(field_, m.dim)))
            throw Error(ErrorKind::RelationViolation, "group generator order violated");
        for (std::size_t f2 = f + 1; f2 < d.num_factors(); ++f2)
            if (!(m.generator_action[f] * m.generator_action[f2] ==
                  m.generator_action[f2] * m.generator_action[f]))
                throw Error(ErrorKind::RelationViolation, "group generators do not commute");
        // y h = chi(h) h y
        CycMatrix lhs = m.y_action * m.generator_action[f];
        CycMatrix rhs = m.generator_action[f] * m.y_action;
        Cyc chi_val = field_.zeta_pow(d.chi_value_exp_on_generator(f));
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) rhs.at(i, j) = rhs.at(i, j) * chi_val;
        if (!(lhs == rhs))
            throw Error(ErrorKind::RelationViolation, "y h = chi(h) h y violated");
    }
    // y^n = g^n - 1
    CycMatrix yn = m.y_action.pow(static_cast<unsigned long>(d.n()));
    CycMatrix gn = group_element_action(m, d.raw().g).pow(static_cast<unsigned long>(d.n()));
    if (!(yn == gn - CycMatrix::identity(field_, m.dim)))
        throw Error(ErrorKind::RelationViolation, "y^n = g^n - 1 violated");
}

ModuleRealization Oracle::tensor(const ModuleRealization& a,
                                 const ModuleRealization& b) const {
    const Datum& d = ring_->datum();
    ModuleRealization m;
    m.dim = a.dim * b.dim;
    for (std::size_t f = 0; f < d.num_factors(); ++f)
        m.generator_action.push_back(
            CycMatrix::kronecker(a.generator_action[f], b.generator_action[f]));
    CycMatrix gb = group_element_action(b, d.raw().g);
    m.y_action = CycMatrix::kronecker(a.y_action, gb) +
                 CycMatrix::kronecker(CycMatrix::identity(field_, a.dim), b.y_action);
    check_relations(m);
    return m;
}

CycMatrix Oracle::character_eigenspace(const ModuleRealization& m, CharIdx c) const {
    const Datum& d = ring_->datum();
    // stack (rho(gen_f) - chi_c(gen_f) I) for all factors; kernel = eigenspace
    CycMatrix stacked(field_, 0, m.dim);
    bool first = true;
    for (std::size_t f = 0; f < d.num_factors(); ++f) {
        std::vector<long long> gen(d.num_factors(), 0);
        gen[f] = 1;
        Cyc val = field_.zeta_pow(d.char_value_exp(c, gen));
        CycMatrix block = m.generator_action[f];
        for (std::size_t i = 0; i < m.dim; ++i) block.at(i, i) = block.at(i, i) - val;
        stacked = first ? block : CycMatrix::vstack(stacked, block);
        first = false;
    }
    return stacked.kernel_columns();
}

std::map<Label, long long> Oracle::decompose(const ModuleRealization& mx) const {
    const Datum& d = ring_->datum();
    check_relations(mx);

    // e must be a projection; its image carries the M-part.
    CycMatrix e = idempotent_e_action(mx);
    if (!(e * e == e))
        throw Error(ErrorKind::RelationViolation, "e is not idempotent on this module");
    const std::size_t e_rank = e.rank();

    std::map<Label, long long> result;

    // character eigenspaces
    std::map<CharIdx, CycMatrix> eigenspace;
    for (CharIdx i : d.omega0()) eigenspace.emplace(i, character_eigenspace(mx, i));
    for (CharIdx j : d.orbit_reps1()) eigenspace.emplace(j, character_eigenspace(mx, j));

    // d_{k,j} = dim of the character-j eigenspace of ker y  /\  im y^{k-1};
    // the difference d_{k,j} - d_{k+1,j} counts M(k, i) with tau^{k-1}(i) = j.
    CycMatrix ker_y = mx.y_action.kernel_columns();
    std::vector<std::map<CharIdx, std::size_t>> depth(static_cast<std::size_t>(d.n()) + 2);
    CycMatrix ypow = CycMatrix::identity(field_, mx.dim);
    for (long long k = 1; k <= d.n(); ++k) {
        if (k > 1) ypow = ypow * mx.y_action;  // y^{k-1}
        CycMatrix im = ypow.column_space_basis();
        CycMatrix kk = CycMatrix::intersect_columns(ker_y, im);
        for (CharIdx i : d.omega0()) {
            const CycMatrix& ei = eigenspace.at(i);
            std::size_t meet =
                kk.cols() + ei.cols() - CycMatrix::hstack(kk, ei).rank();
            depth[static_cast<std::size_t>(k)][i] = meet;
        }
    }
    long long covered = 0;
    for (long long k = 1; k <= d.n(); ++k)
        for (CharIdx i : d.omega0()) {
            CharIdx top = d.tau_pow(i, k - 1);
            std::size_t dk = depth[static_cast<std::size_t>(k)][top];
            std::size_t dk1 = k == d.n() ? 0 : depth[static_cast<std::size_t>(k) + 1][top];
            if (dk1 > dk)
                throw Error(ErrorKind::DimensionMismatch, "socle filtration is not nested");
            long long mult = static_cast<long long>(dk - dk1);
            if (mult > 0) {
                result[Label{Label::Kind::M, k, i}] = mult;
                covered += mult * k;
            }
        }
    if (covered != static_cast<long long>(e_rank))
        throw Error(ErrorKind::DimensionMismatch, "M-part multiplicities do not fill e-image");

    for (CharIdx j : d.orbit_reps1()) {
        std::size_t mult = eigenspace.at(j).cols();
        if (mult > 0) {
            result[Label{Label::Kind::P, 0, j}] = static_cast<long long>(mult);
            covered += static_cast<long long>(mult) * d.n();
        }
    }
    if (covered != static_cast<long long>(mx.dim))
        throw Error(ErrorKind::DimensionMismatch, "decomposition does not fill the module");
    return result;
}

OracleReport Oracle::verify_structure_constants() const {
    const auto start = std::chrono::steady_clock::now();
    OracleReport report;
    const Catalog& cat = ring_->catalog();
    const std::size_t B = cat.size();

    std::vector<ModuleRealization> realized;
    for (std::size_t p = 0; p < B; ++p) realized.push_back(realize(cat.label_at(p)));

    auto multiset_string = [&](const std::map<Label, long long>& ms) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, c] : ms) {
            if (!first) os << " + ";
            if (c != 1) os << c << '*';
            os << cat.to_string(l);
            first = false;
        }
        if (first) os << '0';
        return os.str();
    };

    for (std::size_t p = 0; p < B; ++p)
        for (std::size_t q = 0; q < B; ++q) {
            ++report.pairs;
            std::map<Label, long long> actual = decompose(tensor(realized[p], realized[q]));
            std::map<Label, long long> expected;
            for (const auto& [pos, c] : ring_->basis_product(p, q))
                expected[cat.label_at(pos)] = c.convert_to<long long>();
            if (actual != expected) {
                OracleMismatch mm;
                mm.left = cat.to_string(cat.label_at(p));
                mm.right = cat.to_string(cat.label_at(q));
                mm.expected = multiset_string(expected);
                mm.actual = multiset_string(actual);
                report.mismatches.push_back(mm);
            }
        }
    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

}  // namespace greenring
