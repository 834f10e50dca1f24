#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenring/cyclotomic.hpp"
#include "greenring/green_ring.hpp"

namespace greenring {

// Dense matrix over Q(zeta). Column vectors; subspaces are given by matrices
// whose columns form a basis.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(const CycField& f, std::size_t rows, std::size_t cols);

    static CycMatrix identity(const CycField& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycField& field() const { return *field_; }

    Cyc& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyc& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycMatrix operator+(const CycMatrix& rhs) const;
    CycMatrix operator-(const CycMatrix& rhs) const;
    CycMatrix operator*(const CycMatrix& rhs) const;
    bool operator==(const CycMatrix& rhs) const;
    bool is_zero() const;

    CycMatrix pow(unsigned long e) const;
    static CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

    std::size_t rank() const;
    CycMatrix kernel_columns() const;       // basis of { v : A v = 0 }
    CycMatrix column_space_basis() const;
    static CycMatrix hstack(const CycMatrix& a, const CycMatrix& b);
    static CycMatrix vstack(const CycMatrix& a, const CycMatrix& b);
    // Basis of the intersection of the column spaces.
    static CycMatrix intersect_columns(const CycMatrix& a, const CycMatrix& b);

private:
    const CycField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cyc> data_;
};

// Explicit module: one matrix per group generator plus the matrix of y.
struct ModuleRealization {
    std::size_t dim = 0;
    std::vector<CycMatrix> generator_action;  // one per cyclic factor
    CycMatrix y_action;
};

struct OracleMismatch {
    std::string left, right;       // the label pair
    std::string expected, actual;  // multiset strings
};

struct OracleReport {
    std::size_t pairs = 0;
    std::vector<OracleMismatch> mismatches;
    double elapsed_ms = 0.0;
    bool ok() const { return mismatches.empty(); }
};

// Brute-force verification layer: realizes labels as explicit matrices,
// tensors via the comultiplication, decomposes by exact rank counting, and
// compares against the Green ring's structure constants.
class Oracle {
public:
    explicit Oracle(const GreenRing& ring);
    Oracle(const Oracle&) = delete;
    Oracle& operator=(const Oracle&) = delete;

    const GreenRing& ring() const { return *ring_; }
    const CycField& field() const { return field_; }

    ModuleRealization realize(const Label& label) const;
    ModuleRealization tensor(const ModuleRealization& a, const ModuleRealization& b) const;

    // Multiset of labels with multiplicities; throws RelationViolation or
    // DimensionMismatch when the input is inconsistent.
    std::map<Label, long long> decompose(const ModuleRealization& mx) const;

    OracleReport verify_structure_constants() const;

    void check_relations(const ModuleRealization& m) const;
    CycMatrix group_element_action(const ModuleRealization& m,
                                   const std::vector<long long>& elem) const;
    CycMatrix idempotent_e_action(const ModuleRealization& m) const;
    CycMatrix character_eigenspace(const ModuleRealization& m, CharIdx c) const;

private:
    const GreenRing* ring_;
    CycField field_;
};

}  // namespace greenring
