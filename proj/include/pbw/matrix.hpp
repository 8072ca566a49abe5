#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbw/rational.hpp"

namespace pbw {

/// Dense matrix with exact rational entries. Sized for desk-scale linear
/// algebra; no sparsity tricks, no numerical pivoting (exactness makes it
/// unnecessary).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix& operator*=(const Rational& c);

    bool operator==(const RationalMatrix&) const = default;

    bool is_zero() const;

    /// Exact Gauss-Jordan inverse; throws DomainError when singular or not
    /// square.
    RationalMatrix inverse() const;

    /// Rows of space-separated rationals, one line per row.
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix operator*(const Rational& c, const RationalMatrix& m);

} // namespace pbw
