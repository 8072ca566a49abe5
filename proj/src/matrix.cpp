#include "pbw/matrix.hpp"

#include "pbw/errors.hpp"

namespace pbw {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t k) {
    RationalMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        m.at(i, i) = 1;
    return m;
}

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw DomainError("matrix index out of range");
    return a_[r * cols_ + c];
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw DomainError("matrix index out of range");
    return a_[r * cols_ + c];
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DomainError("matrix size mismatch in product");
    RationalMatrix result(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& left = a_[i * cols_ + k];
            if (left == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& right = rhs.a_[k * rhs.cols_ + j];
                if (right != 0)
                    result.a_[i * rhs.cols_ + j] += left * right;
            }
        }
    return result;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DomainError("matrix size mismatch in sum");
    RationalMatrix result = *this;
    for (std::size_t k = 0; k < a_.size(); ++k)
        result.a_[k] += rhs.a_[k];
    return result;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DomainError("matrix size mismatch in difference");
    RationalMatrix result = *this;
    for (std::size_t k = 0; k < a_.size(); ++k)
        result.a_[k] -= rhs.a_[k];
    return result;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
    for (Rational& x : a_)
        x *= c;
    return *this;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& m) {
    RationalMatrix result = m;
    result *= c;
    return result;
}

bool RationalMatrix::is_zero() const {
    for (const Rational& x : a_)
        if (x != 0)
            return false;
    return true;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_)
        throw DomainError("only square matrices are invertible");
    const std::size_t k = rows_;
    RationalMatrix work = *this;
    RationalMatrix result = identity(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && work.at(pivot, col) == 0)
            ++pivot;
        if (pivot == k)
            throw DomainError("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(result.at(pivot, j), result.at(col, j));
            }
        }
        const Rational inv = Rational(1) / work.at(col, col);
        for (std::size_t j = 0; j < k; ++j) {
            work.at(col, j) *= inv;
            result.at(col, j) *= inv;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col)
                continue;
            const Rational factor = work.at(r, col);
            if (factor == 0)
                continue;
            for (std::size_t j = 0; j < k; ++j) {
                work.at(r, j) -= factor * work.at(col, j);
                result.at(r, j) -= factor * result.at(col, j);
            }
        }
    }
    return result;
}

std::string RationalMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0)
                out += ' ';
            out += to_string(at(r, c));
        }
        out += '\n';
    }
    return out;
}

} // namespace pbw
