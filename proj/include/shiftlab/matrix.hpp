#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shiftlab/error.hpp"

namespace shiftlab {

// Dense row-major matrix; the arithmetic lives in the domain object.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class D>
Matrix<typename D::Elem> identity_matrix(const D& dom, std::size_t n) {
  Matrix<typename D::Elem> m(n, n, dom.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
  return m;
}

template <class D>
Matrix<typename D::Elem> multiply(const D& dom, const Matrix<typename D::Elem>& a,
                                  const Matrix<typename D::Elem>& b) {
  if (a.cols() != b.rows()) throw PreconditionError("multiply: dimension mismatch");
  Matrix<typename D::Elem> c(a.rows(), b.cols(), dom.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (dom.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (dom.is_zero(b(l, j))) continue;
        c(i, j) = dom.add(c(i, j), dom.mul(a(i, l), b(l, j)));
      }
    }
  }
  return c;
}

template <class D>
Matrix<typename D::Elem> subtract(const D& dom, const Matrix<typename D::Elem>& a,
                                  const Matrix<typename D::Elem>& b) {
  Matrix<typename D::Elem> c(a.rows(), a.cols(), dom.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = dom.sub(a(i, j), b(i, j));
  }
  return c;
}

template <class D>
bool is_zero_matrix(const D& dom, const Matrix<typename D::Elem>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!dom.is_zero(a(i, j))) return false;
    }
  }
  return true;
}

// Entrywise image under a map between domains.
template <class To, class From, class Fn>
Matrix<To> map_matrix(const Matrix<From>& m, Fn&& fn) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = fn(m(i, j));
  }
  return out;
}

}  // namespace shiftlab
