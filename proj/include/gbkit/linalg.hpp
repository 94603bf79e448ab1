#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gbkit/polynomial.hpp"

namespace gbkit {

// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::initializer_list<std::initializer_list<Residue>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Residue* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Residue* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

  bool row_is_zero(std::size_t i) const noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void append_row(const std::vector<Residue>& r);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);
std::vector<Residue> multiply(const PrimeField& F, const Matrix& a, const std::vector<Residue>& v);

// In-place reduced row echelon form; zero rows end up at the bottom.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(const PrimeField& F, Matrix& m);
std::size_t rank(const PrimeField& F, Matrix m);

// Macaulay-style matrix: columns bound to descending terms.
struct TermMatrix {
  RingPtr ring;
  std::vector<Monomial> cols;
  Matrix data;
  std::vector<std::string> row_labels;
};

// Throws EmptyInput on an empty list.
TermMatrix matrix_of(const std::vector<Polynomial>& F, std::vector<std::string> labels = {});
// One polynomial per row; zero rows give the zero polynomial.
std::vector<Polynomial> rows_of(const TermMatrix& M);
TermMatrix rref(TermMatrix M);
// Rows of the RREF of matrix_of(F), zero rows removed.
std::vector<Polynomial> row_echelon_basis(const std::vector<Polynomial>& F);
// Elements of Ftilde whose leading term is not a leading term of F.
std::vector<Polynomial> new_leading_rows(const std::vector<Polynomial>& Ftilde, const std::vector<Polynomial>& F);

// Header line of column terms, then one line of residues per row.
void dump(std::ostream& os, const TermMatrix& M);

}  // namespace gbkit
