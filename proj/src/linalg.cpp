#include "gbkit/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "gbkit/io.hpp"

namespace gbkit {

Matrix::Matrix(std::initializer_list<std::initializer_list<Residue>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::ArityMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::row_is_zero(std::size_t i) const noexcept {
  const Residue* r = row(i);
  return std::all_of(r, r + cols_, [](Residue v) { return v == 0; });
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + cols_, row(b));
}

void Matrix::append_row(const std::vector<Residue>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(Errc::ArityMismatch, "row length does not match matrix width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ArityMismatch, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  }
  return c;
}

std::vector<Residue> multiply(const PrimeField& F, const Matrix& a, const std::vector<Residue>& v) {
  if (a.cols() != v.size()) throw Error(Errc::ArityMismatch, "matrix-vector shape mismatch");
  std::vector<Residue> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = F.add(out[i], F.mul(a(i, k), v[k]));
  }
  return out;
}

std::vector<std::size_t> rref_in_place(const PrimeField& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    std::size_t k = r;
    while (k < m.rows() && m(k, c) == 0) ++k;
    if (k == m.rows()) continue;
    m.swap_rows(r, k);
    Residue* pr = m.row(r);
    if (pr[c] != 1) {
      Residue inv = F.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = F.mul(pr[j], inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Residue* ri = m.row(i);
      Residue factor = ri[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (pr[j] != 0) ri[j] = F.sub_mul(ri[j], factor, pr[j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, Matrix m) { return rref_in_place(F, m).size(); }

TermMatrix matrix_of(const std::vector<Polynomial>& F, std::vector<std::string> labels) {
  if (F.empty()) throw Error(Errc::EmptyInput, "matrix of an empty polynomial list");
  TermMatrix M;
  M.ring = F[0].ring();
  M.cols = support(F);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t j = 0; j < M.cols.size(); ++j) index.emplace(M.cols[j], j);
  M.data = Matrix(F.size(), M.cols.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (const auto& t : F[i].terms()) M.data(i, index.at(t.mono)) = t.coeff;
  }
  M.row_labels = std::move(labels);
  return M;
}

std::vector<Polynomial> rows_of(const TermMatrix& M) {
  std::vector<Polynomial> out;
  out.reserve(M.data.rows());
  for (std::size_t i = 0; i < M.data.rows(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < M.cols.size(); ++j) {
      if (M.data(i, j) != 0) terms.push_back(Term{M.cols[j], M.data(i, j)});
    }
    out.push_back(Polynomial::from_sorted(M.ring, std::move(terms)));
  }
  return out;
}

TermMatrix rref(TermMatrix M) {
  rref_in_place(M.ring->field(), M.data);
  M.row_labels.clear();
  return M;
}

std::vector<Polynomial> row_echelon_basis(const std::vector<Polynomial>& F) {
  if (F.empty()) return {};
  std::vector<Polynomial> out;
  for (auto& f : rows_of(rref(matrix_of(F)))) {
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> new_leading_rows(const std::vector<Polynomial>& Ftilde, const std::vector<Polynomial>& F) {
  std::vector<Polynomial> out;
  for (const auto& g : Ftilde) {
    if (g.is_zero()) continue;
    bool old = std::any_of(F.begin(), F.end(), [&](const Polynomial& f) { return !f.is_zero() && f.lt() == g.lt(); });
    if (!old) out.push_back(g);
  }
  return out;
}

void dump(std::ostream& os, const TermMatrix& M) {
  os << "#";
  for (const auto& c : M.cols) os << ' ' << render_monomial(*M.ring, c);
  os << '\n';
  for (std::size_t i = 0; i < M.data.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols.size(); ++j) os << (j ? " " : "") << M.data(i, j);
    if (i < M.row_labels.size() && !M.row_labels[i].empty()) os << "  # " << M.row_labels[i];
    os << '\n';
  }
}

}  // namespace gbkit
