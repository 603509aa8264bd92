#include "hlrc/matrix.hpp"

namespace hlrc {

std::vector<std::size_t> rref(const FiniteField& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t found = m.rows;
    for (std::size_t r = pivot_row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(found, c), m.at(pivot_row, c));
    }
    const Element scale = field.inv(m.at(pivot_row, col));
    for (std::size_t c = 0; c < m.cols; ++c) m.at(pivot_row, c) = field.mul(m.at(pivot_row, c), scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      const Element factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < m.cols; ++c) {
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(pivot_row, c)));
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const FiniteField& field, Matrix m) { return rref(field, m).size(); }

Matrix null_space(const FiniteField& field, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref(field, reduced);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix basis(m.cols - pivots.size(), m.cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.at(out, pivots[r]) = field.neg(reduced.at(r, free));
    }
    ++out;
  }
  return basis;
}

std::optional<std::vector<Element>> solve_combination(
    const FiniteField& field, const std::vector<std::span<const Element>>& columns,
    std::span<const Element> target) {
  const std::size_t n = columns.size();
  Matrix aug(target.size(), n + 1);
  for (std::size_t r = 0; r < target.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = columns[c][r];
    aug.at(r, n) = target[r];
  }
  const auto pivots = rref(field, aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  std::vector<Element> x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, n);
  return x;
}

std::size_t Span::reduce(std::vector<Element>& v) const {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Element factor = v[pivots_[b]];
    if (factor == 0) continue;
    const auto& row = basis_[b];
    for (std::size_t i = 0; i < dim_; ++i) {
      if (row[i] != 0) v[i] = field_->sub(v[i], field_->mul(factor, row[i]));
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i] != 0) return i;
  }
  return dim_;
}

bool Span::insert(std::span<const Element> v) {
  std::vector<Element> w(v.begin(), v.end());
  const std::size_t lead = reduce(w);
  if (lead == dim_) return false;
  const Element scale = field_->inv(w[lead]);
  for (auto& x : w) x = field_->mul(x, scale);
  // Keep the basis fully reduced so that reduce() is a single pass.
  for (auto& row : basis_) {
    const Element factor = row[lead];
    if (factor == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) row[i] = field_->sub(row[i], field_->mul(factor, w[i]));
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(lead);
  return true;
}

bool Span::contains(std::span<const Element> v) const {
  std::vector<Element> w(v.begin(), v.end());
  return reduce(w) == dim_;
}

}  // namespace hlrc
