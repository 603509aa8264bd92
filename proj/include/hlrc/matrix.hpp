#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hlrc/gf.hpp"

namespace hlrc {

/// Dense row-major matrix of field elements. The field travels separately:
/// every routine below takes it as its first argument.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Element& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Element at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Element> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Element> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduced row echelon form in place. Pivots are chosen column by column,
/// taking the first row at or below the current pivot row with a nonzero
/// entry, so intermediate states are reproducible. Returns pivot columns.
std::vector<std::size_t> rref(const FiniteField& field, Matrix& m);

std::size_t rank(const FiniteField& field, Matrix m);

/// Basis (as rows) of { x : m x = 0 }.
Matrix null_space(const FiniteField& field, const Matrix& m);

/// Some x with sum_j x_j * columns[j] == target, or nullopt if target is not
/// in the span. Each column must have the same length as target.
std::optional<std::vector<Element>> solve_combination(
    const FiniteField& field, const std::vector<std::span<const Element>>& columns,
    std::span<const Element> target);

/// Incrementally built echelon basis of a subspace of GF(q)^dim.
class Span {
 public:
  Span(const FiniteField& field, std::size_t dim) : field_(&field), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Adds v to the span; returns true when v was independent of it.
  bool insert(std::span<const Element> v);
  bool contains(std::span<const Element> v) const;

 private:
  // Reduces v in place against the basis; returns the first nonzero position
  // of the residual, or dim_ when v lies in the span.
  std::size_t reduce(std::vector<Element>& v) const;

  const FiniteField* field_;
  std::size_t dim_;
  std::vector<std::vector<Element>> basis_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace hlrc
