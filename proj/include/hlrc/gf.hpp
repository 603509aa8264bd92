#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hlrc {

/// Canonical encoding of a field element: an integer in [0, q). For
/// extension fields the polynomial representative c0 + c1 x + ... is packed
/// in base p with c0 least significant, so in GF(4) `x` is 2 and `x+1` is 3.
using Element = std::uint8_t;

/// Arithmetic context for GF(q), q in {2,3,4,5,7,8,9}.
///
/// Extension fields use fixed moduli: GF(4) = GF(2)[x]/(x^2+x+1),
/// GF(8) = GF(2)[x]/(x^3+x+1), GF(9) = GF(3)[x]/(x^2+1). All operations go
/// through q x q lookup tables built once; the object is immutable after
/// construction and can be shared freely across threads.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 9;

  /// Throws Error(UnsupportedOrder) for any q outside the supported set.
  static FiniteField make(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  /// Coefficients of the modulus, constant term first; {0, 1} for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a][b]; }
  Element sub(Element a, Element b) const noexcept { return add_[a][neg_[b]]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a][b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  /// Throws Error(DivisionByZero) on inv(0).
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, unsigned exponent) const noexcept;

  bool contains(int value) const noexcept { return value >= 0 && value < q_; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  FiniteField() = default;
  void build_tables();
  void verify_axioms() const;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::array<std::array<Element, kMaxOrder>, kMaxOrder> add_{};
  std::array<std::array<Element, kMaxOrder>, kMaxOrder> mul_{};
  std::array<Element, kMaxOrder> neg_{};
  std::array<Element, kMaxOrder> inv_{};
};

inline FiniteField make_field(int q) { return FiniteField::make(q); }

}  // namespace hlrc
