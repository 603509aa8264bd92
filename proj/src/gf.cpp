#include "hlrc/gf.hpp"

#include <string>

#include "hlrc/error.hpp"

namespace hlrc {

namespace {

struct OrderInfo {
  int q;
  int p;
  int e;
  std::vector<int> modulus;  // constant term first, monic
};

const OrderInfo* lookup_order(int q) {
  static const OrderInfo kOrders[] = {
      {2, 2, 1, {0, 1}},    {3, 3, 1, {0, 1}},       {4, 2, 2, {1, 1, 1}},
      {5, 5, 1, {0, 1}},    {7, 7, 1, {0, 1}},       {8, 2, 3, {1, 1, 0, 1}},
      {9, 3, 2, {1, 0, 1}},
  };
  for (const auto& info : kOrders) {
    if (info.q == q) return &info;
  }
  return nullptr;
}

std::vector<int> digits(int value, int p, int e) {
  std::vector<int> out(e);
  for (int i = 0; i < e; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int pack(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) value = value * p + coeffs[i];
  return value;
}

}  // namespace

FiniteField FiniteField::make(int q) {
  const OrderInfo* info = lookup_order(q);
  if (info == nullptr) {
    throw Error(ErrorCode::UnsupportedOrder,
                "GF(" + std::to_string(q) + ") is not supported; expected one of 2,3,4,5,7,8,9");
  }
  FiniteField field;
  field.q_ = info->q;
  field.p_ = info->p;
  field.e_ = info->e;
  field.modulus_ = info->modulus;
  field.build_tables();
  field.verify_axioms();
  return field;
}

void FiniteField::build_tables() {
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, e_);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, e_);

      std::vector<int> sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a][b] = static_cast<Element>(pack(sum, p_));

      // Schoolbook product, then reduce by the monic modulus from the top down.
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
        const int lead = prod[deg];
        if (lead == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          const int idx = deg - e_ + i;
          prod[idx] = ((prod[idx] - lead * modulus_[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(e_);
      mul_[a][b] = static_cast<Element>(pack(prod, p_));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add_[a][b] == 0) neg_[a] = static_cast<Element>(b);
      if (mul_[a][b] == 1) inv_[a] = static_cast<Element>(b);
    }
  }
}

void FiniteField::verify_axioms() const {
  auto fail = [this](const char* what) {
    throw Error(ErrorCode::UnsupportedOrder,
                "field axiom '" + std::string(what) + "' fails for GF(" + std::to_string(q_) + ")");
  };
  for (int a = 0; a < q_; ++a) {
    if (add_[a][0] != a || mul_[a][1] != a) fail("identity");
    if (a != 0 && mul_[a][inv_[a]] != 1) fail("inverse");
    if (add_[a][neg_[a]] != 0) fail("negation");
    for (int b = 0; b < q_; ++b) {
      if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a]) fail("commutativity");
      if (a != 0 && b != 0 && mul_[a][b] == 0) fail("no zero divisors");
      for (int c = 0; c < q_; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("additive associativity");
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("multiplicative associativity");
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("distributivity");
      }
    }
  }
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  return inv_[a];
}

Element FiniteField::pow(Element a, unsigned exponent) const noexcept {
  Element result = 1;
  Element base = a;
  while (exponent != 0) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1u;
  }
  return result;
}

}  // namespace hlrc
