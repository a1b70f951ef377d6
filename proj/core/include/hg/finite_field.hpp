#pragma once

#include <string>
#include <vector>

namespace hg {

/// F_q for q = p^k <= 256, by full addition and multiplication tables. Elements are
/// 0..q-1, read as base-p digit vectors of polynomials in the generator w (a root of
/// the least monic irreducible polynomial of degree k in lexicographic order).
class FiniteField {
public:
  FiniteField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int pow(int a, long e) const;
  /// Element w^e of the power basis (w = generator()).
  int generator() const { return k_ == 1 ? 1 : p_; }
  /// Minimal polynomial of w, coefficients low to high.
  const std::vector<int> &modulus() const { return modulus_; }

  /// Parses "0", "1", "w", "w+1", "w^2 + 2*w", or a raw code "#5".
  int parse(const std::string &text) const;
  std::string str(int a) const;

private:
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

}  // namespace hg
