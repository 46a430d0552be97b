#pragma once

#include <vector>

#include "evasive/perm.hpp"

namespace evasive {

// GF(p^r) for p^r <= 16, elements encoded as base-p digit strings of their
// coefficient vectors (element 0 is the field zero, element 1 the unit).
// Moduli are frozen so multiplication tables are reproducible:
//   GF(4): x^2+x+1,  GF(8): x^3+x+1,  GF(9): x^2+1,  GF(16): x^4+x+1.
class FiniteField {
  public:
    FiniteField(int p, int r);

    int characteristic() const { return p_; }
    int degree() const { return r_; }
    int size() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;  // a != 0

    // A generator of the cyclic group of nonzero elements.
    int primitive_element() const;

    // The permutation x -> a*x + b of the q field elements (a != 0).
    Permutation affine_map(int a, int b) const;

  private:
    int p_, r_, q_;
    std::vector<int> mod_;  // monic modulus coefficients, constant term first
    std::vector<int> add_, mul_, neg_;
};

}  // namespace evasive
