#pragma once

/// The normalized associator phi_lambda for self-conjugate lambda:
///
///   phi_lambda(v_T) = i^{(n - d(lambda))/2} * eps(w_T) * v_{T'}
///
/// where d is the diagonal length, T' the transposed tableau, and w_T the
/// permutation taking each entry of reference_tableau(lambda) to the entry
/// of T in the same box. The reference tableaux make phi_lambda restrict to
/// phi_mu along every self-conjugate cover (mu, lambda).

#include <stdexcept>

#include "irrep_vector.hpp"
#include "matrix.hpp"
#include "tableau.hpp"
#include "yor.hpp"

namespace altgt {

inline scalar assoc_coeff(const partition& lambda, const standard_tableau& t) {
  if (!is_self_conjugate(lambda)) throw std::domain_error("associator needs a self-conjugate partition");
  const int excess = lambda.size() - diagonal_length(lambda);
  if (excess % 2 != 0) throw std::logic_error("n - d(lambda) is odd for a self-conjugate partition");
  return i_power(excess / 2) * scalar(permutation_sign(lambda, t));
}

struct normalized_associator {
  static scalar coeff(const partition& lambda, const standard_tableau& t) { return assoc_coeff(lambda, t); }
};

template <class Phi = normalized_associator>
irrep_vector apply_phi(const partition& lambda, const irrep_vector& v) {
  if (!is_self_conjugate(lambda)) throw std::domain_error("associator needs a self-conjugate partition");
  if (v.shape() != lambda) throw std::domain_error("vector shape does not match partition");
  irrep_vector out(lambda);
  for (const auto& [t, c] : v.terms()) out.add(conjugate_tableau(t), Phi::coeff(lambda, t) * c);
  return out;
}

template <class Phi = normalized_associator>
scalar_matrix phi_matrix(const partition& lambda) {
  if (!is_self_conjugate(lambda)) throw std::domain_error("associator needs a self-conjugate partition");
  return matrix_of(lambda, [&](const irrep_vector& v) { return apply_phi<Phi>(lambda, v); });
}

}  // namespace altgt
