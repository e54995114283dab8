#pragma once

/// Gelfand-Tsetlin vectors for alternating groups, expanded in Young's
/// orthogonal basis.
///
/// For a path (alpha^(2), ..., alpha^(n)) with truncation u* = u(alpha^(2..n-1)):
///
///   n = 2:                         u = v_[12] or v_[1/2]
///   alpha = lambda^s, prev unsigned: u = u*^lambda + s * phi_lambda(u*^lambda)
///   alpha = lambda^s, prev mu^s:     u = u*^lambda
///   alpha unsigned:                  u = u*^alpha
///
/// where x^lambda is the embedding v_T -> v_{T^lambda} that appends a box
/// holding n.

#include <stdexcept>
#include <utility>
#include <vector>

#include "associator.hpp"
#include "geodesics.hpp"
#include "irrep_vector.hpp"

namespace altgt {

/// v_T -> v_{T^lambda} extended linearly.
inline irrep_vector embed(const irrep_vector& v, const partition& lambda) {
  if (!covers(lambda, v.shape())) throw std::domain_error("vector shape is not covered by the target shape");
  irrep_vector out(lambda);
  for (const auto& [t, c] : v.terms()) out.add(append_box(t, lambda), c);
  return out;
}

/// Keeps the terms whose tableau has (n-1)-prefix shape mu and drops the box
/// holding n.
inline irrep_vector restrict(const irrep_vector& v, const partition& mu) {
  if (!covers(v.shape(), mu)) throw std::domain_error("target shape is not covered by the vector shape");
  irrep_vector out(mu);
  const int n = v.shape().size();
  for (const auto& [t, c] : v.terms()) {
    if (prefix_shape(t, n - 1) == mu) out.add(truncate(t, n - 1), c);
  }
  return out;
}

template <class Phi = normalized_associator>
irrep_vector gt_vector(const alt_path& path) {
  const alt_label& alpha = path.back();
  if (path.size() == 2) {
    const standard_tableau t = alpha.shape() == partition{2} ? standard_tableau{{1, 2}} : standard_tableau{{1}, {2}};
    return irrep_vector::basis(t);
  }
  const alt_path prev_path = path.truncated();
  const alt_label& prev = prev_path.back();
  const irrep_vector lifted = embed(gt_vector<Phi>(prev_path), alpha.shape());
  if (!alpha.is_signed() || prev.is_signed()) return lifted;

  const irrep_vector twisted = apply_phi<Phi>(alpha.shape(), lifted);
  for (const auto& [t, c] : twisted.terms()) {
    // the two summands live over mu and mu' with mu != mu'
    if (lifted.terms().contains(t)) throw std::logic_error("associator image overlaps the embedded vector");
  }
  return *alpha.sign() == sign::plus ? lifted + twisted : lifted - twisted;
}

struct gt_entry {
  alt_path path;
  irrep_vector vector;
};

/// Divides v by its norm. The squared norm must be a nonnegative rational.
inline irrep_vector normalized(const irrep_vector& v) {
  const scalar norm_sq = inner_product(v, v);
  if (!norm_sq.is_gaussian_rational() || norm_sq.gaussian_part().im != 0)
    throw std::domain_error("squared norm is not rational");
  return sqrt_rational(norm_sq.gaussian_part().re).inverse() * v;
}

template <class Phi = normalized_associator>
std::vector<gt_entry> gt_basis(const alt_label& alpha, bool normalize = false) {
  std::vector<gt_entry> out;
  for (const auto& p : geodesic_representatives(alpha)) {
    irrep_vector u = gt_vector<Phi>(p);
    out.push_back({p, normalize ? normalized(u) : std::move(u)});
  }
  return out;
}

}  // namespace altgt
