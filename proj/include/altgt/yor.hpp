#pragma once

/// Young's orthogonal representation of S_n on V_lambda.
///
/// The action of a simple transposition s_i = (i, i+1) on a basis vector v_T
/// depends only on where i and i+1 sit in T:
///
///   same row     ->  v_T
///   same column  -> -v_T
///   otherwise    ->  r^{-1} v_T + sqrt(1 - r^{-2}) v_{s_i T}
///
/// with r the axial distance. The functions below are templated on the
/// basis action so that the verification harness can run against a
/// deliberately broken variant.

#include <span>
#include <stdexcept>

#include "irrep_vector.hpp"
#include "matrix.hpp"
#include "tableau.hpp"

namespace altgt {

struct young_orthogonal {
  static irrep_vector act_basis(const standard_tableau& t, int i) {
    const cell a = t.position(i);
    const cell b = t.position(i + 1);
    if (a.row == b.row) return irrep_vector::basis(t);
    if (a.col == b.col) return -irrep_vector::basis(t);
    const int r = axial_distance(t, i);
    irrep_vector out(t.shape());
    out.add(t, scalar(rational(1) / r));
    out.add(swap_adjacent(t, i), sqrt_rational(1 - rational(1) / (r * r)));
    return out;
  }
};

namespace detail {

inline void check_generator(const partition& lambda, int i) {
  if (i < 1 || i >= lambda.size()) throw std::domain_error("simple transposition index out of range");
}

}  // namespace detail

template <class Rep = young_orthogonal>
irrep_vector act_simple(const partition& lambda, int i, const irrep_vector& v) {
  detail::check_generator(lambda, i);
  if (v.shape() != lambda) throw std::domain_error("vector shape does not match partition");
  irrep_vector out(lambda);
  for (const auto& [t, c] : v.terms()) out += c * Rep::act_basis(t, i);
  return out;
}

/// Applies a word of simple transpositions; the last index acts first.
template <class Rep = young_orthogonal>
irrep_vector act_word(const partition& lambda, std::span<const int> word, const irrep_vector& v) {
  for (int i : word) detail::check_generator(lambda, i);
  irrep_vector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_simple<Rep>(lambda, *it, out);
  return out;
}

/// Coordinates of v in the basis order of enumerate_syt(shape).
inline std::vector<scalar> coordinates(const irrep_vector& v, const std::vector<standard_tableau>& basis) {
  std::vector<scalar> out;
  out.reserve(basis.size());
  for (const auto& t : basis) out.push_back(v.coefficient(t));
  return out;
}

/// Matrix whose column j is f(v_{T_j}) in the enumerate_syt order.
template <class F>
scalar_matrix matrix_of(const partition& lambda, F&& f) {
  const auto basis = enumerate_syt(lambda);
  scalar_matrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const irrep_vector image = f(irrep_vector::basis(basis[c]));
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = image.coefficient(basis[r]);
  }
  return m;
}

template <class Rep = young_orthogonal>
scalar_matrix rep_matrix(const partition& lambda, int i) {
  detail::check_generator(lambda, i);
  return matrix_of(lambda, [&](const irrep_vector& v) { return act_simple<Rep>(lambda, i, v); });
}

}  // namespace altgt
