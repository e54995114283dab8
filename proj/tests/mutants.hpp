#pragma once

// Deliberately broken policies for checking that the verification suites
// notice faults.

#include "altgt/altgt.hpp"

namespace altgt::mutant {

/// Young's rule with the same-column case returning +v_T.
struct column_sign_flip {
  static irrep_vector act_basis(const standard_tableau& t, int i) {
    const cell a = t.position(i);
    const cell b = t.position(i + 1);
    if (a.col == b.col) return irrep_vector::basis(t);
    return young_orthogonal::act_basis(t, i);
  }
};

/// Young's rule with sqrt(1 - r^-2) replaced by 1 - r^-2.
struct unsquared_offdiagonal {
  static irrep_vector act_basis(const standard_tableau& t, int i) {
    const cell a = t.position(i);
    const cell b = t.position(i + 1);
    if (a.row == b.row || a.col == b.col) return young_orthogonal::act_basis(t, i);
    const rational r = axial_distance(t, i);
    irrep_vector out(t.shape());
    out.add(t, scalar(1 / r));
    out.add(swap_adjacent(t, i), scalar(1 - 1 / (r * r)));
    return out;
  }
};

/// The associator without the permutation sign.
struct unsigned_associator {
  static scalar coeff(const partition& lambda, const standard_tableau&) {
    return i_power((lambda.size() - diagonal_length(lambda)) / 2);
  }
};

/// The associator with every coefficient negated. Still an involution that
/// anticommutes with Young's matrices, so only the normalization table sees it.
struct negated_associator {
  static scalar coeff(const partition& lambda, const standard_tableau& t) { return -assoc_coeff(lambda, t); }
};

}  // namespace altgt::mutant
