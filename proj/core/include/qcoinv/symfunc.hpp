#pragma once

#include "qcoinv/combinat.hpp"
#include "qcoinv/polyring.hpp"

#include <span>
#include <vector>

namespace qcoinv {

/// Monomial symmetric polynomial m_lambda(x_1,...,x_n); zero when the
/// partition has more parts than variables.
MPoly monomial_sym(const Partition& lambda, int nvars);

/// Elementary symmetric polynomial e_d(x_1,...,x_n).
MPoly elementary_sym(int d, int nvars);

/// Complete homogeneous sum h_d evaluated at scalar arguments.
QRat homogeneous_eval(int d, std::span<const QRat> values);

/// e_d evaluated at scalar arguments.
QRat elementary_eval(int d, std::span<const QRat> values);

/// Hall-Littlewood P_d(x_1,...,x_i; q) embedded in an n-variable ring,
/// via the monomial expansion sum over lambda |- d of
/// (1-q)^(len(lambda)-1) m_lambda(x_1,...,x_i).  Requires d >= 1.
MPoly hall_littlewood_p(int d, int i, int nvars);

/// Independent route to the same polynomial: coefficient of t^d in
/// prod_{j<=i} (1 - q x_j t)/(1 - x_j t), divided by (1-q).
MPoly hall_littlewood_p_gf(int d, int i, int nvars);

/// Skip composition of a subset S of [n]: entry s_j - j + 1 at position
/// s_j, zero elsewhere.
WeakComposition skip_composition(const std::vector<int>& subset, int n);

/// Key polynomial of a weak composition: x^gamma for weakly decreasing
/// gamma, otherwise pi_i applied across the leftmost ascent.
MPoly demazure_character(const WeakComposition& gamma);

}  // namespace qcoinv
