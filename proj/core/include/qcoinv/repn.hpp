#pragma once

#include "qcoinv/combinat.hpp"
#include "qcoinv/groebner.hpp"

#include <map>

namespace qcoinv {

/// Schur expansion of a graded module: multiplicity of each irreducible as
/// an integer polynomial in the grading variable t.
struct GradedSchurExpansion {
    int n = 0;
    int k = 0;
    std::map<Partition, TPoly> coeffs;

    std::string to_json() const;  // {"(3,1)": "t + t^2 + t^3", ...}
};

/// Tableau-statistic formula: sum over standard Young tableaux of
/// t^maj(T) [n - des(T) - 1 choose n - k]_t at the shape of T.
GradedSchurExpansion graded_frobenius_formula(int n, int k);

/// Graded dimension predicted by an expansion: sum of coefficients
/// weighted by tableau counts of each shape.
TPoly hilbert_from_frobenius(const GradedSchurExpansion& expansion);

using QMatrix = std::vector<std::vector<QRat>>;

/// Matrices of the generators acting on the graded quotient in its
/// standard-monomial basis, one block per degree.
struct GradedMatrixAction {
    int n = 0;
    int k = 0;
    std::vector<std::vector<Monomial>> basis;   // basis[d]: degree-d standard monomials
    std::vector<std::vector<QMatrix>> gens;     // gens[d][i-1]: matrix of T_i in degree d
};

/// Requires the neglex basis of the quotient ideal; each generator matrix
/// is assembled from normal forms of T_i on standard monomials.  The ideal
/// is homogeneous, so mixed-degree images throw std::logic_error.
GradedMatrixAction build_matrix_action(int n, int k, const GroebnerBasis& basis);

/// Quadratic, commutation and braid relations checked on the matrices.
Report check_matrix_relations(const GradedMatrixAction& action);

/// Degree-by-degree trace of the matrices specialized at q = 1 along a
/// reduced word of w.  A pole at q = 1 in any entry throws pole_error.
TPoly character_at_q1(const GradedMatrixAction& action, const std::vector<int>& w);

/// Symmetric group character value chi^lambda(mu) by border-strip removal.
long long murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// Number of k-block ordered set partitions fixed by relabeling through w.
long long permutation_character_osp(int n, int k, const std::vector<int>& w);

/// Permutation with cycles 1..mu_1, mu_1+1..mu_1+mu_2, ... in one-line form.
std::vector<int> class_representative(const Partition& mu);

}  // namespace qcoinv
