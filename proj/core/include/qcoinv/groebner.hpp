#pragma once

#include "qcoinv/combinat.hpp"
#include "qcoinv/heckeops.hpp"
#include "qcoinv/osp.hpp"
#include "qcoinv/polyring.hpp"
#include "qcoinv/report.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qcoinv {

struct Ideal {
    int nvars = 0;
    std::vector<MPoly> gens;
};

/// Basis with an attached term order.  When `interreduced` the basis is the
/// reduced basis: monic elements, no leading monomial divides another, no
/// tail monomial divisible by any leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(int nvars, std::vector<MPoly> elements, TermOrder ord, bool interreduced);

    int nvars() const { return nvars_; }
    const TermOrder& order() const { return ord_; }
    const std::vector<MPoly>& elements() const { return elems_; }
    const std::vector<Monomial>& leading_monomials() const { return lms_; }
    bool interreduced() const { return interreduced_; }

private:
    int nvars_;
    TermOrder ord_;
    std::vector<MPoly> elems_;
    std::vector<Monomial> lms_;
    bool interreduced_;
};

struct BuchbergerOptions {
    long pair_budget = 200000;  // processed S-pairs before resource_error
};

/// Buchberger's algorithm with the coprime and chain criteria and normal
/// pair selection; returns the reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& ord, const BuchbergerOptions& opts = {});

/// Unique remainder modulo a Groebner basis; zero exactly on ideal members.
MPoly normal_form(const MPoly& f, const GroebnerBasis& basis);

struct GroebnerCheck {
    bool groebner = false;
    bool minimal = false;
    Report report;
};

/// Reduces every S-pair of the candidate set; also reports minimality
/// (no leading monomial divides another).
GroebnerCheck is_groebner(std::span<const MPoly> candidate, const TermOrder& ord);

/// Monomials outside the leading-monomial ideal.  Without a degree cap the
/// ideal must be zero-dimensional (a pure power of every variable appears
/// among the leading monomials).
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis,
                                         std::optional<int> degree_cap = std::nullopt);

/// Graded count of standard monomials; basis elements must be homogeneous.
TPoly hilbert_function(const GroebnerBasis& basis);

/// Reduced deg-neglex basis of the ideal of polynomials vanishing on the
/// given distinct points (Buchberger-Moller: scan monomials in increasing
/// order, each linear dependence of evaluation vectors yields a basis
/// element).  Quotient dimension equals the number of points.
GroebnerBasis vanishing_ideal(std::span<const QPoint> points);

/// Ideal generated by top-degree forms of the vanishing ideal.  Top forms
/// of a degree-compatible Groebner basis generate it, which is why the
/// vanishing basis is computed under deg-neglex.
GroebnerBasis top_component_ideal(std::span<const QPoint> points, const BuchbergerOptions& opts = {});

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// normal_form(T_i.g) = 0 for every generator g and every i; by the
/// Leibniz rule this certifies stability of the whole ideal.
Report check_stability(const GroebnerBasis& basis, std::span<const MPoly> gens);

/// Defining generators of the quotient ideal: the Hall-Littlewood
/// polynomials P_k(x_1,...,x_i; q) for i <= n together with the elementary
/// symmetric polynomials e_n,...,e_{n-k+1}.
Ideal coinvariant_ideal(int n, int k);

/// Candidate neglex basis: the same Hall-Littlewood polynomials plus the
/// key polynomials of reversed skip compositions of (n-k+1)-subsets of
/// [n-1].  Each key polynomial's neglex leading monomial is checked against
/// its defining exponent vector; a mismatch throws std::logic_error.
std::vector<MPoly> hl_demazure_basis(int n, int k);

std::vector<std::vector<int>> subsets_of_size(int n, int size);  // subsets of [n]

/// Rank of a matrix over Q(q) by fraction-free-ish Gaussian elimination.
int matrix_rank(std::vector<std::vector<QRat>> rows);

}  // namespace qcoinv
