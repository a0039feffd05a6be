#pragma once

#include "qcoinv/qfield.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcoinv {

/// Exponent vector of a monomial in x_1,...,x_n with cached total degree.
/// Variable indices in the public API are 1-based throughout the library,
/// matching the usual x_1,...,x_n and T_1,...,T_{n-1} conventions.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);
    static Monomial var(int i, int nvars, int power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // exact quotient; caller must ensure b divides a
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    static bool divides(const Monomial& a, const Monomial& b);  // a | b
    static Monomial lcm(const Monomial& a, const Monomial& b);
    Monomial swap_vars(int i) const;  // exchange x_i and x_{i+1}

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    std::string str() const;          // compact form, e.g. "x1^2*x3", "1"
    std::string str_full() const;     // serialization form "x1^a1*...*xn^an"

private:
    std::vector<int> e_;
    int deg_ = 0;
};

// m < m' in neglex iff at the highest index where the exponents differ the
// exponent of m is smaller; not degree-compatible.
bool neglex_less(const Monomial& a, const Monomial& b);
// total degree first, ties broken by neglex; degree-compatible.
bool deg_neglex_less(const Monomial& a, const Monomial& b);

enum class TermOrderKind { neglex, deg_neglex };

struct TermOrder {
    TermOrderKind kind = TermOrderKind::deg_neglex;

    bool less(const Monomial& a, const Monomial& b) const {
        return kind == TermOrderKind::neglex ? neglex_less(a, b) : deg_neglex_less(a, b);
    }
    bool is_degree_compatible() const { return kind == TermOrderKind::deg_neglex; }

    static TermOrder neglex() { return {TermOrderKind::neglex}; }
    static TermOrder deg_neglex() { return {TermOrderKind::deg_neglex}; }
    std::string name() const;
    static TermOrder from_name(std::string_view name);
    friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

/// Sparse multivariate polynomial over Q(q).  Terms are stored strictly
/// decreasing in deg-neglex; all order-sensitive operations take the term
/// order explicitly.  Values are immutable in spirit: every operation
/// returns a fresh canonical polynomial.
class MPoly {
public:
    using Term = std::pair<Monomial, QRat>;

    MPoly() = default;
    static MPoly zero(int nvars);
    static MPoly constant(int nvars, QRat c);
    static MPoly variable(int i, int nvars);
    static MPoly monomial(Monomial m, QRat c = QRat(1));
    static MPoly from_terms(int nvars, std::vector<Term> terms);  // any order, merged

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    QRat coeff(const Monomial& m) const;

    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
    friend MPoly operator*(const QRat& c, const MPoly& f);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    const Monomial& leading_monomial(const TermOrder& ord) const;  // throws on zero
    const QRat& leading_coeff(const TermOrder& ord) const;
    MPoly top_component() const;  // highest-degree homogeneous part; throws on zero

    QRat evaluate(std::span<const QRat> point) const;
    MPoly eval_q(const mpq_class& q0) const;  // specialize coefficients at q = q0

    std::string str() const;
    static MPoly parse(std::string_view s, int expect_nvars = -1);

private:
    const Term& leading_term(const TermOrder& ord) const;
    int nvars_ = 0;
    std::vector<Term> terms_;
};

struct DivisionResult {
    std::vector<MPoly> quotients;
    MPoly remainder;
};

/// Multivariate division with remainder: f = sum q_i d_i + r where no
/// monomial of r is divisible by any leading monomial of a divisor.
DivisionResult divide(const MPoly& f, std::span<const MPoly> divisors, const TermOrder& ord);
/// Remainder only; same contract, no quotient bookkeeping.
MPoly reduce(const MPoly& f, std::span<const MPoly> divisors, const TermOrder& ord);

}  // namespace qcoinv
