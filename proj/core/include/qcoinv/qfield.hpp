#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcoinv {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(q)") {}
};

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Univariate polynomial in q with integer coefficients, dense little-endian
/// storage without trailing zeros (so the zero polynomial is the empty vector).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);
    explicit IntPoly(mpz_class c);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly q_power(int e);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& leading() const;
    mpz_class coeff(int i) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    mpz_class content() const;        // gcd of coefficients, >= 0
    IntPoly primitive_part() const;   // sign of leading coefficient preserved

    // Exact division; throws std::logic_error if b does not divide a over Z.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
    // Remainder sequence step: repeatedly scales a by leading(b) so each
    // reduction stays integral.  Only the primitive part is meaningful.
    static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
    // gcd over Z, canonical with positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    mpq_class eval(const mpq_class& q0) const;

    // Number of nonzero coefficients.
    int term_count() const;

    std::string str() const;
    static IntPoly parse(std::string_view s);

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Element of the coefficient field Q(q): a reduced fraction of integer
/// polynomials.  Canonical form: denominator nonzero with positive leading
/// coefficient, gcd(numerator, denominator) = 1 over Z (polynomial part and
/// integer content both reduced), zero stored as 0/1.  Structural equality of
/// canonical forms coincides with equality in the field.  Values are
/// immutable after construction and safe to share between threads.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    QRat(const mpz_class& c) : num_(c), den_(1) {}
    QRat(const mpq_class& c);
    QRat(IntPoly num, IntPoly den);

    static QRat q_power(int e) { return QRat(IntPoly::q_power(e), IntPoly(1), canonical_tag{}); }
    static QRat q() { return q_power(1); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QRat operator-() const { return QRat(-num_, den_, canonical_tag{}); }
    QRat inverse() const;

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Specialization at a rational value of q.  Throws pole_error when the
    // denominator vanishes at q0; a pole is "not specializable", never zero.
    mpq_class eval(const mpq_class& q0) const;

    std::string str() const;
    static QRat parse(std::string_view s);

private:
    struct canonical_tag {};
    QRat(IntPoly num, IntPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

}  // namespace qcoinv
