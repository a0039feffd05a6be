#include "qcoinv/qfield.hpp"

#include <cctype>
#include <utility>

namespace qcoinv {

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::q_power(int e) {
    IntPoly p;
    p.c_.assign(static_cast<size_t>(e) + 1, mpz_class(0));
    p.c_.back() = 1;
    return p;
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] -= b.c_[i];
    }
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        g = ::gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class c = content();
    if (c == 1) return *this;
    IntPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return IntPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::logic_error("inexact polynomial division");
    std::vector<mpz_class> rem = a.c_;
    std::vector<mpz_class> quo(static_cast<size_t>(da - db) + 1, mpz_class(0));
    const mpz_class& lb = b.c_.back();
    for (int i = da - db; i >= 0; --i) {
        mpz_class& top = rem[static_cast<size_t>(i + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("inexact polynomial division");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i + j)] -= t * b.c_[static_cast<size_t>(j)];
        quo[static_cast<size_t>(i)] = std::move(t);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw division_by_zero();
    IntPoly r = a;
    const int db = b.degree();
    const mpz_class& lb = b.c_.back();
    while (!r.is_zero() && r.degree() >= db) {
        const int d = r.degree() - db;
        mpz_class lr = r.c_.back();
        std::vector<mpz_class> next(static_cast<size_t>(r.degree()), mpz_class(0));
        // next = lb*r - lr*q^d*b, degree drops by at least one
        for (int i = 0; i < r.degree(); ++i) next[static_cast<size_t>(i)] = lb * r.c_[static_cast<size_t>(i)];
        for (int j = 0; j < db; ++j) next[static_cast<size_t>(d + j)] -= lr * b.c_[static_cast<size_t>(j)];
        r = IntPoly(std::move(next));
    }
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    auto positive = [](IntPoly p) {
        if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    mpz_class c = ::gcd(a.content(), b.content());
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly r = pseudo_rem(A, B).primitive_part();
        A = std::move(B);
        B = std::move(r);
    }
    return IntPoly(std::move(c)) * positive(std::move(A));
}

mpq_class IntPoly::eval(const mpq_class& q0) const {
    mpq_class v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * q0 + mpq_class(c_[i]);
    v.canonicalize();
    return v;
}

int IntPoly::term_count() const {
    int n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        const bool neg = sgn(c) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        mpz_class a = abs(c);
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected integer in '" + std::string(s) + "'");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }
};

int parse_exponent(Cursor& cur) {
    if (!cur.consume('^')) return 1;
    mpz_class e = cur.integer();
    if (e < 0 || e > 1000000) throw parse_error("exponent out of range");
    return static_cast<int>(e.get_si());
}

IntPoly parse_poly(Cursor& cur) {
    std::vector<mpz_class> coeffs;
    auto add = [&](int e, const mpz_class& c) {
        if (e >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(e) + 1, mpz_class(0));
        coeffs[static_cast<size_t>(e)] += c;
    };
    bool first = true;
    while (true) {
        int sign = 1;
        if (cur.consume('-')) {
            sign = -1;
        } else if (!cur.consume('+') && !first) {
            break;
        }
        cur.skip_ws();
        if (cur.eof()) throw parse_error("trailing operator in polynomial");
        mpz_class c = 1;
        bool has_coeff = false;
        char p = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            c = cur.integer();
            has_coeff = true;
        }
        if (has_coeff && !cur.consume('*')) {
            add(0, sign * c);
        } else {
            if (!cur.consume('q')) {
                if (has_coeff) throw parse_error("expected q after '*'");
                throw parse_error("expected term");
            }
            add(parse_exponent(cur), sign * c);
        }
        first = false;
        if (cur.eof()) break;
        char nxt = cur.peek();
        if (nxt != '+' && nxt != '-') break;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view s) {
    Cursor cur{s};
    IntPoly p = parse_poly(cur);
    if (!cur.eof()) throw parse_error("unexpected trailing input in '" + std::string(s) + "'");
    return p;
}

QRat::QRat(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {
    // mpq_class is already canonical with positive denominator
}

QRat::QRat(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QRat::normalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
    }
    if (sgn(den_.leading()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::inverse() const {
    if (is_zero()) throw division_by_zero();
    QRat r(den_, num_, canonical_tag{});
    if (sgn(r.den_.leading()) < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    // cross-cancel before multiplying to keep the final gcd cheap
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly n = IntPoly::div_exact(a.num_, g1) * IntPoly::div_exact(b.num_, g2);
    IntPoly d = IntPoly::div_exact(a.den_, g2) * IntPoly::div_exact(b.den_, g1);
    return QRat(std::move(n), std::move(d));
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

mpq_class QRat::eval(const mpq_class& q0) const {
    mpq_class d = den_.eval(q0);
    if (d == 0) throw pole_error("pole at q = " + q0.get_str() + " in " + str());
    mpq_class v = num_.eval(q0) / d;
    v.canonicalize();
    return v;
}

std::string QRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat QRat::parse(std::string_view s) {
    // printed form is either a bare integer polynomial or "(num)/(den)"
    size_t split = s.find(")/(");
    if (split != std::string_view::npos) {
        Cursor lead{s};
        if (lead.consume('(')) {
            std::string_view inner = s.substr(lead.pos, split - lead.pos);
            std::string_view rest = s.substr(split + 3);
            size_t close = rest.rfind(')');
            if (close == std::string_view::npos) throw parse_error("unbalanced parentheses in '" + std::string(s) + "'");
            std::string_view tail = rest.substr(close + 1);
            for (char c : tail)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    throw parse_error("trailing input in '" + std::string(s) + "'");
            return QRat(IntPoly::parse(inner), IntPoly::parse(rest.substr(0, close)));
        }
    }
    // tolerate a fully parenthesized single polynomial, e.g. "(q + 1)"
    Cursor cur{s};
    if (cur.consume('(')) {
        size_t open = cur.pos;
        size_t close = s.rfind(')');
        if (close == std::string_view::npos || close < open)
            throw parse_error("unbalanced parentheses in '" + std::string(s) + "'");
        std::string_view tail = s.substr(close + 1);
        for (char c : tail)
            if (!std::isspace(static_cast<unsigned char>(c)))
                throw parse_error("trailing input in '" + std::string(s) + "'");
        return QRat(IntPoly::parse(s.substr(open, close - open)), IntPoly(1));
    }
    return QRat(IntPoly::parse(s), IntPoly(1));
}

}  // namespace qcoinv
