#include "qcoinv/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace qcoinv {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_) {
        if (x < 0) throw std::invalid_argument("negative exponent in monomial");
        deg_ += x;
    }
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }

Monomial Monomial::var(int i, int nvars, int power) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(i - 1)) = power;
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    r.deg_ += b.deg_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] -= b.e_[i];
        if (r.e_[i] < 0) throw std::logic_error("inexact monomial quotient");
    }
    r.deg_ -= b.deg_;
    return r;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > b.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    Monomial r = a;
    r.deg_ = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

Monomial Monomial::swap_vars(int i) const {
    Monomial r = *this;
    std::swap(r.e_.at(static_cast<size_t>(i - 1)), r.e_.at(static_cast<size_t>(i)));
    return r;
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 1; i <= nvars(); ++i) {
        int e = exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string Monomial::str_full() const {
    std::string out;
    for (int i = 1; i <= nvars(); ++i) {
        if (i > 1) out += "*";
        out += "x" + std::to_string(i) + "^" + std::to_string(exponent(i));
    }
    return out;
}

bool neglex_less(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea.size() != eb.size()) throw std::invalid_argument("variable-count mismatch");
    for (size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] < eb[i];
    return false;
}

bool deg_neglex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return neglex_less(a, b);
}

std::string TermOrder::name() const {
    return kind == TermOrderKind::neglex ? "neglex" : "deg-neglex";
}

TermOrder TermOrder::from_name(std::string_view name) {
    if (name == "neglex") return neglex();
    if (name == "deg-neglex") return deg_neglex();
    throw parse_error("unknown term order '" + std::string(name) + "'");
}

namespace {

// storage comparator: strictly decreasing deg-neglex
struct StorageGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return deg_neglex_less(b, a); }
};

struct OrderGreater {
    TermOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.less(b, a); }
};

}  // namespace

MPoly MPoly::zero(int nvars) {
    MPoly p;
    p.nvars_ = nvars;
    return p;
}

MPoly MPoly::constant(int nvars, QRat c) {
    MPoly p = zero(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(nvars), std::move(c));
    return p;
}

MPoly MPoly::variable(int i, int nvars) { return monomial(Monomial::var(i, nvars)); }

MPoly MPoly::monomial(Monomial m, QRat c) {
    MPoly p = zero(m.nvars());
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
    for (const auto& [m, c] : terms)
        if (m.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return deg_neglex_less(b.first, a.first); });
    MPoly p = zero(nvars);
    for (auto& [m, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == m) {
            p.terms_.back().second += c;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!c.is_zero()) {
            p.terms_.emplace_back(std::move(m), std::move(c));
        }
    }
    return p;
}

QRat MPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return deg_neglex_less(key, t.first);
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return QRat();
}

int MPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.front().first.degree();
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    return terms_.back().first.degree() == d;  // storage order is degree-compatible
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable-count mismatch");
    MPoly r = MPoly::zero(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    StorageGreater gt;
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first == ib->first) {
            QRat c = ia->second + ib->second;
            if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia, ++ib;
        } else if (gt(ia->first, ib->first)) {
            r.terms_.push_back(*ia++);
        } else {
            r.terms_.push_back(*ib++);
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable-count mismatch");
    std::map<Monomial, QRat, StorageGreater> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), ca * cb);
            else
                it->second += ca * cb;
        }
    MPoly r = MPoly::zero(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
    return r;
}

MPoly operator*(const QRat& c, const MPoly& f) {
    if (c.is_zero()) return MPoly::zero(f.nvars_);
    MPoly r = f;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

const MPoly::Term& MPoly::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
    if (ord.kind == TermOrderKind::deg_neglex) return terms_.front();
    return *std::max_element(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.less(a.first, b.first);
    });
}

const Monomial& MPoly::leading_monomial(const TermOrder& ord) const { return leading_term(ord).first; }

const QRat& MPoly::leading_coeff(const TermOrder& ord) const { return leading_term(ord).second; }

MPoly MPoly::top_component() const {
    if (terms_.empty()) throw std::invalid_argument("top component of zero polynomial");
    int d = total_degree();
    MPoly r = zero(nvars_);
    for (const auto& t : terms_) {
        if (t.first.degree() != d) break;  // storage order is degree-compatible
        r.terms_.push_back(t);
    }
    return r;
}

namespace {
QRat qrat_pow(const QRat& base, int e) {
    QRat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace

QRat MPoly::evaluate(std::span<const QRat> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    QRat total;
    for (const auto& [m, c] : terms_) {
        QRat v = c;
        for (int i = 1; i <= nvars_; ++i) {
            int e = m.exponent(i);
            if (e > 0) v *= qrat_pow(point[static_cast<size_t>(i - 1)], e);
        }
        total += v;
    }
    return total;
}

MPoly MPoly::eval_q(const mpq_class& q0) const {
    MPoly r = zero(nvars_);
    for (const auto& [m, c] : terms_) {
        mpq_class v = c.eval(q0);
        if (v != 0) r.terms_.emplace_back(m, QRat(v));
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs;
        if (c.den().is_one()) {
            cs = c.num().str();
            if (c.num().term_count() > 1) cs = "(" + cs + ")";
        } else {
            cs = c.str();
        }
        out += cs + " * " + m.str_full();
    }
    return out;
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
            out.push_back(s.substr(start, i - start));
            i += sep.size() - 1;
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// "x3^2" or "x3"; returns (index, exponent)
std::pair<int, int> parse_var_power(std::string_view tok) {
    tok = trim_view(tok);
    if (tok.empty() || tok[0] != 'x') throw parse_error("expected variable in '" + std::string(tok) + "'");
    size_t caret = tok.find('^');
    std::string idx(tok.substr(1, caret == std::string_view::npos ? caret : caret - 1));
    int exp = 1;
    if (caret != std::string_view::npos) exp = std::stoi(std::string(tok.substr(caret + 1)));
    if (idx.empty()) throw parse_error("missing variable index");
    return {std::stoi(idx), exp};
}

}  // namespace

MPoly MPoly::parse(std::string_view s, int expect_nvars) {
    s = trim_view(s);
    if (s == "0") {
        if (expect_nvars < 0) throw parse_error("cannot infer variable count of zero polynomial");
        return MPoly::zero(expect_nvars);
    }
    struct RawTerm {
        QRat coeff;
        std::vector<std::pair<int, int>> powers;
    };
    std::vector<RawTerm> raw;
    int nvars = expect_nvars;
    for (std::string_view piece : split_top_level(s, " + ")) {
        piece = trim_view(piece);
        if (piece.empty()) throw parse_error("empty term in '" + std::string(s) + "'");
        auto parts = split_top_level(piece, " * ");
        RawTerm t;
        std::string_view mono;
        if (parts.size() == 2) {
            t.coeff = QRat::parse(parts[0]);
            mono = trim_view(parts[1]);
        } else if (parts.size() == 1) {
            if (piece[0] == 'x') {
                t.coeff = QRat(1);
                mono = piece;
            } else {
                t.coeff = QRat::parse(piece);
            }
        } else {
            throw parse_error("malformed term '" + std::string(piece) + "'");
        }
        if (!mono.empty()) {
            size_t pos = 0;
            while (pos <= mono.size()) {
                size_t next = mono.find('*', pos);
                std::string_view tok = mono.substr(pos, next == std::string_view::npos ? next : next - pos);
                auto [idx, exp] = parse_var_power(tok);
                t.powers.emplace_back(idx, exp);
                nvars = std::max(nvars, idx);
                if (next == std::string_view::npos) break;
                pos = next + 1;
            }
        }
        raw.push_back(std::move(t));
    }
    if (nvars < 0) throw parse_error("cannot infer variable count of '" + std::string(s) + "'");
    std::vector<Term> terms;
    for (auto& t : raw) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        for (auto [idx, exp] : t.powers) {
            if (idx < 1 || idx > nvars) throw parse_error("variable index out of range");
            e[static_cast<size_t>(idx - 1)] += exp;
        }
        terms.emplace_back(Monomial(std::move(e)), std::move(t.coeff));
    }
    MPoly p = from_terms(nvars, std::move(terms));
    if (expect_nvars >= 0 && p.nvars() != expect_nvars) throw parse_error("variable count mismatch in parse");
    return p;
}

namespace {

struct Reducer {
    std::span<const MPoly> divisors;
    TermOrder ord;
    std::vector<Monomial> lms;
    std::vector<QRat> lcs;

    explicit Reducer(std::span<const MPoly> ds, const TermOrder& o) : divisors(ds), ord(o) {
        lms.reserve(ds.size());
        lcs.reserve(ds.size());
        for (const auto& d : ds) {
            if (d.is_zero()) throw std::invalid_argument("zero divisor in division");
            lms.push_back(d.leading_monomial(o));
            lcs.push_back(d.leading_coeff(o));
        }
    }

    // returns remainder; if quotients != nullptr, also tracks them
    MPoly run(const MPoly& f, std::vector<MPoly>* quotients) const {
        std::map<Monomial, QRat, OrderGreater> work{OrderGreater{ord}};
        for (const auto& [m, c] : f.terms()) work.emplace(m, c);
        std::vector<MPoly::Term> rem;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial m = it->first;
            QRat c = std::move(it->second);
            work.erase(it);
            if (c.is_zero()) continue;
            size_t j = 0;
            for (; j < lms.size(); ++j)
                if (Monomial::divides(lms[j], m)) break;
            if (j == lms.size()) {
                rem.emplace_back(std::move(m), std::move(c));
                continue;
            }
            Monomial u = m / lms[j];
            QRat factor = c / lcs[j];
            if (quotients)
                (*quotients)[j] += MPoly::monomial(u, factor);
            for (const auto& [mg, cg] : divisors[j].terms()) {
                if (mg == lms[j]) continue;  // cancels the popped term
                Monomial key = mg * u;
                auto [pos, inserted] = work.emplace(key, QRat());
                pos->second -= factor * cg;
                if (pos->second.is_zero()) work.erase(pos);
            }
        }
        return MPoly::from_terms(f.nvars(), std::move(rem));
    }
};

}  // namespace

DivisionResult divide(const MPoly& f, std::span<const MPoly> divisors, const TermOrder& ord) {
    Reducer red(divisors, ord);
    DivisionResult res;
    res.quotients.assign(divisors.size(), MPoly::zero(f.nvars()));
    res.remainder = red.run(f, &res.quotients);
    return res;
}

MPoly reduce(const MPoly& f, std::span<const MPoly> divisors, const TermOrder& ord) {
    return Reducer(divisors, ord).run(f, nullptr);
}

}  // namespace qcoinv
