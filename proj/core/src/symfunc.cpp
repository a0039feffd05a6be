#include "qcoinv/symfunc.hpp"

#include "qcoinv/heckeops.hpp"

#include <algorithm>
#include <set>

namespace qcoinv {

namespace {
// all distinct rearrangements of lambda padded with zeros to `width`,
// embedded as exponent vectors of length nvars
std::vector<Monomial> orbit_monomials(const Partition& lambda, int width, int nvars) {
    std::vector<Monomial> out;
    if (lambda.length() > width) return out;
    std::vector<int> e(static_cast<size_t>(width), 0);
    std::copy(lambda.parts.begin(), lambda.parts.end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        std::vector<int> full(static_cast<size_t>(nvars), 0);
        std::copy(e.begin(), e.end(), full.begin());
        out.push_back(Monomial(std::move(full)));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}
}  // namespace

MPoly monomial_sym(const Partition& lambda, int nvars) {
    std::vector<MPoly::Term> terms;
    for (Monomial& m : orbit_monomials(lambda, nvars, nvars)) terms.emplace_back(std::move(m), QRat(1));
    return MPoly::from_terms(nvars, std::move(terms));
}

MPoly elementary_sym(int d, int nvars) {
    if (d < 0) throw std::invalid_argument("elementary_sym requires d >= 0");
    if (d == 0) return MPoly::constant(nvars, QRat(1));
    if (d > nvars) return MPoly::zero(nvars);
    return monomial_sym(Partition(std::vector<int>(static_cast<size_t>(d), 1)), nvars);
}

QRat homogeneous_eval(int d, std::span<const QRat> values) {
    if (d < 0) throw std::invalid_argument("homogeneous_eval requires d >= 0");
    // h[j] = h_j of the values consumed so far
    std::vector<QRat> h(static_cast<size_t>(d) + 1);
    h[0] = QRat(1);
    for (const QRat& v : values)
        for (int j = 1; j <= d; ++j) h[static_cast<size_t>(j)] += v * h[static_cast<size_t>(j - 1)];
    return h[static_cast<size_t>(d)];
}

QRat elementary_eval(int d, std::span<const QRat> values) {
    if (d < 0) throw std::invalid_argument("elementary_eval requires d >= 0");
    if (d > static_cast<int>(values.size())) return QRat();
    std::vector<QRat> e(static_cast<size_t>(d) + 1);
    e[0] = QRat(1);
    for (const QRat& v : values)
        for (int j = d; j >= 1; --j) e[static_cast<size_t>(j)] += v * e[static_cast<size_t>(j - 1)];
    return e[static_cast<size_t>(d)];
}

MPoly hall_littlewood_p(int d, int i, int nvars) {
    if (d < 1) throw std::invalid_argument("hall_littlewood_p requires d >= 1");
    if (i < 1 || i > nvars) throw std::invalid_argument("hall_littlewood_p variable range out of bounds");
    QRat one_minus_q = QRat(1) - QRat::q();
    MPoly out = MPoly::zero(nvars);
    for (const Partition& lambda : partitions(d)) {
        if (lambda.length() > i) continue;
        QRat c(1);
        for (int j = 1; j < lambda.length(); ++j) c *= one_minus_q;
        std::vector<MPoly::Term> terms;
        for (Monomial& m : orbit_monomials(lambda, i, nvars)) terms.emplace_back(std::move(m), c);
        out += MPoly::from_terms(nvars, std::move(terms));
    }
    return out;
}

MPoly hall_littlewood_p_gf(int d, int i, int nvars) {
    if (d < 1) throw std::invalid_argument("hall_littlewood_p_gf requires d >= 1");
    if (i < 1 || i > nvars) throw std::invalid_argument("hall_littlewood_p_gf variable range out of bounds");
    // truncated series in t with MPoly coefficients
    std::vector<MPoly> series(static_cast<size_t>(d) + 1, MPoly::zero(nvars));
    series[0] = MPoly::constant(nvars, QRat(1));
    QRat q = QRat::q();
    for (int j = 1; j <= i; ++j) {
        MPoly xj = MPoly::variable(j, nvars);
        // multiply by (1 - q x_j t)
        std::vector<MPoly> num = series;
        for (int m = d; m >= 1; --m) num[static_cast<size_t>(m)] -= (q * xj) * series[static_cast<size_t>(m - 1)];
        // multiply by 1/(1 - x_j t): cumulative prefix
        for (int m = 1; m <= d; ++m) num[static_cast<size_t>(m)] += xj * num[static_cast<size_t>(m - 1)];
        series = std::move(num);
    }
    QRat inv = QRat(1) / (QRat(1) - q);
    return inv * series[static_cast<size_t>(d)];
}

WeakComposition skip_composition(const std::vector<int>& subset, int n) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1 || s[j] > n) throw std::invalid_argument("subset entry out of range");
        if (j > 0 && s[j] == s[j - 1]) throw std::invalid_argument("duplicate subset entry");
    }
    std::vector<int> gamma(static_cast<size_t>(n), 0);
    for (size_t j = 0; j < s.size(); ++j)
        gamma[static_cast<size_t>(s[j] - 1)] = s[j] - static_cast<int>(j) - 1 + 1;
    return WeakComposition(std::move(gamma));
}

MPoly demazure_character(const WeakComposition& gamma) {
    int n = gamma.n();
    std::vector<int> g = gamma.entries;
    // unwind the recursion: record the ascent positions used, then apply
    // pi across them in reverse
    std::vector<int> ops;
    while (true) {
        int i = 0;
        for (int j = 1; j < n; ++j) {
            if (g[static_cast<size_t>(j - 1)] < g[static_cast<size_t>(j)]) {
                i = j;
                break;
            }
        }
        if (i == 0) break;
        ops.push_back(i);
        std::swap(g[static_cast<size_t>(i - 1)], g[static_cast<size_t>(i)]);
    }
    MPoly kappa = MPoly::monomial(Monomial(g));
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) kappa = isobaric(*it, kappa);
    return kappa;
}

}  // namespace qcoinv
