#include "qcoinv/repn.hpp"

#include "qcoinv/heckeops.hpp"
#include "qcoinv/osp.hpp"

#include <json.hpp>

#include <algorithm>

namespace qcoinv {

std::string GradedSchurExpansion::to_json() const {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [shape, c] : coeffs) obj[shape.str()] = c.str();
    return obj.dump(2);
}

GradedSchurExpansion graded_frobenius_formula(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("graded_frobenius_formula requires 1 <= k <= n");
    GradedSchurExpansion e;
    e.n = n;
    e.k = k;
    for (const SYTableau& t : enumerate_syt(n)) {
        DescentStats s = des_maj(t);
        TPoly c = TPoly::t_power(s.maj) * gaussian_binomial(n - s.des - 1, n - k);
        if (c.is_zero()) continue;
        e.coeffs[t.shape()] += c;
    }
    return e;
}

TPoly hilbert_from_frobenius(const GradedSchurExpansion& expansion) {
    TPoly h;
    for (const auto& [shape, c] : expansion.coeffs) h += c * TPoly(syt_count(shape));
    return h;
}

GradedMatrixAction build_matrix_action(int n, int k, const GroebnerBasis& basis) {
    GradedMatrixAction action;
    action.n = n;
    action.k = k;
    std::vector<Monomial> stds = standard_monomials(basis);
    int maxdeg = 0;
    for (const auto& m : stds) maxdeg = std::max(maxdeg, m.degree());
    action.basis.assign(static_cast<size_t>(maxdeg) + 1, {});
    for (const auto& m : stds) action.basis[static_cast<size_t>(m.degree())].push_back(m);

    action.gens.resize(action.basis.size());
    for (size_t d = 0; d < action.basis.size(); ++d) {
        const auto& bd = action.basis[d];
        // index of each degree-d standard monomial
        auto index_of = [&](const Monomial& m) -> size_t {
            for (size_t r = 0; r < bd.size(); ++r)
                if (bd[r] == m) return r;
            throw std::logic_error("normal form left the standard monomial basis");
        };
        for (int i = 1; i < n; ++i) {
            QMatrix mat(bd.size(), std::vector<QRat>(bd.size()));
            for (size_t col = 0; col < bd.size(); ++col) {
                MPoly img = normal_form(hecke_T(i, MPoly::monomial(bd[col])), basis);
                for (const auto& [m, c] : img.terms()) {
                    if (m.degree() != static_cast<int>(d))
                        throw std::logic_error("graded piece not preserved; ideal is not homogeneous");
                    mat[index_of(m)][col] = c;
                }
            }
            action.gens[d].push_back(std::move(mat));
        }
    }
    return action;
}

namespace {

QMatrix identity_matrix(size_t dim) {
    QMatrix m(dim, std::vector<QRat>(dim));
    for (size_t i = 0; i < dim; ++i) m[i][i] = QRat(1);
    return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    size_t dim = a.size();
    QMatrix r(dim, std::vector<QRat>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t l = 0; l < dim; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

bool mat_equal(const QMatrix& a, const QMatrix& b) { return a == b; }

bool mat_is_zero(const QMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

using RMatrix = std::vector<std::vector<mpq_class>>;

RMatrix specialize_q1(const QMatrix& m) {
    RMatrix r(m.size(), std::vector<mpq_class>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r[i][j] = m[i][j].eval(1);
    return r;
}

RMatrix rmat_mul(const RMatrix& a, const RMatrix& b) {
    size_t dim = a.size();
    RMatrix r(dim, std::vector<mpq_class>(dim, mpq_class(0)));
    for (size_t i = 0; i < dim; ++i)
        for (size_t l = 0; l < dim; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < dim; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

}  // namespace

Report check_matrix_relations(const GradedMatrixAction& action) {
    Report rep;
    rep.name = "matrix-relations";
    QRat q = QRat::q();
    for (size_t d = 0; d < action.gens.size(); ++d) {
        const auto& gens = action.gens[d];
        size_t dim = action.basis[d].size();
        if (dim == 0) continue;
        QMatrix id = identity_matrix(dim);
        for (size_t i = 0; i < gens.size(); ++i) {
            QMatrix sq = mat_mul(gens[i], gens[i]);
            QMatrix lhs = sq;
            for (size_t r = 0; r < dim; ++r)
                for (size_t c = 0; c < dim; ++c) {
                    lhs[r][c] += (QRat(1) - q) * gens[i][r][c];
                    if (r == c) lhs[r][c] -= q;
                }
            rep.add("quadratic(M_" + std::to_string(i + 1) + ")", "degree " + std::to_string(d),
                    mat_is_zero(lhs));
        }
        for (size_t i = 0; i + 1 < gens.size(); ++i) {
            QMatrix lhs = mat_mul(gens[i], mat_mul(gens[i + 1], gens[i]));
            QMatrix rhs = mat_mul(gens[i + 1], mat_mul(gens[i], gens[i + 1]));
            rep.add("braid(M_" + std::to_string(i + 1) + ",M_" + std::to_string(i + 2) + ")",
                    "degree " + std::to_string(d), mat_equal(lhs, rhs));
        }
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 2; j < gens.size(); ++j)
                rep.add("commute(M_" + std::to_string(i + 1) + ",M_" + std::to_string(j + 1) + ")",
                        "degree " + std::to_string(d),
                        mat_equal(mat_mul(gens[i], gens[j]), mat_mul(gens[j], gens[i])));
    }
    return rep;
}

TPoly character_at_q1(const GradedMatrixAction& action, const std::vector<int>& w) {
    ReducedWord word = ReducedWord::for_permutation(w);
    TPoly out;
    for (size_t d = 0; d < action.gens.size(); ++d) {
        size_t dim = action.basis[d].size();
        if (dim == 0) continue;
        RMatrix prod(dim, std::vector<mpq_class>(dim, mpq_class(0)));
        for (size_t i = 0; i < dim; ++i) prod[i][i] = 1;
        for (int letter : word.letters())
            prod = rmat_mul(prod, specialize_q1(action.gens[d][static_cast<size_t>(letter - 1)]));
        mpq_class trace = 0;
        for (size_t i = 0; i < dim; ++i) trace += prod[i][i];
        if (trace.get_den() != 1) throw std::logic_error("non-integer character value");
        out += TPoly::t_power(static_cast<int>(d), trace.get_num().get_si());
    }
    return out;
}

namespace {
long long mn_beta(std::vector<int> beta, const std::vector<int>& mu, size_t mu_pos) {
    if (mu_pos == mu.size()) return 1;
    int m = mu[mu_pos];
    long long total = 0;
    for (size_t idx = 0; idx < beta.size(); ++idx) {
        int b = beta[idx];
        if (b < m) continue;
        int target = b - m;
        bool occupied = false;
        int between = 0;
        for (int other : beta) {
            if (other == target) occupied = true;
            if (other > target && other < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[idx] = target;
        long long sign = (between % 2 == 0) ? 1 : -1;
        total += sign * mn_beta(std::move(next), mu, mu_pos + 1);
    }
    return total;
}
}  // namespace

long long murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("partition sizes must match");
    if (lambda.size() == 0) return 1;
    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<size_t>(i)] = lambda.parts[static_cast<size_t>(i)] + (len - 1 - i);
    return mn_beta(std::move(beta), mu.parts, 0);
}

long long permutation_character_osp(int n, int k, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation size mismatch");
    long long fixed = 0;
    for (const auto& sigma : enumerate_osp(n, k))
        if (sigma.relabel(w) == sigma) ++fixed;
    return fixed;
}

std::vector<int> class_representative(const Partition& mu) {
    std::vector<int> w;
    int start = 1;
    for (int part : mu.parts) {
        // cycle start -> start+1 -> ... -> start+part-1 -> start
        for (int j = 0; j < part; ++j) w.push_back(start + (j + 1) % part);
        start += part;
    }
    return w;
}

}  // namespace qcoinv
