#include "qcoinv/groebner.hpp"

#include "qcoinv/symfunc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcoinv {

GroebnerBasis::GroebnerBasis(int nvars, std::vector<MPoly> elements, TermOrder ord, bool interreduced)
    : nvars_(nvars), ord_(ord), elems_(std::move(elements)), interreduced_(interreduced) {
    lms_.reserve(elems_.size());
    for (const auto& e : elems_) {
        if (e.is_zero()) throw std::invalid_argument("zero element in basis");
        if (e.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch in basis");
        lms_.push_back(e.leading_monomial(ord_));
    }
}

namespace {

MPoly s_polynomial(const MPoly& f, const MPoly& g, const TermOrder& ord) {
    const Monomial& lf = f.leading_monomial(ord);
    const Monomial& lg = g.leading_monomial(ord);
    Monomial l = Monomial::lcm(lf, lg);
    MPoly a = MPoly::monomial(l / lf, QRat(1) / f.leading_coeff(ord));
    MPoly b = MPoly::monomial(l / lg, QRat(1) / g.leading_coeff(ord));
    return a * f - b * g;
}

bool coprime_lms(const Monomial& a, const Monomial& b) {
    for (int i = 1; i <= a.nvars(); ++i)
        if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
    return true;
}

std::vector<MPoly> interreduce(std::vector<MPoly> basis, const TermOrder& ord) {
    // drop elements whose leading monomial is divisible by another's
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < basis.size() && !changed; ++i) {
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                if (Monomial::divides(basis[j].leading_monomial(ord), basis[i].leading_monomial(ord))) {
                    std::vector<MPoly> rest;
                    rest.reserve(basis.size() - 1);
                    for (size_t t = 0; t < basis.size(); ++t)
                        if (t != i) rest.push_back(basis[t]);
                    MPoly r = reduce(basis[i], rest, ord);
                    basis = std::move(rest);
                    if (!r.is_zero()) basis.push_back(std::move(r));
                    changed = true;
                    break;
                }
            }
        }
    }
    // reduce tails
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<MPoly> rest;
        rest.reserve(basis.size() - 1);
        for (size_t t = 0; t < basis.size(); ++t)
            if (t != i) rest.push_back(basis[t]);
        basis[i] = reduce(basis[i], rest, ord);
        if (basis[i].is_zero()) throw std::logic_error("interreduction killed a minimal basis element");
    }
    // monic, deterministic order: increasing leading monomial
    for (auto& g : basis) g = g.leading_coeff(ord).inverse() * g;
    std::sort(basis.begin(), basis.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return basis;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& ord, const BuchbergerOptions& opts) {
    std::vector<MPoly> basis;
    for (const auto& g : ideal.gens) {
        if (g.nvars() != ideal.nvars) throw std::invalid_argument("variable-count mismatch in ideal");
        if (!g.is_zero()) basis.push_back(g);
    }
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(g.leading_monomial(ord));

    struct PairKey {
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (!(a.lcm == b.lcm)) return ord.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PairKey> queue;
    auto push_pairs_for = [&](size_t m) {
        for (size_t i = 0; i < m; ++i) queue.push_back({Monomial::lcm(lms[i], lms[m]), i, m});
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    std::set<std::pair<size_t, size_t>> pending;
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);
    for (const auto& p : queue) pending.insert({p.i, p.j});

    long processed = 0;
    size_t qi = 0;
    while (qi < queue.size()) {
        PairKey pk = queue[qi++];
        pending.erase({pk.i, pk.j});
        if (++processed > opts.pair_budget)
            throw resource_error("S-pair budget exceeded (" + std::to_string(opts.pair_budget) + ")");
        if (coprime_lms(lms[pk.i], lms[pk.j])) continue;
        // chain criterion: some other leading monomial divides the lcm and
        // both companion pairs are already settled
        bool skip = false;
        for (size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == pk.i || t == pk.j) continue;
            if (!Monomial::divides(lms[t], pk.lcm)) continue;
            auto p1 = std::minmax(pk.i, t);
            auto p2 = std::minmax(pk.j, t);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second})) skip = true;
        }
        if (skip) continue;
        MPoly r = reduce(s_polynomial(basis[pk.i], basis[pk.j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(std::move(r));
        lms.push_back(basis.back().leading_monomial(ord));
        size_t m = basis.size() - 1;
        std::vector<PairKey> fresh;
        for (size_t i = 0; i < m; ++i) fresh.push_back({Monomial::lcm(lms[i], lms[m]), i, m});
        for (const auto& p : fresh) pending.insert({p.i, p.j});
        // merge unprocessed tail with the fresh pairs, keeping normal selection
        std::vector<PairKey> rest(queue.begin() + static_cast<long>(qi), queue.end());
        rest.insert(rest.end(), fresh.begin(), fresh.end());
        std::sort(rest.begin(), rest.end(), pair_less);
        queue = std::move(rest);
        qi = 0;
    }
    return GroebnerBasis(ideal.nvars, interreduce(std::move(basis), ord), ord, true);
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& basis) {
    if (f.nvars() != basis.nvars()) throw std::invalid_argument("variable-count mismatch");
    return reduce(f, basis.elements(), basis.order());
}

GroebnerCheck is_groebner(std::span<const MPoly> candidate, const TermOrder& ord) {
    GroebnerCheck res;
    res.report.name = "is-groebner";
    std::vector<MPoly> cand(candidate.begin(), candidate.end());
    for (const auto& g : cand)
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in candidate set");
    res.groebner = true;
    for (size_t i = 0; i < cand.size(); ++i)
        for (size_t j = i + 1; j < cand.size(); ++j) {
            MPoly r = reduce(s_polynomial(cand[i], cand[j], ord), cand, ord);
            bool ok = r.is_zero();
            res.report.add("spair(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           "lcm=" + Monomial::lcm(cand[i].leading_monomial(ord), cand[j].leading_monomial(ord)).str(),
                           ok, ok ? "" : r.str(), "0");
            if (!ok) res.groebner = false;
        }
    res.minimal = true;
    for (size_t i = 0; i < cand.size() && res.minimal; ++i)
        for (size_t j = 0; j < cand.size(); ++j) {
            if (i == j) continue;
            if (Monomial::divides(cand[i].leading_monomial(ord), cand[j].leading_monomial(ord))) {
                res.minimal = false;
                res.report.add("minimality", "lm(" + std::to_string(i) + ") divides lm(" + std::to_string(j) + ")",
                               false);
                break;
            }
        }
    return res;
}

namespace {
void box_monomials_rec(const std::vector<int>& bounds, const std::vector<Monomial>& lms, int pos,
                       std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == static_cast<int>(bounds.size())) {
        Monomial m{std::vector<int>(cur)};
        for (const auto& l : lms)
            if (Monomial::divides(l, m)) return;
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e < bounds[static_cast<size_t>(pos)]; ++e) {
        cur[static_cast<size_t>(pos)] = e;
        box_monomials_rec(bounds, lms, pos + 1, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

void capped_monomials_rec(int nvars, int cap, const std::vector<Monomial>& lms, int pos, int used,
                          std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == nvars) {
        Monomial m{std::vector<int>(cur)};
        for (const auto& l : lms)
            if (Monomial::divides(l, m)) return;
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e + used <= cap; ++e) {
        cur[static_cast<size_t>(pos)] = e;
        capped_monomials_rec(nvars, cap, lms, pos + 1, used + e, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}
}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, std::optional<int> degree_cap) {
    const int n = basis.nvars();
    const auto& lms = basis.leading_monomials();
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    if (degree_cap) {
        capped_monomials_rec(n, *degree_cap, lms, 0, 0, cur, out);
    } else {
        std::vector<int> bounds(static_cast<size_t>(n), -1);
        for (const auto& l : lms) {
            // pure power of a single variable?
            int var = 0, count = 0;
            for (int i = 1; i <= n; ++i)
                if (l.exponent(i) > 0) {
                    var = i;
                    ++count;
                }
            if (count == 1) {
                int& b = bounds[static_cast<size_t>(var - 1)];
                int e = l.exponent(var);
                if (b < 0 || e < b) b = e;
            }
        }
        for (int b : bounds)
            if (b < 0)
                throw std::invalid_argument(
                    "ideal is not visibly zero-dimensional; pass a degree cap");
        box_monomials_rec(bounds, lms, 0, cur, out);
    }
    std::sort(out.begin(), out.end(), deg_neglex_less);
    return out;
}

TPoly hilbert_function(const GroebnerBasis& basis) {
    for (const auto& g : basis.elements())
        if (!g.is_homogeneous())
            throw std::invalid_argument("hilbert_function requires homogeneous basis elements");
    TPoly h;
    for (const auto& m : standard_monomials(basis)) h += TPoly::t_power(m.degree());
    return h;
}

GroebnerBasis vanishing_ideal(std::span<const QPoint> points) {
    if (points.empty()) throw std::invalid_argument("vanishing_ideal requires at least one point");
    const int n = static_cast<int>(points[0].size());
    const size_t npts = points.size();
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("point dimension mismatch");
    for (size_t a = 0; a < npts; ++a)
        for (size_t b = a + 1; b < npts; ++b)
            if (point_equal(points[a], points[b])) throw std::invalid_argument("duplicate points");

    const TermOrder ord = TermOrder::deg_neglex();
    auto asc = [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); };
    // candidate -> (index of parent standard monomial, multiplied variable);
    // evaluation vectors then grow by one coordinate product per step
    std::map<Monomial, std::pair<size_t, int>, decltype(asc)> candidates(asc);

    std::vector<Monomial> std_monos;
    std::vector<std::vector<QRat>> raw_evals;  // unreduced evaluations of std monomials
    std::vector<std::vector<QRat>> rows;       // reduced evaluation rows, pivot normalized to 1
    std::vector<size_t> pivots;                // pivot column of each row
    std::vector<std::vector<QRat>> combos;     // row as combination of std mono evaluations
    std::vector<MPoly> gb;
    std::vector<Monomial> lms;

    candidates.emplace(Monomial::one(n), std::make_pair(size_t{0}, 0));

    while (!candidates.empty()) {
        auto first = candidates.begin();
        Monomial m = first->first;
        auto [parent, var] = first->second;
        candidates.erase(first);
        bool divisible = false;
        for (const auto& l : lms)
            if (Monomial::divides(l, m)) {
                divisible = true;
                break;
            }
        if (divisible) continue;

        std::vector<QRat> v(npts, QRat(1));
        if (var != 0) {
            for (size_t p = 0; p < npts; ++p)
                v[p] = raw_evals[parent][p] * points[p][static_cast<size_t>(var - 1)];
        }
        std::vector<QRat> raw = v;
        std::vector<QRat> combo(std_monos.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            QRat factor = v[pivots[r]];
            if (factor.is_zero()) continue;
            for (size_t c = 0; c < npts; ++c) v[c] -= factor * rows[r][c];
            for (size_t c = 0; c < combos[r].size(); ++c) combo[c] += factor * combos[r][c];
        }
        size_t pivot = npts;
        for (size_t c = 0; c < npts; ++c)
            if (!v[c].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot == npts) {
            // dependence: m - sum combo_j std_j vanishes on every point
            std::vector<MPoly::Term> terms;
            terms.emplace_back(m, QRat(1));
            for (size_t j = 0; j < std_monos.size(); ++j)
                if (!combo[j].is_zero()) terms.emplace_back(std_monos[j], -combo[j]);
            gb.push_back(MPoly::from_terms(n, std::move(terms)));
            lms.push_back(m);
        } else {
            QRat inv = v[pivot].inverse();
            for (auto& x : v) x *= inv;
            std::vector<QRat> crow(std_monos.size() + 1);
            for (size_t j = 0; j < std_monos.size(); ++j) crow[j] = -(combo[j] * inv);
            crow[std_monos.size()] = inv;
            std_monos.push_back(m);
            raw_evals.push_back(std::move(raw));
            rows.push_back(std::move(v));
            pivots.push_back(pivot);
            for (auto& c : combos) c.resize(std_monos.size());
            combos.push_back(std::move(crow));
            size_t self = std_monos.size() - 1;
            for (int i = 1; i <= n; ++i) {
                Monomial child = m * Monomial::var(i, n);
                bool skip = false;
                for (const auto& l : lms)
                    if (Monomial::divides(l, child)) {
                        skip = true;
                        break;
                    }
                if (!skip) candidates.emplace(std::move(child), std::make_pair(self, i));
            }
        }
    }
    if (std_monos.size() != npts)
        throw std::logic_error("vanishing ideal dimension mismatch: " + std::to_string(std_monos.size()) +
                               " standard monomials for " + std::to_string(npts) + " points");
    return GroebnerBasis(n, std::move(gb), ord, true);
}

GroebnerBasis top_component_ideal(std::span<const QPoint> points, const BuchbergerOptions& opts) {
    GroebnerBasis vi = vanishing_ideal(points);
    Ideal tops;
    tops.nvars = vi.nvars();
    for (const auto& g : vi.elements()) tops.gens.push_back(g.top_component());
    GroebnerBasis out = buchberger(tops, TermOrder::deg_neglex(), opts);
    if (standard_monomials(out).size() != points.size())
        throw std::logic_error("top-component ideal dimension mismatch");
    return out;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable-count mismatch");
    for (const auto& f : a.elements())
        if (!normal_form(f, b).is_zero()) return false;
    for (const auto& g : b.elements())
        if (!normal_form(g, a).is_zero()) return false;
    return true;
}

Report check_stability(const GroebnerBasis& basis, std::span<const MPoly> gens) {
    Report rep;
    rep.name = "stability";
    const int n = basis.nvars();
    for (const auto& g : gens) {
        for (int i = 1; i < n; ++i) {
            MPoly r = normal_form(hecke_T(i, g), basis);
            bool ok = r.is_zero();
            rep.add("T_" + std::to_string(i), g.str(), ok, ok ? "" : r.str(), "0");
        }
    }
    return rep;
}

Ideal coinvariant_ideal(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("coinvariant_ideal requires 1 <= k <= n");
    Ideal ideal;
    ideal.nvars = n;
    for (int i = 1; i <= n; ++i) ideal.gens.push_back(hall_littlewood_p(k, i, n));
    for (int d = n; d >= n - k + 1; --d) ideal.gens.push_back(elementary_sym(d, n));
    return ideal;
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > n) return out;
    std::vector<int> cur;
    // lexicographic subsets of {1,...,n}
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (size - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<MPoly> hl_demazure_basis(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hl_demazure_basis requires 1 <= k <= n");
    std::vector<MPoly> out;
    for (int i = 1; i <= n; ++i) out.push_back(hall_littlewood_p(k, i, n));
    for (const auto& subset : subsets_of_size(n - 1, n - k + 1)) {
        WeakComposition gamma = skip_composition(subset, n);
        WeakComposition rev = gamma.reversed();
        MPoly kappa = demazure_character(rev);
        // convention anchor: the neglex leading monomial must be x^rev
        if (!(kappa.leading_monomial(TermOrder::neglex()) == Monomial(rev.entries)))
            throw std::logic_error("key polynomial convention self-test failed for " + rev.str());
        out.push_back(std::move(kappa));
    }
    return out;
}

int matrix_rank(std::vector<std::vector<QRat>> rows) {
    size_t rank = 0;
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        QRat inv = rows[rank][c].inverse();
        for (size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            QRat f = rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace qcoinv
