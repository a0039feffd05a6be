#include "qcoinv/heckeops.hpp"

#include "qcoinv/combinat.hpp"

#include <numeric>

namespace qcoinv {

namespace {
void check_index(int i, const MPoly& f) {
    if (i < 1 || i >= f.nvars())
        throw std::invalid_argument("operator index " + std::to_string(i) + " out of range for n = " +
                                    std::to_string(f.nvars()));
}
}  // namespace

MPoly swap_action(int i, const MPoly& f) {
    check_index(i, f);
    std::vector<MPoly::Term> terms;
    terms.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m.swap_vars(i), c);
    return MPoly::from_terms(f.nvars(), std::move(terms));
}

MPoly divided_difference(int i, const MPoly& f) {
    check_index(i, f);
    MPoly num = f - swap_action(i, f);
    if (num.is_zero()) return MPoly::zero(f.nvars());
    MPoly den = MPoly::variable(i, f.nvars()) - MPoly::variable(i + 1, f.nvars());
    auto [quotients, remainder] = divide(num, std::span<const MPoly>(&den, 1), TermOrder::deg_neglex());
    if (!remainder.is_zero())
        throw std::logic_error("divided difference left a remainder; arithmetic bug");
    return quotients[0];
}

MPoly isobaric(int i, const MPoly& f) {
    return divided_difference(i, MPoly::variable(i, f.nvars()) * f);
}

MPoly isobaric_bar(int i, const MPoly& f) { return isobaric(i, f) - f; }

MPoly hecke_T(int i, const MPoly& f) {
    QRat q = QRat::q();
    return q * swap_action(i, f) + (QRat(1) - q) * isobaric_bar(i, f);
}

std::vector<int> word_permutation(const std::vector<int>& letters, int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    // w = s_{l_1} ... s_{l_m}: apply factors on the left, right to left
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int i = *it;
        for (auto& v : w) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    }
    return w;
}

ReducedWord::ReducedWord(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
    for (int l : letters_)
        if (l < 1 || l >= n) throw std::invalid_argument("word letter out of range");
    if (inversions(word_permutation(letters_, n)) != static_cast<int>(letters_.size()))
        throw std::invalid_argument("word is not reduced");
}

ReducedWord ReducedWord::for_permutation(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> u = w;
    std::vector<int> picks;
    while (true) {
        int i = 0;
        for (int j = 1; j < n; ++j) {
            if (u[static_cast<size_t>(j - 1)] > u[static_cast<size_t>(j)]) {
                i = j;
                break;
            }
        }
        if (i == 0) break;
        std::swap(u[static_cast<size_t>(i - 1)], u[static_cast<size_t>(i)]);
        picks.push_back(i);
    }
    // u * s_{p_1} ... s_{p_m} = id, so w = s_{p_m} ... s_{p_1}
    std::vector<int> letters(picks.rbegin(), picks.rend());
    return ReducedWord(std::move(letters), n);
}

MPoly hecke_word(const ReducedWord& word, const MPoly& f) {
    MPoly g = f;
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) g = hecke_T(*it, g);
    return g;
}

Report check_hecke_relations(int n, std::span<const MPoly> sample) {
    Report rep;
    rep.name = "hecke-relations";
    QRat q = QRat::q();
    for (const auto& f : sample) {
        if (f.nvars() != n) throw std::invalid_argument("sample polynomial has wrong variable count");
        for (int i = 1; i < n; ++i) {
            MPoly tf = hecke_T(i, f);
            MPoly lhs = hecke_T(i, tf) + (QRat(1) - q) * tf - q * f;
            rep.add("quadratic(T_" + std::to_string(i) + ")", f.str(), lhs.is_zero(),
                    lhs.is_zero() ? "" : lhs.str(), "0");
        }
        for (int i = 1; i + 1 < n; ++i) {
            MPoly lhs = hecke_T(i, hecke_T(i + 1, hecke_T(i, f)));
            MPoly rhs = hecke_T(i + 1, hecke_T(i, hecke_T(i + 1, f)));
            bool ok = lhs == rhs;
            rep.add("braid(T_" + std::to_string(i) + ",T_" + std::to_string(i + 1) + ")", f.str(), ok,
                    ok ? "" : lhs.str(), ok ? "" : rhs.str());
        }
        // the defining relation list has |i - j| > 1 (the source misprints the
        // bound as |i - j| > i)
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                MPoly lhs = hecke_T(i, hecke_T(j, f));
                MPoly rhs = hecke_T(j, hecke_T(i, f));
                bool ok = lhs == rhs;
                rep.add("commute(T_" + std::to_string(i) + ",T_" + std::to_string(j) + ")", f.str(), ok,
                        ok ? "" : lhs.str(), ok ? "" : rhs.str());
            }
    }
    return rep;
}

Report check_leibniz(int i, const MPoly& f, const MPoly& g) {
    Report rep;
    rep.name = "leibniz";
    MPoly lhs = hecke_T(i, f * g);
    MPoly rhs = swap_action(i, f) * hecke_T(i, g) + (QRat(1) - QRat::q()) * (isobaric_bar(i, f) * g);
    bool ok = lhs == rhs;
    rep.add("leibniz(T_" + std::to_string(i) + ")", "f=" + f.str() + "; g=" + g.str(), ok,
            ok ? "" : lhs.str(), ok ? "" : rhs.str());
    return rep;
}

}  // namespace qcoinv
