#pragma once

#include "qcoinv/polyring.hpp"
#include "qcoinv/report.hpp"

#include <span>

namespace qcoinv {

// Operators on F[x_1,...,x_n] for F = Q(q).  The index i ranges over
// 1 <= i <= n-1 and refers to the adjacent pair (x_i, x_{i+1}).

/// s_i: swap x_i and x_{i+1}.
MPoly swap_action(int i, const MPoly& f);

/// Divided difference (f - s_i.f)/(x_i - x_{i+1}).  The numerator is always
/// divisible; a nonzero remainder indicates an arithmetic bug and throws
/// std::logic_error.
MPoly divided_difference(int i, const MPoly& f);

/// Isobaric divided difference pi_i.f = d_i(x_i f).
MPoly isobaric(int i, const MPoly& f);

/// pibar_i = pi_i - 1.
MPoly isobaric_bar(int i, const MPoly& f);

/// Hecke generator T_i.f = q(s_i.f) + (1-q)(pibar_i.f).
MPoly hecke_T(int i, const MPoly& f);

/// Word in the generators, validated to be reduced on construction: the
/// length must equal the inversion number of the product permutation.
class ReducedWord {
public:
    ReducedWord() = default;  // empty word, any n
    ReducedWord(std::vector<int> letters, int n);
    static ReducedWord for_permutation(const std::vector<int>& w);  // one-line notation

    const std::vector<int>& letters() const { return letters_; }
    int n() const { return n_; }

private:
    std::vector<int> letters_;
    int n_ = 0;
};

/// T_w.f, factors applied right to left.
MPoly hecke_word(const ReducedWord& word, const MPoly& f);

// product of the letters as a permutation in one-line notation
std::vector<int> word_permutation(const std::vector<int>& letters, int n);

/// Quadratic, commutation and braid relations of H_n(q) checked exactly on
/// each sample polynomial.  Violations land in the report, never throw.
Report check_hecke_relations(int n, std::span<const MPoly> sample);

/// Leibniz rule T_i.(fg) = (s_i.f)(T_i.g) + (1-q)(pibar_i.f)g.
Report check_leibniz(int i, const MPoly& f, const MPoly& g);

}  // namespace qcoinv
