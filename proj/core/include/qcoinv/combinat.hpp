#pragma once

#include "qcoinv/polyring.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qcoinv {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string str() const;  // "(3,1)"

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::vector<Partition> partitions(int n);
long long stirling2(int n, int k);
long long factorial(int n);

/// Weak composition with a fixed number of parts (entries may be zero).
struct WeakComposition {
    std::vector<int> entries;

    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> e);

    int n() const { return static_cast<int>(entries.size()); }
    int size() const;
    WeakComposition reversed() const;
    bool weakly_decreasing() const;
    std::string str() const;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

/// Integer polynomial in the grading variable t.
class TPoly {
public:
    TPoly() = default;
    TPoly(long long c);
    static TPoly t_power(int e, long long c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int i) const;
    long long at_one() const;  // evaluation at t = 1

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
    TPoly& operator-=(const TPoly& b) { return *this = *this - b; }
    TPoly& operator*=(const TPoly& b) { return *this = *this * b; }
    friend bool operator==(const TPoly&, const TPoly&) = default;

    std::string str() const;  // "1 + 2t + 2t^2 + t^3"

private:
    void trim();
    std::vector<long long> c_;
};

TPoly t_integer(int n);            // 1 + t + ... + t^(n-1)
TPoly t_factorial(int n);
TPoly gaussian_binomial(int a, int b);  // zero when a < b or b < 0

/// Standard Young tableau in English notation, rows and columns increasing.
struct SYTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;
    int row_of(int value) const;  // 1-based row index
    std::string str() const;
};

std::vector<SYTableau> syt_of_shape(const Partition& shape);
std::vector<SYTableau> enumerate_syt(int n);
long long syt_count(const Partition& shape);

struct DescentStats {
    std::vector<int> descents;
    int des = 0;
    int maj = 0;
};

// i is a descent when i sits in a strictly higher row than i+1.
DescentStats des_maj(const SYTableau& t);

// Shuffles of (k-1,...,1,0) with n-k extra copies of k-1, deduplicated.
std::vector<std::vector<int>> staircases(int n, int k);
// Monomials componentwise below some (n,k)-staircase.
std::vector<Monomial> artin_monomials(int n, int k);

std::vector<std::vector<int>> permutations(int n);  // one-line, 1-based values
int inversions(const std::vector<int>& w);
std::vector<int> descent_positions(const std::vector<int>& w);

// Descent monomial of a permutation: product over descents w_i > w_{i+1}
// of x_{w_1} ... x_{w_i}.
Monomial descent_monomial(const std::vector<int>& w);
// Descent monomials times bounded extra powers of x_{w_1},...,x_{w_{n-k}}.
std::vector<Monomial> gs_monomials(int n, int k);

}  // namespace qcoinv
