#pragma once

#include "qcoinv/qfield.hpp"
#include "qcoinv/report.hpp"

#include <compare>
#include <gmpxx.h>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qcoinv {

/// Ordered sequence of k disjoint nonempty blocks covering {1,...,n};
/// block contents are kept sorted increasingly.
class OrderedSetPartition {
public:
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int letter) const;  // 1-based block index
    /// exchange letters i and i+1
    OrderedSetPartition swap_letters(int i) const;
    /// relabel every letter through the permutation w (one-line notation)
    OrderedSetPartition relabel(const std::vector<int>& w) const;

    std::string str() const;  // "(25|1|34)", space-separated letters when n > 9
    static OrderedSetPartition parse(std::string_view s);

    friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }
    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.blocks_ == b.blocks_;
    }

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

/// All k-block ordered set partitions of {1,...,n}, each exactly once.
std::vector<OrderedSetPartition> enumerate_osp(int n, int k);

/// Formal Q(q)-linear combination of ordered set partitions.
class OSPVector {
public:
    OSPVector() = default;
    static OSPVector basis(const OrderedSetPartition& sigma);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<OrderedSetPartition, QRat>& coeffs() const { return coeffs_; }

    OSPVector operator-() const;
    friend OSPVector operator+(const OSPVector& a, const OSPVector& b);
    friend OSPVector operator-(const OSPVector& a, const OSPVector& b);
    friend OSPVector operator*(const QRat& c, const OSPVector& v);
    OSPVector& operator+=(const OSPVector& b) { return *this = *this + b; }
    OSPVector& operator-=(const OSPVector& b) { return *this = *this - b; }
    friend bool operator==(const OSPVector&, const OSPVector&) = default;

    std::string str() const;

private:
    std::map<OrderedSetPartition, QRat> coeffs_;
};

/// Three-case Hecke action on the span of ordered set partitions: with
/// b(i) the block of i, T_i acts on sigma by
///   q s_i(sigma) + (q-1) sigma  when b(i+1) < b(i),
///   s_i(sigma)                  when b(i+1) > b(i),
///   q sigma                     when b(i+1) = b(i).
OSPVector osp_hecke_T(int i, const OSPVector& v);

/// Quadratic, commutation and braid relations on every basis vector.
Report check_osp_relations(int n, int k);

using QPoint = std::vector<QRat>;

std::string point_str(const QPoint& p);
bool point_equal(const QPoint& a, const QPoint& b);

// JSON arrays of coordinate strings, e.g. [["1","q"],["q","1"]]
std::string points_to_json(std::span<const QPoint> points);
std::vector<QPoint> points_from_json(const std::string& text);

/// Reject lists that cannot label blocks: entries must be distinct and
/// nonzero, otherwise distinct (power of q, alpha) pairs could collide.
void validate_alpha(std::span<const mpq_class> alpha, int k);

/// Point of the quantized locus attached to sigma: coordinate i equals
/// q^j alpha_r when i is the (j+1)-st smallest letter of block r.
QPoint phi(const OrderedSetPartition& sigma, std::span<const mpq_class> alpha);

/// All points satisfying the four defining conditions of the quantized
/// locus, found by filtering coordinate assignments q^j alpha_r with
/// j <= n-k; independent of phi.
std::vector<QPoint> generate_Y(int n, int k, std::span<const mpq_class> alpha);

/// Validator for the four defining conditions of a single point.
bool point_in_Y(const QPoint& p, int n, int k, std::span<const mpq_class> alpha);

/// Generic quantization of a rational point list: the j-th occurrence of a
/// repeated value is scaled by q^(j-1).
std::vector<QPoint> quantize_points(const std::vector<std::vector<mpq_class>>& points);

}  // namespace qcoinv
