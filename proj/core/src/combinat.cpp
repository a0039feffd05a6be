#include "qcoinv/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qcoinv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

long long stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2 arguments must be non-negative");
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    if (k == 0) return 0;
    std::vector<long long> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<size_t>(k)];
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

WeakComposition::WeakComposition(std::vector<int> e) : entries(std::move(e)) {
    for (int x : entries)
        if (x < 0) throw std::invalid_argument("weak composition entries must be non-negative");
}

int WeakComposition::size() const { return std::accumulate(entries.begin(), entries.end(), 0); }

WeakComposition WeakComposition::reversed() const {
    std::vector<int> e(entries.rbegin(), entries.rend());
    return WeakComposition(std::move(e));
}

bool WeakComposition::weakly_decreasing() const {
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) return false;
    return true;
}

std::string WeakComposition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

TPoly::TPoly(long long c) {
    if (c != 0) c_.push_back(c);
}

TPoly TPoly::t_power(int e, long long c) {
    TPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(e) + 1, 0);
        p.c_.back() = c;
    }
    return p;
}

long long TPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

long long TPoly::at_one() const { return std::accumulate(c_.begin(), c_.end(), 0LL); }

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    TPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        long long c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        long long a = neg ? -c : c;
        if (i == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

TPoly t_integer(int n) {
    TPoly r;
    for (int i = 0; i < n; ++i) r += TPoly::t_power(i);
    return r;
}

TPoly t_factorial(int n) {
    TPoly r(1);
    for (int i = 1; i <= n; ++i) r *= t_integer(i);
    return r;
}

TPoly gaussian_binomial(int a, int b) {
    if (b < 0 || a < b) return TPoly();
    // Pascal recursion keeps everything an integer polynomial
    std::vector<TPoly> row{TPoly(1)};
    for (int i = 1; i <= a; ++i) {
        std::vector<TPoly> next(static_cast<size_t>(std::min(i, b)) + 1);
        next[0] = TPoly(1);
        for (int j = 1; j <= std::min(i, b); ++j) {
            TPoly upper = (j < static_cast<int>(row.size())) ? row[static_cast<size_t>(j)] : TPoly();
            next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + TPoly::t_power(j) * upper;
        }
        row = std::move(next);
    }
    return b < static_cast<int>(row.size()) ? row[static_cast<size_t>(b)] : TPoly();
}

Partition SYTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int SYTableau::size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
}

int SYTableau::row_of(int value) const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r])
            if (v == value) return static_cast<int>(r) + 1;
    throw std::invalid_argument("value not in tableau");
}

std::string SYTableau::str() const {
    std::string out;
    for (const auto& r : rows) {
        out += "[";
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(r[i]);
        }
        out += "]";
    }
    return out;
}

std::vector<SYTableau> syt_of_shape(const Partition& shape) {
    int n = shape.size();
    if (n == 0) return {SYTableau{}};
    std::vector<SYTableau> out;
    // remove the cell containing n from each corner and recurse
    for (int r = 0; r < shape.length(); ++r) {
        if (r + 1 < shape.length() && shape.parts[static_cast<size_t>(r + 1)] == shape.parts[static_cast<size_t>(r)])
            continue;  // not a corner
        std::vector<int> smaller = shape.parts;
        if (--smaller[static_cast<size_t>(r)] == 0) smaller.erase(smaller.begin() + r);
        for (SYTableau t : syt_of_shape(Partition(std::move(smaller)))) {
            if (r >= static_cast<int>(t.rows.size())) t.rows.emplace_back();
            t.rows[static_cast<size_t>(r)].push_back(n);
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<SYTableau> enumerate_syt(int n) {
    std::vector<SYTableau> out;
    for (const Partition& shape : partitions(n)) {
        auto ts = syt_of_shape(shape);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

long long syt_count(const Partition& shape) {
    return static_cast<long long>(syt_of_shape(shape).size());
}

DescentStats des_maj(const SYTableau& t) {
    DescentStats s;
    int n = t.size();
    for (int i = 1; i < n; ++i) {
        if (t.row_of(i) < t.row_of(i + 1)) {
            s.descents.push_back(i);
            s.maj += i;
        }
    }
    s.des = static_cast<int>(s.descents.size());
    return s;
}

namespace {
void shuffles_rec(const std::vector<int>& a, const std::vector<int>& b, size_t ia, size_t ib,
                  std::vector<int>& cur, std::set<std::vector<int>>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.insert(cur);
        return;
    }
    if (ia < a.size()) {
        cur.push_back(a[ia]);
        shuffles_rec(a, b, ia + 1, ib, cur, out);
        cur.pop_back();
    }
    if (ib < b.size()) {
        cur.push_back(b[ib]);
        shuffles_rec(a, b, ia, ib + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> staircases(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("staircases requires 1 <= k <= n");
    std::vector<int> stair(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) stair[static_cast<size_t>(i)] = k - 1 - i;
    std::vector<int> extra(static_cast<size_t>(n - k), k - 1);
    std::set<std::vector<int>> dedup;
    std::vector<int> cur;
    shuffles_rec(stair, extra, 0, 0, cur, dedup);
    return {dedup.begin(), dedup.end()};
}

std::vector<Monomial> artin_monomials(int n, int k) {
    std::set<std::vector<int>> seen;
    for (const auto& stair : staircases(n, k)) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        while (true) {
            seen.insert(e);
            int i = 0;
            while (i < n && e[static_cast<size_t>(i)] == stair[static_cast<size_t>(i)]) {
                e[static_cast<size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
            ++e[static_cast<size_t>(i)];
        }
    }
    std::vector<Monomial> out;
    out.reserve(seen.size());
    for (const auto& e : seen) out.push_back(Monomial(e));
    return out;
}

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int inversions(const std::vector<int>& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<int> descent_positions(const std::vector<int>& w) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

Monomial descent_monomial(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int d : descent_positions(w))
        for (int j = 0; j < d; ++j) ++e[static_cast<size_t>(w[static_cast<size_t>(j)] - 1)];
    return Monomial(std::move(e));
}

namespace {
void bounded_decreasing_rec(int len, int bound, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int hi = cur.empty() ? bound : cur.back();
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        bounded_decreasing_rec(len, bound, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Monomial> gs_monomials(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("gs_monomials requires 1 <= k <= n");
    std::set<std::vector<int>> seen;
    for (const auto& w : permutations(n)) {
        int des = static_cast<int>(descent_positions(w).size());
        if (des > k - 1) continue;  // no admissible exponent sequence
        Monomial base = descent_monomial(w);
        std::vector<std::vector<int>> seqs;
        if (n == k) {
            seqs.push_back({});
        } else {
            std::vector<int> cur;
            bounded_decreasing_rec(n - k, k - des - 1, cur, seqs);
        }
        for (const auto& seq : seqs) {
            std::vector<int> e = base.exponents();
            for (int j = 0; j < n - k; ++j) e[static_cast<size_t>(w[static_cast<size_t>(j)] - 1)] += seq[static_cast<size_t>(j)];
            seen.insert(std::move(e));
        }
    }
    std::vector<Monomial> out;
    out.reserve(seen.size());
    for (const auto& e : seen) out.push_back(Monomial(e));
    return out;
}

}  // namespace qcoinv
