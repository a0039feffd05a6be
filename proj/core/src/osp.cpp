#include "qcoinv/osp.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace qcoinv {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::set<int> seen;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block in ordered set partition");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1) throw std::invalid_argument("letters must be positive");
            if (!seen.insert(x).second) throw std::invalid_argument("repeated letter in ordered set partition");
        }
    }
    n_ = static_cast<int>(seen.size());
    if (!seen.empty() && *seen.rbegin() != n_)
        throw std::invalid_argument("blocks must cover {1,...,n}");
}

int OrderedSetPartition::block_of(int letter) const {
    for (size_t j = 0; j < blocks_.size(); ++j)
        if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), letter)) return static_cast<int>(j) + 1;
    throw std::invalid_argument("letter not present");
}

OrderedSetPartition OrderedSetPartition::swap_letters(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("swap index out of range");
    auto blocks = blocks_;
    for (auto& b : blocks)
        for (auto& x : b) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
    return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition OrderedSetPartition::relabel(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    auto blocks = blocks_;
    for (auto& b : blocks)
        for (auto& x : b) x = w[static_cast<size_t>(x - 1)];
    return OrderedSetPartition(std::move(blocks));
}

std::string OrderedSetPartition::str() const {
    std::string out = "(";
    for (size_t j = 0; j < blocks_.size(); ++j) {
        if (j) out += "|";
        for (size_t i = 0; i < blocks_[j].size(); ++i) {
            if (i && n_ > 9) out += " ";
            out += std::to_string(blocks_[j][i]);
        }
    }
    return out + ")";
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw parse_error("ordered set partition must be parenthesized");
    s = s.substr(1, s.size() - 2);
    std::vector<std::vector<int>> blocks;
    size_t start = 0;
    bool spaced = s.find(' ') != std::string_view::npos;
    while (start <= s.size()) {
        size_t bar = s.find('|', start);
        std::string_view piece = s.substr(start, bar == std::string_view::npos ? bar : bar - start);
        std::vector<int> block;
        if (spaced) {
            size_t pos = 0;
            while (pos < piece.size()) {
                size_t sp = piece.find(' ', pos);
                std::string tok(piece.substr(pos, sp == std::string_view::npos ? sp : sp - pos));
                if (!tok.empty()) block.push_back(std::stoi(tok));
                if (sp == std::string_view::npos) break;
                pos = sp + 1;
            }
        } else {
            for (char c : piece) {
                if (c < '1' || c > '9') throw parse_error("bad letter in ordered set partition");
                block.push_back(c - '0');
            }
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return OrderedSetPartition(std::move(blocks));
}

std::vector<OrderedSetPartition> enumerate_osp(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_osp requires 1 <= k <= n");
    std::vector<OrderedSetPartition> out;
    // letter -> block assignments, kept when surjective
    std::vector<int> assign(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
        for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(assign[static_cast<size_t>(i)])].push_back(i + 1);
        bool surjective = true;
        for (const auto& b : blocks)
            if (b.empty()) surjective = false;
        if (surjective) out.push_back(OrderedSetPartition(std::move(blocks)));
        int i = 0;
        while (i < n && assign[static_cast<size_t>(i)] == k - 1) assign[static_cast<size_t>(i++)] = 0;
        if (i == n) break;
        ++assign[static_cast<size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

OSPVector OSPVector::basis(const OrderedSetPartition& sigma) {
    OSPVector v;
    v.coeffs_.emplace(sigma, QRat(1));
    return v;
}

OSPVector OSPVector::operator-() const {
    OSPVector r = *this;
    for (auto& [s, c] : r.coeffs_) c = -c;
    return r;
}

OSPVector operator+(const OSPVector& a, const OSPVector& b) {
    OSPVector r = a;
    for (const auto& [s, c] : b.coeffs_) {
        auto [it, inserted] = r.coeffs_.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

OSPVector operator-(const OSPVector& a, const OSPVector& b) { return a + (-b); }

OSPVector operator*(const QRat& c, const OSPVector& v) {
    OSPVector r;
    if (c.is_zero()) return r;
    r.coeffs_ = v.coeffs_;
    for (auto& [s, x] : r.coeffs_) x *= c;
    return r;
}

std::string OSPVector::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + s.str();
    }
    return out;
}

OSPVector osp_hecke_T(int i, const OSPVector& v) {
    OSPVector out;
    QRat q = QRat::q();
    for (const auto& [sigma, c] : v.coeffs()) {
        int bi = sigma.block_of(i);
        int bj = sigma.block_of(i + 1);
        if (bi == bj) {
            out += (q * c) * OSPVector::basis(sigma);
        } else if (bj < bi) {
            out += (q * c) * OSPVector::basis(sigma.swap_letters(i));
            out += ((q - QRat(1)) * c) * OSPVector::basis(sigma);
        } else {
            out += c * OSPVector::basis(sigma.swap_letters(i));
        }
    }
    return out;
}

Report check_osp_relations(int n, int k) {
    Report rep;
    rep.name = "osp-action";
    QRat q = QRat::q();
    for (const auto& sigma : enumerate_osp(n, k)) {
        OSPVector f = OSPVector::basis(sigma);
        for (int i = 1; i < n; ++i) {
            OSPVector tf = osp_hecke_T(i, f);
            OSPVector lhs = osp_hecke_T(i, tf) + (QRat(1) - q) * tf - q * f;
            rep.add("quadratic(T_" + std::to_string(i) + ")", sigma.str(), lhs.is_zero(),
                    lhs.is_zero() ? "" : lhs.str(), "0");
        }
        for (int i = 1; i + 1 < n; ++i) {
            OSPVector lhs = osp_hecke_T(i, osp_hecke_T(i + 1, osp_hecke_T(i, f)));
            OSPVector rhs = osp_hecke_T(i + 1, osp_hecke_T(i, osp_hecke_T(i + 1, f)));
            bool ok = lhs == rhs;
            rep.add("braid(T_" + std::to_string(i) + ",T_" + std::to_string(i + 1) + ")", sigma.str(), ok,
                    ok ? "" : lhs.str(), ok ? "" : rhs.str());
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                OSPVector lhs = osp_hecke_T(i, osp_hecke_T(j, f));
                OSPVector rhs = osp_hecke_T(j, osp_hecke_T(i, f));
                bool ok = lhs == rhs;
                rep.add("commute(T_" + std::to_string(i) + ",T_" + std::to_string(j) + ")", sigma.str(), ok,
                        ok ? "" : lhs.str(), ok ? "" : rhs.str());
            }
    }
    return rep;
}

std::string point_str(const QPoint& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].str();
    }
    return out + ")";
}

bool point_equal(const QPoint& a, const QPoint& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string points_to_json(std::span<const QPoint> points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : p) coords.push_back(c.str());
        arr.push_back(std::move(coords));
    }
    return arr.dump();
}

std::vector<QPoint> points_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<QPoint> out;
    for (const auto& coords : arr) {
        QPoint p;
        for (const auto& c : coords) p.push_back(QRat::parse(c.get<std::string>()));
        out.push_back(std::move(p));
    }
    return out;
}

void validate_alpha(std::span<const mpq_class> alpha, int k) {
    if (static_cast<int>(alpha.size()) != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " alpha values");
    for (size_t r = 0; r < alpha.size(); ++r) {
        if (alpha[r] == 0) throw std::invalid_argument("alpha values must be nonzero");
        for (size_t s = r + 1; s < alpha.size(); ++s)
            if (alpha[r] == alpha[s]) throw std::invalid_argument("alpha values must be distinct");
    }
}

QPoint phi(const OrderedSetPartition& sigma, std::span<const mpq_class> alpha) {
    validate_alpha(alpha, sigma.k());
    QPoint y(static_cast<size_t>(sigma.n()));
    for (int r = 1; r <= sigma.k(); ++r) {
        const auto& block = sigma.blocks()[static_cast<size_t>(r - 1)];
        for (size_t j = 0; j < block.size(); ++j)
            y[static_cast<size_t>(block[j] - 1)] =
                QRat::q_power(static_cast<int>(j)) * QRat(alpha[static_cast<size_t>(r - 1)]);
    }
    return y;
}

bool point_in_Y(const QPoint& p, int n, int k, std::span<const mpq_class> alpha) {
    validate_alpha(alpha, k);
    if (static_cast<int>(p.size()) != n) return false;
    // recover the (r, j) label of each coordinate
    std::vector<std::pair<int, int>> labels;
    for (const QRat& y : p) {
        bool found = false;
        for (int r = 1; r <= k && !found; ++r)
            for (int j = 0; j <= n && !found; ++j)
                if (y == QRat::q_power(j) * QRat(alpha[static_cast<size_t>(r - 1)])) {
                    labels.emplace_back(r, j);
                    found = true;
                }
        if (!found) return false;
    }
    std::set<std::pair<int, int>> used;
    for (const auto& l : labels)
        if (!used.insert(l).second) return false;  // coordinates must be distinct
    for (int r = 1; r <= k; ++r)
        if (!used.count({r, 0})) return false;  // every alpha_r must appear
    for (size_t i = 0; i < labels.size(); ++i) {
        auto [r, j] = labels[i];
        if (j == 0) continue;
        bool predecessor = false;
        for (size_t i2 = 0; i2 < i; ++i2)
            if (labels[i2] == std::make_pair(r, j - 1)) predecessor = true;
        if (!predecessor) return false;
    }
    return true;
}

std::vector<QPoint> generate_Y(int n, int k, std::span<const mpq_class> alpha) {
    if (k < 1 || k > n) throw std::invalid_argument("generate_Y requires 1 <= k <= n");
    validate_alpha(alpha, k);
    // candidate values q^j alpha_r with j <= n-k; larger exponents would
    // need more than n-k predecessors of the same alpha
    const int jmax = n - k;
    const int vals = k * (jmax + 1);
    std::vector<QPoint> out;
    std::vector<int> pick(static_cast<size_t>(n), 0);
    while (true) {
        QPoint p;
        p.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            int r = pick[static_cast<size_t>(i)] / (jmax + 1);
            int j = pick[static_cast<size_t>(i)] % (jmax + 1);
            p.push_back(QRat::q_power(j) * QRat(alpha[static_cast<size_t>(r)]));
        }
        if (point_in_Y(p, n, k, alpha)) out.push_back(std::move(p));
        int i = 0;
        while (i < n && pick[static_cast<size_t>(i)] == vals - 1) pick[static_cast<size_t>(i++)] = 0;
        if (i == n) break;
        ++pick[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<QPoint> quantize_points(const std::vector<std::vector<mpq_class>>& points) {
    std::vector<QPoint> out;
    out.reserve(points.size());
    for (const auto& y : points) {
        QPoint p;
        p.reserve(y.size());
        for (size_t i = 0; i < y.size(); ++i) {
            int j = 0;
            for (size_t i2 = 0; i2 <= i; ++i2)
                if (y[i2] == y[i]) ++j;
            p.push_back(QRat::q_power(j - 1) * QRat(y[i]));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace qcoinv
