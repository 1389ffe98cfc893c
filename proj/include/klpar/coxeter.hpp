#pragma once

/*
 * Weyl groups of generalized Cartan matrices.
 *
 * An element is stored as its integer matrix in the reflection
 * representation on simple-root coordinates (column j holds w(alpha_j)),
 * together with the inverse matrix and its canonical reduced word. The
 * canonical word is the lexicographically smallest reduced expression: its
 * first letter is the smallest left descent, recursively. Equality and
 * hashing go through the matrix; ordering is ShortLex on canonical words,
 * which is a total order consistent with equality.
 */

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "klpar/error.hpp"

namespace klpar {

/// Encoding of m_ij = infinity in Coxeter matrices.
inline constexpr int kInfiniteOrder = 0;

inline constexpr std::size_t kDefaultParabolicCap = 100000;

class GeneralizedCartanMatrix {
public:
    GeneralizedCartanMatrix() = default;

    explicit GeneralizedCartanMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        const std::size_t n = rows_.size();
        if (n == 0) throw Error(Errc::MalformedCartan, "rank must be positive");
        for (std::size_t i = 0; i < n; ++i) {
            if (rows_[i].size() != n)
                throw Error(Errc::MalformedCartan, "row " + std::to_string(i) + " has " +
                                                       std::to_string(rows_[i].size()) + " entries, expected " +
                                                       std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (rows_[i][i] != 2)
                throw Error(Errc::MalformedCartan, "diagonal entry a_" + std::to_string(i) + std::to_string(i) +
                                                       " = " + std::to_string(rows_[i][i]) + ", expected 2");
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (rows_[i][j] > 0)
                    throw Error(Errc::MalformedCartan, "off-diagonal entry (" + std::to_string(i) + "," +
                                                           std::to_string(j) + ") is positive");
                if ((rows_[i][j] == 0) != (rows_[j][i] == 0))
                    throw Error(Errc::MalformedCartan, "zero pattern not symmetric at (" + std::to_string(i) +
                                                           "," + std::to_string(j) + ")");
                if (rows_[i][j] < -(1 << 15))
                    throw Error(Errc::MalformedCartan, "entry magnitude too large");
            }
        }
        symmetrizable_ = compute_symmetrizable();
    }

    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// True iff D*A is symmetric for some positive rational diagonal D.
    bool symmetrizable() const noexcept { return symmetrizable_; }

    friend bool operator==(const GeneralizedCartanMatrix& a, const GeneralizedCartanMatrix& b) {
        return a.rows_ == b.rows_;
    }

private:
    // Fix d = 1 on one vertex per component, propagate d_j = d_i a_ij / a_ji
    // along the Coxeter graph, and require consistency around every cycle.
    bool compute_symmetrizable() const {
        const int n = rank();
        std::vector<std::optional<mpq_class>> d(static_cast<std::size_t>(n));
        for (int root = 0; root < n; ++root) {
            if (d[static_cast<std::size_t>(root)]) continue;
            d[static_cast<std::size_t>(root)] = mpq_class(1);
            std::vector<int> stack{root};
            while (!stack.empty()) {
                const int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < n; ++j) {
                    if (i == j || (*this)(i, j) == 0) continue;
                    mpq_class dj = *d[static_cast<std::size_t>(i)] * (*this)(i, j) / (*this)(j, i);
                    dj.canonicalize();
                    auto& slot = d[static_cast<std::size_t>(j)];
                    if (!slot) {
                        slot = dj;
                        stack.push_back(j);
                    } else if (*slot != dj) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    std::vector<std::vector<int>> rows_;
    bool symmetrizable_ = true;
};

/// Dense square integer matrix; overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const noexcept { return n_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<std::int64_t>& data() const noexcept { return a_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const std::int64_t xik = x(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(xik, y(k, j)));
            }
        return r;
    }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::ArithmeticOverflow, "root coordinate overflow");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::ArithmeticOverflow, "root coordinate overflow");
        return r;
    }

private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

class Element;

class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
    static std::shared_ptr<const CoxeterSystem> build(GeneralizedCartanMatrix cartan) {
        return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(std::move(cartan)));
    }

    int rank() const noexcept { return cartan_.rank(); }
    const GeneralizedCartanMatrix& cartan() const noexcept { return cartan_; }
    bool symmetrizable() const noexcept { return cartan_.symmetrizable(); }

    /// Order of s_i s_j; kInfiniteOrder for infinity.
    int coxeter_m(int i, int j) const {
        check_index(i);
        check_index(j);
        return coxeter_m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<int>>& coxeter_matrix() const noexcept { return coxeter_m_; }

    void check_index(int i) const {
        if (i < 0 || i >= rank())
            throw Error(Errc::IndexOutOfRange,
                        "generator index " + std::to_string(i) + " not in [0," + std::to_string(rank()) + ")");
    }

    // Left and right multiplication of a matrix by the simple reflection s_i,
    // where s_i(alpha_j) = alpha_j - a_ij alpha_i.
    void left_reflect(IntMatrix& m, int i) const {
        const int n = rank();
        for (int col = 0; col < n; ++col) {
            std::int64_t acc = 0;
            for (int l = 0; l < n; ++l) {
                if (cartan_(i, l) != 0) acc = IntMatrix::checked_add(acc, IntMatrix::checked_mul(cartan_(i, l), m(l, col)));
            }
            m(i, col) = IntMatrix::checked_add(m(i, col), -acc);
        }
    }
    void right_reflect(IntMatrix& m, int i) const {
        const int n = rank();
        for (int row = 0; row < n; ++row) {
            const std::int64_t mi = m(row, i);
            if (mi == 0) continue;
            for (int col = 0; col < n; ++col) {
                if (cartan_(i, col) != 0)
                    m(row, col) = IntMatrix::checked_add(m(row, col), -IntMatrix::checked_mul(mi, cartan_(i, col)));
            }
        }
    }

    Element identity() const;
    Element simple_reflection(int i) const;
    Element from_word(std::span<const int> word) const;
    Element from_word(std::initializer_list<int> word) const;

private:
    explicit CoxeterSystem(GeneralizedCartanMatrix cartan) : cartan_(std::move(cartan)) {
        const int n = cartan_.rank();
        coxeter_m_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const long p = static_cast<long>(cartan_(i, j)) * cartan_(j, i);
                int m = kInfiniteOrder;
                switch (p) {
                    case 0: m = 2; break;
                    case 1: m = 3; break;
                    case 2: m = 4; break;
                    case 3: m = 6; break;
                    default: m = kInfiniteOrder;
                }
                coxeter_m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
            }
    }

    GeneralizedCartanMatrix cartan_;
    std::vector<std::vector<int>> coxeter_m_;
};

inline std::shared_ptr<const CoxeterSystem> build_system(GeneralizedCartanMatrix cartan) {
    return CoxeterSystem::build(std::move(cartan));
}

namespace detail {

struct ElementData {
    std::shared_ptr<const CoxeterSystem> sys;
    IntMatrix mat;  // column j = w(alpha_j)
    IntMatrix inv;  // matrix of w^{-1}
    std::vector<int> word;
    std::size_t hash = 0;
};

// A root vector is negative iff its first nonzero coordinate is; real roots
// have coordinates of a single sign.
inline bool column_negative(const IntMatrix& m, int col) {
    for (int row = 0; row < m.size(); ++row) {
        if (m(row, col) != 0) return m(row, col) < 0;
    }
    return false;
}

inline std::size_t hash_matrix(const IntMatrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : m.data()) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace detail

class Element {
public:
    /// Builds the element with the given matrix and inverse matrix, deriving its canonical word.
    static Element from_matrices(std::shared_ptr<const CoxeterSystem> sys, IntMatrix mat, IntMatrix inv) {
        auto d = std::make_shared<detail::ElementData>();
        d->hash = detail::hash_matrix(mat);
        IntMatrix m = mat;
        IntMatrix mi = inv;
        const int n = sys->rank();
        for (;;) {
            int s = -1;
            for (int i = 0; i < n; ++i) {
                if (detail::column_negative(mi, i)) {
                    s = i;
                    break;
                }
            }
            if (s < 0) break;
            d->word.push_back(s);
            sys->left_reflect(m, s);
            sys->right_reflect(mi, s);
        }
        if (!(m == IntMatrix::identity(n)))
            throw Error(Errc::PostVerificationFailed, "descent stripping did not reach the identity");
        d->sys = std::move(sys);
        d->mat = std::move(mat);
        d->inv = std::move(inv);
        return Element(std::move(d));
    }

    const CoxeterSystem& system() const noexcept { return *d_->sys; }
    const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept { return d_->sys; }
    int length() const noexcept { return static_cast<int>(d_->word.size()); }
    const std::vector<int>& word() const noexcept { return d_->word; }
    const IntMatrix& matrix() const noexcept { return d_->mat; }
    const IntMatrix& inverse_matrix() const noexcept { return d_->inv; }
    bool is_identity() const noexcept { return d_->word.empty(); }
    std::size_t hash() const noexcept { return d_->hash; }

    /// l(w s_i) < l(w), i.e. w(alpha_i) is a negative root.
    bool is_right_descent(int i) const {
        system().check_index(i);
        return detail::column_negative(d_->mat, i);
    }

    /// l(s_i w) < l(w)
    bool is_left_descent(int i) const {
        system().check_index(i);
        return detail::column_negative(d_->inv, i);
    }

    std::vector<int> right_descents() const {
        std::vector<int> out;
        for (int i = 0; i < system().rank(); ++i)
            if (is_right_descent(i)) out.push_back(i);
        return out;
    }

    /// w s_i
    Element times(int i) const {
        system().check_index(i);
        IntMatrix m = d_->mat;
        IntMatrix mi = d_->inv;
        system().right_reflect(m, i);
        system().left_reflect(mi, i);
        return from_matrices(d_->sys, std::move(m), std::move(mi));
    }

    /// s_i w
    Element left_times(int i) const {
        system().check_index(i);
        IntMatrix m = d_->mat;
        IntMatrix mi = d_->inv;
        system().left_reflect(m, i);
        system().right_reflect(mi, i);
        return from_matrices(d_->sys, std::move(m), std::move(mi));
    }

    Element inverse() const { return from_matrices(d_->sys, d_->inv, d_->mat); }

    /// Comma-separated canonical word; the identity is the empty string.
    std::string word_string() const {
        std::string s;
        for (std::size_t k = 0; k < d_->word.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(d_->word[k]);
        }
        return s;
    }

    bool same_system(const Element& o) const noexcept { return d_->sys == o.d_->sys; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.d_ == b.d_ || (a.d_->sys == b.d_->sys && a.d_->hash == b.d_->hash && a.d_->mat == b.d_->mat);
    }

    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return a.d_->word <=> b.d_->word;
    }

private:
    explicit Element(std::shared_ptr<const detail::ElementData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::ElementData> d_;
};

struct ElementHash {
    std::size_t operator()(const Element& w) const noexcept { return w.hash(); }
};

using ElementSet = std::unordered_set<Element, ElementHash>;
template <class V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

inline Element CoxeterSystem::identity() const {
    return Element::from_matrices(shared_from_this(), IntMatrix::identity(rank()), IntMatrix::identity(rank()));
}

inline Element CoxeterSystem::simple_reflection(int i) const {
    check_index(i);
    IntMatrix m = IntMatrix::identity(rank());
    right_reflect(m, i);
    return Element::from_matrices(shared_from_this(), m, m);
}

inline Element CoxeterSystem::from_word(std::span<const int> word) const {
    IntMatrix m = IntMatrix::identity(rank());
    IntMatrix mi = IntMatrix::identity(rank());
    for (int i : word) {
        check_index(i);
        right_reflect(m, i);
        left_reflect(mi, i);
    }
    return Element::from_matrices(shared_from_this(), std::move(m), std::move(mi));
}

inline Element CoxeterSystem::from_word(std::initializer_list<int> word) const {
    return from_word(std::span<const int>(word.begin(), word.size()));
}

inline Element simple_reflection(const CoxeterSystem& sys, int i) { return sys.simple_reflection(i); }

inline void require_same_system(const Element& a, const Element& b) {
    if (!a.same_system(b)) throw Error(Errc::SystemMismatch, "elements belong to different Coxeter systems");
}

/// Group product w*v. The length is recomputed, never assumed additive.
inline Element multiply(const Element& w, const Element& v) {
    require_same_system(w, v);
    return Element::from_matrices(w.system_ptr(), w.matrix() * v.matrix(), v.inverse_matrix() * w.inverse_matrix());
}

inline bool is_right_descent(const Element& w, int i) { return w.is_right_descent(i); }

/// Bruhat order via the lifting property: for a left descent s of w,
/// y <= w iff sy <= sw when sy < y, and iff y <= sw otherwise.
inline bool bruhat_leq(const Element& y, const Element& w) {
    require_same_system(y, w);
    Element a = y;
    Element b = w;
    for (;;) {
        if (a.length() > b.length()) return false;
        if (b.is_identity()) return a.is_identity();
        if (a.length() == b.length()) return a == b;
        if (a.is_identity()) return true;
        const int s = b.word().front();
        if (a.is_left_descent(s)) a = a.left_times(s);
        b = b.left_times(s);
    }
}

/// Sorts ShortLex: by length, then by canonical word.
inline void sort_shortlex(std::vector<Element>& v) { std::sort(v.begin(), v.end()); }

/// All y <= w, ordered by length then canonical word. Computed as the
/// deduplicated set of products of subwords of the canonical word of w,
/// built letter by letter from the right end of the word.
inline std::vector<Element> bruhat_interval_below(const Element& w) {
    const auto& word = w.word();
    ElementSet set{w.system().identity()};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::vector<Element> add;
        add.reserve(set.size());
        for (const auto& y : set) add.push_back(y.left_times(*it));
        for (auto& y : add) set.insert(std::move(y));
    }
    std::vector<Element> out(set.begin(), set.end());
    sort_shortlex(out);
    return out;
}

/// Layer k holds every element of length exactly k, for k = 0..max_length.
inline std::vector<std::vector<Element>> elements_up_to_length(const CoxeterSystem& sys, int max_length) {
    std::vector<std::vector<Element>> layers;
    if (max_length < 0) return layers;
    layers.push_back({sys.identity()});
    for (int k = 0; k < max_length; ++k) {
        ElementSet next;
        for (const auto& w : layers.back())
            for (int i = 0; i < sys.rank(); ++i)
                if (!w.is_right_descent(i)) next.insert(w.times(i));
        std::vector<Element> layer(next.begin(), next.end());
        sort_shortlex(layer);
        if (layer.empty()) break;
        layers.push_back(std::move(layer));
    }
    return layers;
}

inline std::vector<Element> flatten(const std::vector<std::vector<Element>>& layers) {
    std::vector<Element> out;
    for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
    return out;
}

/// Generator subsets are kept sorted and duplicate-free.
inline std::vector<int> normalize_subset(const CoxeterSystem& sys, std::vector<int> J) {
    for (int j : J) sys.check_index(j);
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

/// No j in J is a right descent of w.
inline bool is_min_coset_rep(const Element& w, std::span<const int> J) {
    return std::none_of(J.begin(), J.end(), [&](int j) { return w.is_right_descent(j); });
}

/// w = u*x with u in W^J, x in W_J and l(w) = l(u) + l(x), found by stripping right descents in J.
inline std::pair<Element, Element> parabolic_decompose(const Element& w, std::span<const int> J) {
    Element u = w;
    std::vector<int> x_rev;
    for (;;) {
        auto it = std::find_if(J.begin(), J.end(), [&](int j) { return u.is_right_descent(j); });
        if (it == J.end()) break;
        u = u.times(*it);
        x_rev.push_back(*it);
    }
    std::vector<int> x_word(x_rev.rbegin(), x_rev.rend());
    return {u, w.system().from_word(x_word)};
}

/// Elements of W_J of length <= max_length, ShortLex ordered.
inline std::vector<Element> parabolic_subgroup_up_to_length(const CoxeterSystem& sys, std::span<const int> J,
                                                            int max_length) {
    std::vector<Element> out{sys.identity()};
    std::vector<Element> frontier = out;
    for (int k = 0; k < max_length && !frontier.empty(); ++k) {
        ElementSet next;
        for (const auto& w : frontier)
            for (int j : J)
                if (!w.is_right_descent(j)) next.insert(w.times(j));
        frontier.assign(next.begin(), next.end());
        sort_shortlex(frontier);
        out.insert(out.end(), frontier.begin(), frontier.end());
    }
    return out;
}

/// W_idx is finite iff every principal minor of the Cartan submatrix on `idx` is positive.
/// Exponential in |idx|; callers only use it for small index sets.
inline bool is_finite_type(const GeneralizedCartanMatrix& a, const std::vector<int>& idx) {
    const std::size_t n = idx.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(idx[i]);
        const std::size_t k = sub.size();
        std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m[i][j] = a(sub[i], sub[j]);
        mpq_class det = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && m[p][c] == 0) ++p;
            if (p == k) return false;
            if (p != c) {
                std::swap(m[p], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (std::size_t r = c + 1; r < k; ++r) {
                if (m[r][c] == 0) continue;
                const mpq_class f = m[r][c] / m[c][c];
                for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

/// All of W_J when it has at most `cap` elements; throws ParabolicInfinite otherwise.
inline std::vector<Element> parabolic_subgroup(const CoxeterSystem& sys, std::span<const int> J,
                                               std::size_t cap = kDefaultParabolicCap) {
    if (J.size() <= 16 && !is_finite_type(sys.cartan(), std::vector<int>(J.begin(), J.end())))
        throw Error(Errc::ParabolicInfinite, "parabolic subgroup is infinite");
    std::vector<Element> out{sys.identity()};
    std::vector<Element> frontier = out;
    while (!frontier.empty()) {
        ElementSet next;
        for (const auto& w : frontier)
            for (int j : J)
                if (!w.is_right_descent(j)) next.insert(w.times(j));
        frontier.assign(next.begin(), next.end());
        sort_shortlex(frontier);
        out.insert(out.end(), frontier.begin(), frontier.end());
        if (out.size() > cap)
            throw Error(Errc::ParabolicInfinite,
                        "parabolic subgroup exceeded " + std::to_string(cap) + " elements without closing");
    }
    return out;
}

/// The longest element w_J of a finite W_J.
inline Element longest_element_WJ(const CoxeterSystem& sys, std::span<const int> J,
                                  std::size_t cap = kDefaultParabolicCap) {
    auto all = parabolic_subgroup(sys, J, cap);
    return all.back();
}

enum class Marker { q, minus_one };

constexpr Marker dagger(Marker a) noexcept { return a == Marker::q ? Marker::minus_one : Marker::q; }

constexpr std::string_view to_string(Marker a) noexcept { return a == Marker::q ? "q" : "-1"; }

inline Marker parse_marker(std::string_view s) {
    if (s == "q") return Marker::q;
    if (s == "-1") return Marker::minus_one;
    throw Error(Errc::ParseError, "marker must be 'q' or '-1', got '" + std::string(s) + "'");
}

/// J together with the character marker a in {q, -1}; a * a_dagger = -q.
struct ParabolicData {
    std::vector<int> J;
    Marker a = Marker::q;

    Marker a_dagger() const noexcept { return dagger(a); }
    ParabolicData with_dagger() const { return {J, dagger(a)}; }
    bool contains(int s) const { return std::binary_search(J.begin(), J.end(), s); }

    friend bool operator==(const ParabolicData&, const ParabolicData&) = default;
};

}  // namespace klpar

template <>
struct std::hash<klpar::Element> {
    std::size_t operator()(const klpar::Element& w) const noexcept { return w.hash(); }
};
