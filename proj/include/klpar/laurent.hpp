#pragma once

/*
 * Exact Laurent polynomials in one variable q with arbitrary-precision
 * integer coefficients.
 *
 * Storage is dense between the lowest and highest nonzero exponent:
 * coefficient of q^(min_ + i) is coeffs_[i]. Both ends are nonzero, so two
 * equal polynomials always have identical representations. The zero
 * polynomial is the empty vector with min_ == 0.
 */

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace klpar {

using BigInt = mpz_class;

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) {  // NOLINT: implicit on purpose, `p + 1` reads naturally
        if (constant != 0) coeffs_.emplace_back(constant);
    }
    explicit LaurentPoly(const BigInt& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    static LaurentPoly monomial(const BigInt& c, int exponent) {
        LaurentPoly p;
        if (c != 0) {
            p.min_ = exponent;
            p.coeffs_.push_back(c);
        }
        return p;
    }

    /// q^exponent
    static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

    static LaurentPoly from_coefficients(int min_exponent, std::vector<BigInt> coeffs) {
        LaurentPoly p;
        p.min_ = min_exponent;
        p.coeffs_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Highest exponent; nullopt stands for -infinity (the zero polynomial).
    std::optional<int> degree() const {
        if (is_zero()) return std::nullopt;
        return min_ + static_cast<int>(coeffs_.size()) - 1;
    }

    /// Lowest exponent; nullopt stands for +infinity (the zero polynomial).
    std::optional<int> min_degree() const {
        if (is_zero()) return std::nullopt;
        return min_;
    }

    BigInt coeff(int k) const {
        if (is_zero() || k < min_ || k > *degree()) return 0;
        return coeffs_[static_cast<std::size_t>(k - min_)];
    }

    /// True when no negative powers of q occur. The zero polynomial qualifies.
    bool is_ordinary_polynomial() const noexcept { return is_zero() || min_ >= 0; }

    /// Exponent of coefficients().front(); 0 for the zero polynomial.
    int min_exponent() const noexcept { return min_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly p;
        if (is_zero()) return p;
        p.min_ = -*degree();
        p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return p;
    }

    /// this * q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.min_ += k;
        return p;
    }

    /// Keeps only the terms with lo <= exponent <= hi.
    LaurentPoly restricted(int lo, int hi) const {
        LaurentPoly p;
        if (is_zero() || lo > hi) return p;
        const int from = std::max(lo, min_);
        const int to = std::min(hi, *degree());
        if (from > to) return p;
        p.min_ = from;
        p.coeffs_.assign(coeffs_.begin() + (from - min_), coeffs_.begin() + (to - min_ + 1));
        p.normalize();
        return p;
    }

    bool has_nonnegative_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.min_ = a.min_ + b.min_;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
                p.coeffs_[i + k] += a.coeffs_[i] * b.coeffs_[k];
            }
        }
        p.normalize();
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_ == b.min_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form, e.g. "1 + q - 3q^-2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            const int e = min_ + static_cast<int>(i);
            BigInt mag = abs(c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (e == 0 || mag != 1) out += mag.get_str();
            if (e != 0) {
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    LaurentPoly& accumulate(const LaurentPoly& o, int sign) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            if (sign < 0)
                for (auto& c : coeffs_) c = -c;
            return *this;
        }
        const int lo = std::min(min_, o.min_);
        const int hi = std::max(*degree(), *o.degree());
        if (lo < min_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_ - lo), BigInt(0));
            min_ = lo;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            auto& slot = coeffs_[static_cast<std::size_t>(o.min_ - lo) + i];
            if (sign > 0)
                slot += o.coeffs_[i];
            else
                slot -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            min_ = 0;
            return;
        }
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            min_ += static_cast<int>(lead);
        }
    }

    int min_ = 0;
    std::vector<BigInt> coeffs_;
};

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

/// (-1)^n
inline long sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

/// (-q)^n for n >= 0 or n < 0
inline LaurentPoly minus_q_power(int n) { return LaurentPoly::monomial(sign_power(n), n); }

}  // namespace klpar
