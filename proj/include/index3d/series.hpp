#pragma once

#include "errors.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace index3d {

/// An element of (1/2)Z stored as twice its value.
struct HalfInt {
    long long twice = 0;

    static constexpr HalfInt from_twice(long long t) { return HalfInt{t}; }
    static constexpr HalfInt from_int(long long v) { return HalfInt{2 * v}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// Renders as an integer or as a fraction with denominator 2.
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    /// Parses `7`, `-3`, `21/2` or `-1/2`.
    static HalfInt parse(const std::string& text) {
        Rational r;
        try {
            r = parse_rational(text);
        } catch (const std::exception&) {
            throw ParseError("not a half-integer: '" + text + "'");
        }
        Rational t = r * 2;
        if (!index3d::is_integer(t)) throw ParseError("not a half-integer: '" + text + "'");
        return HalfInt{static_cast<long long>(boost::multiprecision::numerator(t))};
    }
};

/**
 * @brief Laurent series in q^{1/2} with integer coefficients, known exactly
 * below a half-integer truncation order.
 *
 * Coefficients are stored densely over doubled exponents starting at `lo_`.
 */
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(HalfInt order) : order_(order) {}

    static TruncatedSeries zero(HalfInt order) { return TruncatedSeries(order); }
    static TruncatedSeries one(HalfInt order) { return monomial(1, HalfInt{0}, order); }
    static TruncatedSeries monomial(const BigInt& c, HalfInt exponent, HalfInt order) {
        TruncatedSeries s(order);
        s.set(exponent, c);
        return s;
    }

    HalfInt order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const BigInt& v) { return v != 0; }));
    }

    /// Smallest stored exponent; only meaningful for a nonzero series.
    HalfInt min_exponent() const { return HalfInt{lo_}; }

    BigInt coeff(HalfInt e) const {
        long long i = e.twice - lo_;
        if (i < 0 || i >= static_cast<long long>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    /// Nonzero terms in increasing exponent order.
    std::vector<std::pair<HalfInt, BigInt>> terms() const {
        std::vector<std::pair<HalfInt, BigInt>> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) out.emplace_back(HalfInt{lo_ + static_cast<long long>(i)}, c_[i]);
        return out;
    }

    /// Sets a coefficient; exponents at or above the order are ignored.
    void set(HalfInt e, const BigInt& v) {
        if (e >= order_) return;
        if (c_.empty()) {
            if (v == 0) return;
            lo_ = e.twice;
            c_.push_back(v);
            return;
        }
        reserve_range(e.twice);
        c_[static_cast<std::size_t>(e.twice - lo_)] = v;
        normalise();
    }

    void add_to(HalfInt e, const BigInt& v) {
        if (e >= order_ || v == 0) return;
        if (c_.empty()) {
            lo_ = e.twice;
            c_.push_back(v);
            return;
        }
        reserve_range(e.twice);
        c_[static_cast<std::size_t>(e.twice - lo_)] += v;
        normalise();
    }

    /// Copy with the order lowered to `order` (never raised).
    TruncatedSeries truncated(HalfInt order) const {
        TruncatedSeries r = *this;
        if (order < r.order_) {
            r.order_ = order;
            r.normalise();
        }
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        r.accumulate(a, 1);
        r.accumulate(b, 1);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        r.accumulate(a, 1);
        r.accumulate(b, -1);
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& b) {
        order_ = std::min(order_, b.order_);
        normalise();
        accumulate(b, 1);
        return *this;
    }

    /// Cauchy product. A zero factor contributes its order as lowest possible exponent.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        long long la = a.is_zero() ? a.order_.twice : std::min(a.lo_, a.order_.twice);
        long long lb = b.is_zero() ? b.order_.twice : std::min(b.lo_, b.order_.twice);
        TruncatedSeries r(HalfInt{std::min(a.order_.twice + lb, b.order_.twice + la)});
        if (a.is_zero() || b.is_zero()) return r;
        long long lo = a.lo_ + b.lo_;
        long long hi = std::min(r.order_.twice, a.lo_ + static_cast<long long>(a.c_.size()) - 1 + b.lo_ +
                                                    static_cast<long long>(b.c_.size()));
        if (hi <= lo) return r;
        std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            long long base = a.lo_ + static_cast<long long>(i) + b.lo_;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                long long e = base + static_cast<long long>(j);
                if (e >= hi) break;
                if (b.c_[j] == 0) continue;
                acc[static_cast<std::size_t>(e - lo)] += a.c_[i] * b.c_[j];
            }
        }
        r.lo_ = lo;
        r.c_ = std::move(acc);
        r.normalise();
        return r;
    }

    /// Multiplies by (-q^{1/2})^k.
    TruncatedSeries mul_sign_power(long long k) const {
        TruncatedSeries r = *this;
        r.lo_ += k;
        r.order_.twice += k;
        if (k % 2 != 0)
            for (auto& v : r.c_) v = -v;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.terms() == b.terms();
    }

    /// Equality of the coefficients below the smaller of the two orders.
    bool agrees_with(const TruncatedSeries& o) const {
        HalfInt m = std::min(order_, o.order_);
        return truncated(m).terms() == o.truncated(m).terms();
    }

    /// Text form `c*q^e + ... + O(q^N)`; exponents other than nonnegative integers are parenthesised
    /// and negative coefficients after the first term are written with a minus separator.
    std::string to_text() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms()) {
            BigInt shown = c;
            if (!first) {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) shown = -c;
            }
            first = false;
            if (e.twice == 0)
                os << shown;
            else
                os << shown << "*q^" << exponent_text(e);
        }
        if (first) os << "0";
        os << " + O(q^" << exponent_text(order_) << ")";
        return os.str();
    }

    /// Machine form `{"twice_order":N,"terms":[[e,c],...]}` with doubled exponents.
    std::string to_machine() const {
        std::ostringstream os;
        os << "{\"twice_order\":" << order_.twice << ",\"terms\":[";
        bool first = true;
        for (const auto& [e, c] : terms()) {
            if (!first) os << ",";
            first = false;
            os << "[" << e.twice << "," << c << "]";
        }
        os << "]}";
        return os.str();
    }

    static TruncatedSeries parse_text(const std::string& text);
    static TruncatedSeries parse_machine(const std::string& text);

private:
    static std::string exponent_text(HalfInt e) {
        if (e.is_integer() && e.twice >= 0) return e.str();
        return "(" + e.str() + ")";
    }

    void reserve_range(long long e) {
        if (e < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - e), BigInt(0));
            lo_ = e;
        } else if (e >= lo_ + static_cast<long long>(c_.size())) {
            c_.resize(static_cast<std::size_t>(e - lo_ + 1));
        }
    }

    void accumulate(const TruncatedSeries& s, int sign) {
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            if (s.c_[i] == 0) continue;
            long long e = s.lo_ + static_cast<long long>(i);
            if (e >= order_.twice) break;
            if (c_.empty()) {
                lo_ = e;
                c_.push_back(0);
            }
            reserve_range(e);
            if (sign > 0)
                c_[static_cast<std::size_t>(e - lo_)] += s.c_[i];
            else
                c_[static_cast<std::size_t>(e - lo_)] -= s.c_[i];
        }
        normalise();
    }

    void normalise() {
        long long keep = order_.twice - lo_;
        if (keep <= 0) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (static_cast<long long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            lo_ += static_cast<long long>(lead);
        }
    }

    HalfInt order_{0};
    long long lo_ = 0;
    std::vector<BigInt> c_;
};

/// 1/(q)_n = 1/prod_{i=1}^n (1 - q^i) expanded below `order`.
inline TruncatedSeries pochhammer_inverse(long long n, HalfInt order) {
    TruncatedSeries r(order);
    if (order.twice <= 0) return r;
    std::vector<BigInt> c(static_cast<std::size_t>(order.twice));
    c[0] = 1;
    for (long long i = 1; i <= n; ++i) {
        std::size_t step = static_cast<std::size_t>(2 * i);
        for (std::size_t k = step; k < c.size(); ++k) c[k] += c[k - step];
    }
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) r.set(HalfInt{static_cast<long long>(k)}, c[k]);
    return r;
}

namespace detail {

inline void skip_space(const std::string& s, std::size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline HalfInt parse_exponent(const std::string& s, std::size_t& p) {
    skip_space(s, p);
    bool paren = p < s.size() && s[p] == '(';
    if (paren) ++p;
    std::size_t start = p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '-' || s[p] == '/')) ++p;
    HalfInt e = HalfInt::parse(s.substr(start, p - start));
    if (paren) {
        if (p >= s.size() || s[p] != ')') throw ParseError("expected ')' in series exponent", 1, static_cast<int>(p + 1));
        ++p;
    }
    return e;
}

}  // namespace detail

inline TruncatedSeries TruncatedSeries::parse_text(const std::string& s) {
    std::vector<std::pair<HalfInt, BigInt>> terms;
    std::size_t p = 0;
    int sign = 1;
    for (;;) {
        detail::skip_space(s, p);
        if (p >= s.size()) throw ParseError("series text lacks an O(q^N) term");
        if (s[p] == 'O') {
            if (s.compare(p, 4, "O(q^") != 0) throw ParseError("malformed order term", 1, static_cast<int>(p + 1));
            p += 4;
            HalfInt order = detail::parse_exponent(s, p);
            if (p >= s.size() || s[p] != ')') throw ParseError("expected ')' after order", 1, static_cast<int>(p + 1));
            TruncatedSeries r(order);
            for (const auto& [e, c] : terms) r.add_to(e, c);
            return r;
        }
        std::size_t start = p;
        if (s[p] == '-' || s[p] == '+') ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        std::string digits = s.substr(start, p - start);
        BigInt c = 1;
        if (digits == "-")
            c = -1;
        else if (!digits.empty() && digits != "+")
            c = BigInt(digits);
        HalfInt e{0};
        if (p < s.size() && s[p] == '*') ++p;
        if (p < s.size() && s[p] == 'q') {
            ++p;
            if (p < s.size() && s[p] == '^') {
                ++p;
                e = detail::parse_exponent(s, p);
            } else {
                e = HalfInt::from_int(1);
            }
        } else if (digits.empty() || digits == "-" || digits == "+") {
            throw ParseError("expected a coefficient or q", 1, static_cast<int>(p + 1));
        }
        terms.emplace_back(e, sign * c);
        detail::skip_space(s, p);
        if (p < s.size() && s[p] == '+') {
            sign = 1;
            ++p;
        } else if (p < s.size() && s[p] == '-') {
            sign = -1;
            ++p;
        } else {
            throw ParseError("expected '+' between series terms", 1, static_cast<int>(p + 1));
        }
    }
}

inline TruncatedSeries TruncatedSeries::parse_machine(const std::string& s) {
    std::size_t p = 0;
    auto expect = [&](const std::string& tok) {
        detail::skip_space(s, p);
        if (s.compare(p, tok.size(), tok) != 0) throw ParseError("expected '" + tok + "'", 1, static_cast<int>(p + 1));
        p += tok.size();
    };
    auto integer = [&]() {
        detail::skip_space(s, p);
        std::size_t start = p;
        if (p < s.size() && s[p] == '-') ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw ParseError("expected an integer", 1, static_cast<int>(p + 1));
        return BigInt(s.substr(start, p - start));
    };
    expect("{");
    expect("\"twice_order\"");
    expect(":");
    TruncatedSeries r(HalfInt{static_cast<long long>(integer())});
    expect(",");
    expect("\"terms\"");
    expect(":");
    expect("[");
    detail::skip_space(s, p);
    if (p < s.size() && s[p] == ']') {
        ++p;
    } else {
        for (;;) {
            expect("[");
            long long e = static_cast<long long>(integer());
            expect(",");
            BigInt c = integer();
            expect("]");
            r.add_to(HalfInt{e}, c);
            detail::skip_space(s, p);
            if (p < s.size() && s[p] == ',') {
                ++p;
                continue;
            }
            expect("]");
            break;
        }
    }
    expect("}");
    return r;
}

}  // namespace index3d
