#pragma once

#include "core/numbers.hpp"
#include "core/poly.hpp"
#include "core/ring.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace altdes {

// Power series truncated at a fixed order. Coefficients are stored in the
// ordinary sense (c[n] multiplies x^n); exponential-style access multiplies
// by n! on read. Binary operations truncate to the smaller order, and
// equality compares coefficients through the common order only.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, R proto = R{})
        : order_(order), proto_(std::move(proto)) {
        if (order < 0) throw std::domain_error("negative truncation order");
        coeffs_.assign(order + 1, RingTraits<R>::zero_like(proto_));
    }

    int order() const { return order_; }
    const R& proto() const { return proto_; }

    const R& coeff(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index");
        return coeffs_[n];
    }

    void set_coeff(int n, R value) {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index");
        coeffs_[n] = std::move(value);
    }

    void add_to_coeff(int n, const R& value) {
        if (n < 0 || n > order_) throw std::out_of_range("coefficient index");
        coeffs_[n] = coeffs_[n] + value;
    }

    // coefficient times n!
    R egf_coeff(int n) const {
        return coeff(n) * RingTraits<R>::from_rational_like(proto_, Rat(factorial(n)));
    }

    static TruncatedSeries one(int order, const R& proto = R{}) {
        TruncatedSeries s(order, proto);
        s.set_coeff(0, RingTraits<R>::one_like(proto));
        return s;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries out(std::min(order_, o.order_), proto_);
        for (int n = 0; n <= out.order_; ++n)
            out.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const {
        TruncatedSeries out(std::min(order_, o.order_), proto_);
        for (int n = 0; n <= out.order_; ++n)
            out.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries out(std::min(order_, o.order_), proto_);
        for (int i = 0; i <= out.order_; ++i) {
            if (RingTraits<R>::is_zero(coeffs_[i])) continue;
            for (int j = 0; i + j <= out.order_; ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        }
        return out;
    }

    TruncatedSeries scalar_mul(const R& s) const {
        TruncatedSeries out(order_, proto_);
        for (int n = 0; n <= order_; ++n) out.coeffs_[n] = coeffs_[n] * s;
        return out;
    }

    TruncatedSeries operator-() const {
        return scalar_mul(RingTraits<R>::zero_like(proto_) -
                          RingTraits<R>::one_like(proto_));
    }

    // multiplicative inverse; requires an invertible constant term
    TruncatedSeries reciprocal() const {
        R c0inv;
        if (!RingTraits<R>::try_invert(coeffs_[0], c0inv))
            throw std::domain_error("constant term is not invertible");
        TruncatedSeries out(order_, proto_);
        out.coeffs_[0] = c0inv;
        for (int n = 1; n <= order_; ++n) {
            R acc = RingTraits<R>::zero_like(proto_);
            for (int k = 1; k <= n; ++k) acc = acc + coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = RingTraits<R>::zero_like(proto_) - c0inv * acc;
        }
        return out;
    }

    // x -> a x
    TruncatedSeries scale_argument(const R& a) const {
        TruncatedSeries out(order_, proto_);
        R p = RingTraits<R>::one_like(proto_);
        for (int n = 0; n <= order_; ++n) {
            out.coeffs_[n] = coeffs_[n] * p;
            if (n < order_) p = p * a;
        }
        return out;
    }

    // keeps the coefficients with index congruent to r mod m, zeroing the
    // rest; realized purely by index selection
    TruncatedSeries multisect(int m, int r) const {
        if (m <= 0 || r < 0 || r >= m) throw std::domain_error("bad multisection");
        TruncatedSeries out(order_, proto_);
        for (int n = r; n <= order_; n += m) out.coeffs_[n] = coeffs_[n];
        return out;
    }

    TruncatedSeries derivative() const {
        if (order_ == 0) return TruncatedSeries(0, proto_);
        TruncatedSeries out(order_ - 1, proto_);
        for (int n = 0; n < order_; ++n)
            out.coeffs_[n] =
                coeffs_[n + 1] * RingTraits<R>::from_rational_like(proto_, Rat(n + 1));
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int common = std::min(a.order_, b.order_);
        for (int n = 0; n <= common; ++n)
            if (!(a.coeffs_[n] == b.coeffs_[n])) return false;
        return true;
    }

private:
    int order_;
    R proto_;
    std::vector<R> coeffs_;
};

using RatSeries = TruncatedSeries<Rat>;
using Poly1Series = TruncatedSeries<Poly1>;

// embeds a rational series into a larger coefficient ring
template <class R>
TruncatedSeries<R> lift_series(const TruncatedSeries<Rat>& s, const R& proto) {
    TruncatedSeries<R> out(s.order(), proto);
    for (int n = 0; n <= s.order(); ++n)
        out.set_coeff(n, RingTraits<R>::from_rational_like(proto, s.coeff(n)));
    return out;
}

}  // namespace altdes
