#pragma once

#include "core/numbers.hpp"
#include "core/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace altdes {

// Dense univariate polynomial over Q, kept trimmed. The zero polynomial has
// no degree.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(Rat constant);
    explicit Poly1(std::vector<Rat> coeffs);
    static Poly1 monomial(int degree, const Rat& coeff = Rat(1));

    std::optional<int> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    // zero beyond the degree
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Poly1 operator+(const Poly1& o) const;
    Poly1 operator-(const Poly1& o) const;
    Poly1 operator-() const;
    Poly1 operator*(const Poly1& o) const;
    Poly1 operator*(const Rat& s) const;
    Poly1 pow(int e) const;
    Rat eval(const Rat& x) const;

    // throws std::domain_error when the division leaves a remainder
    Poly1 divide_exact(const Poly1& divisor) const;

    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const Poly1&, const Poly1&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;  // low to high
};

template <>
struct RingTraits<Poly1> {
    static Poly1 zero_like(const Poly1&) { return Poly1(); }
    static Poly1 one_like(const Poly1&) { return Poly1(Rat(1)); }
    static Poly1 from_rational_like(const Poly1&, const Rat& v) { return Poly1(v); }
    static bool is_zero(const Poly1& v) { return v.is_zero(); }
    static bool try_invert(const Poly1& v, Poly1& out) {
        if (v.degree() != 0) return false;
        out = Poly1(Rat(1) / v.coeff(0));
        return true;
    }
    static std::string to_string(const Poly1& v) { return v.to_string(); }
};

// Dense bivariate polynomial in t and q with hard degree caps. Terms pushed
// past a cap are dropped and the drop is recorded; the flag is sticky through
// arithmetic so identity checks can insist that nothing was lost below the
// degrees they compare. A default-constructed value is an unshaped zero that
// adopts the caps of whatever it first meets.
class Poly2 {
public:
    Poly2() = default;
    Poly2(int tcap, int qcap);
    static Poly2 monomial(int tcap, int qcap, int dt, int dq, const Rat& coeff = Rat(1));
    static Poly2 constant(int tcap, int qcap, const Rat& value);

    bool unshaped() const { return tcap_ < 0; }
    int tcap() const { return tcap_; }
    int qcap() const { return qcap_; }
    bool truncated() const { return truncated_; }

    bool is_zero() const;
    Rat coeff(int dt, int dq) const;
    void add_term(int dt, int dq, const Rat& c);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rat& s) const;

    // equality of coefficients; caps and flags do not participate
    bool operator==(const Poly2& o) const;

    std::string to_string() const;

private:
    size_t idx(int dt, int dq) const { return static_cast<size_t>(dt) * (qcap_ + 1) + dq; }
    int tcap_ = -1;
    int qcap_ = -1;
    bool truncated_ = false;
    std::vector<Rat> coeffs_;
};

template <>
struct RingTraits<Poly2> {
    static Poly2 zero_like(const Poly2& like) {
        return like.unshaped() ? Poly2() : Poly2(like.tcap(), like.qcap());
    }
    static Poly2 one_like(const Poly2& like) {
        return Poly2::constant(like.tcap(), like.qcap(), Rat(1));
    }
    static Poly2 from_rational_like(const Poly2& like, const Rat& v) {
        return Poly2::constant(like.tcap(), like.qcap(), v);
    }
    static bool is_zero(const Poly2& v) { return v.is_zero(); }
    static bool try_invert(const Poly2& v, Poly2& out);
    static std::string to_string(const Poly2& v) { return v.to_string(); }
};

}  // namespace altdes
