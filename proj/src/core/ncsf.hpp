#pragma once

#include "core/composition.hpp"
#include "core/counts.hpp"
#include "core/errors.hpp"
#include "core/numbers.hpp"
#include "core/poly.hpp"
#include "core/ring.hpp"
#include "core/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace altdes {

// Graded algebra spanned by words h_L = h_{L1}...h_{Lk} over compositions L,
// with the ribbon basis r_L related by r_L = sum over coarsenings K of L of
// (-1)^(l(L)-l(K)) h_K.  Multiplication concatenates h-words.  Elements are
// truncated above max_degree.
enum class NcsfBasis { h, r };

inline constexpr int kNcsfMaxDegree = 16;

template <class R>
class NcsfElement {
public:
    NcsfElement(NcsfBasis basis, int max_degree, R proto = R{})
        : basis_(basis), max_degree_(max_degree), proto_(std::move(proto)) {
        if (max_degree < 0) throw std::domain_error("negative degree cap");
        if (max_degree > kNcsfMaxDegree)
            throw ResourceError("degree capped at " + std::to_string(kNcsfMaxDegree));
    }

    static NcsfElement one(NcsfBasis basis, int max_degree, R proto = R{}) {
        NcsfElement e(basis, max_degree, std::move(proto));
        e.add_term(Composition{}, RingTraits<R>::one_like(e.proto_));
        return e;
    }

    NcsfBasis basis() const { return basis_; }
    int max_degree() const { return max_degree_; }
    const R& proto() const { return proto_; }
    const std::map<Composition, R>& terms() const { return terms_; }

    R coeff(const Composition& L) const {
        auto it = terms_.find(L);
        return it == terms_.end() ? RingTraits<R>::zero_like(proto_) : it->second;
    }

    void add_term(const Composition& L, const R& c) {
        if (L.weight() > max_degree_ || RingTraits<R>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(L, c);
        if (!inserted) {
            it->second = it->second + c;
            if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    NcsfElement component(int n) const {
        NcsfElement out(basis_, max_degree_, proto_);
        for (const auto& [L, c] : terms_)
            if (L.weight() == n) out.add_term(L, c);
        return out;
    }

    NcsfElement scalar_mul(const R& s) const {
        NcsfElement out(basis_, max_degree_, proto_);
        for (const auto& [L, c] : terms_) out.add_term(L, c * s);
        return out;
    }

    NcsfElement to_basis(NcsfBasis target) const {
        if (target == basis_) return *this;
        NcsfElement out(target, max_degree_, proto_);
        for (const auto& [L, c] : terms_) {
            const int l = L.length();
            for (const auto& K : L.coarsenings()) {
                if (basis_ == NcsfBasis::h) {
                    // h_L = sum of r_K over coarsenings K
                    out.add_term(K, c);
                } else {
                    const int sign = (l - K.length()) % 2 == 0 ? 1 : -1;
                    out.add_term(K, sign > 0 ? c : RingTraits<R>::zero_like(proto_) - c);
                }
            }
        }
        return out;
    }

    friend NcsfElement operator+(const NcsfElement& a, const NcsfElement& b) {
        a.check_compatible(b);
        NcsfElement out = a;
        for (const auto& [L, c] : b.terms_) out.add_term(L, c);
        return out;
    }

    friend NcsfElement operator-(const NcsfElement& a, const NcsfElement& b) {
        a.check_compatible(b);
        NcsfElement out = a;
        for (const auto& [L, c] : b.terms_)
            out.add_term(L, RingTraits<R>::zero_like(a.proto_) - c);
        return out;
    }

    friend NcsfElement operator*(const NcsfElement& a, const NcsfElement& b) {
        a.check_compatible(b);
        if (a.basis_ != NcsfBasis::h)
            throw std::domain_error("multiplication requires the h basis");
        NcsfElement out(NcsfBasis::h, a.max_degree_, a.proto_);
        for (const auto& [L, cl] : a.terms_) {
            for (const auto& [M, cm] : b.terms_) {
                if (L.weight() + M.weight() > a.max_degree_) continue;
                std::vector<int> parts = L.parts();
                const auto& mp = M.parts();
                parts.insert(parts.end(), mp.begin(), mp.end());
                out.add_term(Composition(parts), cl * cm);
            }
        }
        return out;
    }

    // two-sided inverse of an element with invertible degree-0 part
    NcsfElement invert() const {
        if (basis_ != NcsfBasis::h)
            throw std::domain_error("inversion requires the h basis");
        R c0 = coeff(Composition{});
        R c0inv = RingTraits<R>::zero_like(proto_);
        if (!RingTraits<R>::try_invert(c0, c0inv))
            throw std::domain_error("constant term is not invertible");
        NcsfElement out(NcsfBasis::h, max_degree_, proto_);
        out.add_term(Composition{}, c0inv);
        for (int n = 1; n <= max_degree_; ++n) {
            NcsfElement acc(NcsfBasis::h, max_degree_, proto_);
            for (int k = 1; k <= n; ++k)
                acc = acc + (component(k) * out.component(n - k));
            const R minus_c0inv = RingTraits<R>::zero_like(proto_) - c0inv;
            for (const auto& [L, c] : acc.terms()) out.add_term(L, minus_c0inv * c);
        }
        return out;
    }

    // specialize h_n -> x^n/n!, giving the exponential series whose
    // coefficient of x^n collects multinomial(L)/n! per h_L
    TruncatedSeries<R> phi() const {
        return image([](const Composition& L) { return multinomial(L); });
    }

    // specialize h_n -> E_n x^n/n! with E_n the zigzag count
    TruncatedSeries<R> phi_hat() const {
        return image([](const Composition& L) { return euler_multinomial(L); });
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const char* tag = basis_ == NcsfBasis::h ? "h" : "r";
        std::string out;
        for (const auto& [L, c] : terms_) {
            std::string cs = RingTraits<R>::to_string(c);
            const std::string name =
                L.empty() ? std::string("1") : tag + L.to_string();
            std::string term;
            if (cs == "1")
                term = name;
            else if (cs == "-1")
                term = "-" + name;
            else {
                if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
                term = L.empty() ? cs : cs + "*" + name;
            }
            if (out.empty())
                out = term;
            else if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        return out;
    }

    friend bool operator==(const NcsfElement& a, const NcsfElement& b) {
        return a.to_basis(NcsfBasis::r).terms() == b.to_basis(NcsfBasis::r).terms();
    }

private:
    template <class WeightFn>
    TruncatedSeries<R> image(WeightFn&& weight) const {
        const NcsfElement in_h = to_basis(NcsfBasis::h);
        TruncatedSeries<R> out(max_degree_, proto_);
        for (const auto& [L, c] : in_h.terms()) {
            const int n = L.weight();
            const Rat scale = Rat(weight(L)) / Rat(factorial(n));
            out.add_to_coeff(n, c * RingTraits<R>::from_rational_like(proto_, scale));
        }
        return out;
    }

    void check_compatible(const NcsfElement& b) const {
        if (basis_ != b.basis_) throw std::domain_error("basis mismatch");
        if (max_degree_ != b.max_degree_) throw std::domain_error("degree cap mismatch");
    }

    NcsfBasis basis_;
    int max_degree_;
    R proto_;
    std::map<Composition, R> terms_;
};

template <class R>
struct NcsfIdentityPair {
    NcsfElement<R> lhs;
    NcsfElement<R> rhs;

    bool equal() const {
        return lhs.to_basis(NcsfBasis::r) == rhs.to_basis(NcsfBasis::r);
    }
};

// sum over compositions L of w_{L1}...w_{Lk} r_L equals the inverse of
// sum_n a_n h_n, where sum a_n z^n is the reciprocal of 1 + sum_{n>=1} w_n z^n.
// weights[n] is w_n; weights[0] is ignored and the empty composition
// contributes 1.
template <class R>
NcsfIdentityPair<R> run_weight_identity(const std::vector<R>& weights, int max_degree,
                                        R proto = R{});

// sum over nonempty L of w_{L1}...w_{L(k-1)} v_{Lk} r_L equals
// invert(sum a_n h_n) * sum_{n>=1} b_n h_n with sum b_n z^n the product of
// sum v_n z^n and the reciprocal of 1 + sum w_n z^n.
template <class R>
NcsfIdentityPair<R> last_run_weight_identity(const std::vector<R>& weights,
                                             const std::vector<R>& last_weights,
                                             int max_degree, R proto = R{});

// H(q^j) = 1 + sum_{n>=1} q^(jn) h_n as an element over Q[t,q] with the
// given truncation caps
NcsfElement<Poly2> h_series_at_qpow(int max_degree, int tcap, int qcap, int j);

// product of H(q^j) over j >= 0 with the largest exponent leftmost; factors
// with j > qcap reduce to 1 in the truncated ring
NcsfElement<Poly2> qmaj_left_product(int max_degree, int tcap, int qcap);

// sum_k t^k H(q^k)...H(q^1)H(1), truncated to t-degree tcap
NcsfElement<Poly2> t_weighted_qmaj_products(int max_degree, int tcap, int qcap);

template <class R>
NcsfIdentityPair<R> run_weight_identity(const std::vector<R>& weights, int max_degree,
                                        R proto) {
    if (static_cast<int>(weights.size()) <= max_degree)
        throw std::domain_error("need weights up to max_degree");
    NcsfElement<R> lhs(NcsfBasis::r, max_degree, proto);
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& L : compositions_of(n)) {
            R c = RingTraits<R>::one_like(proto);
            for (int p : L.parts()) c = c * weights[p];
            lhs.add_term(L, c);
        }
    }
    TruncatedSeries<R> w_series(max_degree, proto);
    w_series.set_coeff(0, RingTraits<R>::one_like(proto));
    for (int n = 1; n <= max_degree; ++n) w_series.set_coeff(n, weights[n]);
    const auto a = w_series.reciprocal();
    NcsfElement<R> base(NcsfBasis::h, max_degree, proto);
    base.add_term(Composition{}, a.coeff(0));
    for (int n = 1; n <= max_degree; ++n) base.add_term(Composition({n}), a.coeff(n));
    return {std::move(lhs), base.invert()};
}

template <class R>
NcsfIdentityPair<R> last_run_weight_identity(const std::vector<R>& weights,
                                             const std::vector<R>& last_weights,
                                             int max_degree, R proto) {
    if (static_cast<int>(weights.size()) <= max_degree ||
        static_cast<int>(last_weights.size()) <= max_degree)
        throw std::domain_error("need weights up to max_degree");
    NcsfElement<R> lhs(NcsfBasis::r, max_degree, proto);
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto& L : compositions_of(n)) {
            const auto& parts = L.parts();
            R c = last_weights[parts.back()];
            for (std::size_t i = 0; i + 1 < parts.size(); ++i) c = c * weights[parts[i]];
            lhs.add_term(L, c);
        }
    }
    TruncatedSeries<R> w_series(max_degree, proto);
    w_series.set_coeff(0, RingTraits<R>::one_like(proto));
    for (int n = 1; n <= max_degree; ++n) w_series.set_coeff(n, weights[n]);
    TruncatedSeries<R> v_series(max_degree, proto);
    for (int n = 1; n <= max_degree; ++n) v_series.set_coeff(n, last_weights[n]);
    const auto a = w_series.reciprocal();
    const auto b = v_series * a;
    NcsfElement<R> base(NcsfBasis::h, max_degree, proto);
    base.add_term(Composition{}, a.coeff(0));
    for (int n = 1; n <= max_degree; ++n) base.add_term(Composition({n}), a.coeff(n));
    NcsfElement<R> tail(NcsfBasis::h, max_degree, proto);
    for (int n = 1; n <= max_degree; ++n) tail.add_term(Composition({n}), b.coeff(n));
    return {std::move(lhs), base.invert() * tail};
}

}  // namespace altdes
