#include "core/poly.hpp"

#include <stdexcept>

namespace altdes {

Poly1::Poly1(Rat constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly1::Poly1(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1 Poly1::monomial(int degree, const Rat& coeff) {
    if (degree < 0) throw std::domain_error("negative degree");
    if (coeff.is_zero()) return Poly1();
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return Poly1(std::move(c));
}

void Poly1::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> Poly1::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rat Poly1::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Poly1 Poly1::operator+(const Poly1& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Poly1(std::move(out));
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator-() const {
    std::vector<Rat> out(coeffs_);
    for (auto& c : out) c = -c;
    return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Poly1& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Poly1();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Rat& s) const {
    std::vector<Rat> out(coeffs_);
    for (auto& c : out) c *= s;
    return Poly1(std::move(out));
}

Poly1 Poly1::pow(int e) const {
    if (e < 0) throw std::domain_error("negative exponent");
    Poly1 out(Rat(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rat Poly1::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::divide_exact(const Poly1& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem(coeffs_);
    const auto dd = *divisor.degree();
    const Rat lead = divisor.coeffs_[dd];
    std::vector<Rat> quot;
    if (static_cast<int>(rem.size()) - 1 >= dd)
        quot.assign(rem.size() - dd, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        const Rat q = rem[i] / lead;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::domain_error("inexact polynomial division");
    return Poly1(std::move(quot));
}

std::string Poly1::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const bool unit = mag == 1 && i > 0;
        if (!unit) s += rat_to_string(mag);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly2::Poly2(int tcap, int qcap) : tcap_(tcap), qcap_(qcap) {
    if (tcap < 0 || qcap < 0) throw std::domain_error("negative degree cap");
    coeffs_.assign(static_cast<size_t>(tcap + 1) * (qcap + 1), Rat(0));
}

Poly2 Poly2::monomial(int tcap, int qcap, int dt, int dq, const Rat& coeff) {
    Poly2 out(tcap, qcap);
    if (dt < 0 || dq < 0) throw std::domain_error("negative exponent");
    out.add_term(dt, dq, coeff);
    return out;
}

Poly2 Poly2::constant(int tcap, int qcap, const Rat& value) {
    return monomial(tcap, qcap, 0, 0, value);
}

bool Poly2::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Rat Poly2::coeff(int dt, int dq) const {
    if (unshaped() || dt < 0 || dq < 0 || dt > tcap_ || dq > qcap_) return Rat(0);
    return coeffs_[idx(dt, dq)];
}

void Poly2::add_term(int dt, int dq, const Rat& c) {
    if (unshaped()) throw std::logic_error("unshaped value cannot take terms");
    if (c.is_zero()) return;
    if (dt > tcap_ || dq > qcap_) {
        truncated_ = true;
        return;
    }
    coeffs_[idx(dt, dq)] += c;
}

namespace {

// one side may be an unshaped zero, otherwise caps must agree
void align_caps(const Poly2& a, const Poly2& b) {
    if (a.unshaped() || b.unshaped()) return;
    if (a.tcap() != b.tcap() || a.qcap() != b.qcap())
        throw std::domain_error("degree cap mismatch");
}

}  // namespace

Poly2 Poly2::operator+(const Poly2& o) const {
    align_caps(*this, o);
    if (unshaped()) {
        Poly2 out = o;
        out.truncated_ = out.truncated_ || truncated_;
        return out;
    }
    Poly2 out = *this;
    out.truncated_ = truncated_ || o.truncated_;
    if (!o.unshaped())
        for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
    Poly2 out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    align_caps(*this, o);
    if (unshaped() || o.unshaped()) {
        Poly2 out = unshaped() ? RingTraits<Poly2>::zero_like(o)
                               : RingTraits<Poly2>::zero_like(*this);
        out.truncated_ = truncated_ || o.truncated_;
        return out;
    }
    Poly2 out(tcap_, qcap_);
    out.truncated_ = truncated_ || o.truncated_;
    for (int at = 0; at <= tcap_; ++at)
        for (int aq = 0; aq <= qcap_; ++aq) {
            const Rat& ca = coeffs_[idx(at, aq)];
            if (ca.is_zero()) continue;
            for (int bt = 0; bt <= o.tcap_; ++bt)
                for (int bq = 0; bq <= o.qcap_; ++bq) {
                    const Rat& cb = o.coeffs_[o.idx(bt, bq)];
                    if (cb.is_zero()) continue;
                    if (at + bt > tcap_ || aq + bq > qcap_) {
                        out.truncated_ = true;
                        continue;
                    }
                    out.coeffs_[out.idx(at + bt, aq + bq)] += ca * cb;
                }
        }
    return out;
}

Poly2 Poly2::operator*(const Rat& s) const {
    Poly2 out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

bool Poly2::operator==(const Poly2& o) const {
    const int tmax = std::max(tcap_, o.tcap_);
    const int qmax = std::max(qcap_, o.qcap_);
    for (int dt = 0; dt <= tmax; ++dt)
        for (int dq = 0; dq <= qmax; ++dq)
            if (coeff(dt, dq) != o.coeff(dt, dq)) return false;
    return true;
}

std::string Poly2::to_string() const {
    std::string s;
    for (int dt = 0; dt <= tcap_; ++dt)
        for (int dq = 0; dq <= qcap_; ++dq) {
            const Rat& c = coeffs_[idx(dt, dq)];
            if (c.is_zero()) continue;
            const bool neg = c < 0;
            const Rat mag = neg ? Rat(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const bool has_var = dt > 0 || dq > 0;
            const bool unit = mag == 1 && has_var;
            if (!unit) s += rat_to_string(mag);
            if (dt > 0) {
                if (!unit) s += "*";
                s += "t";
                if (dt > 1) s += "^" + std::to_string(dt);
            }
            if (dq > 0) {
                if (!unit || dt > 0) s += "*";
                s += "q";
                if (dq > 1) s += "^" + std::to_string(dq);
            }
        }
    return s.empty() ? "0" : s;
}

bool RingTraits<Poly2>::try_invert(const Poly2& v, Poly2& out) {
    if (v.unshaped() || v.is_zero()) return false;
    for (int dt = 0; dt <= v.tcap(); ++dt)
        for (int dq = 0; dq <= v.qcap(); ++dq)
            if ((dt > 0 || dq > 0) && !v.coeff(dt, dq).is_zero()) return false;
    out = Poly2::constant(v.tcap(), v.qcap(), Rat(1) / v.coeff(0, 0));
    return true;
}

}  // namespace altdes
