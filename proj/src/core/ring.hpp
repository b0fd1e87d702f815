#pragma once

#include "core/numbers.hpp"

#include <string>

namespace altdes {

// Coefficient-ring hooks used by the truncated-series and the ncsf templates.
// The "like" argument supplies shape information for rings whose values carry
// runtime parameters (degree caps); scalar rings ignore it.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static Rat from_rational_like(const Rat&, const Rat& v) { return v; }
    static bool is_zero(const Rat& v) { return v.is_zero(); }
    static bool try_invert(const Rat& v, Rat& out) {
        if (v.is_zero()) return false;
        out = Rat(1) / v;
        return true;
    }
    static std::string to_string(const Rat& v) { return rat_to_string(v); }
};

}  // namespace altdes
