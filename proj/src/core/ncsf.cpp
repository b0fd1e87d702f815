#include "core/ncsf.hpp"

namespace altdes {

NcsfElement<Poly2> h_series_at_qpow(int max_degree, int tcap, int qcap, int j) {
    if (j < 0) throw std::domain_error("negative exponent");
    const Poly2 proto(tcap, qcap);
    NcsfElement<Poly2> out(NcsfBasis::h, max_degree, proto);
    out.add_term(Composition{}, Poly2::constant(tcap, qcap, Rat(1)));
    for (int n = 1; n <= max_degree; ++n)
        out.add_term(Composition({n}), Poly2::monomial(tcap, qcap, 0, j * n));
    return out;
}

NcsfElement<Poly2> qmaj_left_product(int max_degree, int tcap, int qcap) {
    NcsfElement<Poly2> acc = h_series_at_qpow(max_degree, tcap, qcap, 0);
    for (int j = 1; j <= qcap; ++j)
        acc = h_series_at_qpow(max_degree, tcap, qcap, j) * acc;
    return acc;
}

NcsfElement<Poly2> t_weighted_qmaj_products(int max_degree, int tcap, int qcap) {
    NcsfElement<Poly2> prefix = h_series_at_qpow(max_degree, tcap, qcap, 0);
    NcsfElement<Poly2> sum = prefix;
    for (int k = 1; k <= tcap; ++k) {
        prefix = h_series_at_qpow(max_degree, tcap, qcap, k) * prefix;
        sum = sum + prefix.scalar_mul(Poly2::monomial(tcap, qcap, k, 0));
    }
    return sum;
}

}  // namespace altdes
