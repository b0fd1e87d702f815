#include <doctest.h>

#include "core/composition.hpp"
#include "core/errors.hpp"
#include "core/ncsf.hpp"
#include "core/numbers.hpp"
#include "core/poly.hpp"

#include <stdexcept>
#include <vector>

using namespace altdes;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

NcsfElement<Rat> word(NcsfBasis basis, std::vector<int> parts, int cap = 6) {
    NcsfElement<Rat> e(basis, cap);
    e.add_term(comp(std::move(parts)), Rat(1));
    return e;
}

}  // namespace

TEST_CASE("multiplication concatenates words") {
    const auto prod = word(NcsfBasis::h, {2}) * word(NcsfBasis::h, {1});
    CHECK(prod.coeff(comp({2, 1})) == 1);
    CHECK(prod.terms().size() == 1);

    // degree cap silently absorbs overflowing products
    const auto big = word(NcsfBasis::h, {4}) * word(NcsfBasis::h, {3});
    CHECK(big.terms().empty());

    CHECK_THROWS_AS(word(NcsfBasis::r, {2}) * word(NcsfBasis::r, {1}),
                    std::domain_error);
}

TEST_CASE("basis change is inclusion-exclusion over coarsenings") {
    const auto h21 = word(NcsfBasis::h, {2, 1}).to_basis(NcsfBasis::r);
    CHECK(h21.coeff(comp({2, 1})) == 1);
    CHECK(h21.coeff(comp({3})) == 1);
    CHECK(h21.terms().size() == 2);

    const auto r21 = word(NcsfBasis::r, {2, 1}).to_basis(NcsfBasis::h);
    CHECK(r21.coeff(comp({2, 1})) == 1);
    CHECK(r21.coeff(comp({3})) == -1);

    // roundtrip
    CHECK(r21.to_basis(NcsfBasis::r) == word(NcsfBasis::r, {2, 1}));
    CHECK(h21.to_basis(NcsfBasis::h) == word(NcsfBasis::h, {2, 1}));
}

TEST_CASE("compatibility guards") {
    NcsfElement<Rat> a(NcsfBasis::h, 4);
    NcsfElement<Rat> b(NcsfBasis::r, 4);
    NcsfElement<Rat> c(NcsfBasis::h, 5);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a + c, std::domain_error);
    CHECK_THROWS_AS(NcsfElement<Rat>(NcsfBasis::h, kNcsfMaxDegree + 1), ResourceError);
}

TEST_CASE("specializations send words to exponential monomials") {
    const auto e = word(NcsfBasis::h, {1, 1});
    CHECK(e.phi().egf_coeff(2) == 2);
    CHECK(e.phi_hat().egf_coeff(2) == 2);

    const auto one_part = word(NcsfBasis::h, {4});
    CHECK(one_part.phi().egf_coeff(4) == 1);
    CHECK(one_part.phi_hat().egf_coeff(4) == 5);

    // ribbon image picks out the class size
    CHECK(word(NcsfBasis::r, {2, 1}).phi_hat().egf_coeff(3) == 1);
    CHECK(word(NcsfBasis::r, {2, 1}).phi().egf_coeff(3) == 2);
}

TEST_CASE("graded inversion") {
    auto a = NcsfElement<Rat>::one(NcsfBasis::h, 6);
    a.add_term(comp({1}), Rat(1));
    const auto inv = a.invert();
    CHECK(a * inv == NcsfElement<Rat>::one(NcsfBasis::h, 6));
    CHECK(inv * a == NcsfElement<Rat>::one(NcsfBasis::h, 6));
    CHECK(inv.invert() == a);

    // geometric series: inverse of 1 - h(1) is the sum over columns
    auto g = NcsfElement<Rat>::one(NcsfBasis::h, 6);
    g.add_term(comp({1}), Rat(-1));
    const auto ginv = g.invert();
    CHECK(ginv.coeff(comp({1, 1, 1, 1})) == 1);
    CHECK(ginv.coeff(comp({2})) == 0);

    NcsfElement<Rat> no_unit(NcsfBasis::h, 4);
    CHECK_THROWS_AS(no_unit.invert(), std::domain_error);
}

TEST_CASE("printing") {
    auto e = NcsfElement<Rat>::one(NcsfBasis::h, 4);
    e.add_term(comp({1}), Rat(1));
    CHECK(e.to_string() == "1 + h(1)");

    NcsfElement<Rat> f(NcsfBasis::r, 4);
    f.add_term(comp({2}), Rat(-1));
    f.add_term(comp({1, 1}), Rat(4));
    CHECK(f.to_string() == "4*r(1,1) - r(2)");
    CHECK(NcsfElement<Rat>(NcsfBasis::h, 4).to_string() == "0");
}

TEST_CASE("run weight identity at a hand-checked degree") {
    const std::vector<Rat> w = {Rat(0), Rat(2), Rat(3)};
    const auto pr = run_weight_identity<Rat>(w, 2);
    CHECK(pr.equal());

    CHECK(pr.lhs.coeff(comp({1, 1})) == 4);
    CHECK(pr.lhs.coeff(comp({2})) == 3);

    const auto rhs_h = pr.rhs.to_basis(NcsfBasis::h);
    CHECK(rhs_h.coeff(Composition{}) == 1);
    CHECK(rhs_h.coeff(comp({1})) == 2);
    CHECK(rhs_h.coeff(comp({1, 1})) == 4);
    CHECK(rhs_h.coeff(comp({2})) == -1);

    CHECK_THROWS_AS(run_weight_identity<Rat>(w, 5), std::domain_error);
}

TEST_CASE("last run weights deform only the final part") {
    const std::vector<Rat> w = {Rat(0), Rat(2), Rat(3)};
    const std::vector<Rat> v = {Rat(0), Rat(5), Rat(7)};
    const auto pr = last_run_weight_identity<Rat>(w, v, 2);
    CHECK(pr.equal());
    CHECK(pr.lhs.coeff(Composition{}) == 0);
    CHECK(pr.lhs.coeff(comp({1})) == 5);
    CHECK(pr.lhs.coeff(comp({2})) == 7);
    CHECK(pr.lhs.coeff(comp({1, 1})) == 10);
}

TEST_CASE("h word generating elements in q") {
    const auto h2 = h_series_at_qpow(3, 2, 6, 2);
    CHECK(h2.coeff(Composition{}) == Poly2::constant(2, 6, Rat(1)));
    CHECK(h2.coeff(comp({1})) == Poly2::monomial(2, 6, 0, 2, Rat(1)));
    CHECK(h2.coeff(comp({2})) == Poly2::monomial(2, 6, 0, 4, Rat(1)));

    // descending product: h(1)h(1) picks exponent pairs a > b >= 0
    const auto prod = qmaj_left_product(2, 0, 4);
    const auto h11 = prod.coeff(comp({1, 1}));
    CHECK(h11.coeff(0, 1) == 1);
    CHECK(h11.coeff(0, 3) == 2);
    CHECK(h11.coeff(0, 4) == 2);
    const auto hh2 = prod.coeff(comp({2}));
    CHECK(hh2.coeff(0, 0) == 1);
    CHECK(hh2.coeff(0, 2) == 1);
    CHECK(hh2.coeff(0, 3) == 0);
}
