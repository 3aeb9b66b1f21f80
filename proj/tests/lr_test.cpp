#include <doctest.h>

#include "jack/error.hpp"
#include "jack/lr.hpp"

using namespace jack;

namespace {

const AlphaPoly A = AlphaPoly::alpha();

std::string factored(const AlphaRat& r) {
    REQUIRE(r.is_polynomial());
    auto f = factor_linear(r.num());
    REQUIRE(f);
    return to_string(*f);
}

}  // namespace

TEST_CASE("multiplication through power sums") {
    const auto p = [](std::initializer_list<int> l) { return SymFunc::basis_element(Basis::powersum, Partition(l)); };
    CHECK(multiply(p({2}), p({1}), Basis::powersum) == p({2, 1}));
    const SymFunc m1 = SymFunc::basis_element(Basis::monomial, Partition{1});
    SymFunc want(Basis::monomial);
    want.add(Partition{2}, 1);
    want.add(Partition{1, 1}, 2);
    CHECK(multiply(m1, m1) == want);
    const SymFunc j1 = SymFunc::basis_element(Basis::jackJ, Partition{1});
    const SymFunc jj = multiply(j1, j1, Basis::jackJ);
    CHECK(jj.coeff(Partition{2}) == AlphaRat(AlphaPoly(1), A + 1));
    CHECK(jj.coeff(Partition{1, 1}) == AlphaRat(A, A + 1));
}

TEST_CASE("small LR coefficients") {
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == AlphaRat(AlphaPoly(1), A + 1));
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == AlphaRat(A, A + 1));
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{1, 1, 1}).is_zero());
    CHECK_THROWS_AS(lr_coefficient(Partition{2}, Partition{1}, Partition{2}), SizeMismatch);
    const LrTable t = jack_lr(Partition{1}, Partition{1});
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].gamma == Partition{2});
    CHECK(t.entries[1].gamma == Partition{1, 1});
}

TEST_CASE("Stanley coefficients") {
    CHECK(stanley_coeff(Partition{1}, Partition{1}, Partition{2}) == AlphaRat(2 * A * A));
    CHECK(stanley_coeff(Partition{1}, Partition{1}, Partition{1, 1}) == AlphaRat(2 * A * A));
    CHECK(factored(stanley_coeff(Partition{4, 2, 2, 1, 1}, Partition{2, 1, 1}, Partition{4, 3, 3, 3, 1})) ==
          "2^9*3^2*alpha^6*(1+alpha)^4*(2+alpha)*(3+alpha)^2*(4+alpha)^2*(1+2alpha)*(1+3alpha)*(2+3alpha)^2*(5+3alpha)");
    CHECK_THROWS_AS(stanley_coeff(Partition{1}, Partition{1}, Partition{3}), SizeMismatch);
}

TEST_CASE("tables: symmetry, support, reconstruction, both routes") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 7; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b)) {
                    const LrTable t = jack_lr(mu, nu);
                    const LrTable s = jack_lr(nu, mu);
                    REQUIRE(t.entries.size() == s.entries.size());
                    SymFunc rebuilt(Basis::jackJ);
                    for (std::size_t i = 0; i < t.entries.size(); ++i) {
                        const auto& e = t.entries[i];
                        REQUIRE(e.gamma == s.entries[i].gamma);
                        REQUIRE(e.g == s.entries[i].g);
                        REQUIRE(e.gamma.contains(mu));
                        REQUIRE(e.gamma.contains(nu));
                        REQUIRE(e.stanley == e.g * AlphaRat(jack_norm(e.gamma)));
                        rebuilt.add(e.gamma, e.g);
                    }
                    const SymFunc prod = multiply(SymFunc::basis_element(Basis::jackJ, mu),
                                                  SymFunc::basis_element(Basis::jackJ, nu), Basis::monomial);
                    REQUIRE(convert(rebuilt, Basis::monomial) == prod);
                    if (a + b <= 5)
                        for (const auto& e : t.entries) REQUIRE(lr_coefficient_by_solve(mu, nu, e.gamma) == e.g);
                }
}

TEST_CASE("varpi and hat g") {
    CHECK(varpi(Partition{1}) == AlphaPoly(1));
    CHECK(varpi(Partition{2, 1}) == -A);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b))
                    for (const auto& e : jack_lr(mu, nu).entries)
                        REQUIRE(hat_g(mu, nu, e.gamma) == hat_g(nu, mu, e.gamma));
    // The normalization identity used to drop the hats in the union case.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= 8; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!is_generic_for_rectangle(mu, m, n)) continue;
                    const auto d = decompose_wrt_rectangle(mu, m, n);
                    const AlphaPoly lhs = varpi(mu) * varpi(d.sigma_bar) * varpi(Partition::rectangle(m, n));
                    const AlphaPoly rhs = varpi(d.sigma) * varpi(d.sigma_bar) * varpi(d.uni);
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("Schur and Kostka anchors") {
    CHECK(schur_lr(Partition{4, 2, 2, 1, 1}, Partition{2, 1, 1}, Partition{4, 3, 3, 3, 1}) == 1);
    CHECK(schur_lr(Partition{3, 2, 2, 1}, Partition{2, 1, 1}, Partition::rectangle(3, 4)) == 1);
    CHECK(schur_lr(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(schur_lr(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(kostka(Partition{4, 2, 2, 1, 1}, {2, 2, 2, 3, 1}) == 3);
    CHECK(kostka(Partition{3, 2}, {3, 2}) == 1);
    CHECK(kostka(Partition{2}, {1, 1}) == 1);
    CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka(Partition{2, 1}, {0, 2, 1}) == 1);
    CHECK_THROWS_AS(kostka(Partition{2, 1}, {2}), SizeMismatch);
    CHECK(hook_product(Partition{3, 2}) == 24);
}

TEST_CASE("rectangular support lemma") {
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; m * n <= 10; ++n) {
            const Partition rect = Partition::rectangle(m, n);
            for (int a = 0; a <= m * n; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(m * n - a)) {
                        if (!rect.contains(mu) || !rect.contains(nu)) continue;
                        const Integer c = schur_lr(mu, nu, rect);
                        REQUIRE(c == (nu == complement(mu, m, n) ? 1 : 0));
                    }
        }
}
