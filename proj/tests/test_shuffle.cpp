#include "coha/quiver.hpp"
#include "coha/shuffle.hpp"

#include <doctest.h>

#include <random>

using namespace coha;

namespace {

SymPoly random_sym(const DimVector& dim, int polydeg, std::mt19937_64& rng) {
    SymBasis basis = monomial_sym_basis(dim, polydeg);
    std::uniform_int_distribution<int> cdist(-2, 2);
    std::vector<Rational> coords(basis.size());
    for (auto& c : coords)
        c = cdist(rng);
    return basis.from_coordinates(coords);
}

} // namespace

TEST_CASE("one-loop quiver: constants multiply by shuffle count") {
    Quiver loop = build_loop_quiver(1);
    SymPoly one1 = SymPoly::unit({1});
    SymPoly prod = shuffle_product(loop, one1, one1);
    CHECK(prod.dim() == DimVector{2});
    CHECK(prod.poly() == RatPoly::constant({2}, 2));
}

TEST_CASE("loop-free single vertex: the Kronecker-delta kernel") {
    Quiver pt = Quiver::empty({"0"});
    SymPoly y = SymPoly::checked(RatPoly::variable({1}, 0, 0));
    SymPoly one = SymPoly::unit({1});

    // y * 1 = y1/(y2-y1) + y2/(y1-y2) = -1
    SymPoly p = shuffle_product(pt, y, one);
    CHECK(p.poly() == RatPoly::constant({2}, -1));

    // 1 * 1 = 0: the source of the e^2 = 0 relation
    CHECK(shuffle_product(pt, one, one).is_zero());
}

TEST_CASE("unit law") {
    Quiver q1 = build_canonical_quiver(1);
    std::mt19937_64 rng(3);
    SymPoly f = random_sym({1, 2, 1}, 2, rng);
    SymPoly unit = SymPoly::unit({0, 0, 0});
    CHECK(shuffle_product(q1, f, unit) == f);
    CHECK(shuffle_product(q1, unit, f) == f);
}

TEST_CASE("degree law") {
    std::mt19937_64 rng(9);
    for (int n = 0; n <= 2; ++n) {
        Quiver q = build_canonical_quiver(n);
        std::uniform_int_distribution<int> entry(0, 2);
        std::uniform_int_distribution<int> deg(0, 2);
        for (int trial = 0; trial < 10; ++trial) {
            DimVector d(n + 2), e(n + 2);
            for (auto& x : d)
                x = entry(rng);
            for (auto& x : e)
                x = entry(rng);
            int pf = deg(rng), pg = deg(rng);
            SymPoly f = random_sym(d, pf, rng);
            SymPoly g = random_sym(e, pg, rng);
            if (f.is_zero() || g.is_zero())
                continue;
            SymPoly prod = shuffle_product(q, f, g);
            if (prod.is_zero())
                continue;
            CHECK(prod.poly().is_homogeneous());
            CHECK(prod.total_degree() ==
                  shuffle_polydeg(q, Bidegree{d, pf}, Bidegree{e, pg}));
        }
    }
}

TEST_CASE("associativity on K2, Q1, Q2") {
    std::mt19937_64 rng(31);
    for (int n = 0; n <= 2; ++n) {
        Quiver q = build_canonical_quiver(n);
        std::uniform_int_distribution<int> entry(0, 1);
        std::uniform_int_distribution<int> deg(0, 2);
        int done = 0;
        while (done < 6) {
            DimVector a(n + 2), b(n + 2), c(n + 2);
            for (auto& x : a)
                x = entry(rng);
            for (auto& x : b)
                x = entry(rng);
            for (auto& x : c)
                x = entry(rng);
            if (total_dim(a) > 3 || total_dim(b) > 3 || total_dim(c) > 3)
                continue;
            SymPoly f = random_sym(a, deg(rng), rng);
            SymPoly g = random_sym(b, deg(rng), rng);
            SymPoly h = random_sym(c, deg(rng), rng);
            CHECK(shuffle_product(q, shuffle_product(q, f, g), h) ==
                  shuffle_product(q, f, shuffle_product(q, g, h)));
            ++done;
        }
    }
}

TEST_CASE("virtual degree is additive on regular bidegrees") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 2; ++n) {
        Quiver q = build_canonical_quiver(n);
        std::uniform_int_distribution<int> entry(0, 1);
        std::uniform_int_distribution<int> deg(0, 2);
        int done = 0;
        while (done < 8) {
            DimVector ds(n + 1), es(n + 1);
            for (auto& x : ds)
                x = entry(rng);
            for (auto& x : es)
                x = entry(rng);
            DimVector d = expand_regular(n, ds), e = expand_regular(n, es);
            Bidegree bf{d, deg(rng)}, bg{e, deg(rng)};
            Bidegree prod{dim_add(d, e), shuffle_polydeg(q, bf, bg)};
            CHECK(virtual_degree(q, prod) ==
                  virtual_degree(q, bf) + virtual_degree(q, bg));
            CHECK(virtual_degree_canonical(n, prod) == virtual_degree(q, prod));
            ++done;
        }
    }
}

TEST_CASE("non-symmetric inputs are rejected") {
    Quiver k2 = build_canonical_quiver(0);
    RatPoly x1 = RatPoly::variable({2, 0}, 0, 0);
    CHECK_THROWS_AS(SymPoly::checked(x1), CohaError);
}

TEST_CASE("free elements: bilinearity and unit") {
    Quiver k2 = build_canonical_quiver(0);
    std::mt19937_64 rng(5);
    SymPoly p = random_sym({1, 1}, 1, rng);
    SymPoly q = random_sym({1, 0}, 2, rng);
    SymPoly r = random_sym({0, 1}, 1, rng);
    FreeCohaElt P = FreeCohaElt::piece(p);
    FreeCohaElt Q = FreeCohaElt::piece(q);
    FreeCohaElt R = FreeCohaElt::piece(r);

    CHECK(free_mul(k2, P + Q, R) == free_mul(k2, P, R) + free_mul(k2, Q, R));
    CHECK(free_mul(k2, FreeCohaElt::zero(), P).is_zero());
    CHECK(free_mul(k2, FreeCohaElt::unit(2), P) == P);
    CHECK(free_mul(k2, P, FreeCohaElt::unit(2)) == P);

    // an inhomogeneous polynomial splits into homogeneous pieces
    RatPoly x = RatPoly::variable({1, 1}, 0, 0);
    FreeCohaElt mixed =
        FreeCohaElt::piece(SymPoly::checked(x + RatPoly::constant({1, 1}, 1)));
    CHECK(mixed.pieces().size() == 2);
}
