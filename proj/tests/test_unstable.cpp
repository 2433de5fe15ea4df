#include <random>
#include "doctest.h"
#include "workbench/series.hpp"
#include "workbench/unstable.hpp"

using namespace workbench;

namespace {

std::vector<long long> series_ints(const PowerSeries& s) {
    std::vector<long long> out;
    for (const auto& c : s.coefficients()) {
        bool ok = true;
        out.push_back(c.to_int64(ok));
        REQUIRE(ok);
    }
    return out;
}

bool module_matches_series(const TruncatedUnstableModule& m, const PowerSeries& s, int up_to) {
    auto coeffs = series_ints(s);
    for (int d = 0; d <= up_to; ++d)
        if (m.dim(d) != coeffs[std::size_t(d)]) return false;
    return true;
}

}  // namespace

TEST_CASE("polynomial module on one generator") {
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 8);
    for (int d = 0; d <= 8; ++d) CHECK(p.dim(d) == 1);
    // Sq^1 u = u^2, Sq^1 u^2 = 0.
    CHECK(p.sq(1, 1) == F2Matrix::from_rows({{1}}));
    CHECK(p.sq(1, 2).is_zero());
    CHECK(p.label(3, 0) == "u1^3");
}

TEST_CASE("polynomial module dimensions and checks") {
    TruncatedUnstableModule q = cohomology_elementary_abelian(2, 10);
    CHECK(q.dim(3) == 4);
    CHECK(check_adem(q).empty());
    CHECK(check_instability(q).empty());
    CHECK(check_reduced(q, 5).empty());

    TruncatedUnstableModule broken = cohomology_elementary_abelian(1, 4);
    broken.set_sq(1, 1, F2Matrix(1, 1));
    CHECK_FALSE(check_reduced(broken, 1).empty());
}

TEST_CASE("adem check catches corrupted squares") {
    TruncatedUnstableModule bad = cohomology_elementary_abelian(2, 8);
    // Declare Sq^1 u1 = u1^2 + u1 u2; then Sq^1 Sq^1 u1 is nonzero.
    F2Matrix m = bad.sq(1, 1);
    m.set(1, 0, !m.get(1, 0));
    bad.set_sq(1, 1, std::move(m));
    CHECK_FALSE(check_adem(bad).empty());
}

TEST_CASE("instability check catches out-of-range squares") {
    TruncatedUnstableModule bad = cohomology_elementary_abelian(1, 6);
    F2Matrix m = bad.sq(2, 1);
    m.set(0, 0, true);
    bad.set_sq(2, 1, std::move(m));
    CHECK_FALSE(check_instability(bad).empty());
}

TEST_CASE("restriction maps") {
    TruncatedUnstableModule rank2 = cohomology_elementary_abelian(2, 8);
    TruncatedUnstableModule rank1 = cohomology_elementary_abelian(1, 8);

    ModuleMap identity_map = restriction_map(F2Matrix::identity(2), rank2, rank2);
    for (int n = 0; n <= 8; ++n) CHECK(identity_map.maps[std::size_t(n)] == F2Matrix::identity(std::size_t(rank2.dim(n))));
    CHECK(identity_map.commutation_violations().empty());

    // Zero group map: everything of positive degree dies.
    ModuleMap augmentation = restriction_map(F2Matrix(2, 1), rank2, rank1);
    for (int n = 1; n <= 8; ++n) CHECK(augmentation.maps[std::size_t(n)].is_zero());

    // Diagonal (Z/2) -> (Z/2)^2: u1, u2 -> u, so u1 u2 -> u^2.
    F2Matrix diag(2, 1);
    diag.set(0, 0, true);
    diag.set(1, 0, true);
    ModuleMap res = restriction_map(diag, rank2, rank1);
    CHECK(res.commutation_violations().empty());
    // Degree-2 basis of rank 2 is u1^2, u1 u2, u2^2; all map to u^2.
    CHECK(res.maps[2] == F2Matrix::from_rows({{1, 1, 1}}));
}

TEST_CASE("restriction is contravariantly functorial, randomized") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 15; ++trial) {
        int a = 1 + int(rng() % 3), b = 1 + int(rng() % 3), c = 1 + int(rng() % 3);
        F2Matrix f(static_cast<std::size_t>(b), static_cast<std::size_t>(a));  // E_a -> E_b
        F2Matrix g(static_cast<std::size_t>(c), static_cast<std::size_t>(b));  // E_b -> E_c
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t col = 0; col < f.cols(); ++col)
                if (rng() & 1) f.set(r, col, true);
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t col = 0; col < g.cols(); ++col)
                if (rng() & 1) g.set(r, col, true);

        auto rf = restriction_matrices(f, 6);
        auto rg = restriction_matrices(g, 6);
        auto rgf = restriction_matrices(g.multiply(f), 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(rgf[std::size_t(n)] == rf[std::size_t(n)].multiply(rg[std::size_t(n)]));

        // Every induced map commutes with the squares.
        TruncatedUnstableModule dom = cohomology_elementary_abelian(b, 6);
        TruncatedUnstableModule cod = cohomology_elementary_abelian(a, 6);
        ModuleMap map = restriction_map(f, dom, cod);
        CHECK(map.commutation_violations().empty());
    }
}

TEST_CASE("frobenius double") {
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 4);
    TruncatedUnstableModule doubled = phi(p);
    CHECK(doubled.dims() == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(doubled.sq(2, 2) == F2Matrix::from_rows({{1}}));
    CHECK(doubled.sq(1, 2).is_zero());

    TruncatedUnstableModule steps(2, {1, 1, 1});
    TruncatedUnstableModule d2 = phi(steps);
    CHECK(d2.dims() == std::vector<int>{1, 0, 1});
}

TEST_CASE("total square of the degree-one generator") {
    // St_1(u) = u (x) u + 1 (x) u^2; blocks are ascending u-powers.
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 4);
    F2Vector st1 = st1_coordinates(p, 1, 0);
    CHECK(st1 == F2Vector::from_bits({1, 1, 0}));
}

TEST_CASE("singer functor") {
    TruncatedUnstableModule ground(6, {1, 0, 0, 0, 0, 0, 0});
    TruncatedUnstableModule free_line = r1(ground);
    for (int d = 0; d <= 6; ++d) CHECK(free_line.dim(d) == 1);

    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 9);
    TruncatedUnstableModule rp = r1(p);
    for (int d = 0; d <= 9; ++d) CHECK(rp.dim(d) == d / 2 + 1);
    CHECK(check_adem(rp).empty());
    CHECK(check_instability(rp).empty());
}

TEST_CASE("symmetric invariants of the tensor square") {
    TruncatedUnstableModule ground(5, {1, 0, 0, 0, 0, 0});
    CHECK(sym2_invariants(ground).dims() == std::vector<int>{1, 0, 0, 0, 0, 0});

    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 9);
    TruncatedUnstableModule inv = sym2_invariants(p);
    CHECK(module_matches_series(inv, series_sym_invariants(PowerSeries::geometric(9)), 9));
    CHECK(check_adem(inv).empty());
    CHECK(check_instability(inv).empty());
}

TEST_CASE("quadratic construction of the ground field") {
    TruncatedUnstableModule ground(8, {1, 0, 0, 0, 0, 0, 0, 0, 0});
    TruncatedUnstableModule q = quadratic(ground);
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 8);
    CHECK(q.dims() == p.dims());
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; n + i <= 8; ++i) CHECK(q.sq(i, n) == p.sq(i, n));
}

TEST_CASE("quadratic construction of the polynomial line") {
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 10);
    QuadraticParts parts = quadratic_parts(p, false);
    for (int d = 0; d <= 10; ++d) {
        CHECK(parts.module.dim(d) == d + 1);
        CHECK(parts.module.dim(d) ==
              parts.invariants.dim(d) + parts.r1_part.dim(d) - parts.phi_part.dim(d));
    }
    CHECK(check_adem(parts.module).empty());
    CHECK(check_instability(parts.module).empty());
}

TEST_CASE("decorated quadratic construction") {
    TruncatedUnstableModule base = sylow_p_module(10);
    QuadraticParts parts = quadratic_parts(base, true);
    const TruncatedUnstableModule& s4 = parts.module;
    REQUIRE(s4.has_u());
    for (int d = 0; d <= 10; ++d) CHECK(s4.dim(d) == d + 1);
    CHECK(check_u_compat(s4).empty());

    // nu kills u times any invariant.
    for (int d = 0; d + 1 <= 10; ++d)
        CHECK(parts.nu[std::size_t(d) + 1].multiply(parts.invariants.u(d)).is_zero());

    // u vanishes on the R_1 component: u of any fiber element has zero
    // R_1 part by construction; check via the embedding.
    for (int d = 0; d + 1 <= 10; ++d) {
        int inv_dim = parts.invariants.dim(d + 1);
        F2Matrix image = parts.embed[std::size_t(d) + 1].multiply(s4.u(d));
        for (std::size_t r = std::size_t(inv_dim); r < image.rows(); ++r)
            CHECK(image.row(r).is_zero());
    }

    // Iterating once more gives the Sylow(Sym(8)) dims.
    TruncatedUnstableModule s8 = quadratic_p_decorated(s4);
    CHECK(module_matches_series(s8, series_sylow_alt_pipeline(3, 10).s, 10));
}

TEST_CASE("u-torsion part") {
    TruncatedUnstableModule p = sylow_p_module(8);
    TruncatedUnstableModule torsion = tau(p);
    for (int d = 0; d <= torsion.max_degree(); ++d) CHECK(torsion.dim(d) == 0);

    // P-trivial module: tau is the identity.
    TruncatedUnstableModule trivial = cohomology_elementary_abelian(1, 6);
    trivial.init_u();  // zero u-action
    TruncatedUnstableModule back = tau(trivial);
    for (int d = 0; d <= 5; ++d) CHECK(back.dim(d) == trivial.dim(d));
    for (int n = 1; n + 1 <= 5; ++n) CHECK(back.sq(1, n) == trivial.sq(1, n));

    TruncatedUnstableModule s4 = quadratic_p_decorated(sylow_p_module(9));
    TruncatedUnstableModule t4 = tau(s4);
    CHECK(module_matches_series(t4, series_sylow_alt_pipeline(2, 8).t, 8));
}

TEST_CASE("gysin dimensions") {
    TruncatedUnstableModule p = sylow_p_module(8);
    std::vector<int> point = gysin_dims(p);
    CHECK(point[0] == 1);
    for (std::size_t d = 1; d < point.size(); ++d) CHECK(point[d] == 0);

    TruncatedUnstableModule s4 = quadratic_p_decorated(sylow_p_module(11));
    std::vector<int> klein = gysin_dims(s4);
    for (std::size_t d = 0; d < klein.size(); ++d) CHECK(klein[d] == int(d) + 1);

    TruncatedUnstableModule s8 = sylow_symmetric_module(8, 11);
    std::vector<int> a8 = gysin_dims(s8);
    CHECK(a8[1] == 3);
    CHECK(a8[2] == 7);
}

TEST_CASE("tensor products") {
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, 8);
    TruncatedUnstableModule ground(8, {1, 0, 0, 0, 0, 0, 0, 0, 0});
    TruncatedUnstableModule unit = tensor(p, ground);
    CHECK(unit.dims() == p.dims());
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; n + i <= 8; ++i) CHECK(unit.sq(i, n) == p.sq(i, n));

    TruncatedUnstableModule pp = tensor(p, p);
    TruncatedUnstableModule rank2 = cohomology_elementary_abelian(2, 8);
    CHECK(pp.dims() == rank2.dims());
    for (int n = 0; n <= 8; ++n)
        for (int i = 1; n + i <= 8; ++i) CHECK(pp.sq(i, n) == rank2.sq(i, n));

    TruncatedUnstableModule s6 = sylow_symmetric_module(6, 8);
    CHECK(module_matches_series(s6, series_sylow_symmetric(6, 8), 8));
    CHECK(check_u_compat(s6).empty());
}

TEST_CASE("sylow module of sym(8) is a valid unstable module") {
    TruncatedUnstableModule s8 = sylow_symmetric_module(8, 10);
    CHECK(module_matches_series(s8, series_sylow_symmetric(8, 10), 10));
    CHECK(check_adem(s8).empty());
    CHECK(check_instability(s8).empty());
    CHECK(check_u_compat(s8).empty());
    CHECK(check_reduced(s8, 5).empty());
}

TEST_CASE("sylow module of sym(16) keeps matching the series route") {
    TruncatedUnstableModule s16 = sylow_symmetric_module(16, 8);
    CHECK(module_matches_series(s16, series_sylow_symmetric(16, 8), 8));
    CHECK(check_u_compat(s16).empty());
    CHECK(check_instability(s16).empty());
}

TEST_CASE("quadratic series oracle equivalence on assorted modules") {
    // Properties tying the module functors to the series calculus.
    std::vector<TruncatedUnstableModule> samples;
    samples.push_back(cohomology_elementary_abelian(1, 8));
    samples.push_back(cohomology_elementary_abelian(2, 8));
    {
        TruncatedUnstableModule ground(8, {1, 0, 1, 0, 0, 0, 0, 0, 0});
        samples.push_back(ground);  // F_2 + a degree-2 class, trivial squares
    }
    for (const auto& m : samples) {
        PowerSeries s(m.max_degree());
        for (int d = 0; d <= m.max_degree(); ++d) s.at(std::size_t(d)) = BigInt(m.dim(d));
        CHECK(module_matches_series(quadratic(m), series_quadratic(s), m.max_degree()));
        CHECK(module_matches_series(sym2_invariants(m), series_sym_invariants(s), m.max_degree()));
    }
}
