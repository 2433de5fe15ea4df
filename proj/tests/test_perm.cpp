#include <set>

#include "doctest.h"
#include "workbench/group_spec.hpp"
#include "workbench/perm.hpp"

using namespace workbench;

namespace {

GroupPtr shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// Independent oracle: count factors of 2 of each k <= n.
unsigned long long nu2_by_counting(unsigned long long n) {
    unsigned long long total = 0;
    for (unsigned long long k = 2; k <= n; ++k)
        for (unsigned long long v = k; v % 2 == 0; v /= 2) ++total;
    return total;
}

}  // namespace

TEST_CASE("nu2 and alpha") {
    CHECK(nu2_factorial(1).nu2 == 0);
    CHECK(nu2_factorial(1).alpha == 1);
    CHECK(nu2_factorial(13).nu2 == 10);
    CHECK(nu2_factorial(13).alpha == 3);
    CHECK(nu2_factorial(64).nu2 == 63);
    CHECK(nu2_factorial(64).alpha == 1);
    for (unsigned long long n = 0; n <= 80; ++n) CHECK(nu2_factorial(n).nu2 == nu2_by_counting(n));
}

TEST_CASE("sylow of symmetric groups") {
    CHECK(sylow_symmetric(1).order() == 1);
    CHECK(sylow_symmetric(8).order() == 128);
    CHECK(sylow_symmetric(6).order() == 16);
    // The default cap admits enumeration through n = 16 (order 2^15).
    for (std::size_t n = 1; n <= 16; ++n)
        CHECK(sylow_symmetric(n).order() == (std::size_t(1) << nu2_factorial(n).nu2));
}

TEST_CASE("alternating sylow has index two") {
    for (std::size_t n = 2; n <= 12; ++n)
        CHECK(2 * sylow_alternating(n).order() == sylow_symmetric(n).order());
}

TEST_CASE("degenerate sylow inputs") {
    CHECK(sylow_symmetric(0).order() == 1);
    CHECK(sylow_symmetric(1).order() == 1);
    CHECK(sylow_alternating(0).order() == 1);
    CHECK(sylow_alternating(1).order() == 1);
    CHECK(sylow_alternating(3).order() == 1);
}

TEST_CASE("sylow order cap") {
    CHECK_THROWS_AS(sylow_symmetric(16, 1000), ResourceLimitError);
}

TEST_CASE("sylow of alternating groups") {
    CHECK(sylow_alternating(2).order() == 1);
    FiniteGroup a4 = sylow_alternating(4);
    CHECK(a4.order() == 4);
    CHECK(a4.is_abelian());
    for (const auto& e : a4.elements()) CHECK((e * e).is_identity());
    CHECK(sylow_alternating(8).order() == 64);
}

TEST_CASE("wreath with the swap") {
    FiniteGroup trivial = FiniteGroup::generate(1, {});
    CHECK(wreath_with_z2(trivial).order() == 2);

    FiniteGroup s2 = symmetric_group(2);
    FiniteGroup w = wreath_with_z2(s2);
    CHECK(w.order() == 8);
    CHECK(w.elements() == sylow_symmetric(4).elements());

    FiniteGroup w8 = wreath_with_z2(sylow_symmetric(4));
    CHECK(w8.order() == 128);
    CHECK(w8.elements() == sylow_symmetric(8).elements());
}

TEST_CASE("dihedral groups") {
    FiniteGroup d4 = dihedral_group(4);
    CHECK(d4.order() == 4);
    CHECK(d4.is_abelian());
    for (const auto& e : d4.elements()) CHECK((e * e).is_identity());

    FiniteGroup d8 = dihedral_group(8);
    CHECK(d8.order() == 8);
    CHECK(d8.center().size() == 2);

    FiniteGroup d6 = dihedral_group(6);
    CHECK(d6.order() == 6);
    CHECK_FALSE(d6.is_abelian());
    CHECK(d6.elements() == symmetric_group(3).elements());

    CHECK(dihedral_group(2).order() == 2);
}

TEST_CASE("h4 sylow") {
    FiniteGroup h4 = h4_sylow();
    CHECK(h4.order() == 64);

    // Projection to the letters lands in the Klein subgroup of Sym(4).
    std::set<Permutation> letter_images;
    for (const auto& e : h4.elements()) letter_images.insert(letter_image(e, 4));
    CHECK(letter_images.size() == 4);
    for (const auto& p : letter_images) {
        CHECK(p.sign() == 0);
        CHECK((p * p).is_identity());
    }

    // Kernel of the projection: all sixteen pure sign patterns.
    std::size_t kernel_count = 0;
    for (const auto& e : h4.elements())
        if (letter_image(e, 4).is_identity()) ++kernel_count;
    CHECK(kernel_count == 16);
}

TEST_CASE("alpha isomorphisms") {
    CHECK(alpha_iso_check(2));
    CHECK(alpha_iso_check(3));
    CHECK_THROWS_AS(alpha_iso_check(4), std::invalid_argument);
    CHECK(h4_matches_alternating_model());
}

TEST_CASE("wreath index valuation vanishes") {
    CHECK(wreath_index_valuation(1) == 0);
    CHECK(wreath_index_valuation(4) == 0);
    for (unsigned long long n = 1; n <= 64; ++n) CHECK(wreath_index_valuation(n) == 0);
}

TEST_CASE("elementary abelian subgroups") {
    auto c4 = shared(cyclic_group(4));
    CHECK(elementary_abelian_subgroups(c4, 6).size() == 2);

    auto klein = shared(dihedral_group(4));
    auto klein_subs = elementary_abelian_subgroups(klein, 6);
    CHECK(klein_subs.size() == 5);

    auto d8 = shared(dihedral_group(8));
    auto d8_subs = elementary_abelian_subgroups(d8, 6);
    std::set<std::size_t> ranks;
    std::size_t rank2 = 0;
    for (const auto& s : d8_subs) {
        ranks.insert(s.rank);
        if (s.rank == 2) ++rank2;
        for (const auto& e : s.elements) {
            CHECK((e * e).is_identity());
            for (const auto& f : s.elements) CHECK(e * f == f * e);
        }
    }
    CHECK(ranks == std::set<std::size_t>{0, 1, 2});
    CHECK(rank2 == 2);
}

namespace {

// Independent oracle: scan all element subsets of a small group.
std::size_t count_ea_subgroups_by_subsets(const FiniteGroup& g) {
    const auto& elems = g.elements();
    REQUIRE(elems.size() <= 12);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << elems.size()); ++mask) {
        std::vector<Permutation> subset;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(elems[i]);
        if (subset.empty()) continue;
        bool ok = false;
        for (const auto& e : subset)
            if (e.is_identity()) ok = true;
        if (!ok) continue;
        for (const auto& a : subset) {
            if (!(a * a).is_identity()) {
                ok = false;
                break;
            }
            for (const auto& b : subset) {
                if (a * b != b * a) {
                    ok = false;
                    break;
                }
                if (!std::binary_search(subset.begin(), subset.end(), a * b)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("subgroup enumeration matches the subset oracle") {
    for (FiniteGroup g : {cyclic_group(4), dihedral_group(4), dihedral_group(8), quaternion_group()}) {
        std::size_t expected = count_ea_subgroups_by_subsets(g);
        auto found = elementary_abelian_subgroups(std::make_shared<const FiniteGroup>(std::move(g)), 6);
        CHECK(found.size() == expected);
    }
}

TEST_CASE("subgroup count cap") {
    auto g = shared(sylow_symmetric(8));
    EnumerationCaps caps;
    caps.max_subgroups = 3;
    CHECK_THROWS_AS(elementary_abelian_subgroups(g, 4, caps), ResourceLimitError);
}

TEST_CASE("conjugation morphisms") {
    auto d8 = shared(dihedral_group(8));
    auto subs = elementary_abelian_subgroups(d8, 2);

    const ElementaryAbelianSubgroup* trivial = nullptr;
    const ElementaryAbelianSubgroup* center = nullptr;
    const ElementaryAbelianSubgroup* rank2 = nullptr;
    auto center_elements = d8->center();
    for (const auto& s : subs) {
        if (s.rank == 0) trivial = &s;
        if (s.rank == 1 && s.elements.size() == 2 &&
            std::find(center_elements.begin(), center_elements.end(), s.basis[0]) != center_elements.end())
            center = &s;
        if (s.rank == 2 && !rank2) rank2 = &s;
    }
    REQUIRE(trivial);
    REQUIRE(center);
    REQUIRE(rank2);

    auto loops = conjugation_morphisms(*d8, *trivial, *trivial);
    CHECK(loops.size() == 1);
    CHECK(loops[0].matrix.rows() == 0);

    // Conjugation fixes the center pointwise: a single injection into any
    // rank-2 subgroup above it.
    auto maps = conjugation_morphisms(*d8, *center, *rank2);
    CHECK(maps.size() == 1);
    CHECK(rank(maps[0].matrix) == 1);

    // Witness re-verification.
    for (const auto& mor : maps) {
        const Permutation& g = mor.witness;
        Permutation ginv = g.inverse();
        for (std::size_t i = 0; i < center->rank; ++i) {
            Permutation image = g * center->basis[i] * ginv;
            CHECK(rank2->coordinates(image) == mor.matrix.column(i));
        }
    }

    // Abelian ambient group: the only morphism between nested subgroups is
    // the inclusion.
    auto klein = shared(dihedral_group(4));
    auto ksubs = elementary_abelian_subgroups(klein, 2);
    const ElementaryAbelianSubgroup* krank1 = nullptr;
    const ElementaryAbelianSubgroup* kfull = nullptr;
    for (const auto& s : ksubs) {
        if (s.rank == 1 && !krank1) krank1 = &s;
        if (s.rank == 2) kfull = &s;
    }
    REQUIRE(krank1);
    REQUIRE(kfull);
    auto incl = conjugation_morphisms(*klein, *krank1, *kfull);
    CHECK(incl.size() == 1);
    CHECK(incl[0].matrix.column(0) == kfull->coordinates(krank1->basis[0]));
}

TEST_CASE("group spec mini language") {
    CHECK(parse_group_spec("sym:4").order() == 24);
    CHECK(parse_group_spec("alt:4").order() == 12);
    CHECK(parse_group_spec("sylow-sym:8").order() == 128);
    CHECK(parse_group_spec("sylow-alt:4").order() == 4);
    CHECK(parse_group_spec("dihedral:6").order() == 6);
    CHECK(parse_group_spec("h4-sylow").order() == 64);
    CHECK_THROWS_AS(parse_group_spec("nope:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("sym:banana"), std::invalid_argument);
}

TEST_CASE("from_elements rejects non-closed sets") {
    FiniteGroup c4 = cyclic_group(4);
    std::vector<Permutation> broken = {c4.elements()[0], c4.elements()[1], c4.elements()[2]};
    CHECK_THROWS_AS(FiniteGroup::from_elements(4, broken), std::invalid_argument);
}

TEST_CASE("quaternion group has a unique involution") {
    FiniteGroup q8 = quaternion_group();
    CHECK(q8.order() == 8);
    CHECK(q8.involutions().size() == 1);
}
