#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "workbench/quillen.hpp"
#include "workbench/series.hpp"

using namespace workbench;

namespace {

GroupPtr shared(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

FiniteGroup klein_group() {
    return FiniteGroup::generate(4, {Permutation::from_one_based({2, 1, 3, 4}),
                                     Permutation::from_one_based({1, 2, 4, 3})});
}

}  // namespace

TEST_CASE("klein diagram skeleton") {
    auto g = shared(klein_group());
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    REQUIRE(diagram.objects.size() == 5);
    std::vector<std::size_t> ranks;
    for (const auto& o : diagram.objects) ranks.push_back(o.subgroup.rank);
    CHECK(ranks == std::vector<std::size_t>{0, 1, 1, 1, 2});
    // Abelian group: all morphisms are induced by inclusions, one per
    // comparable pair plus identities.
    for (const auto& m : diagram.morphisms) {
        const auto& src = diagram.objects[m.src].subgroup;
        const auto& dst = diagram.objects[m.dst].subgroup;
        for (const auto& e : src.elements) CHECK(dst.contains(e));
        CHECK(rank(m.matrix) == src.rank);
    }
}

TEST_CASE("unique involution gives a two-object diagram") {
    auto g = shared(quaternion_group());
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    REQUIRE(diagram.objects.size() == 2);
    CHECK(diagram.objects[0].subgroup.rank == 0);
    CHECK(diagram.objects[1].subgroup.rank == 1);
    std::size_t non_identity = 0;
    for (const auto& m : diagram.morphisms)
        if (m.src != m.dst) ++non_identity;
    CHECK(non_identity == 1);

    LimitTable table = limit_dims(diagram, 8, "q8", false);
    for (int d = 0; d <= 8; ++d) CHECK(table.dims[std::size_t(d)] == 1);
}

TEST_CASE("dihedral(8) skeleton has two rank-2 classes") {
    auto g = shared(dihedral_group(8));
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    std::size_t rank2 = 0;
    for (const auto& o : diagram.objects)
        if (o.subgroup.rank == 2) ++rank2;
    CHECK(rank2 == 2);

    LimitTable table = limit_dims(diagram, 8, "dihedral:8", false);
    for (int d = 0; d <= 8; ++d) CHECK(table.dims[std::size_t(d)] == d + 1);
}

TEST_CASE("limit of an elementary abelian group is its cohomology") {
    auto g = shared(klein_group());
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Full);
    LimitTable table = limit_dims(diagram, 8, "(Z/2)^2", false);
    for (int d = 0; d <= 8; ++d) CHECK(table.dims[std::size_t(d)] == d + 1);
}

TEST_CASE("limit of cyclic order 4") {
    auto g = shared(cyclic_group(4));
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    LimitTable table = limit_dims(diagram, 8, "c4", false);
    for (int d = 0; d <= 8; ++d) CHECK(table.dims[std::size_t(d)] == 1);
}

TEST_CASE("skeleton equals full mode") {
    CHECK(skeleton_vs_full_check(shared(klein_group()), 6));
    CHECK(skeleton_vs_full_check(shared(dihedral_group(8)), 6));
    CHECK(skeleton_vs_full_check(shared(sylow_alternating(8)), 5));
}

TEST_CASE("limit dims are independent of input presentation") {
    // The same abstract group built from different generating sets.
    FiniteGroup d8a = dihedral_group(8);
    FiniteGroup d8b = FiniteGroup::from_elements(d8a.degree(), d8a.elements());
    std::vector<Permutation> reversed(d8a.elements().rbegin(), d8a.elements().rend());
    FiniteGroup d8c = FiniteGroup::from_elements(d8a.degree(), reversed);

    auto dims_of = [](FiniteGroup g) {
        auto diagram = build_quillen_diagram(shared(std::move(g)), DiagramMode::Skeleton);
        return limit_dims(diagram, 6, "", false).dims;
    };
    auto a = dims_of(d8a);
    CHECK(a == dims_of(d8b));
    CHECK(a == dims_of(d8c));
}

TEST_CASE("steenrod stability of limit bases") {
    auto g = shared(klein_group());
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    LimitTable table = limit_dims(diagram, 8, "(Z/2)^2", true);
    CHECK(steenrod_stability_check(table, diagram, 4).empty());

    auto d8 = shared(dihedral_group(8));
    QuillenDiagram d8_diagram = build_quillen_diagram(d8, DiagramMode::Skeleton);
    LimitTable d8_table = limit_dims(d8_diagram, 12, "dihedral:8", true);
    CHECK(steenrod_stability_check(d8_table, d8_diagram, 6).empty());
}

TEST_CASE("extracted basis tuples satisfy every morphism constraint") {
    auto g = shared(dihedral_group(8));
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    const int top = 6;
    LimitTable table = limit_dims(diagram, top, "dihedral:8", true);

    std::map<std::size_t, TruncatedUnstableModule> modules;
    for (const auto& o : diagram.objects)
        if (!modules.count(o.subgroup.rank))
            modules.emplace(o.subgroup.rank, cohomology_elementary_abelian(int(o.subgroup.rank), top));

    for (int d = 0; d <= top; ++d) {
        std::vector<int> offsets;
        int acc = 0;
        for (const auto& o : diagram.objects) {
            offsets.push_back(acc);
            acc += modules.at(o.subgroup.rank).dim(d);
        }
        for (const auto& x : table.basis[std::size_t(d)]) {
            REQUIRE(int(x.size()) == acc);
            for (const auto& mor : diagram.morphisms) {
                const auto& src_mod = modules.at(diagram.objects[mor.src].subgroup.rank);
                const auto& dst_mod = modules.at(diagram.objects[mor.dst].subgroup.rank);
                F2Matrix restriction = restriction_matrices(mor.matrix, d).back();
                F2Vector lhs(std::size_t(src_mod.dim(d)));
                for (int t = 0; t < src_mod.dim(d); ++t)
                    if (x.get(std::size_t(offsets[mor.src] + t))) lhs.set(std::size_t(t), true);
                F2Vector dst_part(std::size_t(dst_mod.dim(d)));
                for (int t = 0; t < dst_mod.dim(d); ++t)
                    if (x.get(std::size_t(offsets[mor.dst] + t))) dst_part.set(std::size_t(t), true);
                CHECK(lhs == restriction.apply(dst_part));
            }
        }
    }
}

TEST_CASE("composite closure spot check") {
    auto g = shared(dihedral_group(8));
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Full);
    CHECK(composite_closure_spot_check(diagram, 12345).empty());
}

TEST_CASE("dihedral closed forms") {
    auto odd = dihedral_closed_form(3, 8);
    for (int d = 0; d <= 8; ++d) CHECK(odd.dims[std::size_t(d)] == 1);

    auto two_mod_4 = dihedral_closed_form(2, 8);
    for (int d = 0; d <= 8; ++d) CHECK(two_mod_4.dims[std::size_t(d)] == d + 1);

    auto zero_mod_4 = dihedral_closed_form(4, 10);
    auto square = PowerSeries::geometric(10, 2);
    for (int d = 0; d <= 10; ++d) {
        bool ok = true;
        CHECK(zero_mod_4.dims[std::size_t(d)] == square[std::size_t(d)].to_int64(ok));
    }
}

TEST_CASE("dihedral groups with an odd part agree with the closed forms") {
    for (int n : {10, 12}) {
        auto g = shared(dihedral_group(std::size_t(2 * n)));
        auto table = limit_dims(build_quillen_diagram(g, DiagramMode::Skeleton), 6, "", false);
        auto closed = dihedral_closed_form(n, 6);
        CHECK(table.dims == closed.dims);
    }
    {
        auto g = shared(dihedral_group(18));  // n = 9 odd
        auto table = limit_dims(build_quillen_diagram(g, DiagramMode::Skeleton), 6, "", false);
        CHECK(table.dims == dihedral_closed_form(9, 6).dims);
        for (int d = 0; d <= 6; ++d) CHECK(table.dims[std::size_t(d)] == 1);
    }
}

TEST_CASE("the two order-64 realizations have the same limit") {
    auto h4 = shared(h4_sylow());
    auto alt = shared(sylow_alternating(8));
    auto h4_dims = limit_dims(build_quillen_diagram(h4, DiagramMode::Skeleton), 6, "", false).dims;
    auto alt_dims = limit_dims(build_quillen_diagram(alt, DiagramMode::Skeleton), 6, "", false).dims;
    CHECK(h4_dims == alt_dims);
}

TEST_CASE("morphism cap trips loudly") {
    DiagramCaps caps;
    caps.max_morphisms = 2;
    auto g = shared(dihedral_group(8));
    CHECK_THROWS_AS(build_quillen_diagram(g, DiagramMode::Full, caps), ResourceLimitError);
}
