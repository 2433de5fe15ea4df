#pragma once

#include <string>
#include <vector>

#include "workbench/config.hpp"
#include "workbench/perm.hpp"
#include "workbench/unstable.hpp"

namespace workbench {

/// The category of elementary abelian 2-subgroups with conjugation-induced
/// maps, flattened to objects plus deduplicated linear morphisms.
struct QuillenDiagram {
    struct Object {
        ElementaryAbelianSubgroup subgroup;
        std::size_t class_size = 1;  // subgroups in the conjugacy class (skeleton mode)
    };
    struct Morphism {
        std::size_t src = 0;
        std::size_t dst = 0;
        F2Matrix matrix;  // rank(dst) x rank(src), injective
    };

    DiagramMode mode = DiagramMode::Skeleton;
    std::vector<Object> objects;
    std::vector<Morphism> morphisms;

    std::size_t max_rank() const;
};

struct DiagramCaps {
    std::size_t max_ea_rank = 6;
    std::size_t max_subgroups = 5000;
    std::size_t max_morphisms = 100000;
};

QuillenDiagram build_quillen_diagram(const GroupPtr& g, DiagramMode mode,
                                     const DiagramCaps& caps = {});

/// Degreewise limit of H^* over the diagram.
struct LimitTable {
    std::string group_label;
    std::string mode;
    int max_degree = 0;
    std::vector<int> dims;  // degrees 0..max_degree
    std::vector<std::size_t> object_ranks;
    std::vector<std::size_t> object_class_sizes;
    std::size_t morphism_count = 0;

    // basis[d]: limit basis vectors over the stacked coordinates
    // (object blocks in diagram order, each of size dim H^d of its rank).
    std::vector<std::vector<F2Vector>> basis;
};

LimitTable limit_dims(const QuillenDiagram& diagram, int max_degree, const std::string& label = "",
                      bool extract_basis = true);

/// Componentwise Steenrod squares of every extracted basis tuple must land
/// back in the limit subspace; returns the violations (empty = pass).
std::vector<std::string> steenrod_stability_check(const LimitTable& table,
                                                  const QuillenDiagram& diagram, int max_check_degree);

/// Skeleton and full diagrams must give the same dimensions.
bool skeleton_vs_full_check(const GroupPtr& g, int max_degree, const DiagramCaps& caps = {});

/// Random spot check that composites of recorded morphisms are again
/// recorded morphisms (the diagram is closed as a category).
std::vector<std::string> composite_closure_spot_check(const QuillenDiagram& diagram,
                                                      unsigned long long seed, int samples = 200);

/// Closed forms for the dihedral group of order 2n: H*(Z/2) for odd n,
/// H*((Z/2)^2) for n = 2 mod 4, and the three-object fiber diagram
/// (P (x) P)^{S_2} -> Phi P <- (P (x) P)^{S_2} for n = 0 mod 4.
LimitTable dihedral_closed_form(int n, int max_degree);

}  // namespace workbench
