#include "workbench/quillen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace workbench {

std::size_t QuillenDiagram::max_rank() const {
    std::size_t r = 0;
    for (const auto& o : objects) r = std::max(r, o.subgroup.rank);
    return r;
}

namespace {

std::vector<Permutation> conjugated_elements(const std::vector<Permutation>& elements,
                                             const Permutation& g) {
    Permutation ginv = g.inverse();
    std::vector<Permutation> out;
    out.reserve(elements.size());
    for (const auto& x : elements) out.push_back(g * x * ginv);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

QuillenDiagram build_quillen_diagram(const GroupPtr& g, DiagramMode mode, const DiagramCaps& caps) {
    EnumerationCaps enum_caps;
    enum_caps.max_subgroups = caps.max_subgroups;
    std::vector<ElementaryAbelianSubgroup> subgroups =
        elementary_abelian_subgroups(g, caps.max_ea_rank, enum_caps);

    QuillenDiagram diagram;
    diagram.mode = mode;

    if (mode == DiagramMode::Full) {
        for (auto& s : subgroups) diagram.objects.push_back({std::move(s), 1});
    } else {
        // Conjugacy classes; the representative is the lexicographically
        // minimal element list in the orbit.
        std::map<std::vector<Permutation>, std::size_t> subgroup_index;
        for (std::size_t i = 0; i < subgroups.size(); ++i) subgroup_index[subgroups[i].elements] = i;
        std::vector<bool> assigned(subgroups.size(), false);
        for (std::size_t i = 0; i < subgroups.size(); ++i) {
            if (assigned[i]) continue;
            std::set<std::size_t> orbit;
            for (const auto& conj : g->elements()) {
                auto it = subgroup_index.find(conjugated_elements(subgroups[i].elements, conj));
                if (it == subgroup_index.end())
                    throw std::logic_error("build_quillen_diagram: conjugate subgroup missing");
                orbit.insert(it->second);
            }
            std::size_t rep = *orbit.begin();  // subgroups sorted, element lists canonical
            for (std::size_t j : orbit) assigned[j] = true;
            diagram.objects.push_back({subgroups[rep], orbit.size()});
        }
        std::sort(diagram.objects.begin(), diagram.objects.end(),
                  [](const QuillenDiagram::Object& a, const QuillenDiagram::Object& b) {
                      if (a.subgroup.rank != b.subgroup.rank) return a.subgroup.rank < b.subgroup.rank;
                      return a.subgroup.elements < b.subgroup.elements;
                  });
    }

    for (std::size_t src = 0; src < diagram.objects.size(); ++src)
        for (std::size_t dst = 0; dst < diagram.objects.size(); ++dst) {
            auto maps =
                conjugation_morphisms(*g, diagram.objects[src].subgroup, diagram.objects[dst].subgroup);
            for (auto& m : maps) {
                diagram.morphisms.push_back({src, dst, std::move(m.matrix)});
                if (diagram.morphisms.size() > caps.max_morphisms)
                    throw ResourceLimitError("morphism cap exceeded (cap " +
                                             std::to_string(caps.max_morphisms) + ")");
            }
        }
    return diagram;
}

namespace {

struct RestrictionCache {
    int max_degree;
    std::map<std::size_t, TruncatedUnstableModule> module_by_rank;
    std::vector<std::vector<F2Matrix>> per_morphism;  // [morphism][degree]

    RestrictionCache(const QuillenDiagram& diagram, int n) : max_degree(n) {
        for (const auto& o : diagram.objects)
            if (!module_by_rank.count(o.subgroup.rank))
                module_by_rank.emplace(o.subgroup.rank,
                                       cohomology_elementary_abelian(int(o.subgroup.rank), n));
        per_morphism.reserve(diagram.morphisms.size());
        for (const auto& m : diagram.morphisms)
            per_morphism.push_back(restriction_matrices(m.matrix, n));
    }

    int dim(const QuillenDiagram& diagram, std::size_t object, int degree) const {
        return module_by_rank.at(diagram.objects[object].subgroup.rank).dim(degree);
    }
};

F2Vector sub_block(const F2Vector& v, int offset, int length) {
    F2Vector out(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
        if (v.get(static_cast<std::size_t>(offset + i))) out.set(static_cast<std::size_t>(i), true);
    return out;
}

}  // namespace

LimitTable limit_dims(const QuillenDiagram& diagram, int max_degree, const std::string& label,
                      bool extract_basis) {
    RestrictionCache cache(diagram, max_degree);

    LimitTable table;
    table.group_label = label;
    table.mode = mode_name(diagram.mode);
    table.max_degree = max_degree;
    table.dims.resize(static_cast<std::size_t>(max_degree) + 1, 0);
    table.morphism_count = diagram.morphisms.size();
    for (const auto& o : diagram.objects) {
        table.object_ranks.push_back(o.subgroup.rank);
        table.object_class_sizes.push_back(o.class_size);
    }
    if (extract_basis) table.basis.resize(static_cast<std::size_t>(max_degree) + 1);

    // Morphisms bucketed by the largest object index they touch, so each is
    // imposed exactly once while objects are appended.
    std::vector<std::vector<std::size_t>> bucket(diagram.objects.size());
    for (std::size_t i = 0; i < diagram.morphisms.size(); ++i)
        bucket[std::max(diagram.morphisms[i].src, diagram.morphisms[i].dst)].push_back(i);

    for (int d = 0; d <= max_degree; ++d) {
        std::vector<int> offsets(diagram.objects.size() + 1, 0);
        std::vector<F2Vector> columns;  // candidate limit basis over the vars so far
        int vars = 0;

        for (std::size_t obj = 0; obj < diagram.objects.size(); ++obj) {
            int block = cache.dim(diagram, obj, d);
            offsets[obj] = vars;
            int new_vars = vars + block;
            // Extend existing columns with zeros and adjoin the new block's
            // unit columns.
            for (auto& col : columns) {
                F2Vector extended(static_cast<std::size_t>(new_vars));
                for (int i = 0; i < vars; ++i)
                    if (col.get(static_cast<std::size_t>(i))) extended.set(static_cast<std::size_t>(i), true);
                col = std::move(extended);
            }
            for (int i = 0; i < block; ++i) {
                F2Vector unit(static_cast<std::size_t>(new_vars));
                unit.set(static_cast<std::size_t>(vars + i), true);
                columns.push_back(std::move(unit));
            }
            vars = new_vars;

            for (std::size_t mi : bucket[obj]) {
                const auto& mor = diagram.morphisms[mi];
                const F2Matrix& restriction = cache.per_morphism[mi][d];
                int src_dim = cache.dim(diagram, mor.src, d);
                int dst_dim = cache.dim(diagram, mor.dst, d);
                if (src_dim == 0 || columns.empty()) continue;
                F2Matrix constraint(static_cast<std::size_t>(src_dim), columns.size());
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    F2Vector y = sub_block(columns[c], offsets[mor.src], src_dim);
                    if (dst_dim > 0)
                        y.xor_with(restriction.apply(sub_block(columns[c], offsets[mor.dst], dst_dim)));
                    constraint.set_column(c, y);
                }
                if (constraint.is_zero()) continue;
                std::vector<F2Vector> coeffs = kernel_basis(constraint);
                std::vector<F2Vector> next;
                next.reserve(coeffs.size());
                for (const auto& z : coeffs) {
                    F2Vector combo(static_cast<std::size_t>(vars));
                    for (std::size_t c = 0; c < columns.size(); ++c)
                        if (z.get(c)) combo.xor_with(columns[c]);
                    next.push_back(std::move(combo));
                }
                columns = std::move(next);
            }
        }
        offsets[diagram.objects.size()] = vars;

        table.dims[d] = int(columns.size());
        if (extract_basis) table.basis[d] = std::move(columns);
    }
    return table;
}

std::vector<std::string> steenrod_stability_check(const LimitTable& table,
                                                  const QuillenDiagram& diagram,
                                                  int max_check_degree) {
    if (table.basis.empty()) throw std::invalid_argument("steenrod_stability_check: basis not extracted");
    RestrictionCache cache(diagram, table.max_degree);
    std::vector<std::string> out;

    auto offsets_at = [&](int degree) {
        std::vector<int> offsets(diagram.objects.size() + 1, 0);
        int acc = 0;
        for (std::size_t obj = 0; obj < diagram.objects.size(); ++obj) {
            offsets[obj] = acc;
            acc += cache.dim(diagram, obj, degree);
        }
        offsets[diagram.objects.size()] = acc;
        return offsets;
    };

    for (int n = 0; n <= max_check_degree && n <= table.max_degree; ++n) {
        std::vector<int> offsets_n = offsets_at(n);
        for (int i = 1; i <= n && n + i <= table.max_degree; ++i) {
            std::vector<int> offsets_target = offsets_at(n + i);
            for (std::size_t b = 0; b < table.basis[static_cast<std::size_t>(n)].size(); ++b) {
                const F2Vector& x = table.basis[static_cast<std::size_t>(n)][b];
                F2Vector y(static_cast<std::size_t>(offsets_target.back()));
                for (std::size_t obj = 0; obj < diagram.objects.size(); ++obj) {
                    const auto& module = cache.module_by_rank.at(diagram.objects[obj].subgroup.rank);
                    int block = module.dim(n);
                    if (block == 0) continue;
                    F2Vector image = module.apply_sq(i, n, sub_block(x, offsets_n[obj], block));
                    for (int t = 0; t < int(image.size()); ++t)
                        if (image.get(static_cast<std::size_t>(t))) y.set(static_cast<std::size_t>(offsets_target[obj] + t), true);
                }
                // Membership in the limit = compatibility with every morphism.
                for (std::size_t mi = 0; mi < diagram.morphisms.size(); ++mi) {
                    const auto& mor = diagram.morphisms[mi];
                    int src_dim = cache.dim(diagram, mor.src, n + i);
                    int dst_dim = cache.dim(diagram, mor.dst, n + i);
                    F2Vector lhs = sub_block(y, offsets_target[mor.src], src_dim);
                    F2Vector rhs(static_cast<std::size_t>(src_dim));
                    if (dst_dim > 0)
                        rhs = cache.per_morphism[mi][n + i].apply(
                            sub_block(y, offsets_target[mor.dst], dst_dim));
                    if (lhs != rhs) {
                        out.push_back("Sq^" + std::to_string(i) + " of basis element " +
                                      std::to_string(b) + " in degree " + std::to_string(n) +
                                      " violates morphism " + std::to_string(mi));
                        break;
                    }
                }
            }
        }
    }
    return out;
}

bool skeleton_vs_full_check(const GroupPtr& g, int max_degree, const DiagramCaps& caps) {
    QuillenDiagram skeleton = build_quillen_diagram(g, DiagramMode::Skeleton, caps);
    QuillenDiagram full = build_quillen_diagram(g, DiagramMode::Full, caps);
    LimitTable a = limit_dims(skeleton, max_degree, "", false);
    LimitTable b = limit_dims(full, max_degree, "", false);
    return a.dims == b.dims;
}

std::vector<std::string> composite_closure_spot_check(const QuillenDiagram& diagram,
                                                      unsigned long long seed, int samples) {
    std::vector<std::string> out;
    if (diagram.morphisms.empty()) return out;

    // Morphism matrices per ordered pair, for membership tests.
    std::map<std::pair<std::size_t, std::size_t>, std::set<std::vector<std::string>>> recorded;
    std::vector<std::vector<std::size_t>> from(diagram.objects.size());
    for (std::size_t i = 0; i < diagram.morphisms.size(); ++i) {
        const auto& m = diagram.morphisms[i];
        recorded[{m.src, m.dst}].insert(m.matrix.row_strings());
        from[m.src].push_back(i);
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto& f = diagram.morphisms[rng() % diagram.morphisms.size()];
        const auto& candidates = from[f.dst];
        if (candidates.empty()) continue;
        const auto& g = diagram.morphisms[candidates[rng() % candidates.size()]];
        F2Matrix composite = g.matrix.multiply(f.matrix);
        auto it = recorded.find({f.src, g.dst});
        if (it == recorded.end() || !it->second.count(composite.row_strings()))
            out.push_back("composite " + std::to_string(f.src) + "->" + std::to_string(f.dst) +
                          "->" + std::to_string(g.dst) + " is not a recorded morphism");
    }
    return out;
}

LimitTable dihedral_closed_form(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("dihedral_closed_form: n must be >= 1");
    LimitTable table;
    table.group_label = "dihedral-closed-form:" + std::to_string(2 * n);
    table.mode = "closed-form";
    table.max_degree = max_degree;
    table.dims.resize(static_cast<std::size_t>(max_degree) + 1, 0);

    if (n % 2 == 1) {
        for (int d = 0; d <= max_degree; ++d) table.dims[d] = 1;
        return table;
    }
    if (n % 4 == 2) {
        for (int d = 0; d <= max_degree; ++d) table.dims[d] = d + 1;
        return table;
    }

    // n = 0 mod 4: limit of Inv -> Phi P <- Inv where Inv = (P (x) P)^{S_2}
    // and both arrows kill the off-diagonal basis and send the diagonal
    // (uv)^{d/2} to the generator of (Phi P)^d.
    for (int d = 0; d <= max_degree; ++d) {
        int pairs = (d + 1) / 2;                  // u^a v^b + u^b v^a with a < b
        int diag = (d % 2 == 0) ? 1 : 0;          // (uv)^{d/2}
        int inv_dim = pairs + diag;
        int phi_dim = diag;
        F2Matrix constraint(static_cast<std::size_t>(phi_dim), static_cast<std::size_t>(2 * inv_dim));
        if (diag) {
            constraint.set(0, static_cast<std::size_t>(pairs), true);             // diagonal of the first copy
            constraint.set(0, static_cast<std::size_t>(inv_dim + pairs), true);   // diagonal of the second copy
        }
        table.dims[d] = int(kernel_basis(constraint).size());
    }
    return table;
}

}  // namespace workbench
