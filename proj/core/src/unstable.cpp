#include "workbench/unstable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

namespace workbench {

namespace {

bool binomial_odd(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (n & k) == k;
}

}  // namespace

TruncatedUnstableModule::TruncatedUnstableModule(int max_degree, std::vector<int> dims)
    : max_degree_(max_degree), dims_(std::move(dims)) {
    if (int(dims_.size()) != max_degree_ + 1)
        throw std::invalid_argument("TruncatedUnstableModule: dims must cover 0..max_degree");
    sq_.resize(static_cast<std::size_t>(max_degree_) + 1);
    for (int i = 1; i <= max_degree_; ++i) {
        sq_[i].resize(static_cast<std::size_t>(max_degree_ - i) + 1);
        for (int n = 0; n + i <= max_degree_; ++n) sq_[i][n] = F2Matrix(dims_[n + i], dims_[n]);
    }
}

const F2Matrix& TruncatedUnstableModule::sq(int i, int n) const {
    if (i < 1 || n < 0 || n + i > max_degree_) throw std::out_of_range("sq(i, n) out of range");
    return sq_[i][n];
}

void TruncatedUnstableModule::set_sq(int i, int n, F2Matrix m) {
    if (i < 1 || n < 0 || n + i > max_degree_) throw std::out_of_range("set_sq(i, n) out of range");
    if (int(m.rows()) != dims_[n + i] || int(m.cols()) != dims_[n])
        throw std::invalid_argument("set_sq: matrix shape mismatch");
    sq_[i][n] = std::move(m);
}

F2Vector TruncatedUnstableModule::apply_sq(int i, int n, const F2Vector& v) const {
    if (i == 0) return v;
    return sq(i, n).apply(v);
}

const F2Matrix& TruncatedUnstableModule::u(int n) const {
    if (!u_mult_) throw std::logic_error("module carries no u-action");
    if (n < 0 || n + 1 > max_degree_) throw std::out_of_range("u(n) out of range");
    return (*u_mult_)[n];
}

void TruncatedUnstableModule::set_u(int n, F2Matrix m) {
    if (!u_mult_) throw std::logic_error("module carries no u-action");
    if (n < 0 || n + 1 > max_degree_) throw std::out_of_range("set_u(n) out of range");
    if (int(m.rows()) != dims_[n + 1] || int(m.cols()) != dims_[n])
        throw std::invalid_argument("set_u: matrix shape mismatch");
    (*u_mult_)[n] = std::move(m);
}

void TruncatedUnstableModule::init_u() {
    u_mult_.emplace();
    u_mult_->reserve(static_cast<std::size_t>(std::max(max_degree_, 0)));
    for (int n = 0; n + 1 <= max_degree_; ++n) u_mult_->push_back(F2Matrix(dims_[n + 1], dims_[n]));
}

std::vector<std::string> ModuleMap::commutation_violations() const {
    std::vector<std::string> out;
    int n_max = std::min(domain->max_degree(), codomain->max_degree());
    for (int n = 0; n <= n_max; ++n)
        for (int i = 1; n + i <= n_max; ++i) {
            F2Matrix lhs = codomain->sq(i, n).multiply(maps[n]);
            F2Matrix rhs = maps[n + i].multiply(domain->sq(i, n));
            if (lhs != rhs) out.push_back("Sq^" + std::to_string(i) + " at degree " + std::to_string(n));
        }
    if (domain->has_u() && codomain->has_u()) {
        for (int n = 0; n + 1 <= n_max; ++n) {
            F2Matrix lhs = codomain->u(n).multiply(maps[n]);
            F2Matrix rhs = maps[n + 1].multiply(domain->u(n));
            if (lhs != rhs) out.push_back("u at degree " + std::to_string(n));
        }
    }
    return out;
}

std::vector<std::vector<int>> monomials_of_degree(int rank, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(std::max(rank, 0)), 0);
    // First exponent largest first: u1-dominant lexicographic order.
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == rank) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        if (var == rank - 1) {
            current[var] = remaining;
            rec(var + 1, 0);
            current[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[var] = e;
            rec(var + 1, remaining - e);
        }
        current[var] = 0;
    };
    if (rank == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    return out;
}

namespace {

struct MonomialBasis {
    int rank = 0;
    int max_degree = 0;
    std::vector<std::vector<std::vector<int>>> monomials;  // [degree][index] -> exponents
    std::vector<std::map<std::vector<int>, int>> index;    // [degree]: exponents -> index

    MonomialBasis(int r, int n) : rank(r), max_degree(n) {
        monomials.resize(static_cast<std::size_t>(n) + 1);
        index.resize(static_cast<std::size_t>(n) + 1);
        for (int d = 0; d <= n; ++d) {
            monomials[d] = monomials_of_degree(r, d);
            for (std::size_t i = 0; i < monomials[d].size(); ++i) index[d][monomials[d][i]] = int(i);
        }
    }

    std::string name(int degree, int idx) const {
        const auto& e = monomials[degree][idx];
        std::string s;
        for (int v = 0; v < rank; ++v) {
            if (!e[v]) continue;
            if (!s.empty()) s += "*";
            s += "u" + std::to_string(v + 1);
            if (e[v] > 1) s += "^" + std::to_string(e[v]);
        }
        return s.empty() ? "1" : s;
    }
};

// All total squares of a monomial: pairs (k_total, exponent of the target),
// one per choice k with C(alpha_j, k_j) odd, k_j <= alpha_j bitwise.
void enumerate_squares(const std::vector<int>& alpha, int max_extra,
                       const std::function<void(int, const std::vector<int>&)>& emit) {
    std::vector<int> target(alpha.begin(), alpha.end());
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int used) {
        if (var == alpha.size()) {
            emit(used, target);
            return;
        }
        int a = alpha[var];
        // Subsets of the bit pattern of a.
        for (int k = 0; k <= a; ++k) {
            if (used + k > max_extra) break;
            if (!binomial_odd(a, k)) continue;
            target[var] = a + k;
            rec(var + 1, used + k);
        }
        target[var] = a;
    };
    rec(0, 0);
}

}  // namespace

TruncatedUnstableModule cohomology_elementary_abelian(int d, int max_degree) {
    if (d < 0 || max_degree < 0) throw std::invalid_argument("cohomology_elementary_abelian: bad arguments");
    MonomialBasis basis(d, max_degree);
    std::vector<int> dims(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) dims[n] = int(basis.monomials[n].size());

    TruncatedUnstableModule m(max_degree, dims);
    std::vector<std::vector<F2Matrix>> mats(static_cast<std::size_t>(max_degree) + 1);
    for (int i = 1; i <= max_degree; ++i)
        for (int n = 0; n + i <= max_degree; ++n)
            mats[i].push_back(F2Matrix(static_cast<std::size_t>(dims[n + i]), static_cast<std::size_t>(dims[n])));
    for (int n = 0; n <= max_degree; ++n) {
        for (std::size_t col = 0; col < basis.monomials[n].size(); ++col) {
            enumerate_squares(basis.monomials[n][col], max_degree - n,
                              [&](int i, const std::vector<int>& target) {
                                  if (i == 0) return;
                                  int row = basis.index[n + i].at(target);
                                  mats[i][n].set(static_cast<std::size_t>(row), col, true);
                              });
        }
    }
    for (int i = 1; i <= max_degree; ++i)
        for (int n = 0; n + i <= max_degree; ++n) m.set_sq(i, n, std::move(mats[i][n]));

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        for (int i = 0; i < dims[n]; ++i) labels[n].push_back(basis.name(n, i));
    m.set_labels(std::move(labels));
    return m;
}

TruncatedUnstableModule with_linear_u(const TruncatedUnstableModule& poly, int rank,
                                      const F2Vector& linear_form) {
    if (int(linear_form.size()) != rank) throw std::invalid_argument("with_linear_u: form length mismatch");
    MonomialBasis basis(rank, poly.max_degree());
    TruncatedUnstableModule m = poly;
    m.init_u();
    for (int n = 0; n + 1 <= m.max_degree(); ++n) {
        F2Matrix mat(static_cast<std::size_t>(m.dim(n + 1)), static_cast<std::size_t>(m.dim(n)));
        for (std::size_t col = 0; col < basis.monomials[n].size(); ++col) {
            for (int v = 0; v < rank; ++v) {
                if (!linear_form.get(static_cast<std::size_t>(v))) continue;
                std::vector<int> target = basis.monomials[n][col];
                target[v] += 1;
                mat.set(static_cast<std::size_t>(basis.index[n + 1].at(target)), col, true);
            }
        }
        m.set_u(n, std::move(mat));
    }
    return m;
}

std::vector<F2Matrix> restriction_matrices(const F2Matrix& f, int max_degree) {
    int src_rank = int(f.cols());   // rank of E, codomain module H*((Z/2)^d)
    int dst_rank = int(f.rows());   // rank of E', domain module H*((Z/2)^{d'})
    MonomialBasis src(src_rank, max_degree);
    MonomialBasis dst(dst_rank, max_degree);

    // Multiplication by u_i in the source algebra, per degree.
    std::vector<std::vector<F2Matrix>> mult(static_cast<std::size_t>(src_rank));
    for (int v = 0; v < src_rank; ++v) {
        mult[v].reserve(static_cast<std::size_t>(max_degree));
        for (int n = 0; n + 1 <= max_degree; ++n) {
            F2Matrix m(src.monomials[n + 1].size(), src.monomials[n].size());
            for (std::size_t col = 0; col < src.monomials[n].size(); ++col) {
                std::vector<int> target = src.monomials[n][col];
                target[v] += 1;
                m.set(static_cast<std::size_t>(src.index[n + 1].at(target)), col, true);
            }
            mult[v].push_back(std::move(m));
        }
    }
    // Multiplication by the image linear form of each generator of the
    // destination algebra.
    std::vector<std::vector<F2Matrix>> form_mult(static_cast<std::size_t>(dst_rank));
    for (int j = 0; j < dst_rank; ++j) {
        form_mult[j].reserve(static_cast<std::size_t>(max_degree));
        for (int n = 0; n + 1 <= max_degree; ++n) {
            F2Matrix m(src.monomials[n + 1].size(), src.monomials[n].size());
            for (int v = 0; v < src_rank; ++v)
                if (f.get(static_cast<std::size_t>(j), static_cast<std::size_t>(v))) m = m.plus(mult[v][n]);
            form_mult[j].push_back(std::move(m));
        }
    }

    // Image of a degree-n monomial = (image of it with one variable removed)
    // times the image of that variable.
    std::vector<F2Matrix> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    out.push_back(F2Matrix::identity(1));
    for (int n = 1; n <= max_degree; ++n) {
        F2Matrix mat(src.monomials[n].size(), dst.monomials[n].size());
        for (std::size_t col = 0; col < dst.monomials[n].size(); ++col) {
            std::vector<int> beta = dst.monomials[n][col];
            int j = 0;
            while (beta[j] == 0) ++j;
            beta[j] -= 1;
            F2Vector prev = out[n - 1].column(static_cast<std::size_t>(dst.index[n - 1].at(beta)));
            mat.set_column(col, form_mult[j][n - 1].apply(prev));
        }
        out.push_back(std::move(mat));
    }
    return out;
}

ModuleMap restriction_map(const F2Matrix& f, const TruncatedUnstableModule& domain,
                          const TruncatedUnstableModule& codomain) {
    ModuleMap map;
    map.domain = &domain;
    map.codomain = &codomain;
    map.maps = restriction_matrices(f, std::min(domain.max_degree(), codomain.max_degree()));
    return map;
}

TruncatedUnstableModule phi(const TruncatedUnstableModule& m) {
    int n_max = m.max_degree();
    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 0; 2 * n <= n_max; ++n) dims[2 * n] = m.dim(n);
    TruncatedUnstableModule out(n_max, dims);
    for (int n = 0; 2 * n <= n_max; ++n)
        for (int i = 1; 2 * (n + i) <= n_max; ++i) out.set_sq(2 * i, 2 * n, m.sq(i, n));
    return out;
}

namespace {

// Bookkeeping for F_2[u] (x) M: in degree d the block with u-power a holds a
// copy of M^{d-a}, blocks ordered by ascending a.
struct AmbientUTensor {
    const TruncatedUnstableModule* m;
    std::vector<std::vector<int>> offsets;  // [degree][a]
    std::vector<int> total;                 // [degree]

    explicit AmbientUTensor(const TruncatedUnstableModule& mod) : m(&mod) {
        int n_max = mod.max_degree();
        offsets.resize(static_cast<std::size_t>(n_max) + 1);
        total.resize(static_cast<std::size_t>(n_max) + 1, 0);
        for (int d = 0; d <= n_max; ++d) {
            offsets[d].resize(static_cast<std::size_t>(d) + 2, 0);
            int acc = 0;
            for (int a = 0; a <= d; ++a) {
                offsets[d][a] = acc;
                acc += mod.dim(d - a);
            }
            offsets[d][d + 1] = acc;
            total[d] = acc;
        }
    }

    // Sq^i on a degree-d ambient vector (Cartan against the polynomial factor).
    F2Vector apply_sq(int i, int d, const F2Vector& v) const {
        F2Vector out(static_cast<std::size_t>(total[d + i]));
        for (int a = 0; a <= d; ++a) {
            int mdeg = d - a;
            if (m->dim(mdeg) == 0) continue;
            F2Vector block(static_cast<std::size_t>(m->dim(mdeg)));
            bool nonzero = false;
            for (int t = 0; t < m->dim(mdeg); ++t)
                if (v.get(static_cast<std::size_t>(offsets[d][a] + t))) {
                    block.set(static_cast<std::size_t>(t), true);
                    nonzero = true;
                }
            if (!nonzero) continue;
            for (int p = 0; p <= i; ++p) {
                if (!binomial_odd(a, p)) continue;
                int q = i - p;
                if (q > mdeg) continue;  // instability in the M factor
                F2Vector w = m->apply_sq(q, mdeg, block);
                for (int t = 0; t < int(w.size()); ++t)
                    if (w.get(static_cast<std::size_t>(t)))
                        out.flip(static_cast<std::size_t>(offsets[d + i][a + p] + t));
            }
        }
        return out;
    }
};

struct R1Entry {
    int j;     // u-power
    int mdeg;  // degree of the underlying basis element
    int midx;
};

std::vector<std::vector<R1Entry>> r1_basis(const TruncatedUnstableModule& m) {
    int n_max = m.max_degree();
    std::vector<std::vector<R1Entry>> out(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= n_max; ++d)
        for (int j = d % 2; j <= d; j += 2) {
            int mdeg = (d - j) / 2;
            for (int idx = 0; idx < m.dim(mdeg); ++idx) out[d].push_back({j, mdeg, idx});
        }
    return out;
}

F2Vector st1_vector(const TruncatedUnstableModule& m, const AmbientUTensor& ambient, const R1Entry& e) {
    int d = e.j + 2 * e.mdeg;
    F2Vector out(static_cast<std::size_t>(ambient.total[d]));
    F2Vector unit(static_cast<std::size_t>(m.dim(e.mdeg)));
    unit.set(static_cast<std::size_t>(e.midx), true);
    for (int i = 0; i <= e.mdeg; ++i) {
        F2Vector w = m.apply_sq(i, e.mdeg, unit);
        int a = e.j + e.mdeg - i;
        for (int t = 0; t < int(w.size()); ++t)
            if (w.get(static_cast<std::size_t>(t))) out.flip(static_cast<std::size_t>(ambient.offsets[d][a] + t));
    }
    return out;
}

}  // namespace

F2Vector st1_coordinates(const TruncatedUnstableModule& m, int degree, int index) {
    if (2 * degree > m.max_degree()) throw std::invalid_argument("st1_coordinates: out of truncation");
    AmbientUTensor ambient(m);
    return st1_vector(m, ambient, R1Entry{0, degree, index});
}

TruncatedUnstableModule r1(const TruncatedUnstableModule& m) {
    int n_max = m.max_degree();
    AmbientUTensor ambient(m);
    std::vector<std::vector<R1Entry>> basis = r1_basis(m);

    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= n_max; ++d) dims[d] = int(basis[d].size());
    TruncatedUnstableModule out(n_max, dims);

    std::vector<F2Matrix> embed(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::unique_ptr<GaussSolver>> solver(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= n_max; ++d) {
        embed[d] = F2Matrix(static_cast<std::size_t>(ambient.total[d]), basis[d].size());
        for (std::size_t c = 0; c < basis[d].size(); ++c)
            embed[d].set_column(c, st1_vector(m, ambient, basis[d][c]));
        solver[d] = std::make_unique<GaussSolver>(embed[d]);
        if (solver[d]->rank() != basis[d].size())
            throw std::logic_error("r1: St_1 basis is not independent");
    }

    for (int d = 0; d <= n_max; ++d)
        for (int i = 1; d + i <= n_max; ++i) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + i]), static_cast<std::size_t>(dims[d]));
            for (std::size_t c = 0; c < basis[d].size(); ++c) {
                F2Vector image = ambient.apply_sq(i, d, embed[d].column(c));
                auto coords = solver[d + i]->solve(image);
                if (!coords) throw std::logic_error("r1: Sq image left the submodule");
                mat.set_column(c, *coords);
            }
            out.set_sq(i, d, std::move(mat));
        }

    // Free u-action: u^j St1 x -> u^{j+1} St1 x.
    out.init_u();
    for (int d = 0; d + 1 <= n_max; ++d) {
        F2Matrix mat(static_cast<std::size_t>(dims[d + 1]), static_cast<std::size_t>(dims[d]));
        for (std::size_t c = 0; c < basis[d].size(); ++c) {
            R1Entry target = basis[d][c];
            target.j += 1;
            for (std::size_t r = 0; r < basis[d + 1].size(); ++r) {
                const R1Entry& cand = basis[d + 1][r];
                if (cand.j == target.j && cand.mdeg == target.mdeg && cand.midx == target.midx) {
                    mat.set(r, c, true);
                    break;
                }
            }
        }
        out.set_u(d, std::move(mat));
    }
    return out;
}

namespace {

// Basis bookkeeping for (M (x) M)^{S_2}: unordered pairs then diagonals.
struct InvariantBasis {
    struct Pair {
        int pdeg, pidx, qdeg, qidx;  // (pdeg, pidx) < (qdeg, qidx)
    };
    std::vector<std::vector<Pair>> pairs;      // [degree]
    std::vector<std::vector<int>> diagonals;   // [degree] -> index in M^{d/2}
    std::vector<int> pair_count;

    explicit InvariantBasis(const TruncatedUnstableModule& m) {
        int n_max = m.max_degree();
        pairs.resize(static_cast<std::size_t>(n_max) + 1);
        diagonals.resize(static_cast<std::size_t>(n_max) + 1);
        pair_count.resize(static_cast<std::size_t>(n_max) + 1, 0);
        for (int d = 0; d <= n_max; ++d) {
            for (int p = 0; 2 * p <= d; ++p) {
                int q = d - p;
                if (p < q) {
                    for (int ip = 0; ip < m.dim(p); ++ip)
                        for (int iq = 0; iq < m.dim(q); ++iq) pairs[d].push_back({p, ip, q, iq});
                } else {
                    for (int ip = 0; ip < m.dim(p); ++ip)
                        for (int iq = ip + 1; iq < m.dim(q); ++iq) pairs[d].push_back({p, ip, q, iq});
                }
            }
            pair_count[d] = int(pairs[d].size());
            if (d % 2 == 0)
                for (int i = 0; i < m.dim(d / 2); ++i) diagonals[d].push_back(i);
        }
    }

    int dim(int d) const { return pair_count[d] + int(diagonals[d].size()); }
};

// Dense coordinates on the ordered tensor square of M in one degree.
struct OrderedTensor {
    const TruncatedUnstableModule* m;
    int degree;
    std::vector<int> offsets;  // offsets[p]: block (p, d-p)
    F2Vector coords;

    OrderedTensor(const TruncatedUnstableModule& mod, int d) : m(&mod), degree(d) {
        offsets.resize(static_cast<std::size_t>(d) + 2, 0);
        int acc = 0;
        for (int p = 0; p <= d; ++p) {
            offsets[p] = acc;
            acc += mod.dim(p) * mod.dim(d - p);
        }
        offsets[d + 1] = acc;
        coords = F2Vector(static_cast<std::size_t>(acc));
    }

    std::size_t position(int p, int ip, int iq) const {
        return static_cast<std::size_t>(offsets[p] + ip * m->dim(degree - p) + iq);
    }

    void add_outer(int p, const F2Vector& left, const F2Vector& right) {
        for (int ip = 0; ip < int(left.size()); ++ip) {
            if (!left.get(static_cast<std::size_t>(ip))) continue;
            for (int iq = 0; iq < int(right.size()); ++iq)
                if (right.get(static_cast<std::size_t>(iq))) coords.flip(position(p, ip, iq));
        }
    }
};

F2Vector unit_vector(int dim, int idx) {
    F2Vector v(static_cast<std::size_t>(dim));
    v.set(static_cast<std::size_t>(idx), true);
    return v;
}

// Sq^k of x (x) y expanded over the ordered tensor square.
void accumulate_sq_of_ordered(const TruncatedUnstableModule& m, OrderedTensor& target, int k,
                              int pdeg, int pidx, int qdeg, int qidx) {
    for (int a = 0; a <= k; ++a) {
        int b = k - a;
        if (a > pdeg || b > qdeg) continue;  // instability
        F2Vector left = m.apply_sq(a, pdeg, unit_vector(m.dim(pdeg), pidx));
        F2Vector right = m.apply_sq(b, qdeg, unit_vector(m.dim(qdeg), qidx));
        target.add_outer(pdeg + a, left, right);
    }
}

// Read the coordinates of a symmetric ordered-tensor vector in the invariant
// basis of its degree.
F2Vector invariant_coordinates(const InvariantBasis& basis, const OrderedTensor& v) {
    int d = v.degree;
    F2Vector out(static_cast<std::size_t>(basis.dim(d)));
    for (std::size_t i = 0; i < basis.pairs[d].size(); ++i) {
        const auto& pr = basis.pairs[d][i];
        bool c1 = v.coords.get(v.position(pr.pdeg, pr.pidx, pr.qidx));
        bool c2 = v.coords.get(v.position(pr.qdeg, pr.qidx, pr.pidx));
        if (c1 != c2) throw std::logic_error("invariant_coordinates: vector is not symmetric");
        if (c1) out.set(i, true);
    }
    for (std::size_t i = 0; i < basis.diagonals[d].size(); ++i) {
        int half = d / 2;
        if (v.coords.get(v.position(half, basis.diagonals[d][i], basis.diagonals[d][i])))
            out.set(static_cast<std::size_t>(basis.pair_count[d]) + i, true);
    }
    return out;
}

}  // namespace

TruncatedUnstableModule sym2_invariants(const TruncatedUnstableModule& m) {
    int n_max = m.max_degree();
    InvariantBasis basis(m);
    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= n_max; ++d) dims[d] = basis.dim(d);
    TruncatedUnstableModule out(n_max, dims);

    auto column_sq = [&](int d, int k, std::size_t col) {
        OrderedTensor acc(m, d + k);
        if (col < basis.pairs[d].size()) {
            const auto& pr = basis.pairs[d][col];
            accumulate_sq_of_ordered(m, acc, k, pr.pdeg, pr.pidx, pr.qdeg, pr.qidx);
            accumulate_sq_of_ordered(m, acc, k, pr.qdeg, pr.qidx, pr.pdeg, pr.pidx);
        } else {
            int idx = basis.diagonals[d][col - basis.pairs[d].size()];
            accumulate_sq_of_ordered(m, acc, k, d / 2, idx, d / 2, idx);
        }
        return invariant_coordinates(basis, acc);
    };

    for (int d = 0; d <= n_max; ++d)
        for (int k = 1; d + k <= n_max; ++k) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + k]), static_cast<std::size_t>(dims[d]));
            for (std::size_t col = 0; col < static_cast<std::size_t>(dims[d]); ++col)
                mat.set_column(col, column_sq(d, k, col));
            out.set_sq(k, d, std::move(mat));
        }

    if (m.has_u()) {
        // u acts as e (x) 1 + 1 (x) e.
        out.init_u();
        for (int d = 0; d + 1 <= n_max; ++d) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + 1]), static_cast<std::size_t>(dims[d]));
            for (std::size_t col = 0; col < static_cast<std::size_t>(dims[d]); ++col) {
                OrderedTensor acc(m, d + 1);
                auto add_u_of = [&](int pdeg, int pidx, int qdeg, int qidx) {
                    if (pdeg + 1 <= n_max && m.dim(pdeg + 1) > 0) {
                        F2Vector left = m.u(pdeg).apply(unit_vector(m.dim(pdeg), pidx));
                        acc.add_outer(pdeg + 1, left, unit_vector(m.dim(qdeg), qidx));
                    }
                    if (qdeg + 1 <= n_max && m.dim(qdeg + 1) > 0) {
                        F2Vector right = m.u(qdeg).apply(unit_vector(m.dim(qdeg), qidx));
                        acc.add_outer(pdeg, unit_vector(m.dim(pdeg), pidx), right);
                    }
                };
                if (col < basis.pairs[d].size()) {
                    const auto& pr = basis.pairs[d][col];
                    add_u_of(pr.pdeg, pr.pidx, pr.qdeg, pr.qidx);
                    add_u_of(pr.qdeg, pr.qidx, pr.pdeg, pr.pidx);
                } else {
                    int idx = basis.diagonals[d][col - basis.pairs[d].size()];
                    add_u_of(d / 2, idx, d / 2, idx);
                }
                mat.set_column(col, invariant_coordinates(basis, acc));
            }
            out.set_u(d, std::move(mat));
        }
    }
    return out;
}

QuadraticParts quadratic_parts(const TruncatedUnstableModule& m, bool decorated) {
    if (decorated && !m.has_u())
        throw std::invalid_argument("quadratic_p_decorated: input carries no u-action");
    int n_max = m.max_degree();

    QuadraticParts parts;
    parts.invariants = sym2_invariants(m);
    parts.r1_part = r1(m);
    parts.phi_part = phi(m);

    InvariantBasis inv_basis(m);
    std::vector<std::vector<R1Entry>> r_basis = r1_basis(m);

    parts.nu.resize(static_cast<std::size_t>(n_max) + 1);
    parts.rho.resize(static_cast<std::size_t>(n_max) + 1);
    parts.embed.resize(static_cast<std::size_t>(n_max) + 1);
    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1, 0);

    for (int d = 0; d <= n_max; ++d) {
        int phi_dim = parts.phi_part.dim(d);
        int inv_dim = parts.invariants.dim(d);
        int r_dim = parts.r1_part.dim(d);

        F2Matrix nu(static_cast<std::size_t>(phi_dim), static_cast<std::size_t>(inv_dim));
        for (std::size_t i = 0; i < inv_basis.diagonals[d].size(); ++i)
            nu.set(static_cast<std::size_t>(inv_basis.diagonals[d][i]), static_cast<std::size_t>(inv_basis.pair_count[d]) + i, true);
        F2Matrix rho(static_cast<std::size_t>(phi_dim), static_cast<std::size_t>(r_dim));
        for (std::size_t c = 0; c < r_basis[d].size(); ++c)
            if (r_basis[d][c].j == 0) rho.set(static_cast<std::size_t>(r_basis[d][c].midx), c, true);

        F2Matrix difference = nu.beside(rho);  // nu a + rho r = 0 cuts out the fiber product
        std::vector<F2Vector> kernel = kernel_basis(difference);
        dims[d] = int(kernel.size());
        parts.embed[d] = matrix_from_columns(static_cast<std::size_t>(inv_dim + r_dim), kernel);
        parts.nu[d] = std::move(nu);
        parts.rho[d] = std::move(rho);
    }

    TruncatedUnstableModule module(n_max, dims);
    std::vector<std::unique_ptr<GaussSolver>> solver(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= n_max; ++d) solver[d] = std::make_unique<GaussSolver>(parts.embed[d]);

    auto componentwise = [&](int d, const F2Vector& v, int i) {
        int inv_dim = parts.invariants.dim(d);
        int r_dim = parts.r1_part.dim(d);
        F2Vector a(static_cast<std::size_t>(inv_dim)), r(static_cast<std::size_t>(r_dim));
        for (int t = 0; t < inv_dim; ++t)
            if (v.get(static_cast<std::size_t>(t))) a.set(static_cast<std::size_t>(t), true);
        for (int t = 0; t < r_dim; ++t)
            if (v.get(static_cast<std::size_t>(inv_dim + t))) r.set(static_cast<std::size_t>(t), true);
        F2Vector wa = parts.invariants.apply_sq(i, d, a);
        F2Vector wr = parts.r1_part.apply_sq(i, d, r);
        F2Vector w(static_cast<std::size_t>(parts.invariants.dim(d + i) + parts.r1_part.dim(d + i)));
        for (int t = 0; t < int(wa.size()); ++t)
            if (wa.get(static_cast<std::size_t>(t))) w.set(static_cast<std::size_t>(t), true);
        for (int t = 0; t < int(wr.size()); ++t)
            if (wr.get(static_cast<std::size_t>(t))) w.set(static_cast<std::size_t>(parts.invariants.dim(d + i) + t), true);
        return w;
    };

    for (int d = 0; d <= n_max; ++d)
        for (int i = 1; d + i <= n_max; ++i) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + i]), static_cast<std::size_t>(dims[d]));
            for (std::size_t c = 0; c < static_cast<std::size_t>(dims[d]); ++c) {
                F2Vector w = componentwise(d, parts.embed[d].column(c), i);
                auto coords = solver[d + i]->solve(w);
                if (!coords) throw std::logic_error("quadratic: Sq image left the fiber product");
                mat.set_column(c, *coords);
            }
            module.set_sq(i, d, std::move(mat));
        }

    if (decorated) {
        const TruncatedUnstableModule& inv = parts.invariants;
        // The observed vanishing nu(u . invariants) = 0; the fiber product is
        // closed under (a, r) -> (u a, 0).
        for (int d = 0; d + 1 <= n_max; ++d)
            if (!parts.nu[d + 1].multiply(inv.u(d)).is_zero())
                throw std::logic_error("quadratic_p_decorated: nu . u is not zero");

        module.init_u();
        for (int d = 0; d + 1 <= n_max; ++d) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + 1]), static_cast<std::size_t>(dims[d]));
            for (std::size_t c = 0; c < static_cast<std::size_t>(dims[d]); ++c) {
                const F2Vector v = parts.embed[d].column(c);
                int inv_dim = inv.dim(d);
                F2Vector a(static_cast<std::size_t>(inv_dim));
                for (int t = 0; t < inv_dim; ++t)
                    if (v.get(static_cast<std::size_t>(t))) a.set(static_cast<std::size_t>(t), true);
                F2Vector wa = inv.u(d).apply(a);
                F2Vector w(static_cast<std::size_t>(inv.dim(d + 1) + parts.r1_part.dim(d + 1)));
                for (int t = 0; t < int(wa.size()); ++t)
                    if (wa.get(static_cast<std::size_t>(t))) w.set(static_cast<std::size_t>(t), true);
                auto coords = solver[d + 1]->solve(w);
                if (!coords) throw std::logic_error("quadratic_p_decorated: u image left the fiber product");
                mat.set_column(c, *coords);
            }
            module.set_u(d, std::move(mat));
        }
    }

    parts.module = std::move(module);
    return parts;
}

TruncatedUnstableModule quadratic(const TruncatedUnstableModule& m) {
    return quadratic_parts(m, false).module;
}

TruncatedUnstableModule quadratic_p_decorated(const TruncatedUnstableModule& m) {
    return quadratic_parts(m, true).module;
}

TruncatedUnstableModule tau(const TruncatedUnstableModule& m) {
    if (!m.has_u()) throw std::invalid_argument("tau: input carries no u-action");
    int n_max = m.max_degree() - 1;
    if (n_max < 0) throw std::invalid_argument("tau: truncation too small");

    std::vector<std::vector<F2Vector>> kernels(static_cast<std::size_t>(n_max) + 1);
    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        kernels[n] = kernel_basis(m.u(n));
        dims[n] = int(kernels[n].size());
    }

    TruncatedUnstableModule out(n_max, dims);
    std::vector<std::unique_ptr<GaussSolver>> solver(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        solver[n] = std::make_unique<GaussSolver>(matrix_from_columns(static_cast<std::size_t>(m.dim(n)), kernels[n]));

    for (int n = 0; n <= n_max; ++n)
        for (int i = 1; n + i <= n_max; ++i) {
            F2Matrix mat(static_cast<std::size_t>(dims[n + i]), static_cast<std::size_t>(dims[n]));
            for (std::size_t c = 0; c < kernels[n].size(); ++c) {
                F2Vector image = m.apply_sq(i, n, kernels[n][c]);
                auto coords = solver[n + i]->solve(image);
                if (!coords) throw std::logic_error("tau: Sq does not preserve the u-kernel");
                mat.set_column(c, *coords);
            }
            out.set_sq(i, n, std::move(mat));
        }
    return out;
}

std::vector<int> gysin_dims(const TruncatedUnstableModule& m) {
    if (!m.has_u()) throw std::invalid_argument("gysin_dims: input carries no u-action");
    int n_max = m.max_degree() - 1;
    std::vector<int> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        int coker = m.dim(n) - (n >= 1 ? int(rank(m.u(n - 1))) : 0);
        int ker = m.dim(n) - int(rank(m.u(n)));
        out[n] = coker + ker;
    }
    return out;
}

TruncatedUnstableModule tensor(const TruncatedUnstableModule& a, const TruncatedUnstableModule& b) {
    int n_max = std::min(a.max_degree(), b.max_degree());
    struct Entry {
        int pdeg, pidx, qidx;
    };
    std::vector<std::vector<Entry>> basis(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::vector<std::vector<int>>> offset(static_cast<std::size_t>(n_max) + 1);
    std::vector<int> dims(static_cast<std::size_t>(n_max) + 1, 0);
    for (int d = 0; d <= n_max; ++d) {
        offset[d].resize(static_cast<std::size_t>(d) + 1);
        for (int p = 0; p <= d; ++p) {
            offset[d][p].resize(static_cast<std::size_t>(a.dim(p)));
            for (int ip = 0; ip < a.dim(p); ++ip) {
                offset[d][p][ip] = int(basis[d].size());
                for (int iq = 0; iq < b.dim(d - p); ++iq) basis[d].push_back({p, ip, iq});
            }
        }
        dims[d] = int(basis[d].size());
    }

    auto position = [&](int d, int p, int ip, int iq) { return static_cast<std::size_t>(offset[d][p][ip] + iq); };

    TruncatedUnstableModule out(n_max, dims);
    for (int d = 0; d <= n_max; ++d)
        for (int k = 1; d + k <= n_max; ++k) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + k]), static_cast<std::size_t>(dims[d]));
            for (std::size_t c = 0; c < basis[d].size(); ++c) {
                const Entry& e = basis[d][c];
                int qdeg = d - e.pdeg;
                for (int s = 0; s <= k; ++s) {
                    int t = k - s;
                    if (s > e.pdeg || t > qdeg) continue;
                    F2Vector va = a.apply_sq(s, e.pdeg, unit_vector(a.dim(e.pdeg), e.pidx));
                    F2Vector vb = b.apply_sq(t, qdeg, unit_vector(b.dim(qdeg), e.qidx));
                    for (int ip = 0; ip < int(va.size()); ++ip) {
                        if (!va.get(static_cast<std::size_t>(ip))) continue;
                        for (int iq = 0; iq < int(vb.size()); ++iq)
                            if (vb.get(static_cast<std::size_t>(iq))) {
                                std::size_t row = position(d + k, e.pdeg + s, ip, iq);
                                mat.set(row, c, !mat.get(row, c));
                            }
                    }
                }
            }
            out.set_sq(k, d, std::move(mat));
        }

    if (a.has_u() && b.has_u()) {
        out.init_u();
        for (int d = 0; d + 1 <= n_max; ++d) {
            F2Matrix mat(static_cast<std::size_t>(dims[d + 1]), static_cast<std::size_t>(dims[d]));
            for (std::size_t c = 0; c < basis[d].size(); ++c) {
                const Entry& e = basis[d][c];
                int qdeg = d - e.pdeg;
                if (e.pdeg + 1 <= n_max) {
                    F2Vector va = a.u(e.pdeg).apply(unit_vector(a.dim(e.pdeg), e.pidx));
                    for (int ip = 0; ip < int(va.size()); ++ip)
                        if (va.get(static_cast<std::size_t>(ip))) {
                            std::size_t row = position(d + 1, e.pdeg + 1, ip, e.qidx);
                            mat.set(row, c, !mat.get(row, c));
                        }
                }
                if (qdeg + 1 <= n_max) {
                    F2Vector vb = b.u(qdeg).apply(unit_vector(b.dim(qdeg), e.qidx));
                    for (int iq = 0; iq < int(vb.size()); ++iq)
                        if (vb.get(static_cast<std::size_t>(iq))) {
                            std::size_t row = position(d + 1, e.pdeg, e.pidx, iq);
                            mat.set(row, c, !mat.get(row, c));
                        }
                }
            }
            out.set_u(d, std::move(mat));
        }
    }
    return out;
}

std::vector<std::string> check_adem(const TruncatedUnstableModule& m) {
    std::vector<std::string> out;
    int n_max = m.max_degree();
    for (int b = 1; b <= n_max; ++b)
        for (int a = 1; a < 2 * b; ++a)
            for (int n = 0; n + a + b <= n_max; ++n) {
                F2Matrix lhs = m.sq(a, n + b).multiply(m.sq(b, n));
                F2Matrix rhs(static_cast<std::size_t>(m.dim(n + a + b)), static_cast<std::size_t>(m.dim(n)));
                for (int c = 0; 2 * c <= a; ++c) {
                    if (!binomial_odd(b - c - 1, a - 2 * c)) continue;
                    F2Matrix term = c == 0 ? m.sq(a + b, n) : m.sq(a + b - c, n + c).multiply(m.sq(c, n));
                    rhs = rhs.plus(term);
                }
                if (lhs != rhs)
                    out.push_back("Sq^" + std::to_string(a) + " Sq^" + std::to_string(b) +
                                  " at degree " + std::to_string(n));
            }
    return out;
}

std::vector<std::string> check_instability(const TruncatedUnstableModule& m) {
    std::vector<std::string> out;
    for (int n = 0; n <= m.max_degree(); ++n)
        for (int i = n + 1; n + i <= m.max_degree(); ++i)
            if (!m.sq(i, n).is_zero())
                out.push_back("Sq^" + std::to_string(i) + " nonzero on degree " + std::to_string(n));
    return out;
}

std::vector<std::string> check_reduced(const TruncatedUnstableModule& m, int max_deg) {
    if (2 * max_deg > m.max_degree())
        throw std::invalid_argument("check_reduced: 2 * max_deg exceeds the truncation");
    std::vector<std::string> out;
    for (int n = 1; n <= max_deg; ++n)
        if (int(rank(m.sq(n, n))) != m.dim(n))
            out.push_back("Sq_0 not injective on degree " + std::to_string(n));
    return out;
}

std::vector<std::string> check_u_compat(const TruncatedUnstableModule& m) {
    if (!m.has_u()) throw std::invalid_argument("check_u_compat: input carries no u-action");
    std::vector<std::string> out;
    int n_max = m.max_degree();
    for (int n = 0; n + 2 <= n_max; ++n)
        for (int i = 1; n + i + 1 <= n_max; ++i) {
            F2Matrix lhs = m.sq(i, n + 1).multiply(m.u(n));
            F2Matrix rhs = m.u(n + i).multiply(m.sq(i, n));
            F2Matrix square_term =
                i == 1 ? m.u(n + 1).multiply(m.u(n))
                       : m.u(n + i).multiply(m.u(n + i - 1)).multiply(m.sq(i - 1, n));
            rhs = rhs.plus(square_term);
            if (lhs != rhs)
                out.push_back("Sq^" + std::to_string(i) + "(u x) at degree " + std::to_string(n));
        }
    return out;
}

std::vector<long long> module_series(const TruncatedUnstableModule& m) { return m.dims_as_int64(); }

TruncatedUnstableModule sylow_p_module(int max_degree) {
    TruncatedUnstableModule p = cohomology_elementary_abelian(1, max_degree);
    F2Vector form(1);
    form.set(0, true);
    return with_linear_u(p, 1, form);
}

TruncatedUnstableModule sylow_symmetric_module(int n, int max_degree) {
    if (n < 0) throw std::invalid_argument("sylow_symmetric_module: n must be >= 0");
    std::vector<TruncatedUnstableModule> factors;
    for (int bit = 63; bit >= 0; --bit) {
        if (!(n & (1ll << bit))) continue;
        if (bit == 0) {
            TruncatedUnstableModule trivial(max_degree, [&] {
                std::vector<int> dims(static_cast<std::size_t>(max_degree) + 1, 0);
                dims[0] = 1;
                return dims;
            }());
            trivial.init_u();
            factors.push_back(std::move(trivial));
            continue;
        }
        TruncatedUnstableModule stage = sylow_p_module(max_degree);
        for (int k = 2; k <= bit; ++k) stage = quadratic_p_decorated(stage);
        factors.push_back(std::move(stage));
    }
    if (factors.empty()) {
        TruncatedUnstableModule trivial(max_degree, [&] {
            std::vector<int> dims(static_cast<std::size_t>(max_degree) + 1, 0);
            dims[0] = 1;
            return dims;
        }());
        trivial.init_u();
        return trivial;
    }
    TruncatedUnstableModule out = std::move(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
    return out;
}

}  // namespace workbench
