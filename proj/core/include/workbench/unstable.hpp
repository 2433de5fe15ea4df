#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/f2.hpp"

namespace workbench {

/// Finitely truncated unstable module over the mod-2 Steenrod algebra.
/// Degrees run 0..max_degree; sq(i, n) is the matrix of Sq^i from degree n
/// to degree n+i (stored whenever n+i <= max_degree); u_mult, when present,
/// is multiplication by the distinguished degree-1 class.
class TruncatedUnstableModule {
public:
    TruncatedUnstableModule() = default;
    TruncatedUnstableModule(int max_degree, std::vector<int> dims);

    int max_degree() const { return max_degree_; }
    int dim(int degree) const { return degree >= 0 && degree <= max_degree_ ? dims_[degree] : 0; }
    const std::vector<int>& dims() const { return dims_; }

    const F2Matrix& sq(int i, int n) const;
    void set_sq(int i, int n, F2Matrix m);
    /// Image of a degree-n vector under Sq^i (identity for i = 0).
    F2Vector apply_sq(int i, int n, const F2Vector& v) const;

    bool has_u() const { return u_mult_.has_value(); }
    const F2Matrix& u(int n) const;
    void set_u(int n, F2Matrix m);
    void init_u();
    void drop_u() { u_mult_.reset(); }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int degree, int index) const { return labels_[degree][index]; }
    void set_labels(std::vector<std::vector<std::string>> labels) { labels_ = std::move(labels); }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    std::vector<long long> dims_as_int64() const { return std::vector<long long>(dims_.begin(), dims_.end()); }

private:
    int max_degree_ = -1;
    std::vector<int> dims_;
    std::vector<std::vector<F2Matrix>> sq_;       // sq_[i][n], 1 <= i, n + i <= max_degree
    std::optional<std::vector<F2Matrix>> u_mult_;  // [n]: degree n -> n + 1
    std::vector<std::vector<std::string>> labels_;
};

/// Degree-zero map of modules, one matrix per degree.
struct ModuleMap {
    const TruncatedUnstableModule* domain = nullptr;
    const TruncatedUnstableModule* codomain = nullptr;
    std::vector<F2Matrix> maps;  // maps[n]: domain degree n -> codomain degree n

    /// Degrees where the map fails to commute with some Sq^i (empty = ok).
    std::vector<std::string> commutation_violations() const;
};

/// Exponent vectors of the degree-n monomials in `rank` variables,
/// lexicographic with the first variable dominant.
std::vector<std::vector<int>> monomials_of_degree(int rank, int degree);

/// H*((Z/2)^d; F_2) = F_2[u_1..u_d] truncated at max_degree, monomial basis,
/// Steenrod squares from the Cartan formula.  Labels carry monomial names.
TruncatedUnstableModule cohomology_elementary_abelian(int d, int max_degree);

/// Attach multiplication by the degree-1 class with the given coordinates to
/// a polynomial module produced by cohomology_elementary_abelian.
TruncatedUnstableModule with_linear_u(const TruncatedUnstableModule& poly, int rank,
                                      const F2Vector& linear_form);

/// Map H*((Z/2)^{d'}) -> H*((Z/2)^d) induced by the group map f: (Z/2)^d -> (Z/2)^{d'}
/// (matrix d' x d); substitutes linear forms for the generators.
ModuleMap restriction_map(const F2Matrix& f, const TruncatedUnstableModule& domain,
                          const TruncatedUnstableModule& codomain);
/// The per-degree matrices of the same substitution, without module plumbing.
std::vector<F2Matrix> restriction_matrices(const F2Matrix& f, int max_degree);

/// Frobenius double: (Phi M)^{2n} = M^n, Sq^{2i} Phi x = Phi Sq^i x.
TruncatedUnstableModule phi(const TruncatedUnstableModule& m);

/// Singer functor: the free F_2[u]-module on St_1(basis of M) inside
/// F_2[u] (x) M; carries the free u-action.
TruncatedUnstableModule r1(const TruncatedUnstableModule& m);

/// Coordinates of St_1 x = sum u^{|x|-i} (x) Sq^i x inside F_2[u] (x) M at
/// degree 2|x|, blocks ordered by ascending u-power.
F2Vector st1_coordinates(const TruncatedUnstableModule& m, int degree, int index);

/// Invariants of the tensor square under the swap, on the basis
/// {x (x) y + y (x) x : x < y} then {x (x) x}; inherits u = e(x)1 + 1(x)e.
TruncatedUnstableModule sym2_invariants(const TruncatedUnstableModule& m);

/// Fiber product of (M (x) M)^{S_2} -> Phi M <- R_1 M, computed degreewise as
/// the kernel of the difference map; Sq acts componentwise.
TruncatedUnstableModule quadratic(const TruncatedUnstableModule& m);

/// Same fiber product for a module with u-action; the result's u acts by
/// e(x)1 + 1(x)e on the invariants component and by zero on the R_1 component.
TruncatedUnstableModule quadratic_p_decorated(const TruncatedUnstableModule& m);

/// Parts of the fiber product kept for cross-checks: component modules, the
/// structure maps nu and rho, and the kernel embedding per degree.
struct QuadraticParts {
    TruncatedUnstableModule invariants;
    TruncatedUnstableModule r1_part;
    TruncatedUnstableModule phi_part;
    std::vector<F2Matrix> nu;     // invariants^d -> phi^d
    std::vector<F2Matrix> rho;    // r1^d -> phi^d
    std::vector<F2Matrix> embed;  // module dims_d columns inside inv^d + r1^d
    TruncatedUnstableModule module;
};
QuadraticParts quadratic_parts(const TruncatedUnstableModule& m, bool decorated);

/// Kernel of the u-action with the induced squares; truncated one degree
/// below the input since the outgoing u map is needed.
TruncatedUnstableModule tau(const TruncatedUnstableModule& m);

/// Per-degree dimensions of the double cover's cohomology from the Gysin
/// sequence: dim coker(u)_n + dim ker(u)_n, degrees 0..max_degree-1.
std::vector<int> gysin_dims(const TruncatedUnstableModule& m);

/// Tensor product: Cartan squares; u = e_1 (x) 1 + 1 (x) e_2 when both
/// factors carry a u-action.
TruncatedUnstableModule tensor(const TruncatedUnstableModule& a, const TruncatedUnstableModule& b);

/// Violated Adem relations Sq^a Sq^b (a < 2b) as matrix identities.
std::vector<std::string> check_adem(const TruncatedUnstableModule& m);
/// Stored sq(i, n) with i > n that are not zero.
std::vector<std::string> check_instability(const TruncatedUnstableModule& m);
/// Degrees n <= max_deg where Sq_0 = Sq^n is not injective (needs 2*max_deg
/// within truncation).
std::vector<std::string> check_reduced(const TruncatedUnstableModule& m, int max_deg);
/// Failures of Sq^i(u x) = u Sq^i x + u^2 Sq^{i-1} x as matrix identities.
std::vector<std::string> check_u_compat(const TruncatedUnstableModule& m);

/// Poincare coefficients (= dims) of the module.
std::vector<long long> module_series(const TruncatedUnstableModule& m);

/// The P-decorated base of the Sylow tower: H*(Z/2) with u acting as itself.
TruncatedUnstableModule sylow_p_module(int max_degree);

/// Model of H* of the 2-Sylow of Sym(n) with its signature class:
/// iterated decorated quadratic construction over the binary digits of n,
/// tensored together.
TruncatedUnstableModule sylow_symmetric_module(int n, int max_degree);

}  // namespace workbench
