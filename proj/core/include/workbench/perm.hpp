#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "workbench/f2.hpp"

namespace workbench {

/// Raised when a construction would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation of {1..degree}, stored as 0-based images.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    /// One-based image list: images[i] is the image of point i+1.
    static Permutation from_one_based(const std::vector<int>& images);
    static Permutation identity(std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    /// Zero-based application.
    std::size_t apply(std::size_t point) const { return images_[point]; }

    /// (p * q)(x) = p(q(x)).
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const;
    /// Signature over GF(2): 1 for odd permutations.
    int sign() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::vector<int> one_based_images() const;
    std::string to_string() const;

    struct Hash {
        std::size_t operator()(const Permutation& p) const;
    };

private:
    std::vector<uint8_t> images_;
};

/// Finite permutation group with an eagerly enumerated, sorted element list.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultOrderCap = 1u << 15;

    FiniteGroup() = default;

    /// Closure of the generators under product; throws ResourceLimitError
    /// when the order would exceed `order_cap`.
    static FiniteGroup generate(std::size_t degree, std::vector<Permutation> generators,
                                std::size_t order_cap = kDefaultOrderCap);
    /// Wraps an element set that is already closed; picks a small generating
    /// set greedily over the canonical element order.
    static FiniteGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const;
    bool is_abelian() const;
    std::vector<Permutation> involutions() const;
    std::vector<Permutation> center() const;

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;  // sorted
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Elementary abelian 2-subgroup in canonical form: sorted elements plus the
/// greedy basis extracted from that order.
struct ElementaryAbelianSubgroup {
    GroupPtr parent;
    std::size_t rank = 0;
    std::vector<Permutation> basis;     // commuting involutions
    std::vector<Permutation> elements;  // sorted, size 2^rank

    /// Coordinates of a subgroup element with respect to `basis`.
    F2Vector coordinates(const Permutation& p) const;
    bool contains(const Permutation& p) const;
    bool operator==(const ElementaryAbelianSubgroup& o) const { return elements == o.elements; }
    bool operator<(const ElementaryAbelianSubgroup& o) const { return elements < o.elements; }
};

/// nu2 = 2-adic valuation of n!, alpha = number of 1 bits of n; nu2 = n - alpha.
struct Nu2Alpha {
    unsigned long long nu2 = 0;
    unsigned long long alpha = 0;
};
Nu2Alpha nu2_factorial(unsigned long long n);

/// The wreath recursion's 2-Sylow of the symmetric group on n letters,
/// with the block numbering (i,k) -> k + (i-1) * half.
FiniteGroup sylow_symmetric(std::size_t n, std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Kernel of the signature on sylow_symmetric(n); trivial for n < 4.
FiniteGroup sylow_alternating(std::size_t n, std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Wreath product with the swap: group on 2*degree(g) points of order 2*|g|^2.
FiniteGroup wreath_with_z2(const FiniteGroup& g, std::size_t order_cap = FiniteGroup::kDefaultOrderCap);

/// Dihedral group of order two_n.  Acts on n points for n >= 3; the faithful
/// actions for n = 1, 2 need 2 resp. 4 points.
FiniteGroup dihedral_group(std::size_t two_n);

/// Full symmetric group on n points.
FiniteGroup symmetric_group(std::size_t n, std::size_t order_cap = FiniteGroup::kDefaultOrderCap);
/// Full alternating group on n points.
FiniteGroup alternating_group(std::size_t n, std::size_t order_cap = FiniteGroup::kDefaultOrderCap);
/// Cyclic group generated by an n-cycle.
FiniteGroup cyclic_group(std::size_t n);

/// Signed permutations on `letters` letters embed into Sym(2*letters):
/// point l is letter l+1, point l+letters is its negative.
/// `images` is one-based and signed: images[l] = +/-(target letter).
Permutation signed_permutation(std::size_t letters, const std::vector<int>& images);

/// The 2-Sylow of W(H4) realized by explicit signed-permutation generators
/// on 4 letters (8 points); order 64.
FiniteGroup h4_sylow();

/// Quaternion group of order 8 as left multiplications on the quaternion
/// basis, a signed-permutation group on 4 letters.
FiniteGroup quaternion_group();

/// Letter permutation underlying a signed permutation on `letters` letters.
Permutation letter_image(const Permutation& p, std::size_t letters);

/// nu2[(2n)!] - n - 2 nu2[n!]; vanishes because alpha(2n) = alpha(n).
long long wreath_index_valuation(unsigned long long n);

/// Explicit isomorphism check for m in {2, 3}:
/// the Sylow of Sym(2^m) against the signed-permutation model on 2^(m-1)
/// letters, with signature compatibility and the induced kernel bijection.
bool alpha_iso_check(int m);

/// Element-set equality of h4_sylow() with the image of the alternating
/// Sylow on 8 points under the explicit m = 3 isomorphism (both equal the
/// "even letter part" model inside the signed permutations on 4 letters).
bool h4_matches_alternating_model();

struct EnumerationCaps {
    std::size_t max_subgroups = 5000;
};

/// All elementary abelian 2-subgroups of rank <= max_rank, canonical and
/// deduplicated, ordered by (rank, element list).  Includes the trivial one.
std::vector<ElementaryAbelianSubgroup> elementary_abelian_subgroups(
    const GroupPtr& g, std::size_t max_rank, const EnumerationCaps& caps = {});

struct ConjugationMorphism {
    F2Matrix matrix;      // rank(dst) x rank(src)
    Permutation witness;  // some g realizing the map
};

/// All distinct linear maps src -> dst of the form x -> g x g^-1 with
/// g src g^-1 contained in dst, in the chosen bases, sorted by matrix.
std::vector<ConjugationMorphism> conjugation_morphisms(const FiniteGroup& g,
                                                       const ElementaryAbelianSubgroup& src,
                                                       const ElementaryAbelianSubgroup& dst);

}  // namespace workbench
