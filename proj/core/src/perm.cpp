#include "workbench/perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace workbench {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    if (degree > 256) throw std::invalid_argument("Permutation: degree above 256 unsupported");
    for (std::size_t i = 0; i < degree; ++i) images_[i] = uint8_t(i);
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    if (images.size() > 256) throw std::invalid_argument("Permutation: degree above 256 unsupported");
    Permutation p;
    p.images_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v < 1 || std::size_t(v) > images.size() || seen[v - 1])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[v - 1] = true;
        p.images_[i] = uint8_t(v - 1);
    }
    return p;
}

Permutation Permutation::identity(std::size_t degree) { return Permutation(degree); }

Permutation Permutation::operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[q.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = uint8_t(i);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::sign() const {
    std::vector<bool> seen(degree(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return int((degree() - cycles) & 1);
}

std::vector<int> Permutation::one_based_images() const {
    std::vector<int> out(degree());
    for (std::size_t i = 0; i < degree(); ++i) out[i] = int(images_[i]) + 1;
    return out;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(images_[i]) + 1);
    }
    return s + "]";
}

std::size_t Permutation::Hash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < p.degree(); ++i) {
        h ^= p.images_[i];
        h *= 1099511628211ull;
    }
    return h;
}

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                                  std::size_t order_cap) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("FiniteGroup: generator degree mismatch");

    std::unordered_set<Permutation, Permutation::Hash> seen;
    std::vector<Permutation> frontier;
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Permutation current = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : generators) {
            Permutation next = g * current;
            if (seen.insert(next).second) {
                if (seen.size() > order_cap)
                    throw ResourceLimitError("group order cap exceeded (cap " + std::to_string(order_cap) + ")");
                frontier.push_back(std::move(next));
            }
        }
    }

    FiniteGroup out;
    out.degree_ = degree;
    out.generators_ = std::move(generators);
    out.elements_.assign(seen.begin(), seen.end());
    std::sort(out.elements_.begin(), out.elements_.end());
    return out;
}

FiniteGroup FiniteGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::vector<Permutation> gens;
    std::unordered_set<Permutation, Permutation::Hash> closure;
    closure.insert(Permutation::identity(degree));
    for (const auto& e : elements) {
        if (closure.count(e)) continue;
        gens.push_back(e);
        // Regenerate the closure with the enlarged generating set.
        std::vector<Permutation> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            Permutation current = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& g : gens) {
                Permutation next = g * current;
                if (closure.insert(next).second) frontier.push_back(std::move(next));
            }
        }
        if (closure.size() == elements.size()) break;
    }

    FiniteGroup out;
    out.degree_ = degree;
    out.generators_ = std::move(gens);
    out.elements_ = std::move(elements);
    if (closure.size() != out.elements_.size())
        throw std::invalid_argument("FiniteGroup::from_elements: set is not closed under products");
    for (const auto& e : out.elements_)
        if (!closure.count(e))
            throw std::invalid_argument("FiniteGroup::from_elements: set is not closed under products");
    return out;
}

bool FiniteGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool FiniteGroup::is_abelian() const {
    for (const auto& a : generators_)
        for (const auto& b : generators_)
            if (a * b != b * a) return false;
    return true;
}

std::vector<Permutation> FiniteGroup::involutions() const {
    std::vector<Permutation> out;
    for (const auto& e : elements_)
        if (!e.is_identity() && (e * e).is_identity()) out.push_back(e);
    return out;
}

std::vector<Permutation> FiniteGroup::center() const {
    std::vector<Permutation> out;
    for (const auto& e : elements_) {
        bool central = true;
        for (const auto& g : generators_)
            if (e * g != g * e) {
                central = false;
                break;
            }
        if (central) out.push_back(e);
    }
    return out;
}

F2Vector ElementaryAbelianSubgroup::coordinates(const Permutation& p) const {
    // rank <= 6 so the 2^rank products are cheap to scan.
    for (std::size_t mask = 0; mask < (std::size_t(1) << rank); ++mask) {
        Permutation prod = Permutation::identity(p.degree());
        for (std::size_t i = 0; i < rank; ++i)
            if (mask & (std::size_t(1) << i)) prod = prod * basis[i];
        if (prod == p) {
            F2Vector v(rank);
            for (std::size_t i = 0; i < rank; ++i)
                if (mask & (std::size_t(1) << i)) v.set(i, true);
            return v;
        }
    }
    throw std::invalid_argument("ElementaryAbelianSubgroup::coordinates: not a member");
}

bool ElementaryAbelianSubgroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

Nu2Alpha nu2_factorial(unsigned long long n) {
    Nu2Alpha out;
    unsigned long long v = n;
    while (v) {
        out.alpha += v & 1;
        v >>= 1;
    }
    out.nu2 = n - out.alpha;
    return out;
}

namespace {

// Embed a permutation of a block of size `width` at offset `offset` inside
// Sym(total).
Permutation embed_block(const Permutation& p, std::size_t offset, std::size_t total) {
    std::vector<int> images(total);
    for (std::size_t i = 0; i < total; ++i) images[i] = int(i) + 1;
    for (std::size_t i = 0; i < p.degree(); ++i) images[offset + i] = int(offset + p.apply(i)) + 1;
    return Permutation::from_one_based(images);
}

Permutation block_swap(std::size_t half) {
    std::vector<int> images(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        images[i] = int(i + half) + 1;
        images[i + half] = int(i) + 1;
    }
    return Permutation::from_one_based(images);
}

std::vector<Permutation> sylow_power_of_two_generators(std::size_t m) {
    // Generators of the Sylow of Sym(2^m) under the recursive block numbering.
    if (m == 0) return {};
    std::vector<Permutation> prev = sylow_power_of_two_generators(m - 1);
    std::size_t half = std::size_t(1) << (m - 1);
    std::vector<Permutation> out;
    out.push_back(block_swap(half));
    for (const auto& g : prev) out.push_back(embed_block(g, 0, 2 * half));
    return out;
}

}  // namespace

FiniteGroup sylow_symmetric(std::size_t n, std::size_t order_cap) {
    std::vector<Permutation> gens;
    // Blocks in decreasing size, largest block on the lowest points.
    std::size_t offset = 0;
    for (int bit = 63; bit >= 0; --bit) {
        std::size_t width = std::size_t(1) << bit;
        if (!(n & width)) continue;
        for (const auto& g : sylow_power_of_two_generators(std::size_t(bit)))
            gens.push_back(embed_block(g, offset, n));
        offset += width;
    }
    return FiniteGroup::generate(n, std::move(gens), order_cap);
}

FiniteGroup sylow_alternating(std::size_t n, std::size_t order_cap) {
    FiniteGroup s = sylow_symmetric(n, order_cap);
    std::vector<Permutation> even;
    for (const auto& e : s.elements())
        if (e.sign() == 0) even.push_back(e);
    return FiniteGroup::from_elements(n, std::move(even));
}

FiniteGroup wreath_with_z2(const FiniteGroup& g, std::size_t order_cap) {
    std::size_t d = g.degree();
    std::vector<Permutation> gens;
    gens.push_back(block_swap(d));
    for (const auto& p : g.generators()) gens.push_back(embed_block(p, 0, 2 * d));
    FiniteGroup out = FiniteGroup::generate(2 * d, std::move(gens), order_cap);
    if (out.order() != 2 * g.order() * g.order())
        throw std::logic_error("wreath_with_z2: unexpected order");
    return out;
}

FiniteGroup dihedral_group(std::size_t two_n) {
    if (two_n == 0 || two_n % 2 != 0) throw std::invalid_argument("dihedral_group: order must be even and positive");
    std::size_t n = two_n / 2;
    if (n == 1) {
        return FiniteGroup::generate(2, {Permutation::from_one_based({2, 1})});
    }
    if (n == 2) {
        // Faithful Klein action: rotation swaps the two vertices, the
        // reflection swaps the two edge midpoints.
        return FiniteGroup::generate(
            4, {Permutation::from_one_based({2, 1, 3, 4}), Permutation::from_one_based({1, 2, 4, 3})});
    }
    std::vector<int> rot(n), refl(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = int((i + 1) % n) + 1;
        refl[i] = int((n - i) % n) + 1;
    }
    return FiniteGroup::generate(n, {Permutation::from_one_based(rot), Permutation::from_one_based(refl)});
}

FiniteGroup symmetric_group(std::size_t n, std::size_t order_cap) {
    if (n <= 1) return FiniteGroup::generate(std::max<std::size_t>(n, 1), {});
    std::vector<Permutation> gens;
    std::vector<int> cycle(n), transposition(n);
    for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = int((i + 1) % n) + 1;
        transposition[i] = int(i) + 1;
    }
    std::swap(transposition[0], transposition[1]);
    gens.push_back(Permutation::from_one_based(transposition));
    gens.push_back(Permutation::from_one_based(cycle));
    return FiniteGroup::generate(n, std::move(gens), order_cap);
}

FiniteGroup alternating_group(std::size_t n, std::size_t order_cap) {
    if (n <= 2) return FiniteGroup::generate(std::max<std::size_t>(n, 1), {});
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) {
        std::vector<int> images(n);
        for (std::size_t j = 0; j < n; ++j) images[j] = int(j) + 1;
        images[0] = 2;
        images[1] = int(i) + 1;
        images[i] = 1;
        gens.push_back(Permutation::from_one_based(images));
    }
    return FiniteGroup::generate(n, std::move(gens), order_cap);
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n <= 1) return FiniteGroup::generate(std::max<std::size_t>(n, 1), {});
    std::vector<int> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = int((i + 1) % n) + 1;
    return FiniteGroup::generate(n, {Permutation::from_one_based(cycle)});
}

Permutation signed_permutation(std::size_t letters, const std::vector<int>& images) {
    if (images.size() != letters) throw std::invalid_argument("signed_permutation: bad image count");
    std::vector<int> point_images(2 * letters);
    for (std::size_t l = 0; l < letters; ++l) {
        int target = images[l];
        std::size_t letter = std::size_t(target > 0 ? target : -target);
        if (letter == 0 || letter > letters) throw std::invalid_argument("signed_permutation: image out of range");
        bool negate = target < 0;
        point_images[l] = int(letter + (negate ? letters : 0));
        point_images[l + letters] = int(letter + (negate ? 0 : letters));
    }
    return Permutation::from_one_based(point_images);
}

FiniteGroup h4_sylow() {
    // Left/right quaternion multiplications and conjugation, written on the
    // basis (1, i, j, k) as signed permutations on 4 letters.
    std::vector<Permutation> gens = {
        signed_permutation(4, {2, -1, 4, -3}),   // x -> i x
        signed_permutation(4, {3, -4, -1, 2}),   // x -> j x
        signed_permutation(4, {-2, 1, 4, -3}),   // x -> x * conj(i)
        signed_permutation(4, {-3, -4, 1, 2}),   // x -> x * conj(j)
        signed_permutation(4, {1, -2, -3, -4}),  // x -> conj(x)
    };
    return FiniteGroup::generate(8, std::move(gens));
}

FiniteGroup quaternion_group() {
    return FiniteGroup::generate(8, {signed_permutation(4, {2, -1, 4, -3}),
                                     signed_permutation(4, {3, -4, -1, 2})});
}

Permutation letter_image(const Permutation& p, std::size_t letters) {
    if (p.degree() != 2 * letters) throw std::invalid_argument("letter_image: degree mismatch");
    std::vector<int> images(letters);
    for (std::size_t l = 0; l < letters; ++l) {
        std::size_t target = p.apply(l);
        images[l] = int(target % letters) + 1;
    }
    return Permutation::from_one_based(images);
}

// 2-valuation of [Sym(2n) : Sym(n) x| {+-1}^n], the index of the
// hyperoctahedral subgroup of order 2^n n!.
long long wreath_index_valuation(unsigned long long n) {
    long long v2n = (long long)nu2_factorial(2 * n).nu2;
    long long vn = (long long)nu2_factorial(n).nu2;
    return v2n - (long long)n - vn;
}

namespace {

// Decomposition data of the explicit Sylow isomorphism: the Sylow of Sym(4)
// is the span of t = (1 2) over the Klein group, and the two non-central
// Klein basis elements are swapped by t.
struct KleinCoordinates {
    int t = 0;  // signature
    int b = 0;  // coefficient of (1 3)(2 4)
    int c = 0;  // coefficient of (1 4)(2 3)
};

KleinCoordinates decompose_sylow4(const Permutation& g4) {
    static const Permutation t = Permutation::from_one_based({2, 1, 3, 4});
    static const Permutation x1 = Permutation::from_one_based({3, 4, 1, 2});
    static const Permutation x2 = Permutation::from_one_based({4, 3, 2, 1});
    KleinCoordinates out;
    out.t = g4.sign();
    Permutation y = out.t ? t * g4 : g4;
    if (y.is_identity()) {
        out.b = 0, out.c = 0;
    } else if (y == x1) {
        out.b = 1, out.c = 0;
    } else if (y == x2) {
        out.b = 0, out.c = 1;
    } else if (y == x1 * x2) {
        out.b = 1, out.c = 1;
    } else {
        throw std::logic_error("decompose_sylow4: element not in the Sylow of Sym(4)");
    }
    return out;
}

// Target generators of the signed-permutation model on two letters.
struct SignedModel2 {
    Permutation swap = signed_permutation(2, {2, 1});
    Permutation f1 = signed_permutation(2, {-1, 2});
    Permutation f2 = signed_permutation(2, {1, -2});
};

// Target generators of the signed-permutation model on four letters.
struct SignedModel4 {
    Permutation block_swap = signed_permutation(4, {3, 4, 1, 2});
    Permutation p1 = signed_permutation(4, {2, 1, 3, 4});
    Permutation p2 = signed_permutation(4, {1, 2, 4, 3});
    Permutation f1 = signed_permutation(4, {-1, 2, 3, 4});
    Permutation f2 = signed_permutation(4, {1, -2, 3, 4});
    Permutation f3 = signed_permutation(4, {1, 2, -3, 4});
    Permutation f4 = signed_permutation(4, {1, 2, 3, -4});
};

Permutation power(const Permutation& p, int e) { return e ? p : Permutation::identity(p.degree()); }

Permutation alpha2_image(const Permutation& g4, const SignedModel2& model) {
    KleinCoordinates k = decompose_sylow4(g4);
    return power(model.swap, k.t) * power(model.f1, k.b) * power(model.f2, k.c);
}

Permutation alpha3_image(const Permutation& g8, const SignedModel4& model) {
    static const Permutation sigma = block_swap(4);
    int a = g8.apply(0) >= 4 ? 1 : 0;
    Permutation h = a ? sigma * g8 : g8;
    std::vector<int> img1(4), img2(4);
    for (std::size_t i = 0; i < 4; ++i) {
        img1[i] = int(h.apply(i)) + 1;
        img2[i] = int(h.apply(i + 4)) - 4 + 1;
    }
    KleinCoordinates k1 = decompose_sylow4(Permutation::from_one_based(img1));
    KleinCoordinates k2 = decompose_sylow4(Permutation::from_one_based(img2));
    return power(model.block_swap, a) * power(model.p1, k1.t) * power(model.p2, k2.t) *
           power(model.f1, k1.b) * power(model.f2, k1.c) * power(model.f3, k2.b) *
           power(model.f4, k2.c);
}

bool verify_iso(const FiniteGroup& source, const FiniteGroup& target, std::size_t letters,
                const std::vector<Permutation>& images) {
    // Bijective: the image set has full size inside the target.
    std::set<Permutation> image_set(images.begin(), images.end());
    if (image_set.size() != source.order() || target.order() != source.order()) return false;
    for (const auto& im : images)
        if (!target.contains(im)) return false;

    // Homomorphism on all pairs.
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < source.order(); ++i) index[source.elements()[i]] = i;
    for (std::size_t i = 0; i < source.order(); ++i)
        for (std::size_t j = 0; j < source.order(); ++j) {
            Permutation prod = source.elements()[i] * source.elements()[j];
            if (images[index.at(prod)] != images[i] * images[j]) return false;
        }

    // Signature compatibility: sign of the source element equals the sign of
    // the underlying letter permutation of its image.
    for (std::size_t i = 0; i < source.order(); ++i)
        if (source.elements()[i].sign() != letter_image(images[i], letters).sign()) return false;

    // Induced kernel bijection: even source elements map exactly onto the
    // elements whose letter part is even.
    std::set<Permutation> even_images;
    std::size_t even_count = 0;
    for (std::size_t i = 0; i < source.order(); ++i)
        if (source.elements()[i].sign() == 0) {
            even_images.insert(images[i]);
            ++even_count;
        }
    if (even_images.size() != even_count) return false;
    for (const auto& e : target.elements()) {
        bool even_letters = letter_image(e, letters).sign() == 0;
        if (even_letters != (even_images.count(e) > 0)) return false;
    }
    return true;
}

FiniteGroup signed_model_group(std::size_t m) {
    if (m == 2) {
        SignedModel2 model;
        return FiniteGroup::generate(4, {model.swap, model.f1, model.f2});
    }
    SignedModel4 model;
    return FiniteGroup::generate(8, {model.block_swap, model.p1, model.p2, model.f1, model.f2,
                                     model.f3, model.f4});
}

}  // namespace

bool alpha_iso_check(int m) {
    if (m != 2 && m != 3) throw std::invalid_argument("alpha_iso_check: only m in {2, 3} is constructed");
    FiniteGroup source = sylow_symmetric(std::size_t(1) << m);
    FiniteGroup target = signed_model_group(std::size_t(m));
    std::vector<Permutation> images;
    images.reserve(source.order());
    if (m == 2) {
        SignedModel2 model;
        for (const auto& g : source.elements()) images.push_back(alpha2_image(g, model));
        return verify_iso(source, target, 2, images);
    }
    SignedModel4 model;
    for (const auto& g : source.elements()) images.push_back(alpha3_image(g, model));
    return verify_iso(source, target, 4, images);
}

bool h4_matches_alternating_model() {
    FiniteGroup h4 = h4_sylow();
    FiniteGroup alt = sylow_alternating(8);
    if (h4.order() != 64 || alt.order() != 64) return false;

    SignedModel4 model;
    std::set<Permutation> image_set;
    for (const auto& g : alt.elements()) image_set.insert(alpha3_image(g, model));
    if (image_set.size() != alt.order()) return false;

    std::set<Permutation> h4_set(h4.elements().begin(), h4.elements().end());
    return image_set == h4_set;
}

std::vector<ElementaryAbelianSubgroup> elementary_abelian_subgroups(const GroupPtr& g,
                                                                    std::size_t max_rank,
                                                                    const EnumerationCaps& caps) {
    std::vector<ElementaryAbelianSubgroup> out;

    auto make_subgroup = [&](const std::vector<Permutation>& elements) {
        ElementaryAbelianSubgroup s;
        s.parent = g;
        s.elements = elements;
        std::sort(s.elements.begin(), s.elements.end());
        // Greedy basis over the canonical order.
        std::set<Permutation> span;
        span.insert(Permutation::identity(g->degree()));
        for (const auto& e : s.elements) {
            if (e.is_identity() || span.count(e)) continue;
            std::set<Permutation> next = span;
            for (const auto& x : span) next.insert(x * e);
            span = std::move(next);
            s.basis.push_back(e);
        }
        s.rank = s.basis.size();
        return s;
    };

    ElementaryAbelianSubgroup trivial = make_subgroup({Permutation::identity(g->degree())});
    out.push_back(trivial);
    if (max_rank == 0) return out;

    std::vector<Permutation> invs = g->involutions();

    std::set<std::vector<Permutation>> seen;
    std::vector<std::vector<Permutation>> frontier;  // element lists, sorted
    for (const auto& x : invs) {
        std::vector<Permutation> elems = {Permutation::identity(g->degree()), x};
        std::sort(elems.begin(), elems.end());
        if (seen.insert(elems).second) frontier.push_back(elems);
    }

    std::size_t current_rank = 1;
    while (!frontier.empty()) {
        for (const auto& elems : frontier) {
            out.push_back(make_subgroup(elems));
            if (out.size() > caps.max_subgroups)
                throw ResourceLimitError("elementary abelian subgroup cap exceeded (cap " +
                                         std::to_string(caps.max_subgroups) + ")");
        }
        if (current_rank == max_rank) break;
        std::set<std::vector<Permutation>> next_seen;
        std::vector<std::vector<Permutation>> next_frontier;
        for (const auto& elems : frontier) {
            for (const auto& x : invs) {
                if (std::binary_search(elems.begin(), elems.end(), x)) continue;
                bool centralizes = true;
                for (const auto& e : elems)
                    if (e * x != x * e) {
                        centralizes = false;
                        break;
                    }
                if (!centralizes) continue;
                std::vector<Permutation> bigger = elems;
                for (const auto& e : elems) bigger.push_back(e * x);
                std::sort(bigger.begin(), bigger.end());
                if (next_seen.insert(bigger).second) next_frontier.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next_frontier);
        ++current_rank;
    }

    std::sort(out.begin(), out.end(), [](const ElementaryAbelianSubgroup& a, const ElementaryAbelianSubgroup& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.elements < b.elements;
    });
    return out;
}

std::vector<ConjugationMorphism> conjugation_morphisms(const FiniteGroup& g,
                                                       const ElementaryAbelianSubgroup& src,
                                                       const ElementaryAbelianSubgroup& dst) {
    std::map<F2Matrix, Permutation> by_matrix;
    for (const auto& conj : g.elements()) {
        Permutation inv = conj.inverse();
        bool maps_in = true;
        for (const auto& x : src.elements)
            if (!dst.contains(conj * x * inv)) {
                maps_in = false;
                break;
            }
        if (!maps_in) continue;
        F2Matrix m(dst.rank, src.rank);
        for (std::size_t i = 0; i < src.rank; ++i)
            m.set_column(i, dst.coordinates(conj * src.basis[i] * inv));
        by_matrix.emplace(std::move(m), conj);
    }
    std::vector<ConjugationMorphism> out;
    out.reserve(by_matrix.size());
    for (auto& [m, witness] : by_matrix) out.push_back({m, witness});
    return out;
}

}  // namespace workbench
