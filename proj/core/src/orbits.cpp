#include "annigraph/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace annigraph {

namespace {

constexpr std::int64_t kEnumerationCandidateCap = 4000000;

std::int64_t pow_i64(std::int64_t p, int e) {
    std::int64_t out = 1;
    for (int t = 0; t < e; ++t) out *= p;
    return out;
}

// One p-component of the group: moduli p^e_t in stored factor order.
struct PComponent {
    std::int64_t p = 0;
    std::vector<int> exps;                 // e_t >= 1
    std::vector<std::int64_t> mods;        // p^e_t
    std::vector<std::size_t> factor_pos;   // position of each factor in the parent group
    std::int64_t n = 1;
};

std::vector<PComponent> p_components(const FiniteAbelianGroup& g) {
    std::map<std::int64_t, PComponent> comps;
    for (std::size_t i = 0; i < g.moduli().size(); ++i) {
        std::int64_t n = g.moduli()[i];
        for (std::int64_t q = 2; q * q <= n; ++q) {
            if (n % q) continue;
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            auto& c = comps[q];
            c.p = q;
            c.exps.push_back(e);
            c.mods.push_back(pow_i64(q, e));
            c.factor_pos.push_back(i);
            c.n *= c.mods.back();
        }
        if (n > 1) {
            auto& c = comps[n];
            c.p = n;
            c.exps.push_back(1);
            c.mods.push_back(n);
            c.factor_pos.push_back(i);
            c.n *= n;
        }
    }
    std::vector<PComponent> out;
    out.reserve(comps.size());
    for (auto& [p, c] : comps) out.push_back(std::move(c));
    return out;
}

// Dense element arithmetic for one component: indices are mixed-radix over
// mods, and an n x n addition table makes automorphism application O(1).
struct ComponentArith {
    const PComponent& comp;
    std::vector<std::int64_t> stride;
    std::vector<std::int64_t> add;  // add[a * n + b]

    explicit ComponentArith(const PComponent& c) : comp(c) {
        stride.resize(c.mods.size());
        std::int64_t s = 1;
        for (std::size_t t = 0; t < c.mods.size(); ++t) {
            stride[t] = s;
            s *= c.mods[t];
        }
        add.resize(static_cast<std::size_t>(c.n) * static_cast<std::size_t>(c.n));
        for (std::int64_t a = 0; a < c.n; ++a)
            for (std::int64_t b = 0; b < c.n; ++b) {
                std::int64_t sum = 0, aa = a, bb = b;
                for (std::size_t t = 0; t < c.mods.size(); ++t) {
                    std::int64_t ca = aa % c.mods[t], cb = bb % c.mods[t];
                    aa /= c.mods[t];
                    bb /= c.mods[t];
                    sum += ((ca + cb) % c.mods[t]) * stride[t];
                }
                add[static_cast<std::size_t>(a * c.n + b)] = sum;
            }
    }

    std::int64_t coord(std::int64_t idx, std::size_t t) const {
        return (idx / stride[t]) % comp.mods[t];
    }

    std::int64_t order(std::int64_t idx) const {
        std::int64_t ord = 1;
        for (std::size_t t = 0; t < comp.mods.size(); ++t) {
            std::int64_t c = coord(idx, t);
            std::int64_t m = comp.mods[t];
            ord = std::lcm(ord, m / std::gcd(c, m));
        }
        return ord;
    }

    std::int64_t scale(std::int64_t k, std::int64_t idx) const {
        std::int64_t out = 0;
        for (std::size_t t = 0; t < comp.mods.size(); ++t)
            out += ((coord(idx, t) * k) % comp.mods[t]) * stride[t];
        return out;
    }
};

struct UnionFind {
    std::vector<std::int64_t> parent;
    explicit UnionFind(std::int64_t n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int64_t find(std::int64_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Determinant over F_p of the matrix whose column t holds the mod-p
// coordinates of the image of generator t.  A generator-image tuple defines
// a bijective endomorphism iff this determinant is nonzero: surjectivity of
// the induced map on H/pH lifts through H = Im + pH = Im + p^2 H = ...
bool images_bijective(const ComponentArith& ar, const std::vector<std::int64_t>& images) {
    const std::size_t r = ar.comp.mods.size();
    const std::int64_t p = ar.comp.p;
    std::vector<std::int64_t> m(r * r);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t s = 0; s < r; ++s)
            m[s * r + t] = ar.coord(images[t], s) % p;

    for (std::size_t col = 0; col < r; ++col) {
        std::size_t pivot = col;
        while (pivot < r && m[pivot * r + col] % p == 0) ++pivot;
        if (pivot == r) return false;
        if (pivot != col)
            for (std::size_t j = 0; j < r; ++j) std::swap(m[pivot * r + j], m[col * r + j]);
        // Inverse of the pivot via Fermat.
        std::int64_t inv = 1, base = m[col * r + col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t row = col + 1; row < r; ++row) {
            std::int64_t f = m[row * r + col] % p * inv % p;
            if (!f) continue;
            for (std::size_t j = col; j < r; ++j)
                m[row * r + j] = ((m[row * r + j] - f * m[col * r + j]) % p + p) % p;
        }
    }
    return true;
}

// Union x ~ phi(x) for the automorphism with the given generator images.
void apply_automorphism(const ComponentArith& ar, const std::vector<std::int64_t>& images,
                        UnionFind& uf, std::vector<std::int64_t>& img_scratch) {
    const std::int64_t n = ar.comp.n;
    img_scratch[0] = 0;
    for (std::int64_t idx = 1; idx < n; ++idx) {
        std::size_t t = 0;
        while (ar.coord(idx, t) == 0) ++t;
        std::int64_t prev = idx - ar.stride[t];
        img_scratch[static_cast<std::size_t>(idx)] =
            ar.add[static_cast<std::size_t>(img_scratch[static_cast<std::size_t>(prev)] * n +
                                            images[t])];
    }
    for (std::int64_t idx = 0; idx < n; ++idx)
        uf.unite(idx, img_scratch[static_cast<std::size_t>(idx)]);
}

std::vector<std::int64_t> classes_of(UnionFind& uf, std::int64_t n) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = uf.find(x);
    return out;
}

// Full enumerate-and-filter: every tuple of generator images with the exact
// element orders, kept when bijective.
std::vector<std::int64_t> component_orbits_enumerate(const ComponentArith& ar) {
    const std::size_t r = ar.comp.mods.size();
    std::vector<std::vector<std::int64_t>> candidates(r);
    for (std::size_t t = 0; t < r; ++t)
        for (std::int64_t x = 0; x < ar.comp.n; ++x)
            if (ar.order(x) == ar.comp.mods[t]) candidates[t].push_back(x);

    UnionFind uf(ar.comp.n);
    std::vector<std::int64_t> images(r), img_scratch(static_cast<std::size_t>(ar.comp.n));
    std::vector<std::size_t> pos(r, 0);
    // Odometer over the candidate tuples.
    for (;;) {
        for (std::size_t t = 0; t < r; ++t) images[t] = candidates[t][pos[t]];
        if (images_bijective(ar, images)) apply_automorphism(ar, images, uf, img_scratch);
        std::size_t t = 0;
        while (t < r && ++pos[t] == candidates[t].size()) {
            pos[t] = 0;
            ++t;
        }
        if (t == r) break;
    }
    return classes_of(uf, ar.comp.n);
}

// Height of x: the largest k with x in p^k H.  Heights are Aut-invariant, so
// the sequence (h(x), h(px), h(p^2 x), ...) separates orbits from above.
std::vector<std::vector<int>> height_sequences(const ComponentArith& ar) {
    const std::int64_t n = ar.comp.n;
    const std::int64_t p = ar.comp.p;
    int emax = *std::max_element(ar.comp.exps.begin(), ar.comp.exps.end());

    std::vector<std::vector<char>> in_pk(static_cast<std::size_t>(emax) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int k = 0; k <= emax; ++k) {
        std::int64_t pk = pow_i64(p, k);
        for (std::int64_t x = 0; x < n; ++x)
            in_pk[static_cast<std::size_t>(k)][static_cast<std::size_t>(ar.scale(pk, x))] = 1;
    }
    auto height = [&](std::int64_t x) {
        int h = 0;
        while (h + 1 <= emax && in_pk[static_cast<std::size_t>(h + 1)][static_cast<std::size_t>(x)])
            ++h;
        return h;
    };
    std::vector<std::vector<int>> seqs(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t cur = x;
        while (cur != 0) {
            seqs[static_cast<std::size_t>(x)].push_back(height(cur));
            cur = ar.scale(p, cur);
        }
    }
    return seqs;
}

std::vector<std::int64_t> component_orbits_closure(const ComponentArith& ar) {
    const std::size_t r = ar.comp.mods.size();
    const std::int64_t p = ar.comp.p;
    UnionFind uf(ar.comp.n);
    std::vector<std::int64_t> img_scratch(static_cast<std::size_t>(ar.comp.n));

    std::vector<std::int64_t> identity(r);
    for (std::size_t t = 0; t < r; ++t) identity[t] = ar.stride[t];  // index of e_t

    auto push = [&](std::vector<std::int64_t> images) {
        if (!images_bijective(ar, images))
            throw Error(ErrorKind::InvalidGroup, "elementary map failed the bijectivity check");
        apply_automorphism(ar, images, uf, img_scratch);
    };

    // Unit scalings e_t -> u e_t.
    for (std::size_t t = 0; t < r; ++t)
        for (std::int64_t u = 2; u < ar.comp.mods[t]; ++u) {
            if (u % p == 0) continue;
            auto images = identity;
            images[t] = ar.scale(u, identity[t]);
            push(std::move(images));
        }
    // Transvections e_t -> e_t + c e_s (c e_s of order dividing mods[t]).
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t s = 0; s < r; ++s) {
            if (s == t) continue;
            for (std::int64_t c = 1; c < ar.comp.mods[s]; ++c) {
                if ((c * ar.comp.mods[t]) % ar.comp.mods[s] != 0) continue;
                auto images = identity;
                images[t] = ar.add[static_cast<std::size_t>(identity[t] * ar.comp.n +
                                                            ar.scale(c, identity[s]))];
                push(std::move(images));
            }
        }
    // Swaps of equal-exponent factors.
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t s = t + 1; s < r; ++s) {
            if (ar.comp.exps[t] != ar.comp.exps[s]) continue;
            auto images = identity;
            std::swap(images[t], images[s]);
            push(std::move(images));
        }

    std::vector<std::int64_t> roots = classes_of(uf, ar.comp.n);

    // The closure partition refines the orbit partition, the orbit partition
    // refines the height-sequence partition; coincidence pins the orbits.
    auto seqs = height_sequences(ar);
    std::map<std::vector<int>, std::int64_t> seq_root;
    for (std::int64_t x = 0; x < ar.comp.n; ++x) {
        auto [it, fresh] = seq_root.try_emplace(seqs[static_cast<std::size_t>(x)],
                                                roots[static_cast<std::size_t>(x)]);
        if (it->second != roots[static_cast<std::size_t>(x)])
            throw Error(ErrorKind::NotApplicable,
                        "orbit closure did not reach the height-sequence partition");
    }
    std::map<std::int64_t, std::vector<int>> root_seq;
    for (std::int64_t x = 0; x < ar.comp.n; ++x) {
        auto [it, fresh] = root_seq.try_emplace(roots[static_cast<std::size_t>(x)],
                                                seqs[static_cast<std::size_t>(x)]);
        if (it->second != seqs[static_cast<std::size_t>(x)])
            throw Error(ErrorKind::NotApplicable,
                        "closure merged two distinct height sequences");
    }
    return roots;
}

std::vector<std::int64_t> component_orbits(const PComponent& comp, OrbitMethod method) {
    ComponentArith ar(comp);
    if (method == OrbitMethod::Auto) {
        double cand = 1.0;
        for (std::size_t t = 0; t < comp.mods.size(); ++t) {
            std::int64_t count = 0;
            for (std::int64_t x = 0; x < comp.n; ++x)
                if (ar.order(x) == comp.mods[t]) ++count;
            cand *= static_cast<double>(count);
        }
        method = cand <= static_cast<double>(kEnumerationCandidateCap) ? OrbitMethod::Enumerate
                                                                       : OrbitMethod::Closure;
    }
    return method == OrbitMethod::Enumerate ? component_orbits_enumerate(ar)
                                            : component_orbits_closure(ar);
}

}  // namespace

PartitionType::PartitionType(std::int64_t prime, std::vector<int> parts)
    : p(prime), lambda(std::move(parts)) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeBase, "partition type needs a prime");
    if (lambda.empty()) throw Error(ErrorKind::InvalidGroup, "partition type needs parts");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw Error(ErrorKind::InvalidGroup, "partition must be non-increasing with parts >= 1");
}

std::int64_t miller_orbit_count(const PartitionType& t) {
    std::int64_t out = t.lambda.back() + 1;
    for (std::size_t i = 0; i + 1 < t.lambda.size(); ++i)
        out *= t.lambda[i] - t.lambda[i + 1] + 1;
    return out;
}

std::int64_t miller_orbit_count(const FiniteAbelianGroup& g) {
    std::int64_t out = 1;
    for (const PComponent& comp : p_components(g)) {
        std::vector<int> lambda = comp.exps;
        std::sort(lambda.begin(), lambda.end(), std::greater<>());
        out *= miller_orbit_count(PartitionType(comp.p, std::move(lambda)));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> bruteforce_aut_orbits(const FiniteAbelianGroup& g,
                                                             std::int64_t cap,
                                                             OrbitMethod method) {
    if (g.order() > cap)
        throw Error(ErrorKind::GroupTooLarge, "orbit oracle is capped at |G| = " + std::to_string(cap));

    auto comps = p_components(g);
    std::vector<std::vector<std::int64_t>> comp_roots;
    comp_roots.reserve(comps.size());
    for (const auto& comp : comps) comp_roots.push_back(component_orbits(comp, method));

    // Orbit of x is the product of the component orbits of its projections.
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> classes;
    for (std::int64_t x = 0; x < g.order(); ++x) {
        auto coords = g.coords_of(x);
        std::vector<std::int64_t> key;
        key.reserve(comps.size());
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const auto& comp = comps[ci];
            std::int64_t idx = 0, s = 1;
            for (std::size_t t = 0; t < comp.mods.size(); ++t) {
                idx += (coords[comp.factor_pos[t]] % comp.mods[t]) * s;
                s *= comp.mods[t];
            }
            key.push_back(comp_roots[ci][static_cast<std::size_t>(idx)]);
        }
        classes[key].push_back(x);
    }

    std::vector<std::vector<std::int64_t>> out;
    out.reserve(classes.size());
    for (auto& [key, members] : classes) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::int64_t ss_orbit_count_experimental(const PartitionType& t) {
    // Distinct part values, ascending.
    std::vector<std::int64_t> tau;
    for (auto it = t.lambda.rbegin(); it != t.lambda.rend(); ++it)
        if (tau.empty() || tau.back() != *it) tau.push_back(*it);
    const int s = static_cast<int>(tau.size());

    std::int64_t total = 0;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<std::int64_t> chosen;
        for (int i = 0; i < s; ++i)
            if (mask & (1u << i)) chosen.push_back(tau[static_cast<std::size_t>(i)]);
        if (chosen.empty()) {
            total += 1;
            continue;
        }
        std::int64_t term = chosen.back();
        for (std::size_t j = 0; j + 1 < chosen.size(); ++j) term *= chosen[j] - chosen[j + 1] - 1;
        total += term;
    }
    return total;
}

}  // namespace annigraph
