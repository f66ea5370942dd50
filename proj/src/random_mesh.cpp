#include "tmdim/random_mesh.hpp"

#include <algorithm>
#include <set>

namespace tmdim {

namespace {

// rationals strictly between lo and hi with denominator <= max_den
std::vector<Rational> cut_candidates(const Rational& lo, const Rational& hi, int max_den) {
    std::set<Rational, RationalLess> found;
    for (int q = 1; q <= max_den; ++q) {
        mpz_class p = mpz_class(lo * q);  // floor for non-negative values
        for (; Rational(p, q) < hi; ++p) {
            Rational x(p, q);
            x.canonicalize();
            if (x > lo) found.insert(x);
        }
    }
    return {found.begin(), found.end()};
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

MeshDoc random_split_doc(std::mt19937_64& rng, const RandomMeshOptions& opts) {
    MeshDoc doc;
    doc.rects.push_back({0, 0, 1, 1});
    int target = std::uniform_int_distribution<int>(2, std::max(2, opts.max_faces))(rng);
    int attempts = 0;
    while (static_cast<int>(doc.rects.size()) < target && attempts++ < 200) {
        size_t k = std::uniform_int_distribution<size_t>(0, doc.rects.size() - 1)(rng);
        Rect r = doc.rects[k];
        bool vertical = std::bernoulli_distribution(0.5)(rng);
        auto cuts = vertical ? cut_candidates(r.x0, r.x1, opts.max_denominator)
                             : cut_candidates(r.y0, r.y1, opts.max_denominator);
        if (cuts.empty()) continue;
        Rational c = pick(rng, cuts);
        Rect a = r, b = r;
        if (vertical) {
            a.x1 = c;
            b.x0 = c;
        } else {
            a.y1 = c;
            b.y0 = c;
        }
        doc.rects[k] = a;
        doc.rects.push_back(b);
    }
    doc.deficits.assign(doc.rects.size(), opts.deficits.front());
    for (auto& d : doc.deficits) d = pick(rng, opts.deficits);
    if (std::none_of(doc.deficits.begin(), doc.deficits.end(), [](Bidegree d) { return d == Bidegree{0, 0}; }))
        doc.deficits[std::uniform_int_distribution<size_t>(0, doc.deficits.size() - 1)(rng)] = {0, 0};

    doc.default_r = opts.smoothness.front();
    TMesh mesh = build_tmesh(doc.rects);
    for (const auto& chain : interior_chains(mesh)) {
        const Edge& first = mesh.edges[chain.front()];
        Rational a = first.a, b = first.b;
        for (int e : chain) {
            if (mesh.edges[e].a < a) a = mesh.edges[e].a;
            if (mesh.edges[e].b > b) b = mesh.edges[e].b;
        }
        doc.overrides.push_back({first.orient, first.line, a, b, pick(rng, opts.smoothness)});
    }
    return doc;
}

MeshDoc tensor_grid_doc(int k, int r) {
    MeshDoc doc;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            doc.rects.push_back({i, j, i + 1, j + 1});
            doc.deficits.push_back({0, 0});
        }
    doc.default_r = r;
    return doc;
}

MeshDoc random_grid_doc(std::mt19937_64& rng, int k, double p_raised, int r) {
    MeshDoc doc = tensor_grid_doc(k, r);
    std::bernoulli_distribution raise(p_raised);
    for (auto& d : doc.deficits)
        if (raise(rng)) d = {1, 1};
    if (std::none_of(doc.deficits.begin(), doc.deficits.end(), [](Bidegree d) { return d == Bidegree{0, 0}; }))
        doc.deficits[0] = {0, 0};
    return doc;
}

}  // namespace tmdim
