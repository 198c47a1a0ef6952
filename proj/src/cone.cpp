#include "polysum/cone.hpp"

#include <algorithm>

#include "polysum/dd.hpp"

namespace polysum {

namespace {

std::size_t rankOfGenerators(const std::vector<Vector>& rays,
                             const std::vector<Vector>& lineality) {
    Matrix m;
    for (const auto& r : rays) m.appendRow(r);
    for (const auto& l : lineality) m.appendRow(l);
    return rank(m);
}

std::vector<HalfSpace> attachAtApex(const std::vector<Vector>& normals,
                                    const Vector& apex) {
    std::vector<HalfSpace> hs;
    hs.reserve(normals.size());
    for (const auto& m : normals) hs.emplace_back(m, dot(m, apex));
    std::sort(hs.begin(), hs.end());
    return hs;
}

// Facet-defining members of a candidate normal set for a full-dimensional
// cone: the tight generators must span a (dim-1)-subspace.
std::vector<Vector> facetSubset(std::size_t dim, std::vector<Vector> candidates,
                                const std::vector<Vector>& rays,
                                const std::vector<Vector>& lineality) {
    for (auto& c : candidates) c = canonicalDirection(c);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<Vector> out;
    for (const auto& m : candidates) {
        if (m.isZero()) continue;
        Matrix tight;
        for (const auto& l : lineality) tight.appendRow(l);
        for (const auto& r : rays)
            if (dot(m, r) == 0) tight.appendRow(r);
        if (rank(tight) == dim - 1) out.push_back(m);
    }
    return out;
}

}  // namespace

Cone Cone::fromSupportNormals(std::size_t dim, const Vector& apex,
                              const std::vector<Vector>& normals) {
    if (apex.dim() != dim) throw DimensionMismatch("apex of wrong dimension");
    detail::GeneratorSet gens = detail::coneFromSupportNormals(dim, normals);

    Cone c;
    c.dim_ = dim;
    c.apex_ = apex;
    c.rays_ = std::move(gens.rays);
    c.lineality_ = std::move(gens.lineality);
    c.coneDim_ = rankOfGenerators(c.rays_, c.lineality_);

    std::vector<Vector> supportNormals =
        c.coneDim_ == dim
            ? facetSubset(dim, normals, c.rays_, c.lineality_)
            : detail::supportNormalsOfGenerators(dim, c.rays_, c.lineality_);
    c.supports_ = attachAtApex(supportNormals, apex);
    return c;
}

Cone Cone::fromGenerators(std::size_t dim, const Vector& apex,
                          const std::vector<Vector>& rays,
                          const std::vector<Vector>& lineality) {
    if (apex.dim() != dim) throw DimensionMismatch("apex of wrong dimension");
    for (const auto& r : rays)
        if (r.dim() != dim) throw DimensionMismatch("ray of wrong dimension");

    std::vector<Vector> supportNormals =
        detail::supportNormalsOfGenerators(dim, rays, lineality);
    detail::GeneratorSet gens = detail::coneFromSupportNormals(dim, supportNormals);

    Cone c;
    c.dim_ = dim;
    c.apex_ = apex;
    c.rays_ = std::move(gens.rays);
    c.lineality_ = std::move(gens.lineality);
    c.coneDim_ = rankOfGenerators(c.rays_, c.lineality_);
    c.supports_ = attachAtApex(supportNormals, apex);
    return c;
}

bool Cone::containsDirection(const Vector& u, bool strict) const {
    if (u.dim() != dim_) throw DimensionMismatch("direction of wrong dimension");
    for (const auto& h : supports_) {
        int s = sign(dot(h.normal(), u));
        if (s > 0) return false;
        if (strict && s == 0) return false;
    }
    return true;
}

Cone Cone::translatedTo(const Vector& newApex) const {
    if (newApex.dim() != dim_) throw DimensionMismatch("apex of wrong dimension");
    Cone c(*this);
    c.apex_ = newApex;
    for (auto& h : c.supports_) h = h.through(newApex);
    std::sort(c.supports_.begin(), c.supports_.end());
    return c;
}

Cone intersectCones(const Cone& c1, const Cone& c2) {
    if (c1.dim() != c2.dim())
        throw DimensionMismatch("cone intersection across dimensions");
    if (c1.apex() != c2.apex())
        throw ApexMismatch("cone intersection requires a common apex");
    std::vector<Vector> normals;
    normals.reserve(c1.supports().size() + c2.supports().size());
    for (const auto& h : c1.supports()) normals.push_back(h.normal());
    for (const auto& h : c2.supports()) normals.push_back(h.normal());
    return Cone::fromSupportNormals(c1.dim(), c1.apex(), normals);
}

Cone convexHullOfCones(const Cone& c1, const Cone& c2, const Vector& commonApex) {
    if (c1.dim() != c2.dim())
        throw DimensionMismatch("cone hull across dimensions");
    if (c1.apex() != commonApex || c2.apex() != commonApex)
        throw ApexMismatch("cone hull requires both cones at the common apex");
    std::vector<Vector> rays = c1.rays();
    rays.insert(rays.end(), c2.rays().begin(), c2.rays().end());
    std::vector<Vector> lineality = c1.lineality();
    lineality.insert(lineality.end(), c2.lineality().begin(), c2.lineality().end());
    return Cone::fromGenerators(c1.dim(), commonApex, rays, lineality);
}

Cone polarDual(const Cone& c) {
    std::vector<Vector> normals = c.rays();
    for (const auto& l : c.lineality()) {
        normals.push_back(l);
        normals.push_back(-l);
    }
    return Cone::fromSupportNormals(c.dim(), c.apex(), normals);
}

Cone primalCone(const Polytope& p, std::size_t v) {
    const auto& nbrs = p.neighbours(v);  // checks the index
    Cone c;
    c.dim_ = p.dim();
    c.apex_ = p.vertices()[v];
    for (std::size_t j : nbrs)
        c.rays_.push_back(canonicalDirection(p.vertices()[j] - c.apex_));
    std::sort(c.rays_.begin(), c.rays_.end());
    for (std::size_t k : p.incidence()[v]) c.supports_.push_back(p.facets()[k]);
    std::sort(c.supports_.begin(), c.supports_.end());
    c.coneDim_ = rankOfGenerators(c.rays_, c.lineality_);
    return c;
}

Cone dualCone(const Polytope& p, std::size_t v) {
    const auto& nbrs = p.neighbours(v);
    Cone c;
    c.dim_ = p.dim();
    c.apex_ = Vector(p.dim());
    for (std::size_t k : p.incidence()[v])
        c.rays_.push_back(canonicalDirection(p.facets()[k].normal()));
    std::sort(c.rays_.begin(), c.rays_.end());
    std::vector<Vector> edgeDirs;
    for (std::size_t j : nbrs)
        edgeDirs.push_back(canonicalDirection(p.vertices()[j] - p.vertices()[v]));
    c.supports_ = attachAtApex(edgeDirs, c.apex_);
    c.coneDim_ = rankOfGenerators(c.rays_, c.lineality_);
    return c;
}

NormalFan normalFan(const Polytope& p) {
    NormalFan fan;
    fan.cones.reserve(p.vertices().size());
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        fan.cones.push_back(dualCone(p, v));
    return fan;
}

}  // namespace polysum
