#pragma once

#include <vector>

#include "polysum/polytope.hpp"

namespace polysum {

// Polyhedral cone in double description: extreme rays plus the supporting
// half-spaces through the apex, both kept at all times. The apex is the
// origin for dual cones and the vertex itself for primal cones. A cone that
// contains a line is representable and reported as not pointed; such cones
// only arise from degenerate inputs, never from vertices of full-dimensional
// polytopes.
class Cone {
public:
    // {x : <m, x - apex> <= 0 for all m}; rays recomputed exactly.
    static Cone fromSupportNormals(std::size_t dim, const Vector& apex,
                                   const std::vector<Vector>& normals);

    // cone(rays) + span(lineality) attached at apex; supports recomputed
    // exactly, interior generators dropped.
    static Cone fromGenerators(std::size_t dim, const Vector& apex,
                               const std::vector<Vector>& rays,
                               const std::vector<Vector>& lineality = {});

    std::size_t dim() const { return dim_; }
    const Vector& apex() const { return apex_; }
    const std::vector<Vector>& rays() const { return rays_; }
    const std::vector<HalfSpace>& supports() const { return supports_; }
    const std::vector<Vector>& lineality() const { return lineality_; }

    std::size_t coneDim() const { return coneDim_; }
    bool pointed() const { return lineality_.empty(); }
    bool fullDimensional() const { return coneDim_ == dim_; }

    // Membership of the apex-relative direction u; strict means interior.
    bool containsDirection(const Vector& u, bool strict = false) const;

    Cone translatedTo(const Vector& newApex) const;

    // Set equality through the canonical generator description.
    bool operator==(const Cone& o) const {
        return dim_ == o.dim_ && apex_ == o.apex_ && rays_ == o.rays_ &&
               lineality_ == o.lineality_;
    }

private:
    Cone() = default;

    friend Cone primalCone(const Polytope& p, std::size_t v);
    friend Cone dualCone(const Polytope& p, std::size_t v);

    std::size_t dim_ = 0;
    Vector apex_;
    std::vector<Vector> rays_;
    std::vector<HalfSpace> supports_;
    std::vector<Vector> lineality_;
    std::size_t coneDim_ = 0;
};

// rank of the ray matrix (lineality included); 0 for the trivial cone.
inline std::size_t coneDim(const Cone& c) { return c.coneDim(); }

// Double description of c1 intersected with c2: supports are merged and the
// extreme rays recomputed. Result can be lower-dimensional, down to {0}.
Cone intersectCones(const Cone& c1, const Cone& c2);

// Smallest cone containing both, which equals their Minkowski sum for cones
// sharing an apex. Both arguments must already sit at commonApex.
Cone convexHullOfCones(const Cone& c1, const Cone& c2, const Vector& commonApex);

// {y : <y, x - apex> <= 0 for all x in c}, attached at the same apex.
// Involution: polarDual(polarDual(c)) = c.
Cone polarDual(const Cone& c);

// Cone at vertex v generated by the edges towards its neighbours; equally
// the intersection of the facet half-spaces active at v.
Cone primalCone(const Polytope& p, std::size_t v);

// Cone of outer normals of the facets active at v, attached at the origin;
// exactly the directions maximized over p at v.
Cone dualCone(const Polytope& p, std::size_t v);

struct NormalFan {
    std::vector<Cone> cones;  // one dual cone per vertex, same indexing
};

NormalFan normalFan(const Polytope& p);

}  // namespace polysum
