#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysum/halfspace.hpp"

namespace polysum {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Double description of a bounded, full-dimensional convex polytope:
// irredundant facet half-spaces, vertices, and the vertex-facet incidence.
// Vertices are sorted lexicographically and facets by canonical form, so
// equal polytopes compare equal syntactically. Instances are immutable.
class Polytope {
public:
    // Empty value, only meaningful as an assignment target.
    Polytope() = default;

    // Vertex enumeration of {x : all half-spaces}. Throws Unbounded when a
    // recession direction exists, EmptyPolytope when infeasible, and
    // NotFullDimensional when there is no strict interior point.
    static Polytope fromHalfSpaces(std::size_t dim, const std::vector<HalfSpace>& hs);

    // Exact convex hull: interior points dropped, facets enumerated.
    // Throws NotFullDimensional when the affine hull is a proper subspace.
    static Polytope fromVertices(std::size_t dim, const std::vector<Vector>& pts);

    // Assembles a polytope from facets and vertices produced together by a
    // summation algorithm, re-deriving the vertex set from the facets as a
    // cross-check. Throws InternalInconsistency when the two disagree.
    static Polytope fromDoubleDescription(std::size_t dim,
                                          const std::vector<HalfSpace>& facets,
                                          const std::vector<Vector>& vertices);

    std::size_t dim() const { return dim_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<Vector>& vertices() const { return vertices_; }

    // Sorted facet indices active at each vertex.
    const std::vector<std::vector<std::size_t>>& incidence() const { return incidence_; }

    // Vertices sharing an edge with v: the common active facets have normal
    // rank dim-1. Works at non-simple vertices too.
    const std::vector<std::size_t>& neighbours(std::size_t v) const;

    std::optional<std::size_t> findVertex(const Vector& v) const;

    // Vertex barycenter; strictly inside every facet for a full-dimensional
    // polytope.
    Vector interiorPoint() const;

    bool contains(const Vector& x) const;

    ValidationReport validate() const;

    bool operator==(const Polytope& o) const {
        return dim_ == o.dim_ && vertices_ == o.vertices_ && facets_ == o.facets_;
    }

private:
    static Polytope assemble(std::size_t dim, std::vector<HalfSpace> facets,
                             std::vector<Vector> vertices);
    void buildIncidenceAndAdjacency();

    std::size_t dim_ = 0;
    std::vector<HalfSpace> facets_;
    std::vector<Vector> vertices_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// Consistency report for a (possibly hand-built) double description: every
// vertex inside every facet, facets supporting and irredundant, incidence
// consistent, boundedness and full dimension, and agreement of the H- and
// V-data. Violations are returned, not thrown.
ValidationReport validateDoubleDescription(
    std::size_t dim, const std::vector<HalfSpace>& facets,
    const std::vector<Vector>& vertices,
    const std::vector<std::vector<std::size_t>>* incidence = nullptr);

}  // namespace polysum
