#pragma once

#include <vector>

#include "polysum/linalg.hpp"

namespace polysum::detail {

// Generators of a polyhedral cone: extreme rays of the pointed part plus a
// basis of the lineality space. Both in canonical direction form, sorted.
// Extreme rays are representatives inside the row space of the defining
// normals, which makes them deterministic.
struct GeneratorSet {
    std::vector<Vector> rays;
    std::vector<Vector> lineality;
    bool pointed() const { return lineality.empty(); }
};

// Extreme rays and lineality of {x : <m, x> <= 0 for all m in normals}.
// Incremental double description with the combinatorial adjacency test;
// normals are canonicalized, deduplicated and sorted before insertion, so
// the output is a deterministic function of the input set.
GeneratorSet coneFromSupportNormals(std::size_t dim, const std::vector<Vector>& normals);

// Irredundant support normals of cone(rays) + span(lineality): the extreme
// rays of the polar cone, plus +/- pairs spanning the orthogonal complement
// when the cone is not full-dimensional.
std::vector<Vector> supportNormalsOfGenerators(std::size_t dim,
                                               const std::vector<Vector>& rays,
                                               const std::vector<Vector>& lineality);

}  // namespace polysum::detail
