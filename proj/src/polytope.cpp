#include "polysum/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polysum/dd.hpp"

namespace polysum {

namespace {

std::vector<HalfSpace> dedupHalfSpaces(std::vector<HalfSpace> hs) {
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

std::vector<Vector> dedupPoints(std::vector<Vector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Matrix normalsOf(const std::vector<HalfSpace>& hs, const std::vector<std::size_t>& idx) {
    Matrix m;
    for (std::size_t k : idx) m.appendRow(hs[k].normal());
    return m;
}

}  // namespace

Polytope Polytope::fromHalfSpaces(std::size_t dim, const std::vector<HalfSpace>& hsIn) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
    if (hsIn.empty()) throw std::invalid_argument("empty half-space list");
    for (const auto& h : hsIn)
        if (h.dim() != dim) throw DimensionMismatch("half-space of wrong dimension");

    std::vector<HalfSpace> cand = dedupHalfSpaces(hsIn);

    // Homogenize: {(x,t) : <a,x> - b t <= 0, t >= 0}; vertices are the rays
    // with t > 0, recession directions the rays with t = 0.
    std::vector<Vector> normals;
    normals.reserve(cand.size() + 1);
    for (const auto& h : cand) {
        Vector m(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) m[i] = h.normal()[i];
        m[dim] = -h.offset();
        normals.push_back(std::move(m));
    }
    Vector tPositive(dim + 1);
    tPositive[dim] = Rational(-1);
    normals.push_back(std::move(tPositive));

    detail::GeneratorSet gens = detail::coneFromSupportNormals(dim + 1, normals);

    std::vector<Vector> verts;
    bool recession = !gens.lineality.empty();
    for (const auto& r : gens.rays) {
        if (sign(r[dim]) > 0) {
            Vector v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = r[i] / r[dim];
            verts.push_back(std::move(v));
        } else {
            recession = true;
        }
    }
    if (verts.empty()) throw EmptyPolytope("no feasible point");
    if (recession) throw Unbounded("recession direction exists");
    if (affineRank(verts) < dim)
        throw NotFullDimensional("no strict interior point");

    // Irredundant facets: tight vertex set affinely spans a (dim-1)-flat.
    std::vector<HalfSpace> facets;
    for (const auto& h : cand) {
        std::vector<Vector> tight;
        for (const auto& v : verts)
            if (h.isTightAt(v)) tight.push_back(v);
        if (!tight.empty() && affineRank(tight) == dim - 1) facets.push_back(h);
    }
    return assemble(dim, std::move(facets), std::move(verts));
}

Polytope Polytope::fromVertices(std::size_t dim, const std::vector<Vector>& ptsIn) {
    if (dim == 0) throw std::invalid_argument("ambient dimension must be positive");
    if (ptsIn.empty()) throw std::invalid_argument("empty point list");
    for (const auto& p : ptsIn)
        if (p.dim() != dim) throw DimensionMismatch("point of wrong dimension");

    std::vector<Vector> pts = dedupPoints(ptsIn);
    if (affineRank(pts) < dim)
        throw NotFullDimensional("affine hull is a proper subspace");

    // Facet enumeration via the polar of the homogenization cone(p_i, 1):
    // its extreme rays (y, s) are exactly the facets <y, x> <= -s.
    std::vector<Vector> normals;
    normals.reserve(pts.size());
    for (const auto& p : pts) {
        Vector m(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) m[i] = p[i];
        m[dim] = Rational(1);
        normals.push_back(std::move(m));
    }
    detail::GeneratorSet polar = detail::coneFromSupportNormals(dim + 1, normals);
    if (!polar.lineality.empty())
        throw InternalInconsistency("polar of full-dimensional hull has lineality");

    std::vector<HalfSpace> facets;
    facets.reserve(polar.rays.size());
    for (const auto& r : polar.rays) {
        Vector n(dim);
        for (std::size_t i = 0; i < dim; ++i) n[i] = r[i];
        if (n.isZero())
            throw InternalInconsistency("degenerate facet normal from hull");
        facets.emplace_back(std::move(n), -r[dim]);
    }

    // Extreme points: active facet normals have full rank.
    std::vector<Vector> verts;
    for (const auto& p : pts) {
        Matrix active;
        for (const auto& f : facets)
            if (f.isTightAt(p)) active.appendRow(f.normal());
        if (active.rowCount() >= dim && rank(active) == dim) verts.push_back(p);
    }
    return assemble(dim, std::move(facets), std::move(verts));
}

Polytope Polytope::fromDoubleDescription(std::size_t dim,
                                         const std::vector<HalfSpace>& facets,
                                         const std::vector<Vector>& vertices) {
    Polytope p = fromHalfSpaces(dim, facets);
    std::vector<Vector> given = dedupPoints(vertices);
    if (p.vertices_ != given) {
        std::ostringstream os;
        os << "H- and V-data disagree: facets describe " << p.vertices_.size()
           << " vertices, " << given.size() << " were supplied";
        throw InternalInconsistency(os.str());
    }
    if (p.facets_.size() != dedupHalfSpaces(facets).size())
        throw InternalInconsistency("supplied facet list contains redundant members");
    return p;
}

Polytope Polytope::assemble(std::size_t dim, std::vector<HalfSpace> facets,
                            std::vector<Vector> vertices) {
    Polytope p;
    p.dim_ = dim;
    std::sort(facets.begin(), facets.end());
    std::sort(vertices.begin(), vertices.end());
    p.facets_ = std::move(facets);
    p.vertices_ = std::move(vertices);
    p.buildIncidenceAndAdjacency();
    return p;
}

void Polytope::buildIncidenceAndAdjacency() {
    incidence_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t k = 0; k < facets_.size(); ++k)
            if (facets_[k].isTightAt(vertices_[i])) incidence_[i].push_back(k);

    adjacency_.assign(vertices_.size(), {});
    std::vector<std::size_t> common;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
            common.clear();
            std::set_intersection(incidence_[i].begin(), incidence_[i].end(),
                                  incidence_[j].begin(), incidence_[j].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 < dim_) continue;
            if (rank(normalsOf(facets_, common)) == dim_ - 1) {
                adjacency_[i].push_back(j);
                adjacency_[j].push_back(i);
            }
        }
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

const std::vector<std::size_t>& Polytope::neighbours(std::size_t v) const {
    if (v >= vertices_.size())
        throw IndexOutOfRange("vertex index " + std::to_string(v) + " of " +
                              std::to_string(vertices_.size()));
    return adjacency_[v];
}

std::optional<std::size_t> Polytope::findVertex(const Vector& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it != vertices_.end() && *it == v)
        return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

Vector Polytope::interiorPoint() const {
    Vector sum(dim_);
    for (const auto& v : vertices_) sum = sum + v;
    return sum * makeRational(1, Integer(vertices_.size()));
}

bool Polytope::contains(const Vector& x) const {
    for (const auto& f : facets_)
        if (!f.contains(x)) return false;
    return true;
}

ValidationReport Polytope::validate() const {
    return validateDoubleDescription(dim_, facets_, vertices_, &incidence_);
}

ValidationReport validateDoubleDescription(
    std::size_t dim, const std::vector<HalfSpace>& facets,
    const std::vector<Vector>& vertices,
    const std::vector<std::vector<std::size_t>>* incidence) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    if (facets.empty()) fail("no facets");
    if (vertices.empty()) fail("no vertices");
    for (const auto& h : facets)
        if (h.dim() != dim) fail("facet of wrong dimension");
    for (const auto& v : vertices)
        if (v.dim() != dim) fail("vertex of wrong dimension");
    if (!rep.ok()) return rep;

    {
        auto sorted = facets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("redundant facet: duplicate half-space");
        auto vs = vertices;
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            fail("duplicate vertex");
    }

    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (!facets[k].contains(vertices[i]))
                fail("vertex " + std::to_string(i) + " outside facet " + std::to_string(k));

    for (std::size_t k = 0; k < facets.size(); ++k) {
        std::vector<Vector> tight;
        for (const auto& v : vertices)
            if (facets[k].isTightAt(v)) tight.push_back(v);
        if (tight.empty())
            fail("facet " + std::to_string(k) + " not supporting (no tight vertex)");
        else if (affineRank(tight) != dim - 1)
            fail("redundant facet " + std::to_string(k) + " (tight set has affine rank " +
                 std::to_string(affineRank(tight)) + ")");
    }

    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Matrix active;
        for (const auto& f : facets)
            if (f.isTightAt(vertices[i])) active.appendRow(f.normal());
        if (rank(active) != dim)
            fail("vertex " + std::to_string(i) + " has active-normal rank " +
                 std::to_string(rank(active)) + " < dim");
    }

    if (affineRank(vertices) != dim) fail("vertex set not full-dimensional");

    {
        std::vector<Vector> normals;
        for (const auto& h : facets) normals.push_back(h.normal());
        detail::GeneratorSet recession = detail::coneFromSupportNormals(dim, normals);
        if (!recession.rays.empty() || !recession.lineality.empty())
            fail("H-description unbounded (nontrivial recession cone)");
    }

    if (incidence) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            std::vector<std::size_t> expect;
            for (std::size_t k = 0; k < facets.size(); ++k)
                if (facets[k].isTightAt(vertices[i])) expect.push_back(k);
            if ((*incidence)[i] != expect)
                fail("incidence mismatch at vertex " + std::to_string(i));
        }
    }

    if (rep.ok()) {
        // Minkowski-Weyl cross-check: the facets must enumerate back to
        // exactly the given vertex set.
        try {
            Polytope rebuilt = Polytope::fromHalfSpaces(dim, facets);
            auto vs = vertices;
            std::sort(vs.begin(), vs.end());
            if (rebuilt.vertices() != vs)
                fail("H- and V-data describe different polytopes");
        } catch (const Error& e) {
            fail(std::string("H-description rejected: ") + e.what());
        }
    }
    return rep;
}

}  // namespace polysum
