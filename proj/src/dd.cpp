#include "polysum/dd.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace polysum::detail {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset makeBitset(std::size_t n) { return Bitset((n + 63) / 64, 0); }

void setBit(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

Bitset intersect(const Bitset& a, const Bitset& b) {
    Bitset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

bool isSubsetOf(const Bitset& small, const Bitset& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] & ~big[i]) return false;
    return true;
}

std::size_t popcount(const Bitset& b) {
    std::size_t n = 0;
    for (auto w : b) n += std::popcount(w);
    return n;
}

struct Ray {
    Vector z;      // coordinates in the pointed subspace
    Bitset tight;  // processed constraints tight at this ray
};

// Greedily pick indices of rows forming a basis of the row space.
std::vector<std::size_t> independentSubset(const std::vector<Vector>& rows,
                                           std::size_t want) {
    std::vector<std::size_t> idx;
    Matrix probe;
    for (std::size_t i = 0; i < rows.size() && idx.size() < want; ++i) {
        Matrix trial = probe;
        trial.appendRow(rows[i]);
        if (rank(trial) == idx.size() + 1) {
            probe = std::move(trial);
            idx.push_back(i);
        }
    }
    return idx;
}

}  // namespace

GeneratorSet coneFromSupportNormals(std::size_t dim,
                                    const std::vector<Vector>& normalsIn) {
    std::vector<Vector> normals;
    normals.reserve(normalsIn.size());
    for (const auto& m : normalsIn) {
        if (m.dim() != dim)
            throw DimensionMismatch("support normal of wrong dimension");
        Vector c = canonicalDirection(m);
        if (!c.isZero()) normals.push_back(std::move(c));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    GeneratorSet out;
    if (normals.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim);
            e[i] = Rational(1);
            out.lineality.push_back(std::move(e));
        }
        return out;
    }

    out.lineality = nullspaceBasis(Matrix(normals));
    const std::size_t k = dim - out.lineality.size();

    // The cone splits as lineality + (cone within the row space W of the
    // normals); the W part is pointed. Work in W coordinates.
    std::vector<Vector> W;
    for (std::size_t i : independentSubset(normals, k)) W.push_back(normals[i]);

    std::vector<Vector> proj;  // constraints in z-coordinates
    proj.reserve(normals.size());
    for (const auto& m : normals) {
        Vector z(k);
        for (std::size_t j = 0; j < k; ++j) z[j] = dot(m, W[j]);
        proj.push_back(std::move(z));
    }

    // Processing order: a simplicial start from k independent constraints,
    // then the rest in sorted order.
    std::vector<std::size_t> initIdx = independentSubset(proj, k);
    std::vector<std::size_t> order = initIdx;
    {
        std::vector<bool> used(normals.size(), false);
        for (std::size_t i : initIdx) used[i] = true;
        for (std::size_t i = 0; i < normals.size(); ++i)
            if (!used[i]) order.push_back(i);
    }
    const std::size_t total = order.size();

    // Initial simplicial cone: rays are the columns of -inverse(M0), so ray i
    // is tight on every starting constraint except i.
    std::vector<Ray> rays;
    {
        Matrix M0;
        for (std::size_t j = 0; j < k; ++j) M0.appendRow(proj[initIdx[j]]);
        for (std::size_t i = 0; i < k; ++i) {
            Vector rhs(k);
            rhs[i] = Rational(-1);
            SolveResult res = solveLinear(M0, rhs);
            if (!res.ok())
                throw InternalInconsistency(
                    "simplicial start of the double description is singular");
            Ray r;
            r.z = canonicalDirection(res.solution);
            r.tight = makeBitset(total);
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) setBit(r.tight, j);
            rays.push_back(std::move(r));
        }
    }

    for (std::size_t t = k; t < total; ++t) {
        const Vector& mz = proj[order[t]];
        std::vector<Rational> s(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(mz, rays[i].z);
            int sg = sign(s[i]);
            if (sg > 0)
                pos.push_back(i);
            else if (sg < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        if (pos.empty()) {
            for (std::size_t i : zero) setBit(rays[i].tight, t);
            continue;
        }

        std::vector<Ray> born;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bitset common = intersect(rays[p].tight, rays[q].tight);
                // adjacency needs rank(common) = k - 2, so at least k - 2 bits
                if (popcount(common) + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    if (isSubsetOf(common, rays[r].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                // s[p] > 0 > s[q]: positive combination vanishing on t.
                Ray nr;
                nr.z = canonicalDirection(rays[q].z * s[p] - rays[p].z * s[q]);
                nr.tight = std::move(common);
                setBit(nr.tight, t);
                born.push_back(std::move(nr));
            }
        }

        std::vector<Ray> next;
        next.reserve(neg.size() + zero.size() + born.size());
        for (std::size_t i : neg) next.push_back(std::move(rays[i]));
        for (std::size_t i : zero) {
            setBit(rays[i].tight, t);
            next.push_back(std::move(rays[i]));
        }
        for (auto& b : born) next.push_back(std::move(b));
        rays = std::move(next);
    }

    out.rays.reserve(rays.size());
    for (const auto& r : rays) {
        Vector x(dim);
        for (std::size_t j = 0; j < k; ++j) x = x + W[j] * r.z[j];
        out.rays.push_back(canonicalDirection(x));
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

std::vector<Vector> supportNormalsOfGenerators(std::size_t dim,
                                               const std::vector<Vector>& raysIn,
                                               const std::vector<Vector>& lineality) {
    std::vector<Vector> constraints = raysIn;
    for (const auto& l : lineality) {
        constraints.push_back(l);
        constraints.push_back(-l);
    }
    GeneratorSet polar = coneFromSupportNormals(dim, constraints);

    std::vector<Vector> supports = polar.rays;
    for (const auto& l : polar.lineality) {
        supports.push_back(canonicalDirection(l));
        supports.push_back(canonicalDirection(-l));
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    return supports;
}

}  // namespace polysum::detail
