#include "spectra/lattices/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra::lattices {
namespace {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

Int round_div(const Int& a, const Int& b) {
    // nearest integer to a/b for b > 0, ties toward +inf
    return floor_div(2 * a + b, 2 * b);
}

/// Greedy pairwise (Lagrange-style) size reduction, in place. u_cols is the
/// unimodular column transform with G_reduced = U^T G U.
void size_reduce(RatMat& g, IntMat& u_cols) {
    const int n = g.rows();
    for (int sweep = 0; sweep < 200; ++sweep) {
        bool changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Int t = round_div(num(g(i, j)), num(g(j, j)));
                if (t == 0) continue;
                Rational new_gii = g(i, i) - 2 * t * g(i, j) + t * t * g(j, j);
                if (new_gii >= g(i, i)) continue;
                // v_i <- v_i - t v_j
                for (int k = 0; k < n; ++k) {
                    if (k == i) continue;
                    g(i, k) -= t * g(j, k);
                    g(k, i) = g(i, k);
                }
                g(i, i) = new_gii;
                for (int k = 0; k < n; ++k) u_cols[k][i] -= t * u_cols[k][j];
                changed = true;
            }
        if (!changed) return;
    }
}

/// Incrementally maintained echelon basis of a Z-span. Rows keep strictly
/// increasing pivot columns; inserting a vector Euclid-reduces it against the
/// existing pivots.
class ZSpan {
  public:
    explicit ZSpan(int n) : n_(n) {}

    /// Returns true when the vector extended the rank (was outside the
    /// Q-span of the previous rows).
    bool insert(IntVec v) {
        for (int col = 0; col < n_; ++col) {
            if (v[col] == 0) continue;
            int at = row_with_pivot(col);
            if (at < 0) {
                if (v[col] < 0)
                    for (auto& x : v) x = -x;
                rows_.insert(insertion_point(col), std::move(v));
                return true;
            }
            IntVec& r = rows_[at];
            while (v[col] != 0) {
                Int q = floor_div(v[col], r[col]);
                for (int c = col; c < n_; ++c) v[c] -= q * r[c];
                if (v[col] != 0) std::swap(v, r);
            }
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    const IntMat& rows() const { return rows_; }

    /// True iff the span is all of Z^n.
    bool is_unimodular() const {
        if (rank() != n_) return false;
        Int det = 1;
        for (int i = 0; i < n_; ++i) det *= rows_[i][i];
        return det == 1 || det == -1;
    }

  private:
    int pivot_col(const IntVec& r) const {
        for (int c = 0; c < n_; ++c)
            if (r[c] != 0) return c;
        return n_;
    }
    int row_with_pivot(int col) const {
        for (int i = 0; i < rank(); ++i) {
            int pc = pivot_col(rows_[i]);
            if (pc == col) return i;
            if (pc > col) return -1;
        }
        return -1;
    }
    IntMat::iterator insertion_point(int col) {
        auto it = rows_.begin();
        while (it != rows_.end() && pivot_col(*it) < col) ++it;
        return it;
    }

    int n_;
    IntMat rows_;
};

struct Component {
    std::vector<int> members;
    // spanning subset of member vectors, each cached with G * w
    std::vector<std::pair<std::vector<long long>, IntVec>> span;
    ZSpan zspan;
    explicit Component(int n) : zspan(n) {}
};

IntVec gram_times(const RatMat& g, const std::vector<long long>& w) {
    const int n = g.rows();
    IntVec out(n, Int(0));
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j)
            if (w[j] != 0) s += num(g(i, j)) * w[j];
        out[i] = s;
    }
    return out;
}

bool non_orthogonal(const std::vector<long long>& v, const IntVec& gw) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += Int(v[i]) * gw[i];
    return s != 0;
}


}  // namespace

OrthogonalDecomposition orthogonal_decompose(const GramMatrix& g) {
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_integer(g.entries(i, j)))
                throw std::domain_error("orthogonal_decompose requires an integer Gram matrix");

    RatMat reduced = g.entries;
    IntMat u_cols(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) u_cols[i][i] = 1;
    size_reduce(reduced, u_cols);
    GramMatrix gr = GramMatrix::from_matrix(reduced);

    Int base_bound = 0;
    for (int i = 0; i < n; ++i) base_bound = std::max(base_bound, num(reduced(i, i)));

    for (int attempt = 0; attempt < 4; ++attempt) {
        Int bound = base_bound << attempt;
        auto vectors = short_vectors(gr, bound);

        std::vector<Component> components;
        for (int vi = 0; vi < static_cast<int>(vectors.size()); ++vi) {
            const auto& v = vectors[vi].second;
            // Non-orthogonality against a component is equivalent to
            // non-orthogonality against its span.
            std::vector<int> hits;
            for (int ci = 0; ci < static_cast<int>(components.size()); ++ci)
                for (const auto& [w, gw] : components[ci].span)
                    if (non_orthogonal(v, gw)) { hits.push_back(ci); break; }
            IntVec v_int(v.begin(), v.end());
            if (hits.empty()) {
                Component fresh(n);
                fresh.members.push_back(vi);
                fresh.span.emplace_back(v, gram_times(reduced, v));
                fresh.zspan.insert(std::move(v_int));
                components.push_back(std::move(fresh));
                continue;
            }
            Component& target = components[hits.front()];
            target.members.push_back(vi);
            for (std::size_t h = hits.size(); h-- > 1;) {
                Component& src = components[hits[h]];
                target.members.insert(target.members.end(), src.members.begin(),
                                      src.members.end());
                for (auto& entry : src.span) target.span.push_back(std::move(entry));
                for (auto& row : src.zspan.rows()) {
                    IntVec copy = row;
                    target.zspan.insert(std::move(copy));
                }
                components.erase(components.begin() + hits[h]);
            }
            if (target.zspan.insert(std::move(v_int)))
                target.span.emplace_back(v, gram_times(reduced, v));
        }

        bool spans = false;
        {
            ZSpan all(n);
            for (const auto& comp : components)
                for (const auto& row : comp.zspan.rows()) {
                    IntVec copy = row;
                    all.insert(std::move(copy));
                }
            spans = all.is_unimodular();
        }
        if (!spans) continue;

        OrthogonalDecomposition out;
        out.norm_bound_used = bound;
        for (const auto& comp : components) {
            const IntMat& comp_basis = comp.zspan.rows();
            const int r = static_cast<int>(comp_basis.size());
            Summand s;
            RatMat sg(r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    Int val = 0;
                    for (int i = 0; i < n; ++i) {
                        if (comp_basis[a][i] == 0) continue;
                        Int row = 0;
                        for (int j = 0; j < n; ++j)
                            if (comp_basis[b][j] != 0) row += num(reduced(i, j)) * comp_basis[b][j];
                        val += comp_basis[a][i] * row;
                    }
                    sg(a, b) = val;
                }
            s.gram = GramMatrix::from_matrix(std::move(sg));
            // back to input-basis coordinates: coords_in = U * coords_red
            for (const auto& row : comp_basis) {
                IntVec coords(n, Int(0));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) coords[i] += u_cols[i][j] * row[j];
                s.basis_coords.push_back(std::move(coords));
            }
            out.summands.push_back(std::move(s));
        }
        std::sort(out.summands.begin(), out.summands.end(),
                  [](const Summand& a, const Summand& b) {
                      return a.basis_coords.size() > b.basis_coords.size();
                  });
        return out;
    }
    throw std::runtime_error(
        "orthogonal_decompose: short vectors up to 8x the size-reduced diagonal "
        "do not generate the lattice; retry with a larger norm bound");
}

}  // namespace spectra::lattices
