#include "spectra/lattices/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace spectra::lattices {
namespace {

// The recursion works on the scaled integer form
//   S * x^T A x = sum_i K_i * (M_i x_i + U_i(x))^2,
// where A = denom * gram is integer, D_i = P_i/Q_i and L come from the exact
// LDL^T of A, M_i clears the denominators of column i of L, and
// S = lcm_i(Q_i M_i^2). All interval endpoints are exact integer quantities
// (isqrt + floor/ceil divisions), so no floating point decides a count.
struct ScaledForm {
    int n = 0;
    Int denom;        // gram * denom is integer
    Int bound;        // integer cutoff on x^T A x
    Int scale;        // S
    std::vector<Int> k, m;            // K_i, M_i
    std::vector<std::vector<Int>> w;  // w[i][j] = L(j,i) * M_i for j > i
    std::vector<Int> coord_bound;     // |x_i| <= coord_bound[i]
    bool fits_int64 = false;
};

constexpr std::int64_t kInt64Limit = std::int64_t{1} << 62;

ScaledForm build_scaled_form(const RatMat& gram, const Rational& cutoff) {
    if (cutoff < 0) throw std::domain_error("enumeration cutoff must be >= 0");
    ScaledForm f;
    f.n = gram.rows();
    f.denom = 1;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) f.denom = lcm(f.denom, den(gram(i, j)));
    RatMat a(f.n, f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) a(i, j) = gram(i, j) * f.denom;
    f.bound = floor_rat(cutoff * f.denom);

    Ldl ldl = ldl_decompose(a);
    f.m.assign(f.n, Int(1));
    f.w.assign(f.n, {});
    for (int i = 0; i < f.n; ++i) {
        for (int j = i + 1; j < f.n; ++j) f.m[i] = lcm(f.m[i], den(ldl.lower(j, i)));
        f.w[i].assign(f.n, Int(0));
        for (int j = i + 1; j < f.n; ++j) f.w[i][j] = num(ldl.lower(j, i) * f.m[i]);
    }
    f.scale = 1;
    for (int i = 0; i < f.n; ++i) f.scale = lcm(f.scale, den(ldl.diagonal[i]) * f.m[i] * f.m[i]);
    f.k.assign(f.n, Int(0));
    for (int i = 0; i < f.n; ++i) {
        Rational ki = ldl.diagonal[i] * f.scale / (f.m[i] * f.m[i]);
        f.k[i] = num(ki);  // integral by construction of scale
    }

    // Box bound x_i^2 <= (x^T A x) * (A^{-1})_ii <= bound * (A^{-1})_ii.
    RatMat inv = a.inverse();
    f.coord_bound.assign(f.n, Int(0));
    for (int i = 0; i < f.n; ++i) f.coord_bound[i] = isqrt(floor_rat(f.bound * inv(i, i)));

    // Certify the int64 fast path from worst-case magnitudes.
    Int worst = f.bound * f.scale;
    for (int i = 0; i < f.n; ++i) {
        Int u_max = 0;
        for (int j = i + 1; j < f.n; ++j) u_max += abs(f.w[i][j]) * f.coord_bound[j];
        Int y_max = f.m[i] * f.coord_bound[i] + u_max;
        worst = std::max(worst, Int(y_max * y_max));
        worst = std::max(worst, Int(f.k[i] * y_max * y_max));
    }
    f.fits_int64 = worst < kInt64Limit;
    return f;
}

std::int64_t isqrt_i64(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t floor_div_i64(std::int64_t p, std::int64_t q) {
    std::int64_t quo = p / q, rem = p % q;
    if (rem != 0 && ((rem < 0) != (q < 0))) --quo;
    return quo;
}

std::int64_t ceil_div_i64(std::int64_t p, std::int64_t q) { return -floor_div_i64(-p, q); }

template <typename T>
struct IntOps;

template <>
struct IntOps<std::int64_t> {
    static std::int64_t from(const Int& v) { return static_cast<std::int64_t>(v); }
    static std::int64_t isqrt(std::int64_t v) { return isqrt_i64(v); }
    static std::int64_t fdiv(std::int64_t p, std::int64_t q) { return floor_div_i64(p, q); }
    static std::int64_t cdiv(std::int64_t p, std::int64_t q) { return ceil_div_i64(p, q); }
};

template <>
struct IntOps<Int> {
    static Int from(const Int& v) { return v; }
    static Int isqrt(const Int& v) { return spectra::isqrt(v); }
    static Int fdiv(const Int& p, const Int& q) { return floor_div(p, q); }
    static Int cdiv(const Int& p, const Int& q) { return ceil_div(p, q); }
};

/// Depth-first walk over all solutions of sum K_i (M_i x_i + U_i)^2 <= bound*scale,
/// coordinates fixed from level n-1 down to 0. The sink sees the integer
/// value x^T A x and the coordinates. Offsets U_i are maintained
/// incrementally: partial_[l][i] = sum_{j >= i} w[l][j] x_j.
template <typename T, typename Sink>
class Walker {
  public:
    Walker(const ScaledForm& f, Sink sink) : sink_(std::move(sink)), n_(f.n) {
        k_.resize(n_);
        m_.resize(n_);
        w_.assign(n_, std::vector<T>(n_, T(0)));
        for (int i = 0; i < n_; ++i) {
            k_[i] = IntOps<T>::from(f.k[i]);
            m_[i] = IntOps<T>::from(f.m[i]);
            for (int j = i + 1; j < n_; ++j) w_[i][j] = IntOps<T>::from(f.w[i][j]);
        }
        budget_ = IntOps<T>::from(f.bound * f.scale);
        scale_ = IntOps<T>::from(f.scale);
        x_.assign(n_, 0);
        partial_.assign(n_, std::vector<T>(n_ + 1, T(0)));
    }

    /// Runs the full tree, or, at the top level only, the slice with
    /// x_{n-1} in [top_lo, top_hi].
    void run(long long top_lo, long long top_hi) {
        const int i = n_ - 1;
        for (long long v = top_lo; v <= top_hi; ++v) {
            T y = m_[i] * T(v);
            T used = k_[i] * y * y;
            if (used > budget_) continue;
            x_[i] = v;
            if (i == 0) {
                sink_(static_cast<long long>(used / scale_), x_);
                continue;
            }
            assign(i, v);
            descend(i - 1, budget_ - used);
        }
    }

    std::pair<long long, long long> top_range() const {
        const int i = n_ - 1;
        T body = IntOps<T>::fdiv(budget_, k_[i]);
        T yb = IntOps<T>::isqrt(body);
        long long lo = static_cast<long long>(IntOps<T>::cdiv(-yb, m_[i]));
        long long hi = static_cast<long long>(IntOps<T>::fdiv(yb, m_[i]));
        return {lo, hi};
    }

  private:
    void assign(int i, long long v) {
        for (int l = 0; l < i; ++l) partial_[l][i] = partial_[l][i + 1] + w_[l][i] * T(v);
    }

    void descend(int i, T rem) {
        const T& u = partial_[i][i + 1];
        T body = IntOps<T>::fdiv(rem, k_[i]);
        T yb = IntOps<T>::isqrt(body);
        long long lo = static_cast<long long>(IntOps<T>::cdiv(-yb - u, m_[i]));
        long long hi = static_cast<long long>(IntOps<T>::fdiv(yb - u, m_[i]));
        if (i == 0) {
            T y = m_[0] * T(lo) + u;
            for (long long v = lo; v <= hi; ++v, y += m_[0]) {
                T slack = rem - k_[0] * y * y;
                x_[0] = v;
                sink_(static_cast<long long>((budget_ - slack) / scale_), x_);
            }
            return;
        }
        for (long long v = lo; v <= hi; ++v) {
            T y = m_[i] * T(v) + u;
            T used = k_[i] * y * y;
            if (used > rem) continue;  // endpoints are exact, but keep the guard
            x_[i] = v;
            assign(i, v);
            descend(i - 1, rem - used);
        }
        x_[i] = 0;
    }

    Sink sink_;
    int n_;
    std::vector<T> k_, m_;
    std::vector<std::vector<T>> w_;
    std::vector<long long> x_;
    std::vector<std::vector<T>> partial_;
    T budget_, scale_;
};

/// Counts per integer value of x^T A x, dense in [0, bound].
std::vector<Int> count_dense(const RatMat& gram, const Rational& cutoff, bool partitioned) {
    ScaledForm f = build_scaled_form(gram, cutoff);
    auto bound_ll = static_cast<long long>(f.bound);
    if (f.n == 0) throw std::domain_error("enumeration requires dimension >= 1");

    auto run_slice = [&](long long lo, long long hi, std::vector<Int>& counts) {
        if (f.fits_int64) {
            std::vector<long long> fast(bound_ll + 1, 0);
            auto sink = [&fast](long long value, const std::vector<long long>&) { ++fast[value]; };
            Walker<std::int64_t, decltype(sink)> walker(f, sink);
            walker.run(lo, hi);
            for (long long v = 0; v <= bound_ll; ++v) counts[v] += fast[v];
        } else {
            auto sink = [&counts](long long value, const std::vector<long long>&) { ++counts[value]; };
            Walker<Int, decltype(sink)> walker(f, sink);
            walker.run(lo, hi);
        }
    };

    std::pair<long long, long long> top;
    {
        auto sink = [](long long, const std::vector<long long>&) {};
        Walker<Int, decltype(sink)> probe(f, sink);
        top = probe.top_range();
    }

    std::vector<Int> total(bound_ll + 1, Int(0));
    if (!partitioned || top.second - top.first < 8) {
        run_slice(top.first, top.second, total);
        return total;
    }

    // Fixed chunk decomposition over the first coordinate's range; partial
    // counts combine additively and the result is independent of the
    // partitioning (exact integer counts).
    const long long span = top.second - top.first + 1;
    const long long chunks = std::min<long long>(span, 64);
    std::vector<std::vector<Int>> partial(chunks, std::vector<Int>(bound_ll + 1, Int(0)));
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < chunks; ++c) {
        long long lo = top.first + c * span / chunks;
        long long hi = top.first + (c + 1) * span / chunks - 1;
        run_slice(lo, hi, partial[c]);
    }
    for (long long c = 0; c < chunks; ++c)
        for (long long v = 0; v <= bound_ll; ++v) total[v] += partial[c][v];
    return total;
}

void require_integer_pd(const GramMatrix& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (!is_integer(g.entries(i, j)))
                throw std::domain_error("operation requires an integer Gram matrix");
}

RepresentationTable table_impl(const GramMatrix& g, const Int& t_max, bool partitioned) {
    require_integer_pd(g);
    if (t_max < 0) throw std::domain_error("representation table needs t_max >= 0");
    auto counts = count_dense(g.entries, Rational(t_max), partitioned);
    RepresentationTable table{g, t_max, {}};
    for (long long v = 0; v < static_cast<long long>(counts.size()); ++v)
        table.entries[Int(v)] = counts[v];
    return table;
}

}  // namespace

Int RepresentationTable::at(const Int& t) const {
    auto it = entries.find(t);
    return it == entries.end() ? Int(0) : it->second;
}

bool RepresentationTable::counts_equal(const RepresentationTable& other) const {
    return t_max == other.t_max && entries == other.entries;
}

Int representation_number(const GramMatrix& g, const Int& t) {
    require_integer_pd(g);
    if (t < 0) throw std::domain_error("representation number needs t >= 0");
    auto counts = count_dense(g.entries, Rational(t), true);
    return counts[static_cast<long long>(t)];
}

RepresentationTable representation_table(const GramMatrix& g, const Int& t_max) {
    return table_impl(g, t_max, true);
}

RepresentationTable representation_table_serial(const GramMatrix& g, const Int& t_max) {
    return table_impl(g, t_max, false);
}

std::vector<std::pair<Rational, Int>> value_lines_impl(const RatMat& gram, const Rational& cutoff,
                                                       bool partitioned) {
    ScaledForm probe = build_scaled_form(gram, cutoff);
    auto counts = count_dense(gram, cutoff, partitioned);
    std::vector<std::pair<Rational, Int>> lines;
    for (long long v = 0; v < static_cast<long long>(counts.size()); ++v)
        if (counts[v] > 0) lines.emplace_back(Rational(Int(v), probe.denom), counts[v]);
    return lines;  // increasing in v, hence in value
}

std::vector<std::pair<Rational, Int>> value_lines(const RatMat& gram, const Rational& cutoff) {
    return value_lines_impl(gram, cutoff, true);
}

std::vector<std::pair<Rational, Int>> value_lines_serial(const RatMat& gram,
                                                         const Rational& cutoff) {
    return value_lines_impl(gram, cutoff, false);
}

std::vector<std::pair<Int, std::vector<long long>>> short_vectors(const GramMatrix& g,
                                                                  const Int& bound) {
    require_integer_pd(g);
    ScaledForm f = build_scaled_form(g.entries, Rational(bound));
    std::vector<std::pair<Int, std::vector<long long>>> out;
    auto sink = [&out](long long value, const std::vector<long long>& x) {
        if (value == 0) return;
        int lead = -1;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) { lead = static_cast<int>(i); break; }
        // the mirror image of every solution is also enumerated; keep the
        // sign with positive leading coordinate
        if (x[lead] < 0) return;
        out.emplace_back(Int(value), x);
    };
    if (f.fits_int64) {
        Walker<std::int64_t, decltype(sink)> walker(f, sink);
        auto top = walker.top_range();
        walker.run(top.first, top.second);
    } else {
        Walker<Int, decltype(sink)> walker(f, sink);
        auto top = walker.top_range();
        walker.run(top.first, top.second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spectra::lattices
