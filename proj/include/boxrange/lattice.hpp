#pragma once

// Exact integer linear algebra over arbitrary-precision integers: row
// Hermite normal form, integer kernel lattices, and rational sign-pattern
// feasibility inside a kernel subspace.

#include "boxrange/frame.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxrange {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntegerVector = std::vector<Integer>;

template <typename T> class BasicMatrix {
  public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    BasicMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long long x : row)
                data_.emplace_back(x);
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static BasicMatrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
        BasicMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw std::invalid_argument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    std::vector<T> operator*(std::span<const T> x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<T> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                y[r] += (*this)(r, c) * x[c];
        return y;
    }

    friend BasicMatrix operator*(const BasicMatrix &a, const BasicMatrix &b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        BasicMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    friend bool operator==(const BasicMatrix &, const BasicMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = BasicMatrix<Integer>;

/// K x K 0/1 adjacency matrix E, rows indexed by source world.
inline IntegerMatrix adjacency_matrix(const KripkeFrame &frame) {
    const std::size_t k = frame.world_count();
    IntegerMatrix e(k, k);
    for (const auto &[from, to] : frame.edges())
        e(from - 1, to - 1) = 1;
    return e;
}

namespace detail {

template <typename T> struct Bezout {
    T gcd, x, y; // x*a + y*b = gcd >= 0
};

template <typename T> Bezout<T> extended_gcd(const T &a, const T &b) {
    T old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        T q = old_r / r;
        T tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

template <typename T> T floor_div(const T &a, const T &b) {
    T q = a / b; // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

template <typename T>
void combine_rows(BasicMatrix<T> &m, std::size_t i, std::size_t j, const T &a, const T &b,
                  const T &c, const T &d) {
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
    for (std::size_t col = 0; col < m.cols(); ++col) {
        T ri = m(i, col), rj = m(j, col);
        m(i, col) = a * ri + b * rj;
        m(j, col) = c * ri + d * rj;
    }
}

template <typename T> void swap_rows(BasicMatrix<T> &m, std::size_t i, std::size_t j) {
    for (std::size_t col = 0; col < m.cols(); ++col)
        std::swap(m(i, col), m(j, col));
}

template <typename T> void negate_row(BasicMatrix<T> &m, std::size_t i) {
    for (std::size_t col = 0; col < m.cols(); ++col)
        m(i, col) = -m(i, col);
}

template <typename T>
void subtract_multiple(BasicMatrix<T> &m, std::size_t target, std::size_t source, const T &q) {
    for (std::size_t col = 0; col < m.cols(); ++col)
        m(target, col) -= q * m(source, col);
}

} // namespace detail

template <typename T> struct HermiteDecomposition {
    BasicMatrix<T> hermite;    // H
    BasicMatrix<T> transform;  // U, unimodular, U * M = H
    std::vector<std::size_t> pivots; // pivot column of each nonzero row of H
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Row Hermite normal form: H is in row echelon form with positive pivots and
/// every entry above a pivot reduced into [0, pivot).
template <typename T> HermiteDecomposition<T> hermite_normal_form(const BasicMatrix<T> &m) {
    BasicMatrix<T> h = m;
    BasicMatrix<T> u = BasicMatrix<T>::identity(m.rows());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        for (std::size_t r = row + 1; r < h.rows(); ++r) {
            if (h(r, col) == 0)
                continue;
            const T a = h(row, col);
            const T b = h(r, col);
            if (a == 0) {
                detail::swap_rows(h, row, r);
                detail::swap_rows(u, row, r);
                continue;
            }
            T x, y, g;
            if (b % a == 0) {
                g = a < 0 ? T(-a) : a;
                x = a < 0 ? -1 : 1;
                y = 0;
            } else {
                auto bz = detail::extended_gcd(a, b);
                g = bz.gcd;
                x = bz.x;
                y = bz.y;
            }
            const T c = -b / g;
            const T d = a / g; // x*d - y*c == 1
            detail::combine_rows(h, row, r, x, y, c, d);
            detail::combine_rows(u, row, r, x, y, c, d);
        }
        if (h(row, col) == 0)
            continue;
        if (h(row, col) < 0) {
            detail::negate_row(h, row);
            detail::negate_row(u, row);
        }
        const T pivot = h(row, col);
        for (std::size_t above = 0; above < row; ++above) {
            const T q = detail::floor_div(h(above, col), pivot);
            if (q != 0) {
                detail::subtract_multiple(h, above, row, q);
                detail::subtract_multiple(u, above, row, q);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(h), std::move(u), std::move(pivots)};
}

inline std::size_t rank(const IntegerMatrix &m) { return hermite_normal_form(m).rank(); }

/// Z-basis of an integer kernel lattice, kept in Hermite normal form.
struct LatticeBasis {
    std::size_t dimension = 0; // ambient K
    std::vector<IntegerVector> vectors;
    std::vector<std::size_t> pivots; // pivot coordinate of each vector

    std::size_t size() const noexcept { return vectors.size(); }
    bool empty() const noexcept { return vectors.empty(); }

    LatticeBasis negated() const {
        LatticeBasis out = *this;
        for (auto &v : out.vectors)
            for (auto &x : v)
                x = -x;
        return out;
    }

    friend bool operator==(const LatticeBasis &, const LatticeBasis &) = default;
};

/// Canonical form of the lattice spanned by `generators`: the nonzero rows
/// of their Hermite normal form.
inline LatticeBasis lattice_from_generators(std::size_t dimension,
                                            std::span<const IntegerVector> generators) {
    LatticeBasis basis;
    basis.dimension = dimension;
    if (generators.empty())
        return basis;
    auto hnf = hermite_normal_form(IntegerMatrix::from_rows(generators, dimension));
    for (std::size_t r = 0; r < hnf.rank(); ++r)
        basis.vectors.push_back(hnf.hermite.row(r));
    basis.pivots = std::move(hnf.pivots);
    return basis;
}

/// Z-basis of { x in Z^cols : M x = 0 }. Rows of U paired with zero rows of
/// the Hermite form of M^t span the kernel over Z because U is unimodular.
inline LatticeBasis kernel_basis(const IntegerMatrix &m) {
    auto hnf = hermite_normal_form(m.transpose());
    std::vector<IntegerVector> generators;
    for (std::size_t r = hnf.rank(); r < hnf.transform.rows(); ++r)
        generators.push_back(hnf.transform.row(r));
    return lattice_from_generators(m.cols(), generators);
}

/// ker(E^t) for the frame's adjacency matrix E.
inline LatticeBasis frame_kernel(const KripkeFrame &frame) {
    return kernel_basis(adjacency_matrix(frame).transpose());
}

/// alpha is an integer combination of the basis vectors. Reduces alpha
/// against the echelon basis; the coefficient at every pivot must divide.
inline bool in_kernel_lattice(const LatticeBasis &basis, std::span<const Integer> alpha) {
    if (alpha.size() != basis.dimension)
        throw std::invalid_argument("vector length " + std::to_string(alpha.size()) +
                                    " does not match lattice dimension " +
                                    std::to_string(basis.dimension));
    IntegerVector rest(alpha.begin(), alpha.end());
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < basis.dimension; ++col) {
        if (rest[col] == 0)
            continue;
        while (next_pivot < basis.size() && basis.pivots[next_pivot] < col)
            ++next_pivot;
        if (next_pivot == basis.size() || basis.pivots[next_pivot] != col)
            return false;
        const auto &v = basis.vectors[next_pivot];
        if (rest[col] % v[col] != 0)
            return false;
        const Integer q = rest[col] / v[col];
        for (std::size_t i = col; i < basis.dimension; ++i)
            rest[i] -= q * v[i];
    }
    return true;
}

inline bool in_kernel_lattice(const LatticeBasis &basis, std::initializer_list<long long> alpha) {
    IntegerVector v(alpha.begin(), alpha.end());
    return in_kernel_lattice(basis, v);
}

namespace detail {

// coeffs . c <= bound, integer data, content-normalized.
struct Inequality {
    IntegerVector coeffs;
    Integer bound;

    friend bool operator==(const Inequality &, const Inequality &) = default;
};

inline void normalize(Inequality &q) {
    Integer g = boost::multiprecision::abs(q.bound);
    for (const auto &c : q.coeffs)
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g > 1) {
        for (auto &c : q.coeffs)
            c /= g;
        q.bound /= g;
    }
}

inline bool is_zero(const IntegerVector &v) {
    return std::ranges::all_of(v, [](const Integer &x) { return x == 0; });
}

// Drops trivial rows and keeps the tightest bound per coefficient vector.
// Returns false when some row reads 0 <= negative.
inline bool tidy(std::vector<Inequality> &system) {
    std::map<IntegerVector, Integer> tightest;
    for (auto &q : system) {
        if (is_zero(q.coeffs)) {
            if (q.bound < 0)
                return false;
            continue;
        }
        normalize(q);
        auto [it, inserted] = tightest.try_emplace(q.coeffs, q.bound);
        if (!inserted && q.bound < it->second)
            it->second = q.bound;
    }
    system.clear();
    for (auto &[coeffs, bound] : tightest)
        system.push_back({coeffs, bound});
    return true;
}

/// Rational feasibility of { c : A c <= b } by Fourier-Motzkin elimination.
inline bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t variables) {
    if (!tidy(system))
        return false;
    std::vector<bool> eliminated(variables, false);
    for (std::size_t round = 0; round < variables && !system.empty(); ++round) {
        // Pick the variable whose elimination creates the fewest rows.
        std::size_t best = variables;
        long long best_growth = 0;
        for (std::size_t v = 0; v < variables; ++v) {
            if (eliminated[v])
                continue;
            std::size_t pos = 0, neg = 0;
            for (const auto &q : system) {
                if (q.coeffs[v] > 0)
                    ++pos;
                else if (q.coeffs[v] < 0)
                    ++neg;
            }
            const auto growth = static_cast<long long>(pos * neg) -
                                static_cast<long long>(pos + neg);
            if (best == variables || growth < best_growth) {
                best = v;
                best_growth = growth;
            }
        }
        eliminated[best] = true;
        std::vector<Inequality> next, positive, negative;
        for (auto &q : system) {
            if (q.coeffs[best] > 0)
                positive.push_back(std::move(q));
            else if (q.coeffs[best] < 0)
                negative.push_back(std::move(q));
            else
                next.push_back(std::move(q));
        }
        for (const auto &p : positive) {
            for (const auto &n : negative) {
                const Integer wp = -n.coeffs[best];
                const Integer wn = p.coeffs[best];
                Inequality sum;
                sum.coeffs.resize(variables);
                for (std::size_t i = 0; i < variables; ++i)
                    sum.coeffs[i] = wp * p.coeffs[i] + wn * n.coeffs[i];
                sum.bound = wp * p.bound + wn * n.bound;
                next.push_back(std::move(sum));
            }
        }
        if (!tidy(next))
            return false;
        system = std::move(next);
    }
    return true;
}

// sign_feasible with the support S given as a 0-based bit mask and j 0-based.
inline bool sign_feasible_mask(const LatticeBasis &basis, std::uint64_t support, std::size_t j) {
    const std::size_t d = basis.size();
    if (d == 0)
        return false;
    std::vector<Inequality> system;
    for (std::size_t i = 0; i < basis.dimension; ++i) {
        if ((support >> i) & 1U)
            continue;
        Inequality q;
        q.coeffs.reserve(d);
        for (const auto &v : basis.vectors)
            q.coeffs.push_back(v[i]);
        q.bound = (i == j) ? Integer(-1) : Integer(0);
        system.push_back(std::move(q));
    }
    return fourier_motzkin_feasible(std::move(system), d);
}

} // namespace detail

/// Is there a rational alpha in the span of `basis` with alpha_i <= 0 off S
/// and alpha_j <= -1? Clearing denominators turns a rational witness into an
/// integer kernel vector whose positive part lives on S and whose negative
/// part contains j. S and j are 1-based world indices; j must lie outside S.
inline bool sign_feasible(const LatticeBasis &basis, std::span<const World> support, World j) {
    if (basis.dimension > Caps::max_mask_bits)
        throw CapExceeded("sign_feasible", Caps::max_mask_bits, basis.dimension);
    if (j < 1 || j > basis.dimension)
        throw FrameError("index " + std::to_string(j) + " outside 1.." +
                         std::to_string(basis.dimension));
    std::uint64_t mask = 0;
    for (World w : support) {
        if (w < 1 || w > basis.dimension)
            throw FrameError("index " + std::to_string(w) + " outside 1.." +
                             std::to_string(basis.dimension));
        mask |= std::uint64_t{1} << (w - 1);
    }
    if ((mask >> (j - 1)) & 1U)
        throw std::invalid_argument("j must not belong to S");
    return detail::sign_feasible_mask(basis, mask, j - 1);
}

inline bool sign_feasible(const LatticeBasis &basis, std::initializer_list<World> support, World j) {
    return sign_feasible(basis, std::span<const World>(support.begin(), support.size()), j);
}

} // namespace boxrange
