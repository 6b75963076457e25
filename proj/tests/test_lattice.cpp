#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace boxrange;

namespace {

KripkeFrame symmetric_4cycle() {
    return build_frame(4, {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 1}, {4, 3}});
}

KripkeFrame reflexive_symmetric_4cycle() {
    return build_frame(4, {{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {2, 3},
                           {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 3}, {4, 4}});
}

KripkeFrame three_world() { return build_frame(3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}); }

IntegerVector ints(std::initializer_list<long long> xs) { return IntegerVector(xs.begin(), xs.end()); }

Rational determinant(const IntegerMatrix &m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m(i, j));
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t cc = c; cc < n; ++cc)
                a[r][cc] -= f * a[c][cc];
        }
    }
    return det;
}

IntegerMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int spread) {
    std::uniform_int_distribution<int> entry(-spread, spread);
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = entry(rng);
    return m;
}

void check_hermite_shape(const IntegerMatrix &m) {
    const auto d = hermite_normal_form(m);
    const auto &h = d.hermite;
    REQUIRE(d.transform * m == h);
    REQUIRE(abs(determinant(d.transform)) == 1);
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t lead = h.cols();
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h(r, c) != 0) {
                lead = c;
                break;
            }
        if (r >= d.rank()) {
            REQUIRE(lead == h.cols()); // zero rows at the bottom
            continue;
        }
        REQUIRE(lead == d.pivots[r]);
        if (r > 0)
            REQUIRE(lead > last_pivot);
        last_pivot = lead;
        REQUIRE(h(r, lead) > 0);
        for (std::size_t above = 0; above < r; ++above) {
            REQUIRE(h(above, lead) >= 0);
            REQUIRE(h(above, lead) < h(r, lead));
        }
    }
}

// Rational nullity computed independently of the Hermite code.
std::size_t nullity(const IntegerMatrix &m) { return oracle::rational_kernel(m).size(); }

// Primitive form of an integer vector.
IntegerVector primitive(IntegerVector v) {
    Integer g = 0;
    for (const auto &x : v)
        g = gcd(g, x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
    return v;
}

// Bounded oracle for sign_feasible: search kernel vectors with entries in
// [-bound, bound] for one whose positive part lies in S and with alpha_j < 0.
bool bounded_sign_witness(const std::vector<IntegerVector> &kernel_vectors, std::uint64_t s,
                          std::size_t j) {
    for (const auto &v : kernel_vectors) {
        if (v[j] >= 0)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i)
            if (!((s >> i) & 1U) && v[i] > 0)
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("hermite_normal_form examples") {
    const IntegerMatrix id{{1, 0}, {0, 1}};
    const auto a = hermite_normal_form(id);
    CHECK(a.hermite == id);
    CHECK(a.transform == id);

    const auto b = hermite_normal_form(IntegerMatrix{{2}, {4}});
    CHECK(b.hermite == IntegerMatrix{{2}, {0}});
    CHECK(b.transform == IntegerMatrix{{1, 0}, {-2, 1}});
    CHECK(b.rank() == 1);

    const auto c = hermite_normal_form(IntegerMatrix{{3, 5}, {2, 7}});
    CHECK(c.hermite(0, 0) == 1);
    CHECK(c.hermite(1, 0) == 0);
    CHECK(c.hermite(1, 1) == 11);
    CHECK(abs(determinant(c.transform)) == 1);

    const auto z = hermite_normal_form(IntegerMatrix(2, 3));
    CHECK(z.rank() == 0);
    CHECK(z.transform == IntegerMatrix::identity(2));
}

TEST_CASE("hermite_normal_form properties on random matrices") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const std::size_t rows = 1 + i % 6, cols = 1 + (i / 6) % 6;
        check_hermite_shape(random_matrix(rng, rows, cols, i % 3 == 0 ? 9 : 2));
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = 1 + i % 8;
        check_hermite_shape(adjacency_matrix(oracle::random_frame(rng, k)));
    }
}

TEST_CASE("kernel basis examples") {
    const auto sym = frame_kernel(symmetric_4cycle());
    const std::vector<IntegerVector> expected{ints({1, 0, -1, 0}), ints({0, 1, 0, -1})};
    CHECK(sym == lattice_from_generators(4, expected));
    CHECK(sym.size() == 2);

    CHECK(frame_kernel(reflexive_symmetric_4cycle()).empty());

    const auto three = frame_kernel(three_world());
    REQUIRE(three.size() == 1);
    CHECK(three.vectors[0] == ints({0, 0, 1}));

    CHECK(in_kernel_lattice(sym, {1, 0, -1, 0}));
    CHECK_FALSE(in_kernel_lattice(sym, {1, 1, 1, 1}));
    CHECK(in_kernel_lattice(sym, {0, 0, 0, 0}));
    CHECK(in_kernel_lattice(sym, {3, -2, -3, 2}));
    CHECK(in_kernel_lattice(frame_kernel(reflexive_symmetric_4cycle()), {0, 0, 0, 0}));
    CHECK_THROWS_AS(in_kernel_lattice(sym, {1, 0, -1}), std::invalid_argument);
}

TEST_CASE("kernel_basis lies in the kernel, is saturated and has the right size") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        const std::size_t k = 1 + i % 9;
        const auto f = oracle::random_frame(rng, k);
        const auto et = adjacency_matrix(f).transpose();
        const auto basis = frame_kernel(f);

        for (const auto &v : basis.vectors)
            REQUIRE(oracle::in_frame_kernel(f, v));
        REQUIRE(basis.size() == nullity(et));
        REQUIRE(basis.size() + rank(adjacency_matrix(f)) == k);

        // Rational solutions cleared of denominators, and primitive integer
        // combinations of them, are all lattice members.
        const auto solutions = oracle::rational_kernel(et);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (const auto &s : solutions)
            REQUIRE(in_kernel_lattice(basis, primitive(s)));
        if (!solutions.empty()) {
            IntegerVector combo(k, 0);
            for (const auto &s : solutions) {
                const int c = coef(rng);
                for (std::size_t x = 0; x < k; ++x)
                    combo[x] += c * s[x];
            }
            REQUIRE(in_kernel_lattice(basis, primitive(combo)));
            REQUIRE(in_kernel_lattice(basis, combo));
        }

        // Non-kernel vectors are rejected.
        IntegerVector probe(k);
        for (auto &x : probe)
            x = coef(rng);
        REQUIRE(in_kernel_lattice(basis, probe) == oracle::in_frame_kernel(f, probe));
    }
}

TEST_CASE("kernel_basis of general integer matrices") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const std::size_t rows = 1 + i % 4, cols = 1 + (i / 4) % 6;
        const auto m = random_matrix(rng, rows, cols, 4);
        const auto basis = kernel_basis(m);
        REQUIRE(basis.size() + rank(m) == cols);
        for (const auto &v : basis.vectors) {
            const auto image = m * std::span<const Integer>(v);
            for (const auto &x : image)
                REQUIRE(x == 0);
        }
        for (const auto &s : oracle::rational_kernel(m))
            REQUIRE(in_kernel_lattice(basis, primitive(s)));
    }
}

TEST_CASE("sign_feasible examples") {
    const auto sym = frame_kernel(symmetric_4cycle());
    CHECK(sign_feasible(sym, {1, 2, 4}, 3));
    CHECK_FALSE(sign_feasible(sym, {2, 4}, 3)); // forces alpha_1 <= 0 and alpha_1 = -alpha_3 >= 1
    CHECK_FALSE(sign_feasible(frame_kernel(reflexive_symmetric_4cycle()), {1}, 2));
    CHECK(sign_feasible(frame_kernel(three_world()), {1, 2}, 3));
    CHECK(sign_feasible(frame_kernel(three_world()), std::span<const World>{}, 3));
    CHECK_THROWS(sign_feasible(sym, {1, 3}, 3));
    CHECK_THROWS_AS(sign_feasible(sym, {1}, 5), FrameError);
}

TEST_CASE("sign_feasible against bounded enumeration") {
    // For K <= 5 every circuit of the kernel has entries at most 3 in size
    // (they are minors of a 0/1 matrix of order <= 4), and a feasible sign
    // pattern always has a circuit witness, so the bounded search is exact.
    std::mt19937_64 rng(34);
    int feasible_seen = 0;
    for (int i = 0; i < 60; ++i) {
        const std::size_t k = 2 + i % 4;
        const auto f = oracle::random_frame(rng, k, 0.35);
        const auto basis = frame_kernel(f);
        const auto witnesses = oracle::bounded_kernel_vectors(f, 3);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s)
            for (std::size_t j = 0; j < k; ++j) {
                if ((s >> j) & 1U)
                    continue;
                const bool fm = detail::sign_feasible_mask(basis, s, j);
                REQUIRE(fm == bounded_sign_witness(witnesses, s, j));
                REQUIRE(fm == detail::sign_feasible_mask(basis.negated(), s, j));
                feasible_seen += fm;
            }
    }
    CHECK(feasible_seen > 0);
}

TEST_CASE("sign_feasible is monotone in S") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = 2 + i % 7;
        const auto basis = frame_kernel(oracle::random_frame(rng, k, 0.3));
        const std::uint64_t full = Valuation::full_mask(k);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t j = rng() % k;
            const std::uint64_t bit = std::uint64_t{1} << j;
            const std::uint64_t s = rng() & full & ~bit;
            const std::uint64_t bigger = (s | rng()) & full & ~bit;
            if (detail::sign_feasible_mask(basis, s, j))
                REQUIRE(detail::sign_feasible_mask(basis, bigger, j));
        }
    }
}

TEST_CASE("fourier_motzkin_feasible on hand-made systems") {
    using detail::Inequality;
    // x <= -1, -x <= -2 (x >= 2): infeasible.
    CHECK_FALSE(detail::fourier_motzkin_feasible({{ints({1}), -1}, {ints({-1}), -2}}, 1));
    // x + y <= 0, -x <= -1, -y <= 3: feasible (x = 1, y = -1).
    CHECK(detail::fourier_motzkin_feasible(
        {{ints({1, 1}), 0}, {ints({-1, 0}), -1}, {ints({0, -1}), 3}}, 2));
    // 0 <= -1 alone.
    CHECK_FALSE(detail::fourier_motzkin_feasible({{ints({0, 0}), -1}}, 2));
    CHECK(detail::fourier_motzkin_feasible({}, 3));
    // 2x <= 1, -2x <= -1: x = 1/2 is a rational solution.
    CHECK(detail::fourier_motzkin_feasible({{ints({2}), 1}, {ints({-2}), -1}}, 1));
}
