#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coho/gf2.hpp"

using namespace coho::gf2;

namespace {

BitMatrix from_strings(const std::vector<std::string>& rows) {
    BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == '1') m.set(r, c, true);
    return m;
}

BitVec vec_from_bits(std::uint64_t bits, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((bits >> i) & 1) v.set(i, true);
    return v;
}

// Naive elimination oracle: row space dimension by repeated pivoting over a
// dense 0/1 table, no packing tricks.
std::size_t naive_rank(const BitMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("row_reduce identity and zero") {
    auto id = BitMatrix::identity(3);
    auto rr = row_reduce(id);
    CHECK(rr.mat == id);
    CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    CHECK(rr.rank == 3);

    BitMatrix z(2, 4);
    auto rz = row_reduce(z);
    CHECK(rz.mat == z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivot_cols.empty());
}

TEST_CASE("row_reduce rank with dependent rows") {
    // rows {1101, 0110, 1011}: row3 = row1 + row2
    auto m = from_strings({"1101", "0110", "1011"});
    auto rr = row_reduce(m);
    CHECK(rr.rank == 2);
    CHECK(naive_rank(m) == 2);
}

TEST_CASE("row_reduce is idempotent (random)") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12);
        auto once = row_reduce(m).mat;
        auto twice = row_reduce(once).mat;
        CHECK(once == twice);
        CHECK(row_reduce(m).rank == naive_rank(m));
    }
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace_basis(BitMatrix::identity(4)).dim() == 0);
    auto full = nullspace_basis(BitMatrix(3, 5));
    CHECK(full.dim() == 5);

    auto m = from_strings({"11"});
    auto ns = nullspace_basis(m);
    REQUIRE(ns.dim() == 1);
    CHECK(ns.basis_vector(0) == vec_from_bits(0b11, 2));
    // exhaustive over the 4 vectors of F2^2
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
        BitVec v = vec_from_bits(bits, 2);
        bool in_kernel = m.apply(v).is_zero();
        CHECK(ns.contains(v) == in_kernel);
    }
}

TEST_CASE("nullspace: kernel property and dimension formula (random)") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 10;
        auto m = random_matrix(rng, rows, cols);
        auto ns = nullspace_basis(m);
        CHECK(ns.dim() + row_reduce(m).rank == cols);
        for (std::size_t i = 0; i < ns.dim(); ++i)
            CHECK(m.apply(ns.basis_vector(i)).is_zero());
    }
}

TEST_CASE("equalizer_basis") {
    std::mt19937_64 rng(3);
    auto a = random_matrix(rng, 3, 5);
    CHECK(equalizer_basis(a, a).dim() == 5);  // a = b: full domain

    CHECK(equalizer_basis(BitMatrix::identity(3), BitMatrix(3, 3)).dim() == 0);

    // two random 4x6 matrices, against exhaustive scan of all 64 vectors
    auto m1 = random_matrix(rng, 4, 6), m2 = random_matrix(rng, 4, 6);
    auto eq = equalizer_basis(m1, m2);
    CHECK(eq == nullspace_basis(m1 ^ m2));
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
        BitVec v = vec_from_bits(bits, 6);
        bool equal = m1.apply(v) == m2.apply(v);
        CHECK(eq.contains(v) == equal);
        count += equal;
    }
    CHECK((std::uint64_t{1} << eq.dim()) == count);

    CHECK_THROWS(equalizer_basis(BitMatrix(2, 3), BitMatrix(3, 2)));
}

TEST_CASE("intersect_subspaces") {
    auto full = SubspaceBasis::full(4);
    CHECK(intersect_subspaces({full, full}, 4) == full);
    CHECK(intersect_subspaces({}, 7).dim() == 7);

    // two distinct lines in F2^2
    auto l1 = SubspaceBasis::from_span({vec_from_bits(0b01, 2)}, 2);
    auto l2 = SubspaceBasis::from_span({vec_from_bits(0b10, 2)}, 2);
    CHECK(intersect_subspaces({l1, l2}, 2).dim() == 0);

    // three random subspaces of F2^6 vs exhaustive intersection over 64 vectors
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        std::vector<SubspaceBasis> spaces;
        for (int s = 0; s < 3; ++s) {
            std::vector<BitVec> span;
            std::size_t k = 1 + rng() % 4;
            for (std::size_t i = 0; i < k; ++i) span.push_back(vec_from_bits(rng() & 63, 6));
            spaces.push_back(SubspaceBasis::from_span(span, 6));
        }
        auto inter = intersect_subspaces(spaces, 6);
        for (std::uint64_t bits = 0; bits < 64; ++bits) {
            BitVec v = vec_from_bits(bits, 6);
            bool in_all = true;
            for (const auto& s : spaces) in_all = in_all && s.contains(v);
            CHECK(inter.contains(v) == in_all);
        }
    }
}

TEST_CASE("solve_linear") {
    auto id = BitMatrix::identity(3);
    BitVec rhs = vec_from_bits(0b101, 3);
    auto x = solve_linear(id, rhs);
    REQUIRE(x.has_value());
    CHECK(*x == rhs);

    BitMatrix z(2, 3);
    CHECK_FALSE(solve_linear(z, vec_from_bits(0b1, 2)).has_value());
    CHECK(solve_linear(z, BitVec(2)).has_value());

    // (1 1; 0 1), rhs (1,1) -> (0,1)
    auto m = from_strings({"11", "01"});
    auto sol = solve_linear(m, vec_from_bits(0b11, 2));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == vec_from_bits(0b11, 2));
    CHECK(*sol == vec_from_bits(0b10, 2));  // x = (0,1): bit1 set

    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        auto a = random_matrix(rng, 2 + rng() % 6, 2 + rng() % 6);
        BitVec v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v.set(i, rng() & 1);
        BitVec b = a.apply(v);
        auto s = solve_linear(a, b);
        REQUIRE(s.has_value());
        CHECK(a.apply(*s) == b);
    }
}

TEST_CASE("complement_in") {
    auto full = SubspaceBasis::full(4);
    auto line = SubspaceBasis::from_span({vec_from_bits(0b1100, 4)}, 4);
    auto extra = complement_in(full, line);
    CHECK(extra.size() == 3);
    std::vector<BitVec> all{line.basis_vector(0)};
    for (auto& v : extra) all.push_back(v);
    CHECK(SubspaceBasis::from_span(all, 4).dim() == 4);
}
