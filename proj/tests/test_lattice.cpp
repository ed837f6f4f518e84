#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primlat/blocks.hpp"
#include "primlat/lattice.hpp"

using namespace primlat;

namespace {

Lattice diag_lattice(const std::vector<int>& entries) {
  IMat g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return Lattice(g);
}

}  // namespace

TEST_CASE("construction validates symmetry and non-degeneracy") {
  REQUIRE_NOTHROW(Lattice(IMat{{0, 1}, {1, 0}}));
  REQUIRE_THROWS_MATCHES(Lattice(IMat{{0, 1}, {2, 0}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::non_symmetric;
                         }));
  REQUIRE_THROWS_MATCHES(Lattice(IMat{{0, 0}, {0, 1}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::degenerate;
                         }));
}

TEST_CASE("rank, determinant and signature of the standard blocks") {
  Lattice u = standard(NamedDecomposition::parse("U"));
  REQUIRE(u.rank() == 2);
  REQUIRE(u.det() == -1);
  REQUIRE(u.signature() == Signature{1, 1});
  REQUIRE(u.parity() == Parity::even);

  Lattice e8 = standard(NamedDecomposition::parse("E8"));
  REQUIRE(e8.rank() == 8);
  REQUIRE(e8.det() == 1);
  REQUIRE(e8.signature() == Signature{8, 0});
  REQUIRE(e8.parity() == Parity::even);

  Lattice a2 = standard(NamedDecomposition::parse("A2"));
  REQUIRE(a2.det() == 3);

  // remaining root lattices: classical determinants
  REQUIRE(standard(NamedDecomposition::parse("A4")).det() == 5);
  REQUIRE(standard(NamedDecomposition::parse("D4")).det() == 4);
  REQUIRE(standard(NamedDecomposition::parse("D5")).det() == 4);
  REQUIRE(standard(NamedDecomposition::parse("E6")).det() == 3);
  REQUIRE(standard(NamedDecomposition::parse("E7")).det() == 2);

  Lattice k3 = standard(NamedDecomposition::parse("U^3 + E8(-1)^2"));
  REQUIRE(k3.rank() == 22);
  REQUIRE(k3.signature() == Signature{3, 19});
  REQUIRE(k3.parity() == Parity::even);
}

TEST_CASE("scale") {
  Lattice e8m = scale(standard(NamedDecomposition::parse("E8")), -1);
  REQUIRE(e8m.signature() == Signature{0, 8});
  REQUIRE(e8m.parity() == Parity::even);

  Lattice m8 = scale(diag_lattice({1}), -8);
  REQUIRE(m8.gram()(0, 0) == -8);

  Lattice u2 = scale(standard(NamedDecomposition::parse("U")), 2);
  REQUIRE(u2.gram() == IMat{{0, 2}, {2, 0}});
  REQUIRE(u2.det() == -4);

  REQUIRE_THROWS_MATCHES(scale(diag_lattice({1}), 0), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::zero_scale;
                         }));
}

TEST_CASE("orthogonal sums add signatures and multiply determinants") {
  Lattice u = standard(NamedDecomposition::parse("U"));
  Lattice uu = orthogonal_sum(u, u);
  REQUIRE(uu.rank() == 4);
  REQUIRE(uu.det() == 1);

  Lattice ex2 = standard(NamedDecomposition::parse("<2> + U + E8(-1)"));
  REQUIRE(ex2.signature() == Signature{2, 9});
  REQUIRE(ex2.det() == -2);

  Lattice pm = orthogonal_sum(diag_lattice({1}), diag_lattice({-1}));
  REQUIRE(pm.det() == -1);
  REQUIRE(pm.parity() == Parity::odd);

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 3, m = 1 + (trial / 2) % 3;
    IMat a(n, n), b(m, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = d(rng);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) b(i, j) = b(j, i) = d(rng);
    if (det(a) == 0 || det(b) == 0) continue;
    Lattice la(a), lb(b);
    Lattice sum = orthogonal_sum(la, lb);
    REQUIRE(sum.det() == la.det() * lb.det());
    Signature ssig = sum.signature();
    Signature expect = la.signature() + lb.signature();
    REQUIRE(ssig == expect);
  }
}

TEST_CASE("parity agrees with exhaustive x.x parity over 0/1 vectors") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 4;
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (det(g) == 0) continue;
    Lattice l(g);
    bool all_even = true;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      IVec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
      if (norm_of(l, x) % 2 != 0) { all_even = false; break; }
    }
    REQUIRE((l.parity() == Parity::even) == all_even);
  }
}

TEST_CASE("characteristic elements") {
  Lattice l111 = diag_lattice({1, 1, 1});
  REQUIRE(is_characteristic(l111, {2, 2, 2}));
  REQUIRE(is_characteristic(l111, {1, 1, 1}));
  REQUIRE_FALSE(is_characteristic(l111, {1, 0, 0}));

  Lattice u = standard(NamedDecomposition::parse("U"));
  REQUIRE(is_characteristic(u, {0, 0}));

  REQUIRE(find_characteristic(l111) == IVec{1, 1, 1});
  REQUIRE(find_characteristic(u) == IVec{0, 0});
  Lattice l21 = diag_lattice({2, 1});
  REQUIRE(find_characteristic(l21) == IVec{0, 1});

  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (det(g) == 0 || det(g) % 2 == 0) continue;
    Lattice l(g);
    IVec c = find_characteristic(l);
    REQUIRE(is_characteristic(l, c));
  }
}

TEST_CASE("two characteristic solutions differ by an element of 2L* cap L") {
  // enumerate all 0/1 solutions for small odd-determinant lattices
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + trial % 3;
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (det(g) == 0 || det(g) % 2 == 0) continue;
    Lattice l(g);
    std::vector<IVec> sols;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      IVec c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1;
      if (is_characteristic(l, c)) sols.push_back(c);
    }
    REQUIRE_FALSE(sols.empty());
    for (const IVec& a : sols)
      for (const IVec& b : sols) {
        // difference lies in 2L* iff G*(a-b) has all even entries
        for (std::size_t i = 0; i < n; ++i) {
          Integer row = 0;
          for (std::size_t j = 0; j < n; ++j) row += g(i, j) * (a[j] - b[j]);
          REQUIRE(row % 2 == 0);
        }
      }
  }
}

TEST_CASE("primitivity is gcd of coordinates") {
  REQUIRE(is_primitive({1, 1}));
  REQUIRE_FALSE(is_primitive({2, 2, 2}));
  REQUIRE(is_primitive({3, 5}));
  REQUIRE_THROWS_MATCHES(is_primitive({0, 0}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::zero_vector;
                         }));
}

TEST_CASE("orthogonal complements of primitive vectors") {
  Lattice l = diag_lattice({1, 1, -1});
  ComplementResult c = orthogonal_complement(l, {1, 1, 1});
  REQUIRE(c.lattice.rank() == 2);
  REQUIRE(c.lattice.parity() == Parity::even);
  REQUIRE(abs_of(c.lattice.det()) == 1);
  REQUIRE(c.lattice.signature() == Signature{1, 1});

  Lattice ue8 = standard(NamedDecomposition::parse("U + E8(-1)"));
  IVec ef(10, Integer(0));
  ef[0] = 1;
  ef[1] = 1;
  ComplementResult enr = orthogonal_complement(ue8, ef);
  REQUIRE(enr.lattice.rank() == 9);
  REQUIRE(abs_of(enr.lattice.det()) == 2);
  REQUIRE(enr.lattice.parity() == Parity::even);
  REQUIRE(enr.lattice.signature() == Signature{0, 9});

  Lattice u = standard(NamedDecomposition::parse("U"));
  ComplementResult cu = orthogonal_complement(u, {1, 1});
  REQUIRE(cu.lattice.gram() == IMat{{-2}});

  REQUIRE_THROWS_MATCHES(orthogonal_complement(u, {2, 2}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::not_primitive;
                         }));
  REQUIRE_THROWS_MATCHES(orthogonal_complement(u, {1, 0}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::isotropic_vector;
                         }));
}

TEST_CASE("complement basis pairs to zero with v and is primitively embedded") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 3;
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (det(g) == 0) continue;
    Lattice l(g);
    IVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
    Integer content = 0;
    for (const Integer& x : v) content = gcd_of(content, x);
    if (content != 1) continue;
    if (norm_of(l, v) == 0) continue;
    ComplementResult c = orthogonal_complement(l, v);
    REQUIRE(c.lattice.rank() == n - 1);
    for (std::size_t j = 0; j < c.basis.cols(); ++j)
      REQUIRE(inner(l, v, c.basis.col(j)) == 0);
    SmithForm s = smith_normal_form(c.basis);
    for (std::size_t i = 0; i < s.rank; ++i) REQUIRE(s.d(i, i) == 1);
    if (l.unimodular()) REQUIRE(abs_of(c.lattice.det()) == abs_of(norm_of(l, v)));
  }
}

TEST_CASE("complement parity detects characteristic vectors in odd-determinant lattices") {
  // diagonal lattices, entries in {+-1, +-2, +-3}, only odd determinants
  std::vector<int> entries = {1, -1, 2, -2, 3, -3};
  for (int e0 : entries)
    for (int e1 : entries)
      for (int e2 : entries) {
        std::vector<int> diag = {e0, e1, e2};
        bool odd_det = (e0 * e1 * e2) % 2 != 0;
        if (!odd_det) continue;
        Lattice l = diag_lattice(diag);
        for (int a = -3; a <= 3; ++a)
          for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
              IVec v = {a, b, c};
              Integer content = gcd_of(gcd_of(Integer(a), Integer(b)), Integer(c));
              if (content != 1) continue;
              if (norm_of(l, v) == 0) continue;
              ComplementResult comp = orthogonal_complement(l, v);
              bool comp_even = comp.lattice.parity() == Parity::even;
              REQUIRE(comp_even == is_characteristic(l, v));
            }
      }
}
