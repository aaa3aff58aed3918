#include <random>

#include "doctest.h"
#include "yangian/roots.hpp"

using namespace yangian;

namespace {
const SuperSize SZ{2, 3};
}

TEST_CASE("positive_roots enumeration") {
  CHECK(positive_roots(SZ, 0).size() == 10);
  auto r1 = positive_roots(SZ, 1);
  CHECK(r1.size() == 31);
  for (const auto& r : positive_roots(SZ, 0)) CHECK(!r.imaginary);
  for (const auto& r : r1) CHECK(r.positive());
}

TEST_CASE("inner products from the Cartan matrix") {
  CHECK(inner_simple(SZ, 1, 2) == -1);
  CHECK(inner_simple(SZ, 1, 1) == 2);
  for (int j = 0; j < SZ.mn(); ++j) CHECK(inner_with_simple(SZ, AffineRoot::imag(1), j) == 0);
  // alpha_1 = eps_1 - eps_2 as a root
  CHECK(inner_with_simple(SZ, AffineRoot::real(1, 2, 0), 1) == 2);
  CHECK(inner_with_simple(SZ, AffineRoot::simple(SZ, 0), 0) == 0);
}

TEST_CASE("reflect matches the case form and is an involution") {
  // s_1(alpha_1) = -alpha_1
  CHECK(reflect(SZ, 1, AffineRoot::real(1, 2, 0)) == AffineRoot::real(2, 1, 0));
  // s_1(alpha_2) = alpha_1 + alpha_2
  CHECK(reflect(SZ, 1, AffineRoot::real(2, 3, 0)) == AffineRoot::real(1, 3, 0));
  // s_1(alpha_3) = alpha_3
  CHECK(reflect(SZ, 1, AffineRoot::real(3, 4, 0)) == AffineRoot::real(3, 4, 0));
  CHECK_THROWS(reflect(SZ, 0, AffineRoot::real(1, 2, 0)));
  CHECK_THROWS(reflect(SZ, SZ.m, AffineRoot::real(1, 2, 0)));

  for (const auto& r : positive_roots(SZ, 2))
    for (int i = 1; i < SZ.mn(); ++i) {
      if (i == SZ.m) continue;
      CHECK(reflect(SZ, i, reflect(SZ, i, r)) == r);
      // reflection matches the inner-product formula coordinatewise
      auto lhs = simple_coordinates(SZ, reflect(SZ, i, r));
      auto rhs = simple_coordinates(SZ, r);
      int num = 2 * inner_with_simple(SZ, r, i);
      int den = inner_simple(SZ, i, i);
      REQUIRE(den != 0);
      REQUIRE(num % den == 0);
      rhs[i] -= num / den;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("dual pairs: pinned examples") {
  auto p = dual_basis<Rat>(SZ, AffineRoot::real(1, 5, 2));
  REQUIRE(p.size() == 1);
  CHECK(p[0].x_plus == LoopElement<Rat>::term(LoopTerm::E(1, 5, 2), Rat(1)));
  CHECK(p[0].x_minus == LoopElement<Rat>::term(LoopTerm::E(5, 1, -2), Rat(1)));

  auto q = dual_basis<Rat>(SZ, AffineRoot::real(3, 1, 1));
  REQUIRE(q.size() == 1);
  CHECK(q[0].x_minus == LoopElement<Rat>::term(LoopTerm::E(1, 3, -1), Rat(-1)));

  auto im = dual_basis<Rat>(SZ, AffineRoot::imag(1));
  CHECK(im.size() == 4);  // m+n-1 pairs; Gram = finite Cartan matrix, invertible since m != n

  CHECK_THROWS(dual_basis<Rat>(SZ, AffineRoot::real(2, 1, 0)));
}

TEST_CASE("dual pairs are kappa-dual, exhaustive to mode 3") {
  for (const auto& r : positive_roots(SZ, 3)) {
    auto pairs = dual_basis<Rat>(SZ, r);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = 0; q < pairs.size(); ++q)
        CHECK(kappa(SZ, pairs[p].x_plus, pairs[q].x_minus) == Rat(p == q ? 1 : 0));
  }
}

TEST_CASE("root-space membership pins labels and inner product") {
  for (const auto& r : positive_roots(SZ, 2)) {
    auto pairs = dual_basis<Rat>(SZ, r);
    for (int j = 0; j < SZ.mn(); ++j) {
      LoopElement<Rat> hj = chevalley<Rat>(SZ, Presentation::Affine, ChevKind::H, j);
      Rat eig(inner_with_simple(SZ, r, j));
      for (const auto& pr : pairs) {
        CHECK(bracket(SZ, hj, pr.x_plus) == eig * pr.x_plus);
        CHECK(bracket(SZ, hj, pr.x_minus) == Rat(-1) * eig * pr.x_minus);
      }
    }
  }
}

TEST_CASE("rotated imaginary dual basis stays kappa-dual") {
  std::vector<std::vector<long>> rot = {
      {1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {1, 0, 0, 1}};
  auto pairs = dual_basis<Rat>(SZ, AffineRoot::imag(2), &rot);
  REQUIRE(pairs.size() == 4);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      CHECK(kappa(SZ, pairs[p].x_plus, pairs[q].x_minus) == Rat(p == q ? 1 : 0));
}

TEST_CASE("tau on the sl(2) triple at node 1") {
  LoopElement<Rat> h = chevalley<Rat>(SZ, Presentation::Affine, ChevKind::H, 1);
  CHECK(tau(SZ, 1, h) == Rat(-1) * h);
  CHECK_THROWS(tau(SZ, 0, h));
  CHECK_THROWS(tau(SZ, SZ.m, h));
}

TEST_CASE("tau preserves kappa and permutes root spaces") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> idx(1, SZ.mn()), mode(-2, 2), node_pick(0, 2);
  const int even_nodes[] = {1, 3, 4};
  for (int it = 0; it < 80; ++it) {
    int i = even_nodes[node_pick(rng)];
    LoopTerm x = LoopTerm::E(idx(rng), idx(rng), mode(rng));
    LoopTerm y = LoopTerm::E(idx(rng), idx(rng), mode(rng));
    auto ex = LoopElement<Rat>::term(x, Rat(1)), ey = LoopElement<Rat>::term(y, Rat(1));
    CHECK(kappa(SZ, tau(SZ, i, ex), tau(SZ, i, ey)) == kappa(SZ, ex, ey));
    CHECK(tau(SZ, i, bracket(SZ, ex, ey)) == bracket(SZ, tau(SZ, i, ex), tau(SZ, i, ey)));
  }

  // real root vectors land in the reflected root space
  for (const auto& r : positive_roots(SZ, 1)) {
    if (r.imaginary) continue;
    for (int i : even_nodes) {
      auto img = tau(SZ, i, LoopElement<Rat>::term(LoopTerm::E(r.a, r.b, r.s), Rat(1)));
      AffineRoot tgt = reflect(SZ, i, r);
      REQUIRE(!img.is_zero());
      for (const auto& [t, q] : img.terms()) {
        CHECK(t.a == tgt.a);
        CHECK(t.b == tgt.b);
        CHECK(t.s == tgt.s);
      }
    }
  }
}
