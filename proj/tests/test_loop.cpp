#include <random>

#include "doctest.h"
#include "oracle_matrix.hpp"
#include "yangian/loop.hpp"

using namespace yangian;

namespace {

const SuperSize SZ{2, 3};

LoopElement<Rat> E(int a, int b, int s, long c = 1) {
  return LoopElement<Rat>::term(LoopTerm::E(a, b, s), Rat(c));
}

LoopTerm random_term(std::mt19937_64& rng, int max_mode) {
  std::uniform_int_distribution<int> idx(1, SZ.mn()), mode(-max_mode, max_mode);
  return LoopTerm::E(idx(rng), idx(rng), mode(rng));
}

// Random homogeneous element: a combination of terms of one parity.
LoopElement<Rat> random_homogeneous(std::mt19937_64& rng, int max_mode, bool with_centrals) {
  std::uniform_int_distribution<int> nterms(1, 3), coeff(-4, 4), par(0, 1);
  int want = par(rng);
  int count = nterms(rng);
  LoopElement<Rat> e;
  for (int i = 0, tries = 0; i < count && tries < 60; ++tries) {
    LoopTerm t = random_term(rng, max_mode);
    if (t.parity(SZ) != want) continue;
    e.add_term(t, Rat(coeff(rng)));
    ++i;
  }
  if (with_centrals && want == 0) {
    e.add_term(LoopTerm::c(), Rat(coeff(rng)));
    e.add_term(LoopTerm::z(), Rat(coeff(rng)));
  }
  if (e.is_zero()) e.add_term(LoopTerm::E(1, 2, 0), Rat(1));
  return e;
}

}  // namespace

TEST_CASE("bracket pinned examples") {
  // [E12(1), E21(-1)] = E11(0) - E22(0) + c
  LoopElement<Rat> r = bracket(SZ, E(1, 2, 1), E(2, 1, -1));
  LoopElement<Rat> want = E(1, 1, 0) - E(2, 2, 0) + LoopElement<Rat>::term(LoopTerm::c(), Rat(1));
  CHECK(r == want);

  // odd pair anticommutes: [E23(0), E32(0)] = E22(0) + E33(0)
  CHECK(bracket(SZ, E(2, 3, 0), E(3, 2, 0)) == E(2, 2, 0) + E(3, 3, 0));

  // diagonal z-term: [E11(1), E33(-1)] = -z
  CHECK(bracket(SZ, E(1, 1, 1), E(3, 3, -1)) == LoopElement<Rat>::term(LoopTerm::z(), Rat(-1)));

  // centrals are central
  LoopElement<Rat> c = LoopElement<Rat>::term(LoopTerm::c(), Rat(1));
  CHECK(bracket(SZ, c, E(1, 5, 2)).is_zero());
  CHECK(bracket(SZ, E(1, 5, 2), c).is_zero());
}

TEST_CASE("kappa pinned examples") {
  CHECK(kappa(SZ, E(1, 5, 2), E(5, 1, -2)) == Rat(1));
  CHECK(kappa(SZ, E(3, 1, 0), E(1, 3, 0)) == Rat(-1));
  CHECK(kappa(SZ, E(1, 2, 1), E(2, 1, 1)) == Rat(0));
}

TEST_CASE("bracket and kappa agree with the dense matrix oracle") {
  int k = SZ.mn();
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int c = 1; c <= k; ++c)
        for (int d = 1; d <= k; ++d)
          for (int s : {-2, 0, 1})
            for (int u : {-1, 0, 2}) {
              LoopTerm x = LoopTerm::E(a, b, s), y = LoopTerm::E(c, d, u);
              CHECK(bracket_terms<Rat>(SZ, x, y) == oracle::bracket_oracle(SZ, x, y));
              CHECK(kappa(SZ, LoopElement<Rat>::term(x, Rat(1)), LoopElement<Rat>::term(y, Rat(1))) ==
                    oracle::kappa_oracle(SZ, x, y));
            }
}

TEST_CASE("super-antisymmetry on random homogeneous pairs") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    auto x = random_homogeneous(rng, 3, true);
    auto y = random_homogeneous(rng, 3, true);
    int px = *x.parity(SZ), py = *y.parity(SZ);
    Rat sgn = (px == 1 && py == 1) ? Rat(1) : Rat(-1);
    CHECK(bracket(SZ, x, y) == sgn * bracket(SZ, y, x));
  }
}

TEST_CASE("super-Jacobi including both central terms") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 220; ++it) {
    auto x = random_homogeneous(rng, 3, it % 3 == 0);
    auto y = random_homogeneous(rng, 3, false);
    auto z = random_homogeneous(rng, 3, false);
    int px = *x.parity(SZ), py = *y.parity(SZ);
    // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
    auto lhs = bracket(SZ, x, bracket(SZ, y, z));
    auto rhs = bracket(SZ, bracket(SZ, x, y), z);
    auto tail = bracket(SZ, y, bracket(SZ, x, z));
    rhs += ((px == 1 && py == 1) ? Rat(-1) : Rat(1)) * tail;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("kappa invariance on mode-0 sl elements") {
  std::mt19937_64 rng(23);
  auto random_sl0 = [&](auto& gen) {
    std::uniform_int_distribution<int> idx(1, SZ.mn()), coeff(-3, 3), pick(0, 1);
    LoopElement<Rat> e;
    for (int tries = 0; tries < 20 && e.is_zero(); ++tries) {
      if (pick(gen) == 0) {
        int a = idx(gen), b = idx(gen);
        if (a != b) e.add_term(LoopTerm::E(a, b, 0), Rat(coeff(gen)));
      } else {
        int i = 1 + (idx(gen) % (SZ.mn() - 1));
        e += Rat(coeff(gen)) * chevalley<Rat>(SZ, Presentation::Finite, ChevKind::H, i);
      }
    }
    return e;
  };
  for (int it = 0; it < 100; ++it) {
    auto x = random_sl0(rng), y = random_sl0(rng), w = random_sl0(rng);
    CHECK(kappa(SZ, bracket(SZ, x, y), w) == kappa(SZ, x, bracket(SZ, y, w)));
  }
}

TEST_CASE("parity additivity of the bracket") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 150; ++it) {
    auto x = random_homogeneous(rng, 2, false);
    auto y = random_homogeneous(rng, 2, false);
    auto b = bracket(SZ, x, y);
    if (b.is_zero()) continue;
    auto pb = b.parity(SZ);
    REQUIRE(pb.has_value());
    CHECK(*pb == (*x.parity(SZ) + *y.parity(SZ)) % 2);
  }
}

TEST_CASE("chevalley images, affine presentation") {
  CHECK(chevalley<Rat>(SZ, Presentation::Affine, ChevKind::XPlus, 0) == E(5, 1, 1));
  CHECK(chevalley<Rat>(SZ, Presentation::Affine, ChevKind::XMinus, 3) == E(4, 3, 0, -1));
  LoopElement<Rat> h0 = E(1, 1, 0, -1) + E(5, 5, 0, -1) + LoopElement<Rat>::term(LoopTerm::c(), Rat(1));
  CHECK(chevalley<Rat>(SZ, Presentation::Affine, ChevKind::H, 0) == h0);
  CHECK_THROWS(chevalley<Rat>(SZ, Presentation::Finite, ChevKind::H, 0));
}

TEST_CASE("Lie-level Chevalley relations, exhaustive for (2,3)") {
  int k = SZ.mn();
  auto h = [&](int i) { return chevalley<Rat>(SZ, Presentation::Affine, ChevKind::H, i); };
  auto xp = [&](int i) { return chevalley<Rat>(SZ, Presentation::Affine, ChevKind::XPlus, i); };
  auto xm = [&](int i) { return chevalley<Rat>(SZ, Presentation::Affine, ChevKind::XMinus, i); };

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      CHECK(bracket(SZ, h(i), h(j)).is_zero());
      Rat a(cartan_affine(SZ, i, j));
      CHECK(bracket(SZ, h(i), xp(j)) == a * xp(j));
      CHECK(bracket(SZ, h(i), xm(j)) == Rat(-1) * a * xm(j));
      LoopElement<Rat> want = (i == j) ? h(i) : LoopElement<Rat>();
      CHECK(bracket(SZ, xp(i), xm(j)) == want);
      if (i != j) {
        unsigned nil = 1 + unsigned(std::abs(cartan_affine(SZ, i, j)));
        CHECK(ad_power(SZ, xp(i), nil, xp(j)).is_zero());
        CHECK(ad_power(SZ, xm(i), nil, xm(j)).is_zero());
      }
    }

  // odd node squares and the degree-2 Serre relations
  for (int i : {0, SZ.m}) {
    CHECK(bracket(SZ, xp(i), xp(i)).is_zero());
    CHECK(bracket(SZ, xm(i), xm(i)).is_zero());
    int lo = SZ.mod_node(i - 1), hi = SZ.mod_node(i + 1);
    CHECK(bracket(SZ, bracket(SZ, xp(lo), xp(i)), bracket(SZ, xp(i), xp(hi))).is_zero());
    CHECK(bracket(SZ, bracket(SZ, xm(lo), xm(i)), bracket(SZ, xm(i), xm(hi))).is_zero());
  }

  // ad_power base cases
  CHECK(ad_power(SZ, xp(1), 0, xp(2)) == xp(2));
  CHECK(ad_power(SZ, xp(1), 2, xp(2)).is_zero());
  CHECK(bracket(SZ, xp(2), xp(2)).is_zero());
}
