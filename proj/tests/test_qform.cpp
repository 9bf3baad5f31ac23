#include <titsmotive/qform.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracle_local.hpp"
#include "testutil.hpp"

using namespace titsmotive;

namespace {

const RationalPlace INF = RationalPlace::infinity();
RationalPlace at(long p) { return RationalPlace::prime(Int(p)); }

QuadraticForm form(std::vector<long> cs) {
  std::vector<Rat> rs;
  for (long c : cs) rs.emplace_back(c);
  return QuadraticForm(std::move(rs));
}

// Invariant tuples of two forms describe the same Witt class data if the
// dimensions, signatures, discriminant square classes and Hasse invariants
// (on the union of the relevant places, defaulting to +1) all agree.
bool same_invariants(const FormInvariants& x, const FormInvariants& y) {
  if (x.dim != y.dim || x.signature != y.signature) return false;
  if (!is_rational_square(x.disc / y.disc)) return false;
  std::set<RationalPlace> places;
  for (const auto& [v, e] : x.hasse) places.insert(v);
  for (const auto& [v, e] : y.hasse) places.insert(v);
  for (const auto& v : places) {
    auto ex = x.hasse.count(v) ? x.hasse.at(v) : 1;
    auto ey = y.hasse.count(v) ? y.hasse.at(v) : 1;
    if (ex != ey) return false;
  }
  return true;
}

Rat random_rat(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return Rat(n, den(rng));
}

}  // namespace

TEST_CASE("hilbert symbol, frozen values") {
  CHECK(hilbert_symbol(Rat(2), Rat(5), at(5)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), INF) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), at(2)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), at(3)) == 1);
  CHECK(hilbert_symbol(Rat(3), Rat(3), at(3)) == -1);
  CHECK(hilbert_symbol(Rat(2), Rat(7), at(2)) == 1);
  CHECK(hilbert_symbol(Rat(1), Rat(-17), at(2)) == 1);
  CHECK(hilbert_symbol(Rat(5), Rat(-1), INF) == 1);
  CHECK(hilbert_symbol(Rat(1, 2), Rat(2), at(2)) == 1);
  CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), at(2)), validation_error);
}

TEST_CASE("hilbert symbol is symmetric and bimultiplicative") {
  auto rng = testutil::make_rng(11);
  std::vector<RationalPlace> places{INF, at(2), at(3), at(5), at(7), at(11)};
  for (int rep = 0; rep < 60; ++rep) {
    Rat a = random_rat(rng, 30), b = random_rat(rng, 30), c = random_rat(rng, 30);
    for (const auto& v : places) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v) ==
            hilbert_symbol(a, b * c, v));
      CHECK(hilbert_symbol(a, -a, v) == 1);
      CHECK(hilbert_symbol(a, a * a, v) == 1);
    }
  }
}

TEST_CASE("hilbert symbol product formula") {
  auto rng = testutil::make_rng(12);
  for (int rep = 0; rep < 120; ++rep) {
    Rat a = random_rat(rng, 30), b = random_rat(rng, 30);
    std::set<RationalPlace> places{INF, at(2)};
    for (const auto& p : odd_prime_support(a)) places.insert(RationalPlace::prime(p));
    for (const auto& p : odd_prime_support(b)) places.insert(RationalPlace::prime(p));
    int prod = 1;
    for (const auto& v : places) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("hilbert symbol agrees with Hensel-certified residue search") {
  // the full acceptance grid runs |a|,|b| <= 20 over {oo,2,3,5,7,11,13};
  // here a denser check of the small primes and a spot check of the larger
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long a = -10; a <= 10; ++a)
      for (long b = -10; b <= 10; ++b) {
        if (a == 0 || b == 0) continue;
        CAPTURE(p, a, b);
        bool sym = hilbert_symbol(Rat(a), Rat(b), at(p)) == 1;
        CHECK(sym == oracle::solvable_hensel(Int(a), Int(b), Int(p)));
      }
  }
  for (long p : {17L, 19L, 23L}) {
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        if (a == 0 || b == 0) continue;
        CAPTURE(p, a, b);
        bool sym = hilbert_symbol(Rat(a), Rat(b), at(p)) == 1;
        CHECK(sym == oracle::solvable_hensel(Int(a), Int(b), Int(p)));
      }
  }
  for (long a = -8; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b) {
      if (a == 0 || b == 0) continue;
      bool sym = hilbert_symbol(Rat(a), Rat(b), INF) == 1;
      CHECK(sym == oracle::solvable_real(Int(a), Int(b)));
    }
}

TEST_CASE("local squares") {
  CHECK(is_local_square(Rat(2), at(7)));
  CHECK(is_local_square(Rat(17), at(2)));
  CHECK_FALSE(is_local_square(Rat(3), at(2)));
  CHECK_FALSE(is_local_square(Rat(-4), INF));
  CHECK(is_local_square(Rat(4, 9), at(2)));
  CHECK(is_local_square(Rat(4, 9), at(3)));
  CHECK(is_local_square(Rat(4, 9), INF));
  CHECK_FALSE(is_local_square(Rat(5), at(5)));
  CHECK(is_local_square(Rat(25), at(5)));
  CHECK_FALSE(is_local_square(Rat(50), at(5)));
}

TEST_CASE("quadratic form basics") {
  CHECK_THROWS_AS(QuadraticForm({}), validation_error);
  CHECK_THROWS_AS(QuadraticForm({Rat(1), Rat(0)}), validation_error);
  auto q = QuadraticForm({Rat(1, 6), Rat(-35)});
  CHECK(q.dim() == 2);
  CHECK(q.discriminant() == Rat(-35, 6));
  CHECK(q.signed_discriminant() == Rat(35, 6));
  CHECK(q.signature() == std::pair<unsigned, unsigned>{1, 1});
  std::set<RationalPlace> expect{INF, at(2), at(3), at(5), at(7)};
  CHECK(q.relevant_places() == expect);
}

TEST_CASE("hasse invariants, frozen values") {
  CHECK(form({1, 1}).hasse_invariant(INF) == 1);
  CHECK(form({-1, -1}).hasse_invariant(INF) == -1);
  CHECK(form({-1, -1}).hasse_invariant(at(2)) == -1);
  CHECK(form({-1, -1}).hasse_invariant(at(3)) == 1);
  CHECK(form({2, 5, -10}).hasse_invariant(at(5)) == -1);
  CHECK(form({1, 1, -5, -5}).hasse_invariant(at(2)) == -1);
}

TEST_CASE("isotropy, frozen verdicts") {
  CHECK(is_isotropic(form({1, 1, -5})));
  CHECK_FALSE(is_isotropic(form({1, 1, 1, 1})));
  CHECK_FALSE(is_isotropic(form({1, 1, -7})));
  CHECK_FALSE(is_isotropic(form({1, -7})));
  CHECK(is_isotropic(QuadraticForm({Rat(1), Rat(-9, 4)})));
  CHECK_FALSE(is_isotropic(form({3})));
  CHECK(is_isotropic(form({1, -1, 1, 1})));
  CHECK(is_isotropic(form({1, 2, -3})));

  CHECK(is_isotropic(form({1, 1, 1, 1}), at(5)));
  CHECK_FALSE(is_isotropic(form({1, 1, 1, 1}), at(2)));
  CHECK_FALSE(is_isotropic(form({1, 1, 1, 1}), INF));
  CHECK_FALSE(is_isotropic(form({1, 1, -7}), at(2)));
  CHECK_FALSE(is_isotropic(form({1, 1, -7}), at(7)));
  CHECK(is_isotropic(form({1, 1, -7}), at(3)));
  CHECK(is_isotropic(form({1, 1, 1, 1, 1}), at(2)));
}

TEST_CASE("isotropy agrees with bounded witness search") {
  auto rng = testutil::make_rng(13);
  std::uniform_int_distribution<long> coeff(-12, 12);
  std::uniform_int_distribution<int> dim(3, 4);
  int verdict_true = 0, witnessed = 0;
  for (int rep = 0; rep < 60; ++rep) {
    int n = dim(rng);
    std::vector<long> cs;
    std::vector<Int> is;
    while (static_cast<int>(cs.size()) < n) {
      long c = coeff(rng);
      if (c == 0) continue;
      cs.push_back(c);
      is.emplace_back(c);
    }
    CAPTURE(cs);
    bool verdict = is_isotropic(form(cs));
    auto witness = oracle::isotropy_witness(is, 40);
    if (!witness) witness = oracle::isotropy_witness(is, 160);
    if (witness) CHECK(verdict);  // a witness refutes a negative verdict
    if (verdict) {
      ++verdict_true;
      if (witness) ++witnessed;
    }
  }
  INFO("witnessed " << witnessed << " of " << verdict_true);
  CHECK(witnessed * 10 >= verdict_true * 9);
}

TEST_CASE("witt index, frozen values") {
  CHECK(witt_index(form({1, 1, -5, -5})) == 2);
  CHECK(witt_index(form({1, 1, 1, -7})) == 0);
  CHECK(witt_index(form({1, -1})) == 1);
  CHECK(witt_index(form({2, -2})) == 1);
  CHECK(witt_index(form({1, 1, -1})) == 1);
  CHECK(witt_index(form({1, 2, -3})) == 1);
  CHECK(witt_index(form({1, -1, 1, -1})) == 2);
  CHECK(witt_index(form({1, 1, 1, 1})) == 0);
  CHECK(witt_index(form({3, 5})) == 0);
  CHECK(witt_index(form({7})) == 0);
  CHECK(witt_index(QuadraticForm({Rat(1, 2), Rat(-1, 2)})) == 1);
  CHECK(anisotropic_kernel_dim(form({1, 1, 1, -7})) == 4);
  CHECK(anisotropic_kernel_dim(form({1, 1, -5, -5})) == 0);
}

TEST_CASE("witt index, local") {
  CHECK(witt_index_local(form({1, 1, 1, 1}), at(5)) == 2);
  CHECK(witt_index_local(form({1, 1, 1, 1}), at(2)) == 0);
  CHECK(witt_index_local(form({1, 1, 1, 1}), INF) == 0);
  CHECK(witt_index_local(form({1, -1, 1, 1}), INF) == 1);
  CHECK(witt_index_local(form({1, 1, -5, -5}), at(5)) == 2);
  CHECK(witt_index_local(form({1, 1, -7}), at(2)) == 0);
  // the global index never exceeds a local one
  auto rng = testutil::make_rng(14);
  std::uniform_int_distribution<long> coeff(-15, 15);
  for (int rep = 0; rep < 80; ++rep) {
    std::vector<long> cs;
    while (cs.size() < 5) {
      long c = coeff(rng);
      if (c) cs.push_back(c);
    }
    auto q = form(cs);
    unsigned w = witt_index(q);
    for (const auto& v : q.relevant_places()) CHECK(w <= witt_index_local(q, v));
  }
}

TEST_CASE("witt index properties on random forms") {
  auto rng = testutil::make_rng(15);
  for (int rep = 0; rep < 80; ++rep) {
    std::vector<Rat> cs;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(random_rat(rng, 12));
    QuadraticForm q(cs);
    CAPTURE(rep);

    unsigned w = witt_index(q);
    CHECK(2 * w <= q.dim());

    // adding a hyperbolic plane adds one
    std::vector<Rat> plus = cs;
    plus.emplace_back(1);
    plus.emplace_back(-1);
    CHECK(witt_index(QuadraticForm(plus)) == w + 1);

    // scaling is invisible
    Rat lambda = random_rat(rng, 8);
    CHECK(witt_index(q.scaled(lambda)) == w);

    // q + (-q) is hyperbolic
    std::vector<Rat> doubled = cs;
    for (const auto& c : cs) doubled.push_back(-c);
    CHECK(witt_index(QuadraticForm(doubled)) == q.dim());

    // isotropy of the anisotropic kernel has been exhausted
    CHECK((w == 0) == !is_isotropic(q));
  }
}

TEST_CASE("synthesis realizes stripped invariant tuples") {
  auto rng = testutil::make_rng(16);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Rat> cs;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(random_rat(rng, 10));
    QuadraticForm q(cs);
    CAPTURE(rep, n);

    auto t = invariants_of(q);
    auto back = diagonal_form_from_invariants(t);
    REQUIRE(back.has_value());
    CHECK(same_invariants(invariants_of(*back), t));
    CHECK(witt_index(*back) == witt_index(q));
  }
}

TEST_CASE("synthesis rejects unrealizable tuples") {
  FormInvariants t;
  t.dim = 1;
  t.disc = 3;
  t.signature = {1, 0};
  t.hasse[at(3)] = -1;
  CHECK_FALSE(diagonal_form_from_invariants(t).has_value());

  FormInvariants u;
  u.dim = 2;
  u.disc = -1;
  u.signature = {2, 0};
  CHECK_FALSE(diagonal_form_from_invariants(u).has_value());

  FormInvariants w;
  w.dim = 2;
  w.disc = 1;
  w.signature = {1, 0};  // wrong total
  CHECK_FALSE(diagonal_form_from_invariants(w).has_value());
}
