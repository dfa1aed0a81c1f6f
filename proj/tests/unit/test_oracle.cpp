#include "doctest.h"
#include "oddakh/algebra.hpp"
#include "oddakh/homology.hpp"
#include "oddakh/oracle.hpp"
#include "test_support.hpp"

using namespace oddakh;

using Dims = std::map<TriDegree, std::size_t>;

TEST_CASE("even homology of the unknots") {
  CHECK(even_akh_gf2(test::corpus("d_e")) == Dims{{{0, 1, 1}, 1}, {{0, -1, -1}, 1}});
  CHECK(even_akh_gf2(test::corpus("d_t")) == Dims{{{0, 1, 0}, 1}, {{0, -1, 0}, 1}});
  CHECK(even_akh_gf2(test::corpus("d_k")) == even_akh_gf2(test::corpus("d_e")));
  const auto z = even_complex(test::corpus("d_e"));
  CHECK(z.size() == 2);
  CHECK(z.d.empty());
}

TEST_CASE("even complex of the kink") {
  const auto dk = test::corpus("d_k");
  const auto even = even_complex(dk);
  CHECK(even.size() == 6);
  // merge of a trivial and an essential circle: 1, a_t, a_e survive
  CHECK(even.d.size() == 3);
  const ChainComplex odd(dk);
  const auto red = mod2_reduce(odd);
  CHECK(red.d == even.d);
  CHECK(compare_mod2(red, even).ok);
}

TEST_CASE("mod-2 reduction of every corpus complex is the even complex") {
  for (const auto& [stem, d] : test::bundled().diagrams) {
    CAPTURE(stem);
    const ChainComplex c(d);
    const auto red = mod2_reduce(c);
    const auto even = even_complex(d);
    CHECK(compare_mod2(red, even).ok);
    CHECK(gf2_homology(red) == gf2_homology(even));
    CHECK(gf2_homology(red) == even_akh_gf2(d));
  }
}

TEST_CASE("GF(2) and rational dimensions differ exactly where there is 2-torsion") {
  const auto d = test::corpus("t34");
  const ChainComplex c(d);
  const auto q = homology(c).dimensions();
  const auto g = even_akh_gf2(d);
  CHECK(q != g);
  for (const TriDegree& t : {TriDegree{3, 11, -1}, {4, 11, -1}, {3, 13, 1}, {4, 13, 1}}) {
    CHECK(g.at(t) == 1);
    CHECK(q.count(t) == 0);
  }
  for (const auto& [deg, n] : q) CHECK(g.at(deg) == n);
  CHECK(g.size() == q.size() + 4);
  CHECK(homology(ChainComplex(test::corpus("trefoil"))).dimensions() == even_akh_gf2(test::corpus("trefoil")));
}

TEST_CASE("a corrupted complex is rejected") {
  const auto d = test::corpus("hopf");
  const auto even = even_complex(d);
  auto other = even;
  REQUIRE_FALSE(other.d.empty());
  other.d.erase(other.d.begin());
  CHECK_FALSE(compare_mod2(other, even).ok);
}
