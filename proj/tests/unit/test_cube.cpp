#include "doctest.h"
#include "oddakh/algebra.hpp"
#include "oddakh/cube.hpp"
#include "oddakh/errors.hpp"
#include "test_support.hpp"

using namespace oddakh;

TEST_CASE("resolutions of the base diagrams") {
  const auto de = resolve(test::corpus("d_e"), 0);
  REQUIRE(de.size() == 1);
  CHECK(de.is_essential(0));
  CHECK(de.num_trivial == 0);

  const auto dt = resolve(test::corpus("d_t"), 0);
  REQUIRE(dt.size() == 1);
  CHECK_FALSE(dt.is_essential(0));

  const auto dk = test::corpus("d_k");
  const auto r0 = resolve(dk, 0);
  REQUIRE(r0.size() == 2);
  CHECK(r0.num_trivial == 1);
  CHECK_FALSE(r0.is_essential(0));
  CHECK(r0.is_essential(1));
  CHECK(r0.circle_of(dk, 1) == 0);
  CHECK(r0.circle_of(dk, 2) == 1);

  const auto r1 = resolve(dk, 1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.is_essential(0));
}

TEST_CASE("proximity order") {
  const auto d = test::corpus("two_essential");
  const auto raw = trace_circles(d, 0);
  REQUIRE(raw.size() == 2);
  CHECK(raw.circle_of(d, 1) == 0);
  CHECK(proximity_order(raw) == std::vector<std::size_t>{1, 0});
  const auto res = resolve(d, 0);
  CHECK(res.circle_of(d, 2) == 0);
  CHECK(res.circle_of(d, 1) == 1);
  CHECK(res.circles[0].first_gamma == 0);
  CHECK(res.circles[1].first_gamma == 1);

  const auto dk = test::corpus("d_k");
  CHECK(proximity_order(trace_circles(dk, 0)) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("resolution invariants hold on every corpus vertex") {
  for (const auto& [stem, d] : test::bundled().diagrams) {
    CAPTURE(stem);
    const Cube cube(d);
    for (Vertex v = 0; v < cube.num_vertices(); ++v) {
      const auto& r = cube.resolution(v);
      CHECK(static_cast<int>(r.num_essential() % 2) == cube.winding_parity());
      for (std::size_t c = 0; c < r.size(); ++c) {
        CHECK(r.is_essential(c) == (c >= r.num_trivial));
        CHECK(std::abs(r.circles[c].gamma_intersection) <= 1);
        if (c > r.num_trivial) CHECK(r.circles[c - 1].first_gamma < r.circles[c].first_gamma);
      }
      const auto again = resolve(parse_diagram(serialize(d)), v);
      CHECK(again.circle_of_edge == r.circle_of_edge);
      CHECK(again.num_trivial == r.num_trivial);
    }
  }
}

TEST_CASE("split arrow") {
  const auto up = test::corpus("r1_before");
  const auto res = resolve(up, 1);
  REQUIRE(res.size() == 2);
  CHECK(split_arrow(up, res, 0) == std::pair<std::size_t, std::size_t>{res.circle_of(up, 1), res.circle_of(up, 2)});

  const auto down = AnnularDiagram(up.name(), {{up.crossings()[0].edges, Arrow::down}}, {}, up.gamma());
  CHECK(split_arrow(down, resolve(down, 1), 0) ==
        std::pair<std::size_t, std::size_t>{res.circle_of(up, 2), res.circle_of(up, 1)});

  const auto nogamma = AnnularDiagram(up.name(), up.crossings(), {}, {});
  const auto rt = resolve(nogamma, 1);
  CHECK(split_arrow(nogamma, rt, 0) == std::pair<std::size_t, std::size_t>{rt.circle_of(up, 1), rt.circle_of(up, 2)});

  const auto dk = test::corpus("d_k");
  CHECK_THROWS_AS(split_arrow(dk, resolve(dk, 1), 0), std::invalid_argument);
}

TEST_CASE("cube edges and faces") {
  const Cube dk(test::corpus("d_k"));
  REQUIRE(dk.edges().size() == 1);
  CHECK(dk.edges()[0].kind == EdgeKind::merge);
  CHECK(dk.edges()[0].pair == std::array<std::size_t, 2>{0, 1});
  CHECK(dk.faces().empty());

  const Cube r1(test::corpus("r1_before"));
  REQUIRE(r1.edges().size() == 1);
  CHECK(r1.edges()[0].kind == EdgeKind::split);
  CHECK(r1.edges()[0].circle_map.size() == 1);
  CHECK(r1.edges()[0].circle_map[0] == r1.edges()[0].pair[0]);

  const Cube hopf(test::corpus("hopf"));
  CHECK(hopf.num_vertices() == 4);
  CHECK(hopf.edges().size() == 4);
  CHECK(hopf.faces().size() == 1);

  const Cube trefoil(test::corpus("trefoil"));
  CHECK(trefoil.edges().size() == 12);
  const auto faces = trefoil.faces();
  CHECK(faces.size() == 6);
  for (const auto& f : faces) {
    const auto& e = trefoil.edges();
    CHECK(e[f.edges[0]].from == f.base);
    CHECK(e[f.edges[1]].to == e[f.edges[3]].to);
    CHECK(e[f.edges[0]].crossing == f.a);
    CHECK(e[f.edges[2]].crossing == f.b);
  }
  for (std::size_t i = 0; i < trefoil.edges().size(); ++i) {
    const auto& e = trefoil.edges()[i];
    CHECK(trefoil.edge_index(e.from, e.crossing) == i);
    CHECK(e.to == (e.from | (Vertex{1} << e.crossing)));
    CHECK(std::popcount(e.from ^ e.to) == 1);
  }
}

TEST_CASE("edge assignment") {
  for (const char* stem : {"hopf", "trefoil", "figure_eight"}) {
    CAPTURE(stem);
    const Cube cube(test::corpus(stem));
    std::vector<Matrix> maps;
    for (const auto& e : cube.edges()) maps.push_back(edge_map(cube, e));
    const auto a = edge_assignment(cube, maps);
    CHECK(a.sign.size() == cube.edges().size());
    CHECK(a.face_types.size() == cube.faces().size());
    const auto faces = cube.faces();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& fe = faces[f].edges;
      const Matrix p = Rational(a.sign[fe[1]] * a.sign[fe[0]]) * (maps[fe[1]] * maps[fe[0]]);
      const Matrix q = Rational(a.sign[fe[3]] * a.sign[fe[2]]) * (maps[fe[3]] * maps[fe[2]]);
      CHECK((p + q).is_zero());
    }
    const auto b = edge_assignment(cube, maps, [](std::size_t) { return true; });
    CHECK(b.free_variables == a.free_variables);
    CHECK(edge_assignment(cube, maps).sign == a.sign);
  }
}

TEST_CASE("too many crossings or a bad basepoint arc are rejected") {
  const auto d = test::corpus("d_e");
  const AnnularDiagram twice(d.name(), {}, {1}, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(resolve(twice, 0), InputError);
}
