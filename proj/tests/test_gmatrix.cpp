#include <doctest.h>

#include "groupmat/constructions.hpp"
#include "groupmat/gmatrix.hpp"
#include "groupmat/matrix_io.hpp"
#include "support.hpp"

using namespace groupmat;
using namespace groupmat::testing;

namespace {

std::vector<Entry> elements(std::initializer_list<int> xs) {
  std::vector<Entry> out;
  for (int x : xs) out.push_back(x < 0 ? Entry::zero() : Entry::element(x));
  return out;
}

}  // namespace

TEST_CASE("parse and serialize round-trip every catalog fixture") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto doc = parse_matrix(catalog_fixture_text(name));
    const auto text = serialize(doc.matrix, doc.semantics);
    const auto again = parse_matrix(text);
    CHECK(again.matrix == doc.matrix);
    CHECK(again.semantics == doc.semantics);
    CHECK(serialize(again.matrix, again.semantics) == text);
  }
}

TEST_CASE("parse and serialize round-trip random matrices") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_group(rng);
    const auto m = random_matrix(rng, g, 1 + rng() % 5, 1 + rng() % 5, 0.2);
    CHECK(parse_matrix(serialize(m, "balance")).matrix == m);
  }
}

TEST_CASE("parse errors carry line and column") {
  const std::string good = "group: cyclic 3\nsemantics: balance\nrows: 2\ncols: 2\n0 1\n2 .\n";
  CHECK(parse_matrix(good).matrix.rows() == 2);
  try {
    parse_matrix("group: cyclic 3\nsemantics: balance\nrows: 2\ncols: 2\n0 1\n2 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_matrix("group: cyclic 3\nsemantics: balance\nrows: 2\ncols: 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("group: cyclic 3\nsemantics: balance\nrows: 1\ncols: 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("group: cyclic 3\nrows: 1\ncols: 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("group: nonsense\nsemantics: balance\nrows: 1\ncols: 1\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("group: cyclic 3\nsemantics: balance\nrows: 0\ncols: 1\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto doc = parse_matrix("# note\n\ngroup: q8\nsemantics: quaternion\nrows: 1\ncols: 2\n# row\n1 -k\n");
  CHECK(doc.matrix(0, 1) == Entry::element(7));
  CHECK(doc.semantics == "quaternion");
}

TEST_CASE("circulant and back-circulant shapes") {
  const auto g = Group::cyclic(5);
  const auto row = elements({0, 1, 2, 3, 4});
  const auto c = circulant(g, row);
  const auto b = back_circulant(g, row);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(c(i, j) == row[(j + 5 - i) % 5]);
      CHECK(b(i, j) == row[(i + j) % 5]);
    }
  CHECK(transpose(b) == b);
  CHECK_THROWS(circulant(g, std::vector<Entry>{}));
}

TEST_CASE("adjoint is an involution") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_group(rng);
    const auto m = random_matrix(rng, g, 1 + rng() % 4, 1 + rng() % 4, 0.2);
    CHECK(adjoint(adjoint(m, AdjointKind::plain), AdjointKind::plain) == m);
    CHECK(adjoint(adjoint(m, AdjointKind::group_inverse), AdjointKind::group_inverse) == m);
    if (g->kind() == GroupKind::roots || g->kind() == GroupKind::cyclic)
      CHECK(adjoint(adjoint(m, AdjointKind::complex_conjugate), AdjointKind::complex_conjugate) == m);
    if (g->kind() == GroupKind::q8)
      CHECK(adjoint(adjoint(m, AdjointKind::quaternion_conjugate), AdjointKind::quaternion_conjugate) == m);
  }
  CHECK_THROWS(adjoint(GMatrix(Group::s3(), 1, 1), AdjointKind::complex_conjugate));
}

TEST_CASE("kronecker entries follow the index formula") {
  Rng rng(12);
  const std::vector<std::pair<GroupPtr, GroupPtr>> pairs = {{Group::roots(6), Group::roots(2)},
                                                            {Group::roots(3), Group::roots(6)},
                                                            {Group::cyclic(4), Group::cyclic(4)},
                                                            {Group::q8(), Group::q8()}};
  for (const auto& [ga, gb] : pairs) {
    const auto a = random_matrix(rng, ga, 2, 3), b = random_matrix(rng, gb, 3, 2);
    const auto k = kronecker_compose(a, b);
    const auto& g = *k.group();
    CHECK(g.order() == std::max(ga->order(), gb->order()));
    const auto ea = embed(a, k.group()), eb = embed(b, k.group());
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
      for (std::size_t i2 = 0; i2 < 3; ++i2)
        for (std::size_t j1 = 0; j1 < 3; ++j1)
          for (std::size_t j2 = 0; j2 < 2; ++j2)
            CHECK(k(i1 * 3 + i2, j1 * 2 + j2).index() == g.mul(ea(i1, j1).index(), eb(i2, j2).index()));
  }
  CHECK_THROWS(kronecker_compose(GMatrix(Group::roots(4), 1, 1), GMatrix(Group::roots(6), 1, 1)));
}

TEST_CASE("embedding sends the k-th q-th root to the k(Q/q)-th Q-th root") {
  const auto m = GMatrix(Group::roots(3), 1, 3, elements({0, 1, 2}));
  const auto e = embed(m, Group::roots(6));
  CHECK(e.row(0)[1] == Entry::element(2));
  CHECK(e.row(0)[2] == Entry::element(4));
  CHECK_THROWS(embed(m, Group::roots(4)));
}

TEST_CASE("block grid tiles and rejects ragged input") {
  const auto g = Group::cyclic(2);
  const GMatrix a(g, 1, 2, Entry::element(1)), b(g, 1, 1, Entry::element(0));
  const auto m = block_grid({{a, b}, {a, b}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == Entry::element(0));
  CHECK_THROWS(block_grid({{a, b}, {b, a}}));
  CHECK_THROWS(block_grid({{a}, {a, b}}));
}

TEST_CASE("residue class matrix places coefficients by difference class") {
  const auto g = Group::cyclic(3);
  const ResidueCoefficients co{Entry::zero(), Entry::element(0), Entry::element(1), Entry::element(2)};
  const auto m = residue_class_matrix(g, 13, co);
  const auto classes = cubic_residue_classes(13);
  for (int c = 0; c < 3; ++c)
    for (int d : classes[c]) CHECK(m(0, static_cast<std::size_t>(d)) == Entry::element(c));
  CHECK(m(0, 0).is_zero());
  CHECK(m(4, 4).is_zero());
}
