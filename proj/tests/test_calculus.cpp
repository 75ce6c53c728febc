#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sparse_evolve/calculus.hpp"
#include "sparse_evolve/errors.hpp"
#include "support.hpp"

using namespace sparse_evolve;
using namespace testing_support;

namespace {

const Alpha kThreeQuarters(3, 4);

RootedExtension one_vertex_one_edge() { return RootedExtension(1, 1, {{0, 0}}, {}); }
RootedExtension p2() { return RootedExtension::graph(2, {{0, 1}}); }

// K4 on vertices 0..3 with a pendant vertex 4 attached to 0.
RootedExtension k4_pendant() {
  return RootedExtension::graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("alpha is a reduced fraction inside (0,1)") {
  Alpha a(6, 8);
  CHECK(a.num() == 3);
  CHECK(a.den() == 4);
  CHECK(a == kThreeQuarters);
  CHECK(a.to_string() == "3/4");
  CHECK(Alpha::parse("181/256").den() == 256);
  CHECK(Alpha::parse("2/4").to_string() == "1/2");
  CHECK_THROWS_AS(Alpha(0, 3), ArgumentError);
  CHECK_THROWS_AS(Alpha(3, 3), ArgumentError);
  CHECK_THROWS_AS(Alpha(5, 3), ArgumentError);
  CHECK_THROWS_AS(Alpha(1, 0), ArgumentError);
  CHECK_THROWS_AS(Alpha::parse("1"), ArgumentError);
  CHECK_THROWS_AS(Alpha::parse("x/2"), ArgumentError);
  CHECK_THROWS_AS(Alpha::parse("1/2/3"), ArgumentError);
  CHECK(kThreeQuarters.min_rigid_degree() == 2);
  CHECK(Alpha(1, 3).min_rigid_degree() == 3);
  CHECK(Alpha(2, 5).min_rigid_degree() == 3);
}

TEST_CASE("predim arithmetic and ordering") {
  const Predim a = Predim::of(1, 1, kThreeQuarters);
  CHECK(a.value == r(1, 4));
  CHECK(a.positive());
  CHECK((a - a).zero());
  CHECK((a + a).value == r(1, 2));
  CHECK(Predim::of(4, 6, kThreeQuarters) < a);
  CHECK(Predim::of(4, 6, kThreeQuarters).to_string() == "-1/2");
}

TEST_CASE("extension validation and normalisation") {
  CHECK_THROWS_AS(RootedExtension(1, 1, {{1, 0}}, {}), ArgumentError);
  CHECK_THROWS_AS(RootedExtension(1, 1, {{0, 1}}, {}), ArgumentError);
  CHECK_THROWS_AS(RootedExtension(0, 2, {}, {{0, 0}}), ArgumentError);
  CHECK_THROWS_AS(RootedExtension(0, 2, {}, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(RootedExtension(1, 1, {{0, 0}, {0, 0}}, {}), ArgumentError);
  CHECK_THROWS_AS(RootedExtension(-1, 1, {}, {}), ArgumentError);
  RootedExtension e(0, 3, {}, {{2, 1}, {1, 0}});
  CHECK(e.ext_edges() == std::vector<RootedExtension::Edge>{{0, 1}, {1, 2}});
  CHECK(e.degree(1) == 2);
  CHECK(e.num_edges() == 2);
}

TEST_CASE("delta examples") {
  CHECK(delta(one_vertex_one_edge(), kThreeQuarters).value == r(1, 4));
  CHECK(delta(RootedExtension(2, 0, {}, {}), kThreeQuarters).zero());
  CHECK(delta(RootedExtension(0, 0, {}, {}), Alpha(1, 3)).zero());
  CHECK(delta(RootedExtension::clique(4), kThreeQuarters).value == r(-1, 2));
}

TEST_CASE("d_value examples") {
  CHECK(d_value(one_vertex_one_edge(), kThreeQuarters).value == r(1, 4));
  CHECK(d_value(RootedExtension::clique(4), kThreeQuarters).value == r(-1, 2));
  CHECK(d_value(p2(), kThreeQuarters).value == r(5, 4));
  CHECK_THROWS_AS(d_value(RootedExtension(1, 0, {}, {}), kThreeQuarters), ArgumentError);
}

TEST_CASE("classify examples") {
  const ExtensionClass k4 = classify(RootedExtension::clique(4), kThreeQuarters);
  CHECK(k4.is_dense);
  CHECK_FALSE(k4.is_sparse);
  CHECK(k4.is_rigid);
  CHECK_FALSE(k4.is_safe);
  CHECK_FALSE(k4.is_degenerate);

  const ExtensionClass one = classify(one_vertex_one_edge(), kThreeQuarters);
  CHECK(one.is_sparse);
  CHECK(one.is_safe);
  CHECK_FALSE(one.is_rigid);

  const ExtensionClass k3 = classify(RootedExtension::clique(3), kThreeQuarters);
  CHECK(k3.is_sparse);
  CHECK(k3.is_safe);
  CHECK_FALSE(k3.is_rigid);

  const ExtensionClass empty = classify(RootedExtension(2, 0, {}, {}), kThreeQuarters);
  CHECK(empty.is_safe);
  CHECK(empty.is_rigid);
  CHECK_FALSE(empty.is_sparse);
  CHECK_FALSE(empty.is_dense);

  // K3 at α = 1/2: δ(K3/∅) = 3/2 equals δ(vertex/∅) + ... one step is zero.
  CHECK(classify(RootedExtension::clique(3), Alpha(1, 2)).is_degenerate);
  // One vertex with two root edges at α = 1/2 has δ exactly 0.
  const ExtensionClass zero = classify(RootedExtension(2, 1, {{0, 0}, {1, 0}}, {}), Alpha(1, 2));
  CHECK(zero.is_degenerate);
  CHECK_FALSE(zero.is_sparse);
  CHECK_FALSE(zero.is_dense);
}

TEST_CASE("find_rigid_subextension examples") {
  const SubExtension in_pendant = find_rigid_subextension(k4_pendant(), kThreeQuarters);
  CHECK(in_pendant.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(in_pendant.extension == RootedExtension::clique(4));

  const SubExtension k4 = find_rigid_subextension(RootedExtension::clique(4), kThreeQuarters);
  CHECK(k4.members == 0b1111u);

  CHECK_THROWS_AS(find_rigid_subextension(one_vertex_one_edge(), kThreeQuarters), ArgumentError);
  CHECK_THROWS_AS(find_rigid_subextension(RootedExtension::clique(3), Alpha(1, 2)),
                  DegeneracyError);
}

TEST_CASE("find_rigid_subextension picks the smallest, then lexicographic, witness") {
  // Two disjoint rigid pieces: a K4 on {2,3,4,5} and the single vertex 0
  // with two root edges (δ = 1 - 2α < 0 at α = 3/4).
  std::vector<RootedExtension::Edge> ee;
  for (int a = 2; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) ee.emplace_back(a, b);
  RootedExtension ext(2, 6, {{0, 0}, {1, 0}, {0, 1}}, ee);
  REQUIRE_FALSE(classify(ext, kThreeQuarters).is_degenerate);
  const SubExtension w = find_rigid_subextension(ext, kThreeQuarters);
  CHECK(w.vertices == std::vector<int>{0});
  CHECK(classify(w.extension, kThreeQuarters).is_rigid);
}

TEST_CASE("rigid_safe_decomposition examples") {
  const Decomposition d = rigid_safe_decomposition(k4_pendant(), kThreeQuarters);
  CHECK(d.rigid.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(classify(d.rigid.extension, kThreeQuarters).is_rigid);
  CHECK(classify(d.safe_rest, kThreeQuarters).is_safe);
  CHECK(delta(d.safe_rest, kThreeQuarters).value == r(1, 4));

  // Two disjoint K4s (0..3 and 4..7) and a pendant 8 on vertex 0.
  std::vector<RootedExtension::Edge> ee;
  for (int base : {0, 4})
    for (int a = base; a < base + 4; ++a)
      for (int b = a + 1; b < base + 4; ++b) ee.emplace_back(a, b);
  ee.emplace_back(0, 8);
  const RootedExtension two = RootedExtension::graph(9, ee);
  const Decomposition d2 = rigid_safe_decomposition(two, kThreeQuarters);
  CHECK(d2.rigid.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(d2.safe_rest.root_size() == 8);
  CHECK(d2.safe_rest.ext_size() == 1);
  CHECK(classify(d2.safe_rest, kThreeQuarters).is_safe);

  CHECK_THROWS_AS(rigid_safe_decomposition(RootedExtension::clique(4), kThreeQuarters),
                  ArgumentError);
  CHECK_THROWS_AS(rigid_safe_decomposition(p2(), kThreeQuarters), ArgumentError);
}

TEST_CASE("rooted automorphism counts") {
  CHECK(rooted_automorphism_count(p2()) == 2);
  CHECK(rooted_automorphism_count(RootedExtension::clique(4)) == 24);
  CHECK(rooted_automorphism_count(one_vertex_one_edge()) == 1);
  CHECK(rooted_automorphism_count(RootedExtension(0, 3, {}, {})) == 6);
  CHECK(rooted_automorphism_count(RootedExtension(0, 0, {}, {})) == 1);
  // Path a-b-c over nothing: swap of the ends only.
  CHECK(rooted_automorphism_count(RootedExtension::graph(3, {{0, 1}, {1, 2}})) == 2);
  // Two vertices hanging off different root vertices are not interchangeable.
  CHECK(rooted_automorphism_count(RootedExtension(2, 2, {{0, 0}, {1, 1}}, {})) == 1);
  CHECK(rooted_automorphism_count(RootedExtension(2, 2, {{0, 0}, {0, 1}}, {})) == 2);
}

TEST_CASE("sub-extension views") {
  const RootedExtension e = k4_pendant();
  const RootedExtension k4 = e.restrict_to(0b01111u);
  CHECK(k4 == RootedExtension::clique(4));
  const RootedExtension rest = e.over(0b01111u);
  CHECK(rest.root_size() == 4);
  CHECK(rest.ext_size() == 1);
  CHECK(rest.root_edges() == std::vector<RootedExtension::Edge>{{0, 0}});
}

TEST_CASE("classification agrees with brute force on every graph up to 4 vertices") {
  std::mt19937_64 rng(7);
  const Alpha alphas[] = {kThreeQuarters, Alpha(181, 256), Alpha(1, 2), Alpha(2, 5),
                          random_alpha(rng)};
  for (const Alpha& alpha : alphas) {
    for (int n = 0; n <= 4; ++n) {
      for (std::uint64_t code = 0; code < (1ull << pair_count(n)); ++code) {
        const SmallGraph g = graph_from_code(n, code);
        const std::uint32_t all = low_mask(n);
        for_each_between(0, all, [&](std::uint32_t b) {
          for_each_between(0, b, [&](std::uint32_t a) {
            const RootedExtension ext = extension_of(g, a, b);
            const ExtensionClass c = classify(ext, alpha);
            CHECK(delta(ext, alpha).value == naive_delta(g, a, b, alpha));
            CHECK(c.is_safe == naive_safe(g, a, b, alpha));
            CHECK(c.is_rigid == naive_rigid(g, a, b, alpha));
            CHECK(c.is_degenerate == naive_degenerate(g, a, b, alpha));
            if (a != b) CHECK(d_value(ext, alpha).value == naive_d(g, a, b, alpha));
          });
        });
      }
    }
  }
}

TEST_CASE("d equals delta does not imply safe for dense extensions") {
  // One vertex with two root edges: the only intermediate is the root.
  const RootedExtension ext(2, 1, {{0, 0}, {1, 0}}, {});
  CHECK(d_value(ext, kThreeQuarters) == delta(ext, kThreeQuarters));
  CHECK(delta(ext, kThreeQuarters).negative());
  CHECK_FALSE(classify(ext, kThreeQuarters).is_safe);
}

TEST_CASE("property: safe implies d equals delta; the converse needs delta >= 0") {
  std::mt19937_64 rng(11);
  int converse_failures = 0;
  for (int round = 0; round < 3; ++round) {
    const Alpha alpha = random_alpha(rng);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 5)(rng);
      const SmallGraph g = random_graph(rng, n, 0.5);
      const std::uint32_t b = low_mask(n);
      const std::uint32_t a = static_cast<std::uint32_t>(rng()) & b & ~1u;  // vertex 0 stays outside
      const RootedExtension ext = extension_of(g, a, b);
      const bool safe = classify(ext, alpha).is_safe;
      const bool d_is_delta = d_value(ext, alpha) == delta(ext, alpha);
      if (safe) CHECK(d_is_delta);
      CHECK(safe == (d_is_delta && !delta(ext, alpha).negative()));
      if (d_is_delta && !safe) {
        CHECK(delta(ext, alpha).negative());
        ++converse_failures;
      }
    }
  }
  CHECK(converse_failures > 0);
}

TEST_CASE("property: delta is additive along chains") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const Alpha alpha = random_alpha(rng);
    const int n = std::uniform_int_distribution<int>(0, 5)(rng);
    const SmallGraph g = random_graph(rng, n, 0.6);
    const std::uint32_t c = low_mask(n);
    const std::uint32_t b = static_cast<std::uint32_t>(rng()) & c;
    const std::uint32_t a = static_cast<std::uint32_t>(rng()) & b;
    CHECK(delta(extension_of(g, a, c), alpha) ==
          delta(extension_of(g, b, c), alpha) + delta(extension_of(g, a, b), alpha));
  }
}

TEST_CASE("property: non-safe extensions have a rigid witness that is a sub-extension") {
  std::mt19937_64 rng(13);
  int witnessed = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const Alpha alpha = random_alpha(rng);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const SmallGraph g = random_graph(rng, n, 0.7);
    const std::uint32_t b = low_mask(n);
    const std::uint32_t a = static_cast<std::uint32_t>(rng()) & b & ~1u;
    const RootedExtension ext = extension_of(g, a, b);
    const ExtensionClass c = classify(ext, alpha);
    if (c.is_safe || c.is_degenerate) continue;
    const SubExtension w = find_rigid_subextension(ext, alpha);
    CHECK(w.members != 0);
    CHECK(classify(w.extension, alpha).is_rigid);
    CHECK(w.extension == ext.restrict_to(w.members));
    ++witnessed;
    if (!c.is_rigid) {
      const Decomposition d = rigid_safe_decomposition(ext, alpha);
      CHECK(classify(d.rigid.extension, alpha).is_rigid);
      CHECK(classify(d.safe_rest, alpha).is_safe);
      CHECK(delta(d.rigid.extension, alpha) + delta(d.safe_rest, alpha) == delta(ext, alpha));
    }
  }
  CHECK(witnessed > 100);
}

TEST_CASE("property: rigidity survives adjoining X to both sides") {
  std::mt19937_64 rng(14);
  const Alpha alpha = kThreeQuarters;
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const SmallGraph g = random_graph(rng, n, 0.7);
    const std::uint32_t all = low_mask(n);
    const std::uint32_t h = static_cast<std::uint32_t>(rng()) & all;
    const std::uint32_t rr = static_cast<std::uint32_t>(rng()) & h;
    const std::uint32_t x = static_cast<std::uint32_t>(rng()) & all;
    if (rr == h || ((h & ~rr) & ~x) == 0) continue;
    if (!classify(extension_of(g, rr, h), alpha).is_rigid) continue;
    CHECK(classify(extension_of(g, rr | x, h | x), alpha).is_rigid);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("scaling numerator and denominator changes nothing") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const Alpha alpha = random_alpha(rng);
    const Alpha scaled(alpha.num() * 7, alpha.den() * 7);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const SmallGraph g = random_graph(rng, n, 0.5);
    const RootedExtension ext = extension_of(g, 0, low_mask(n));
    CHECK(delta(ext, alpha) == delta(ext, scaled));
    CHECK(d_value(ext, alpha) == d_value(ext, scaled));
    CHECK(classify(ext, alpha) == classify(ext, scaled));
  }
}

TEST_CASE("invariants of the classification flags") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 2000; ++trial) {
    const Alpha alpha = random_alpha(rng);
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const SmallGraph g = random_graph(rng, n, 0.5);
    const std::uint32_t b = low_mask(n);
    const std::uint32_t a = static_cast<std::uint32_t>(rng()) & b & ~1u;
    const ExtensionClass c = classify(extension_of(g, a, b), alpha);
    CHECK_FALSE((c.is_sparse && c.is_dense));
    if (!c.is_degenerate) CHECK((c.is_sparse != c.is_dense));
    CHECK_FALSE((c.is_safe && c.is_rigid));
  }
}

TEST_CASE("subset searches refuse oversized extensions") {
  const RootedExtension big(0, kSubsetSoftLimit + 1, {}, {});
  CHECK_THROWS_AS(classify(big, kThreeQuarters), ArgumentError);
  CHECK_THROWS_AS(d_value(big, kThreeQuarters), ArgumentError);
  CHECK(delta(big, kThreeQuarters).value == r(kSubsetSoftLimit + 1));
}
