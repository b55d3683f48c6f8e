#include <doctest.h>

#include <random>
#include <set>

#include "iwip/graph_map.hpp"
#include "iwip/index_list.hpp"
#include "iwip/map_chain.hpp"
#include "iwip/marking.hpp"
#include "iwip/matrix.hpp"
#include "iwip/realize.hpp"

using namespace iwip;

namespace {

std::shared_ptr<const Graph> rose(std::vector<std::string> labels) {
  return std::make_shared<const Graph>(make_rose(labels));
}

GraphMap rose_map(const std::shared_ptr<const Graph>& g, const std::vector<std::string>& images) {
  std::vector<EdgeWord> positive;
  for (const auto& w : images) positive.push_back(parse_word(*g, w));
  return GraphMap(g, {Vertex{0}}, positive);
}

Gamma fig1_gamma() { return build_graph(validate_and_classify(7, {1, 2, 1, 2, 2})); }

// Number of partitions of n into positive parts.
std::uint64_t partitions(int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("edge involution is a fixed-point free bit flip") {
  for (int id = 0; id < 20; ++id) {
    const Edge e{id};
    CHECK(e.reversed() != e);
    CHECK(e.reversed().reversed() == e);
  }
}

TEST_CASE("tighten cancels adjacent inverse pairs") {
  const Gamma gamma = build_graph(validate_and_classify(8, {2, 2, 1, 2, 2}));
  const Graph& g = *gamma.graph;
  const Path full{g.init(*g.find_edge("c1")), parse_word(g, "c1 ~c1")};
  const Path t = tighten(full);
  CHECK(t.empty());
  CHECK(t.start == g.init(*g.find_edge("c1")));
  CHECK(tighten(parse_word(g, "a1 c1 ~c1 ~a1 d")) == parse_word(g, "d"));
  CHECK(tighten(parse_word(g, "b1 c2")) == parse_word(g, "b1 c2"));
}

TEST_CASE("cyclic tightening and cyclic equality") {
  auto g = rose({"a", "b"});
  CHECK(tighten_cyclic(parse_word(*g, "a b a ~b ~a ~a")) == parse_word(*g, "b a ~b ~a"));
  CHECK(cyclically_equal(parse_word(*g, "a b ~a ~b"), parse_word(*g, "~b a b ~a")));
  CHECK_FALSE(cyclically_equal(parse_word(*g, "a b ~a ~b"), parse_word(*g, "b a ~b ~a")));
}

TEST_CASE("legal paths in the even-case graph") {
  const Gamma gamma = fig1_gamma();
  const Graph& g = *gamma.graph;
  CHECK(is_legal_path(gamma.gates, parse_word(g, "a1 a2")));
  CHECK_FALSE(is_legal_path(gamma.gates, parse_word(g, "~a1 a2")));
  for (Edge e : g.positive_edges()) {
    CHECK(is_legal_path(gamma.gates, EdgeWord{e}));
    CHECK(is_legal_path(gamma.gates, EdgeWord{e.reversed()}));
  }
}

TEST_CASE("gate structures are canonical") {
  auto g = rose({"a", "b"});
  const GateStructure x(*g, {{Edge{0}, Edge{2}}, {Edge{1}}, {Edge{3}}});
  const GateStructure y(*g, {{Edge{3}}, {Edge{2}, Edge{0}}, {Edge{1}}});
  CHECK(x == y);
  CHECK(x.gate_count() == 3);
  CHECK_THROWS_AS(GateStructure(*g, {{Edge{0}, Edge{2}}, {Edge{1}}}), GraphError);
}

TEST_CASE("graph validation") {
  const Gamma gamma = fig1_gamma();
  const auto d = validate_graph(*gamma.graph);
  CHECK(d.ok());
  CHECK(d.rank == 7);

  const auto one = validate_graph(make_rose({"a"}));
  CHECK(one.rank == 1);
  CHECK_FALSE(one.low_valence.empty());

  Graph split;
  const Vertex p = split.add_vertex("p");
  const Vertex q = split.add_vertex("q");
  split.add_edge("a", p, p);
  split.add_edge("b", q, q);
  CHECK_FALSE(validate_graph(split).connected);
}

TEST_CASE("graph maps check endpoint coherence") {
  Graph g;
  const Vertex p = g.add_vertex("p");
  const Vertex q = g.add_vertex("q");
  const Edge x = g.add_edge("x", p, q);
  g.add_edge("y", q, p);
  g.add_edge("z", p, p);
  auto gp = std::make_shared<const Graph>(g);
  CHECK_THROWS_AS(GraphMap(gp, {p, q}, {{x}, {x}, {}}), MapError);
  CHECK_NOTHROW(GraphMap(gp, {p, q}, {{x}, {x.reversed()}, {}}));
}

TEST_CASE("composition on the two-petal rose") {
  auto g = rose({"a", "b"});
  const GraphMap f = rose_map(g, {"a b", "b"});
  const GraphMap ff = compose_maps(f, f);
  CHECK(format_word(*g, ff.image(Edge{0})) == "a b b");
  CHECK(format_word(*g, ff.image(Edge{2})) == "b");
  CHECK(transition_matrix(ff) == transition_matrix(f) * transition_matrix(f));
  const GraphMap id = GraphMap::identity(g);
  CHECK(compose_maps(id, f) == f);
}

TEST_CASE("transition matrices") {
  auto g = rose({"a", "b"});
  TransitionMatrix fib(2, 2);
  fib << 1, 1, 1, 0;
  CHECK(transition_matrix(rose_map(g, {"a b", "a"})) == fib);
  CHECK(transition_matrix(GraphMap::identity(g)) == TransitionMatrix::Identity(2, 2));
  const TransitionMatrix m = transition_matrix(rose_map(g, {"a b ~a", "b"}));
  CHECK(m(0, 0) == 2);
  CHECK(m(1, 0) == 1);
}

TEST_CASE("primitivity examples") {
  TransitionMatrix fib(2, 2);
  fib << 1, 1, 1, 0;
  const auto a = is_primitive(fib);
  CHECK(a.primitive);
  CHECK(a.witness == 2);
  TransitionMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto b = is_primitive(swap);
  CHECK_FALSE(b.primitive);
  CHECK_FALSE(b.witness.has_value());
  TransitionMatrix two(1, 1);
  two << 2;
  CHECK(is_primitive(two).witness == 1);
}

TEST_CASE("primitivity agrees with brute force powers") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    TransitionMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (rng() % 3 == 0) ? 1 : 0;
    std::optional<int> oracle;
    TransitionMatrix power = m;
    for (int t = 1; t <= 2 * n * n + 2; ++t) {
      if ((power.array() > 0).all()) {
        oracle = t;
        break;
      }
      power = ((power * m).array() > 0).cast<std::int64_t>();
    }
    const auto r = is_primitive(m);
    CHECK(r.primitive == oracle.has_value());
    CHECK(r.witness == oracle);
  }
}

TEST_CASE("transition matrix of a composition is the product") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g;
    const int vertices = 1 + static_cast<int>(rng() % 3);
    for (int v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
    for (int v = 1; v < vertices; ++v) g.add_edge("t" + std::to_string(v), Vertex{v - 1}, Vertex{v});
    const int extra = 1 + static_cast<int>(rng() % static_cast<unsigned>(9 - vertices));
    for (int k = 0; k < extra; ++k)
      g.add_edge("e" + std::to_string(k), Vertex{static_cast<int>(rng() % static_cast<unsigned>(vertices))},
                 Vertex{static_cast<int>(rng() % static_cast<unsigned>(vertices))});
    REQUIRE(g.edge_count() <= 8);
    auto gp = std::make_shared<const Graph>(g);

    // Random walk from init(e), then the tree path along the t-edges to terminal(e).
    auto random_map = [&] {
      std::vector<EdgeWord> images;
      for (Edge e : gp->positive_edges()) {
        EdgeWord w;
        Vertex at = gp->init(e);
        const int steps = static_cast<int>(rng() % 5);
        for (int s = 0; s < steps; ++s) {
          const auto& out = gp->outgoing(at);
          const Edge step = out[rng() % out.size()];
          w.push_back(step);
          at = gp->terminal(step);
        }
        const int target = gp->terminal(e).id;
        for (int v = at.id; v < target; ++v) w.push_back(*gp->find_edge("t" + std::to_string(v + 1)));
        for (int v = at.id; v > target; --v) w.push_back(gp->find_edge("t" + std::to_string(v))->reversed());
        images.push_back(w);
      }
      std::vector<Vertex> fixed;
      for (int v = 0; v < vertices; ++v) fixed.push_back(Vertex{v});
      return GraphMap(gp, fixed, images);
    };
    const GraphMap f = random_map();
    const GraphMap h = random_map();
    CHECK(transition_matrix(compose_maps(f, h)) == transition_matrix(f) * transition_matrix(h));
    const MapChain chain(gp, {std::make_shared<const GraphMap>(f), std::make_shared<const GraphMap>(h)});
    CHECK(chain.transition_weights() == (transition_matrix(f) * transition_matrix(h)).cast<double>());
  }
}

TEST_CASE("map chains agree with their expansion") {
  auto g = rose({"a", "b"});
  const GraphMap f = rose_map(g, {"a b", "a"});
  const MapChain chain = MapChain(f).power(5);
  const auto expanded = chain.materialize(1000);
  REQUIRE(expanded);
  GraphMap direct = f;
  for (int k = 1; k < 5; ++k) direct = compose_maps(f, direct);
  CHECK(*expanded == direct);
  CHECK(chain.image_lengths() == std::vector<double>{13.0, 8.0});
  CHECK_FALSE(chain.materialize(10).has_value());
}

TEST_CASE("pi1 marking on a rose and on the even-case graph") {
  auto g = rose({"a", "b"});
  const Pi1Marking m(g);
  CHECK(m.tree().empty());
  const FreeEndomorphism phi = pi1_automorphism(rose_map(g, {"a b", "a"}), m);
  CHECK(format_word(phi.images[0]) == "x1 x2");
  CHECK(format_word(phi.images[1]) == "x1");
  const FreeEndomorphism id = pi1_automorphism(GraphMap::identity(g), m);
  CHECK(format_word(id.images[0]) == "x1");
  CHECK(format_word(id.images[1]) == "x2");

  const Gamma gamma = fig1_gamma();
  const Pi1Marking fig(gamma.graph);
  CHECK(format_word(*gamma.graph, fig.tree()) == "c1 c2 c3 c4");
  CHECK(format_word(*gamma.graph, fig.basis_edges()) == "c5 b1 b2 b3 b4 a1 a2");
  CHECK(fig.rank() == 7);
}

TEST_CASE("inner automorphisms") {
  const Letter x1{0}, x2{2}, x3{4};
  const Word w{x2, x1.inverse(), x3};
  FreeEndomorphism conj;
  for (Letter x : {x1, x2, x3}) {
    Word img = w;
    img.push_back(x);
    const Word inv = inverse(w);
    img.insert(img.end(), inv.begin(), inv.end());
    conj.images.push_back(free_reduce(img));
  }
  CHECK(is_inner(conj));
  CHECK(is_inner(FreeEndomorphism{{Word{x1}, Word{x2}, Word{x3}}}));
  CHECK_FALSE(is_inner(FreeEndomorphism{{Word{x1, x2}, Word{x2}, Word{x3}}}));
  CHECK_FALSE(is_inner(FreeEndomorphism{{Word{x2}, Word{x1}, Word{x3}}}));
}

TEST_CASE("homotopy equivalence of a rose automorphism and its inverse") {
  auto g = rose({"a", "b"});
  const GraphMap f = rose_map(g, {"a b", "b"});
  const GraphMap f_inv = rose_map(g, {"a ~b", "b"});
  const Pi1Marking m(g);
  CHECK(verify_homotopy_equivalence(f, f_inv, m));
  CHECK(verify_homotopy_equivalence(GraphMap::identity(g), GraphMap::identity(g), m));
  CHECK_FALSE(verify_homotopy_equivalence(f, f, m));
}

TEST_CASE("index list parsing and formatting") {
  const IndexList l = IndexList::parse("1/2,1,1/2,1,1");
  CHECK(l.to_string() == "[1, 1, 1, 1/2, 1/2]");
  CHECK(l.doubled_sum() == 8);
  CHECK(IndexList::parse("[3/2, 1/2]") == IndexList({3, 1}));
  CHECK(parse_half_list("1/2,1") == std::vector<int>{1, 2});
  CHECK_THROWS_AS(IndexList::parse("0"), InputError);
  CHECK_THROWS_AS(IndexList::parse("1/3"), InputError);
  CHECK_THROWS_AS(IndexList::parse("x"), InputError);
  CHECK_THROWS_AS(IndexList::parse(""), InputError);
}

TEST_CASE("admissible list counts match the partition oracle") {
  for (int n = 3; n <= 8; ++n) {
    std::uint64_t oracle = 0;
    for (int s = 1; s <= 2 * n - 3; ++s) oracle += partitions(s);
    const auto lists = enumerate_admissible(n);
    CHECK(lists.size() == oracle);
    for (const auto& l : lists) {
      CHECK(l.doubled_sum() >= 1);
      CHECK(l.doubled_sum() <= 2 * n - 3);
    }
    CHECK(std::set<IndexList>(lists.begin(), lists.end()).size() == lists.size());
  }
  CHECK(enumerate_admissible(3).size() == 6);
}
