// Copyright 2026 The WalkForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "walkforge/error.hpp"
#include "walkforge/synthesis.hpp"

using namespace walkforge;
using wf_test::dist;
using wf_test::kron;

namespace {

double oracle_gap(const WalkExpr& e, const WalkParams& p) {
  return dist(unitary_of(synth(e, p)), wf_test::reference_walk(graph_of(e), p.gamma, p.t));
}

const Eigen::Matrix2cd kSigmaX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();

std::vector<Eigen::Index> active_indices(const Graph& g) {
  std::vector<Eigen::Index> s;
  for (std::size_t v = 0; v < g.dim(); ++v) {
    if (g.active(v)) s.push_back(static_cast<Eigen::Index>(v));
  }
  return s;
}

}  // namespace

TEST_CASE("diagonal phase specs") {
  const WalkParams p(1.0, 0.6);
  const DiagonalPhaseSpec p2(1, {{{Bit::Zero}, 1.0}, {{Bit::One}, -1.0}});
  const Circuit c = diagonal_phase_circuit(p2, p);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0] == Gate::phase2(0, -0.6, 0.6));

  CHECK(diagonal_phase_circuit(DiagonalPhaseSpec(3, {}), p).empty());

  const double r = std::sqrt(32.0);
  const DiagonalPhaseSpec k84(4, {{{Bit::Zero, Bit::Zero, Bit::Zero, Bit::Zero}, r},
                                  {{Bit::One, Bit::Zero, Bit::Zero, Bit::Zero}, -r}});
  const Circuit d = diagonal_phase_circuit(k84, WalkParams(1.0, 1.0));
  REQUIRE(d.size() == 1);
  const Gate& g = d.gates()[0];
  CHECK(g.target == 0);
  CHECK(g.theta1 == doctest::Approx(-r));
  CHECK(g.theta2 == doctest::Approx(r));
  CHECK(g.controls.size() == 3);
  for (const auto& k : g.controls) CHECK(k.polarity == Polarity::OnZero);

  // Unpaired patterns and the all-free pattern.
  const DiagonalPhaseSpec odd(2, {{{Bit::One, Bit::Free}, 2.0}});
  Eigen::Vector4cd expect;
  expect << 1.0, 1.0, std::polar(1.0, -1.2), std::polar(1.0, -1.2);
  CHECK(dist(unitary_of(diagonal_phase_circuit(odd, p)), Eigen::MatrixXcd(expect.asDiagonal())) <=
        1e-15);
  const Circuit all = diagonal_phase_circuit(DiagonalPhaseSpec(2, {{{Bit::Free, Bit::Free}, 1.0}}), p);
  CHECK(all.gates()[0].kind == GateKind::GlobalPhase);

  CHECK_THROWS_AS(DiagonalPhaseSpec(2, {{{Bit::Zero, Bit::Free}, 1.0}, {{Bit::Free, Bit::One}, 2.0}}),
                  PreconditionError);
  CHECK_THROWS_AS(DiagonalPhaseSpec(2, {{{Bit::Zero}, 1.0}}), DimensionError);
}

TEST_CASE("active covers") {
  CHECK(active_cover(hypercube(3)) == std::vector<std::vector<Control>>{{}});
  const auto cover = active_cover(star(3));
  REQUIRE(cover.size() == 2);
  CHECK(cover[0] == std::vector<Control>{{0, Polarity::OnZero}});
  CHECK(cover[1] == std::vector<Control>{{0, Polarity::OnOne},
                                         {1, Polarity::OnZero},
                                         {2, Polarity::OnZero},
                                         {3, Polarity::OnZero}});
  CHECK(active_cover(complete_bipartite(3, 2)).size() == 2);
}

TEST_CASE("path2 walk") {
  CHECK(unitary_of(synth_path2(WalkParams(1.0, 0.0))).isIdentity(1e-15));
  for (double gamma : {1.0, 0.37}) {
    const Circuit c = synth_path2(WalkParams(gamma, std::numbers::pi / (2 * gamma)));
    CHECK(dist(unitary_of(c), Complex(0, -1) * kSigmaX) <= 1e-15);
    CHECK(c.size() == 3);
  }
}

TEST_CASE("complete graph walk") {
  const WalkParams p(1.0, 1.3);
  CHECK(oracle_gap(WalkExpr::complete(2), p) <= 1e-12);
  CHECK(dist(unitary_of(synth_complete(1, p)), unitary_of(synth_path2(p))) <= 1e-15);
  for (int m = 1; m <= 8; ++m) {
    const Circuit a = synth_complete(m, WalkParams(1.0, 0.1));
    const Circuit b = synth_complete(m, WalkParams(1.0, 100 * std::numbers::pi));
    CHECK(a.size() == static_cast<std::size_t>(2 * m + 2));
    CHECK(same_structure(a, b));
  }
}

TEST_CASE("complete bipartite walk") {
  CHECK(oracle_gap(WalkExpr::bipartite(3, 2), WalkParams(1.0, 1.1)) <= 1e-10);
  CHECK(synth(WalkExpr::star(2), WalkParams()) == synth_complete_bipartite(2, 0, WalkParams()));

  // K_{2,2} is the 4-cycle; match it against path2 x path2 by vertex permutation.
  const Graph k22 = complete_bipartite(1, 1);
  const Graph c4 = hypercube(2);
  std::vector<std::size_t> perm{0, 1, 2, 3};
  bool found = false;
  do {
    const Eigen::MatrixXcd pm = wf_test::permutation(perm);
    if (dist(pm * k22.dense().cast<Complex>() * pm.transpose(), c4.dense().cast<Complex>()) == 0.0) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(found);
  const Eigen::MatrixXcd pm = wf_test::permutation(perm);
  const WalkParams p(0.37, 2.2);
  const auto u_bip = unitary_of(synth_complete_bipartite(1, 1, p));
  const auto u_cart = unitary_of(synth_cartesian(WalkExpr::path2(), WalkExpr::path2(), p));
  CHECK(dist(pm * u_bip * pm.transpose(), u_cart) <= 1e-12);

  const auto q = unitary_of(bipartite_diagonalizer(3, 2));
  CHECK(unitarity_defect(q) <= 1e-14);
  CHECK_THROWS_AS(bipartite_diagonalizer(1, 2), PreconditionError);
}

TEST_CASE("hypercube walk") {
  const Circuit c = synth_hypercube(4, WalkParams());
  CHECK(c.size() == 12);
  CHECK(c.wires() == 4);
  CHECK(synth_hypercube(1, WalkParams(0.5, 2.0)) == synth_path2(WalkParams(0.5, 2.0)));
  CHECK(unitary_of(synth_hypercube(3, WalkParams(1.0, 0.0))).isIdentity(1e-15));
  CHECK(oracle_gap(WalkExpr::hypercube(3), WalkParams(1.0, 1.0)) <= 1e-10);
  for (int n = 1; n <= 6; ++n) {
    const GateCounts k = gate_count(synth_hypercube(n, WalkParams(1.0, 7.0)));
    CHECK(k.total == static_cast<std::size_t>(3 * n));
    CHECK(k.by_kind.at(GateKind::Hadamard) == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("book walk") {
  CHECK(oracle_gap(WalkExpr::book(3), WalkParams(1.0, 0.8)) <= 1e-10);
  CHECK(unitary_of(synth_book(3, WalkParams(1.0, 0.0))).isIdentity(1e-14));
  // The spine factor runs once per block of the star's active cover (two
  // blocks), so the book costs the star plus two path2 walks.
  for (int m = 1; m <= 5; ++m) {
    const Circuit b = synth_book(m, WalkParams(1.0, 0.3));
    const Circuit s = synth(WalkExpr::star(m), WalkParams(1.0, 0.3));
    CHECK(b.size() == s.size() + 6);
    CHECK(same_structure(b, synth_book(m, WalkParams(1.0, 40.0))));
  }
}

TEST_CASE("cartesian products") {
  const WalkParams p(1.0, 0.65);
  const WalkExpr p2 = WalkExpr::path2();
  const WalkExpr nested = WalkExpr::cartesian(WalkExpr::cartesian(p2, p2), WalkExpr::cartesian(p2, p2));
  CHECK(dist(unitary_of(synth(nested, p)), unitary_of(synth_hypercube(4, p))) <= 1e-13);
  CHECK(dist(unitary_of(synth_cartesian(WalkExpr::star(3), p2, p)), unitary_of(synth_book(3, p))) <=
        1e-13);
  CHECK(oracle_gap(WalkExpr::cartesian(WalkExpr::star(1), WalkExpr::bipartite(2, 1)), p) <= 1e-10);
}

TEST_CASE("two-particle walk factorizes on the occupied subspace") {
  const WalkParams p(1.0, 1.0);
  const WalkExpr s2 = WalkExpr::star(2);
  const auto u = unitary_of(synth(s2, p));
  const auto uu = kron(u, u);
  const auto pair = unitary_of(synth(WalkExpr::cartesian(s2, s2), p));
  const auto idx = active_indices(graph_of(WalkExpr::cartesian(s2, s2)));
  CHECK(dist(pair(idx, idx), uu(idx, idx)) <= 1e-12);

  // With no padding the factorization holds on the whole space.
  const WalkExpr k4 = WalkExpr::complete(2);
  const auto v = unitary_of(synth(k4, p));
  CHECK(dist(unitary_of(synth(WalkExpr::cartesian(k4, k4), p)), kron(v, v)) <= 1e-12);
}

TEST_CASE("identity interlink walk") {
  const WalkExpr e = WalkExpr::interdep_identity(WalkExpr::complete(2));
  CHECK(oracle_gap(e, WalkParams(1.0, 1.3)) <= 1e-10);
  CHECK(unitary_of(synth(e, WalkParams(1.0, 0.0))).isIdentity(1e-14));
  CHECK(synth(e, WalkParams()).size() == 3 + synth_complete(2, WalkParams()).size());
  CHECK(oracle_gap(WalkExpr::interdep_identity(WalkExpr::star(2)), WalkParams(0.37, 2.0)) <= 1e-10);

  // Sequencing the two factor circuits reproduces the full walk.
  const InterdependentPair twin_k4 = identity_interlink(complete_graph(2));
  const WalkParams p(1.0, 1.3);
  const Circuit intra = embed(synth_complete(2, p), 3, 1);
  const Circuit inter = embed(synth_path2(p), 3, 0);
  CHECK(dist(unitary_of(seq(intra, inter)), expm_graph(twin_k4.combined(), p)) <= 1e-10);
}

TEST_CASE("complete interlink walk") {
  const WalkExpr q4 = WalkExpr::hypercube(4);
  const WalkExpr k44 = WalkExpr::bipartite(2, 2);
  const WalkParams p(1.0, 1.7);
  CHECK(oracle_gap(WalkExpr::interdep_complete(q4, k44), p) <= 1e-10);
  CHECK(dist(unitary_of(synth_interdep_complete(q4, k44, p, FactorOrder::IntraFirst)),
             unitary_of(synth_interdep_complete(q4, k44, p, FactorOrder::InterFirst))) <= 1e-12);

  // Second half smaller than the first: padded with anti-controls.
  const WalkExpr small = WalkExpr::interdep_complete(WalkExpr::hypercube(3), WalkExpr::complete(2));
  CHECK(oracle_gap(small, WalkParams(0.37, 3.0)) <= 1e-10);

  CHECK_THROWS_AS(synth(WalkExpr::interdep_complete(WalkExpr::complete(2), WalkExpr::hypercube(2)), p),
                  DegreeMismatchError);
  try {
    synth(WalkExpr::interdep_complete(WalkExpr::complete(2), WalkExpr::hypercube(2)), p);
  } catch (const DegreeMismatchError& e) {
    CHECK(std::string(e.what()).find("3 and 2") != std::string::npos);
  }
  CHECK_THROWS_AS(synth(WalkExpr::interdep_complete(WalkExpr::complete(2), WalkExpr::hypercube(3)), p),
                  EmbeddingError);
  CHECK_THROWS_AS(synth(WalkExpr::interdep_complete(WalkExpr::star(2), WalkExpr::star(2)), p),
                  DegreeMismatchError);
}

TEST_CASE("commuting sums") {
  const WalkParams p(1.0, 1.3);
  const InterdependentPair twin_k4 = identity_interlink(complete_graph(2));
  const Circuit generic = synth_commuting_sum({twin_k4.intra, embed(synth_complete(2, p), 3, 1)},
                                              {twin_k4.inter, embed(synth_path2(p), 3, 0)}, p);
  CHECK(dist(unitary_of(generic),
             unitary_of(synth_interdep_identity(WalkExpr::complete(2), p))) <= 1e-10);

  const Graph q3 = hypercube(3);
  const Circuit twice = synth_commuting_sum({q3, synth_hypercube(3, p)}, {q3, synth_hypercube(3, p)}, p);
  CHECK(dist(unitary_of(twice), expm_graph(q3, WalkParams(2.0, 1.3))) <= 1e-10);
  CHECK(oracle_gap(WalkExpr::commuting_sum(WalkExpr::hypercube(2), WalkExpr::hypercube(2)), p) <= 1e-10);

  GraphBuilder b(8);
  b.add_edge(0, 1).set_all_active();
  const Graph odd = std::move(b).build("edge");
  try {
    synth_commuting_sum({q3, synth_hypercube(3, p)}, {odd, Circuit(3)}, p, false);
    FAIL("expected NotCommutingError");
  } catch (const NotCommutingError& e) {
    CHECK(std::string(e.what()).find("provided [A, B] = 0") != std::string::npos);
  }
  CHECK_THROWS_AS(synth_commuting_sum({q3, synth_hypercube(3, p)}, {q3, Circuit(3)}, p),
                  PreconditionError);
  CHECK_THROWS_AS(synth_commuting_sum({q3, synth_hypercube(3, p)}, {path2(), synth_path2(p)}, p),
                  DimensionError);
  CHECK_THROWS_AS(validate(parse_expr("commuting_sum(star(2), hypercube(3))")), NotCommutingError);
  CHECK_THROWS_AS(validate(parse_expr("commuting_sum(path2, hypercube(3))")), DimensionError);
}

TEST_CASE("symmetric interlink") {
  const WalkParams p(0.37, 2.4);
  // B0 = I on one wire.
  const Circuit id_link = synth_symmetric_interlink(Circuit(1), DiagonalPhaseSpec(1, {{{Bit::Free}, 1.0}}), p);
  CHECK(dist(unitary_of(id_link), unitary_of(embed(synth_path2(p), 2, 0))) <= 1e-14);

  // B0 = A(P2): B = sigma_x (x) sigma_x.
  Circuit h(1);
  h.add(Gate::hadamard(0));
  const Circuit link = synth_symmetric_interlink(
      h, DiagonalPhaseSpec(1, {{{Bit::Zero}, 1.0}, {{Bit::One}, -1.0}}), p);
  GraphBuilder b(4);
  b.add_edge(0, 3).add_edge(1, 2);
  CHECK(dist(unitary_of(link), expm_graph(std::move(b).build("B"), p)) <= 1e-10);
  CHECK(unitary_of(synth_symmetric_interlink(h, DiagonalPhaseSpec(1, {{{Bit::Zero}, 1.0}}),
                                             WalkParams(1.0, 0.0)))
            .isIdentity(1e-15));
  CHECK_THROWS_AS(synth_symmetric_interlink(Circuit(2), DiagonalPhaseSpec(1, {}), p), DimensionError);
}

TEST_CASE("dispatch") {
  const WalkParams p(1.0, 0.4);
  CHECK(synth(WalkExpr::book(3), p) == synth_book(3, p));
  CHECK(oracle_gap(parse_expr("cartesian(interdep_id(complete(2)), path2)"), p) <= 1e-10);
}

TEST_CASE("soundness across the family matrix") {
  const std::vector<std::string> exprs = {
      "path2",          "complete(1)",     "complete(3)",       "bipartite(1,0)",
      "bipartite(1,1)", "bipartite(3,1)",  "star(1)",           "star(3)",
      "hypercube(1)",   "hypercube(5)",    "book(1)",           "book(2)",
      "interdep_id(path2)", "interdep_id(star(1))", "interdep_complete(path2, path2)",
      "interdep_complete(hypercube(2), bipartite(1,1))", "cartesian(star(1), star(1))",
      "cartesian(book(1), complete(2))", "commuting_sum(complete(2), complete(2))"};
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> t(-20.0, 20.0);
  std::uniform_real_distribution<double> gamma(0.05, 3.0);
  for (const auto& text : exprs) {
    const WalkExpr e = parse_expr(text);
    for (double t0 : {0.0, 1.0}) CHECK(oracle_gap(e, WalkParams(1.0, t0)) <= 1e-10);
    for (int k = 0; k < 4; ++k) {
      const WalkParams p(gamma(rng), t(rng));
      INFO(text, " t=", p.t, " gamma=", p.gamma);
      CHECK(oracle_gap(e, p) <= 1e-9);
      const auto psi = StateVector(wf_test::random_state(graph_of(e).dim(), rng));
      CHECK(std::abs(apply_to_state(synth(e, p), psi).amplitudes().norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("padding states are left alone") {
  const WalkParams p(0.37, 7.3);
  for (const char* text : {"bipartite(3,2)", "book(3)", "star(3)", "cartesian(star(1), star(1))",
                           "interdep_complete(hypercube(3), complete(2))",
                           "interdep_id(book(1))"}) {
    const WalkExpr e = parse_expr(text);
    CHECK_NOTHROW(check_padding_identity(synth(e, p), graph_of(e)));
  }
  Circuit broken(3);
  broken.add(Gate::hadamard(0));
  CHECK_THROWS_AS(check_padding_identity(broken, star(2)), InternalError);
  CHECK_THROWS_AS(check_padding_identity(Circuit(2), star(2)), DimensionError);
}
