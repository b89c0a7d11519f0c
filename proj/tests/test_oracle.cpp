#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ctqw/amplitudes.hpp"
#include "ctqw/error.hpp"
#include "ctqw/families.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"
#include "support.hpp"

using namespace ctqw;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

double norm2(const cvec& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace

TEST_CASE("small exact evolutions") {
  const auto k2 = family_graph(parse_family("complete:n=2"));
  for (double t : {0.0, 0.7, 3.0}) {
    const auto psi = dense_evolve(k2, 1.0, t);
    CHECK(std::abs(psi[0] - std::cos(t)) < 1e-14);
    CHECK(std::abs(psi[1] - cd{0.0, -std::sin(t)}) < 1e-14);
  }
  // K_3 at scale 1/2: q_0 = (e^{−iτ·2} + 2e^{iτ})/3, τ = π gives −1/3
  const auto k3 = family_graph(parse_family("complete:n=3"));
  CHECK(std::abs(dense_evolve(k3, 0.5, 2.0 * pi)[0] - cd{-1.0 / 3.0, 0.0}) < 1e-13);

  const auto c6 = family_graph(parse_family("cycle:n=6"));
  const auto start = dense_evolve(c6, 0.5, 0.0);
  CHECK(std::abs(start[c6.origin()] - 1.0) < 1e-14);
  CHECK(norm2(start) == doctest::Approx(1.0));
}

TEST_CASE("property: unitarity and the group law") {
  testing::Gen gen(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 40));
    const auto g = gen.connected_graph(n, gen.uniform(0.0, 0.4));
    const DenseEvolution ev(g);
    const double scale = gen.uniform(0.1, 1.0);
    const double s = gen.uniform(0.0, 10.0), t = gen.uniform(0.0, 10.0);
    const auto psi_t = ev.evolve(scale, t);
    CHECK(std::abs(norm2(psi_t) - 1.0) < 1e-10);
    const auto composed = ev.evolve(psi_t, scale, s);
    const auto direct = ev.evolve(scale, s + t);
    CHECK(testing::max_abs_diff(composed, direct) < 1e-9);
  }
}

TEST_CASE("stratum projection") {
  const auto g = family_graph(parse_family("cycle:n=4"));
  const auto s = stratify(g);
  const cvec psi{1.0, 0.5, cd{0.0, 1.0}, 0.5};
  const auto q = stratum_project(psi, s);
  REQUIRE(q.size() == 3);
  CHECK(std::abs(q[0] - 1.0) < 1e-15);
  CHECK(std::abs(q[1] - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(q[2] - cd{0.0, 1.0}) < 1e-15);
  const cvec short_psi{1.0, 0.0};
  CHECK(code_of([&] { stratum_project(short_psi, s); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("size cap") {
  const auto g = family_graph(parse_family("hypercube:n=6"));
  CHECK(code_of([&] { DenseEvolution ev(g, 32); }) == ErrorCode::GraphTooLarge);
  CHECK_NOTHROW(DenseEvolution(g, 64));
}

TEST_CASE("oracle equals the stratum amplitudes") {
  const char* specs[] = {"complete:n=6", "cycle:n=9", "cycle:n=10", "path:n=7", "glued-trees:n=3", "hypercube:n=5"};
  for (const char* name : specs) {
    CAPTURE(name);
    const auto spec = parse_family(name);
    const auto g = family_graph(spec);
    const auto s = stratify(g);
    const auto j = family_jacobi(spec);
    const DenseEvolution ev(g);
    for (double t : {0.1, 1.0, 5.0, 20.0}) {
      const auto q = stratum_project(ev.evolve(j.scale(), t), s);
      const auto mu = jacobi_to_quadrature(j, *j.levels());
      for (std::size_t k = 0; k < q.size(); ++k)
        CHECK(std::abs(q[k] - amplitude_quadrature(mu, j, k, t)) < 1e-10);
    }
  }
}

TEST_CASE("property: vertices of a stratum share one amplitude") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto spec = gen.finite_family();
    CAPTURE(format_family(spec));
    const auto g = family_graph(spec);
    const auto s = stratify(g);
    const auto j = extract_jacobi(g, s);
    const double scale = spec.scale.value_or(default_scale(spec));
    const JacobiSeq scaled = j.with_scale(scale);
    const double t = gen.uniform(0.0, 15.0);
    const auto psi = dense_evolve(g, scale, t);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(std::abs(psi[v] - site_amplitude(g, s, scaled, v, t)) < 1e-12);
  }
}
