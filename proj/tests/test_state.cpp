#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "loccgate/cuts.hpp"
#include "loccgate/random.hpp"
#include "loccgate/state.hpp"

using namespace loccgate;

namespace {

const double kSqrt2Inv = 1.0 / std::sqrt(2.0);

double max_amp_diff(const PureState& a, const PureState& b) {
  REQUIRE(a.dims() == b.dims());
  double m = 0.0;
  for (std::size_t i = 0; i < a.total_dim(); ++i)
    m = std::max(m, std::abs(a.amps()[i] - b.amps()[i]));
  return m;
}

}  // namespace

TEST_CASE("PureState validation") {
  CHECK_THROWS_AS(PureState({2, 2}, std::vector<Amplitude>(3, 0.5)),
                  InputError);
  CHECK_THROWS_AS(PureState({2}, {Amplitude{0.3, 0.0}, Amplitude{0.3, 0.0}}),
                  InputError);  // not normalized
  CHECK_THROWS_AS(
      PureState({2}, {Amplitude{std::nan(""), 0.0}, Amplitude{0.0, 0.0}}),
      InputError);
  CHECK_THROWS_AS(PureState({0, 2}, std::vector<Amplitude>{}), InputError);
}

TEST_CASE("tensor: basis vectors and Bell pairs") {
  const auto zero = basis_state({2}, {0});
  const auto z00 = tensor(zero, zero);
  CHECK(z00.dims() == std::vector<int>{2, 2});
  CHECK(z00.amps()[0] == Amplitude{1.0, 0.0});
  for (std::size_t i = 1; i < 4; ++i) CHECK(z00.amps()[i] == Amplitude{});

  const auto bb = tensor(bell_state(1), bell_state(1));
  CHECK(bb.total_dim() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    const bool hit = (i == 0 || i == 3 || i == 12 || i == 15);
    CHECK(std::abs(bb.amps()[i] - (hit ? Amplitude{0.5, 0.0} : Amplitude{})) <=
          1e-15);
  }
}

TEST_CASE("tensor: norm preserved on random states") {
  auto rng = seeded_rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_state({2, 3}, rng);
    const auto b = random_state({4}, rng);
    const auto ab = tensor(a, b);
    CHECK(std::abs(inner(ab, ab).real() - 1.0) <= 1e-12);
  }
}

TEST_CASE("tensor is associative") {
  auto rng = seeded_rng(43);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_state({2}, rng);
    const auto b = random_state({3}, rng);
    const auto c = random_state({2}, rng);
    CHECK(max_amp_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <=
          1e-12);
  }
}

TEST_CASE("inner factorizes over tensor products") {
  auto rng = seeded_rng(44);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_state({3}, rng);
    const auto b = random_state({2, 2}, rng);
    const auto c = random_state({3}, rng);
    const auto d = random_state({2, 2}, rng);
    const Amplitude lhs = inner(tensor(a, b), tensor(c, d));
    const Amplitude rhs = inner(a, c) * inner(b, d);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("tensor rejects dimension overflow") {
  const auto big = basis_state(std::vector<int>(10, 4), std::vector<int>(10, 0));
  CHECK_THROWS_AS(tensor(big, big), InputError);  // 4^20 > 2^20
}

TEST_CASE("inner: orthogonality of named states") {
  CHECK(std::abs(inner(basis_state({2, 2}, {0, 0}),
                       basis_state({2, 2}, {1, 1}))) == 0.0);
  CHECK(std::abs(inner(bell_state(1), bell_state(2))) <= 1e-15);
  const auto s = build_family(FamilySpec::s_set()).states;
  CHECK(std::abs(inner(s[0], s[1])) <= 1e-15);
  CHECK_THROWS_AS(inner(bell_state(1), basis_state({2}, {0})), InputError);
}

TEST_CASE("conjugate") {
  const auto b1 = bell_state(1);  // real amplitudes
  CHECK(max_amp_diff(conjugate(b1), b1) == 0.0);

  const auto s = build_family(FamilySpec::s_set()).states;
  CHECK(max_amp_diff(conjugate(s[0]), s[1]) <= 1e-15);  // omega <-> omega^2

  auto rng = seeded_rng(45);
  for (int t = 0; t < 100; ++t) {
    const auto psi = random_state({2, 3}, rng);
    CHECK(max_amp_diff(conjugate(conjugate(psi)), psi) == 0.0);
  }
}

TEST_CASE("check_orthonormal") {
  const auto fam = build_family(FamilySpec::bell4());
  CHECK(check_orthonormal(fam.states.states(), 1e-9).ok);

  const std::vector<PureState> bad{
      basis_state({2}, {0}),
      PureState({2}, {kSqrt2Inv, kSqrt2Inv})};
  const auto rep = check_orthonormal(bad, 1e-9);
  CHECK_FALSE(rep.ok);
  CHECK(rep.max_violation == doctest::Approx(kSqrt2Inv).epsilon(1e-12));

  const auto sp = build_family(FamilySpec::s_prime_set());
  CHECK(check_orthonormal(sp.states.states(), 1e-9).ok);
}

TEST_CASE("build_family: bell4") {
  const auto fam = build_family(FamilySpec::bell4());
  REQUIRE(fam.states.size() == 4);
  CHECK(fam.states.dims() == std::vector<int>{2, 2});
  for (const auto& b : fam.states.states()) {
    const auto lam = schmidt_vector(b, Cut{{0}, {1}});
    REQUIRE(lam.probs.size() == 2);
    CHECK(lam.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lam.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(fam.detectors.size() == 4);
}

TEST_CASE("build_family: a_family at the symmetric point equals Bell") {
  const auto fam = build_family(FamilySpec::a_family(kSqrt2Inv));
  REQUIRE(fam.states.size() == 3);
  CHECK(max_amp_diff(fam.states[0], bell_state(1)) <= 1e-15);
  CHECK(max_amp_diff(fam.states[1], bell_state(2)) <= 1e-15);
  CHECK(max_amp_diff(fam.states[2], bell_state(3)) <= 1e-15);
  CHECK_THROWS_AS(build_family(FamilySpec::a_family(0.0)), InputError);
  CHECK_THROWS_AS(build_family(FamilySpec::a_family(1.0)), InputError);
}

TEST_CASE("build_family: s_prime has a product third state") {
  const auto fam = build_family(FamilySpec::s_prime_set());
  const auto lam = schmidt_vector(fam.states[2], Cut{{0}, {1}});
  CHECK(lam.probs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(schmidt_rank(fam.states[2], Cut{{0}, {1}}) == 1);
}

TEST_CASE("build_family: ghz8 orthonormal, balanced across every cut") {
  const auto fam = build_family(FamilySpec::ghz8());
  REQUIRE(fam.states.size() == 8);
  CHECK(check_orthonormal(fam.states.states(), 1e-9).ok);
  for (const auto& g : fam.states.states())
    for (int p = 0; p < 3; ++p) {
      const auto lam = schmidt_vector(g, single_party_cut(p, 3));
      CHECK(lam.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(lam.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("every family output is orthonormal at 1e-9") {
  const FamilySpec specs[] = {
      FamilySpec::bell4(),          FamilySpec::ghz8(),
      FamilySpec::s_set(),          FamilySpec::s_prime_set(),
      FamilySpec::a_family(0.3),    FamilySpec::gen_max_entangled(4, 1, 2)};
  for (const auto& spec : specs) {
    const auto fam = build_family(spec);
    CHECK(check_orthonormal(fam.states.states(), 1e-9).ok);
  }
  CHECK_THROWS_AS(build_family(FamilySpec::gen_max_entangled(1, 0, 0)),
                  InputError);
}

TEST_CASE("gen_max_entangled reproduces the 3x3 set") {
  const auto s = build_family(FamilySpec::s_set()).states;
  CHECK(max_amp_diff(gen_max_entangled_state(3, 0, 1), s[0]) <= 1e-14);
  CHECK(max_amp_diff(gen_max_entangled_state(3, 0, 2), s[1]) <= 1e-14);
  CHECK(max_amp_diff(gen_max_entangled_state(3, 1, 0), s[2]) <= 1e-14);
}

TEST_CASE("apply_local_unitary preserves norm and composes") {
  auto rng = seeded_rng(46);
  const auto psi = random_state({3, 2}, rng);
  const auto u = haar_unitary(3, rng);
  const auto moved = apply_local_unitary(psi, 0, u);
  CHECK(std::abs(inner(moved, moved).real() - 1.0) <= 1e-12);
  const auto back = apply_local_unitary(moved, 0, u.adjoint());
  double diff = 0.0;
  for (std::size_t i = 0; i < psi.total_dim(); ++i)
    diff = std::max(diff, std::abs(psi.amps()[i] - back.amps()[i]));
  CHECK(diff <= 1e-12);
}
