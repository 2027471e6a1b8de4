#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "loccgate/kernels.hpp"

using loccgate::Amplitude;
namespace k = loccgate::kernels;

namespace {

std::vector<Amplitude> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Amplitude> v(n);
  for (auto& a : v) a = Amplitude{g(rng), g(rng)};
  return v;
}

// Sizes chosen to hit the vector body, the scalar tail, and the empty case.
const std::size_t kSizes[] = {0, 1, 2, 3, 5, 8, 17, 64, 333, 1024};

}  // namespace

TEST_CASE("scalar backend is always available and active is usable") {
  CHECK(k::find_backend("scalar") == &k::scalar_backend());
  CHECK(k::available_backends().size() >= 1);
  CHECK(k::active_backend().name != nullptr);
}

TEST_CASE("every available backend matches the scalar reference") {
  std::mt19937_64 rng(20240811);
  const auto& ref = k::scalar_backend();
  for (const k::Backend* b : k::available_backends()) {
    CAPTURE(b->name);
    for (std::size_t n : kSizes) {
      CAPTURE(n);
      const auto x = random_vec(n, rng);
      const auto y = random_vec(n, rng);
      const Amplitude alpha{0.7, -1.3};

      const Amplitude d_ref = ref.dot_conj(x.data(), y.data(), n);
      const Amplitude d_b = b->dot_conj(x.data(), y.data(), n);
      CHECK(std::abs(d_ref - d_b) <= 1e-12 * (1.0 + std::abs(d_ref)));

      auto y_ref = y, y_b = y;
      ref.axpy(alpha, x.data(), y_ref.data(), n);
      b->axpy(alpha, x.data(), y_b.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(y_ref[i] - y_b[i]) <= 1e-13);

      auto s_ref = x, s_b = x;
      ref.scale(alpha, s_ref.data(), n);
      b->scale(alpha, s_b.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(s_ref[i] - s_b[i]) <= 1e-13);

      std::vector<Amplitude> c_ref(n), c_b(n);
      ref.conjugate(x.data(), c_ref.data(), n);
      b->conjugate(x.data(), c_b.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(c_ref[i] == c_b[i]);

      const double n_ref = ref.norm_sq(x.data(), n);
      const double n_b = b->norm_sq(x.data(), n);
      CHECK(n_b == doctest::Approx(n_ref).epsilon(1e-13));
    }

    // outer product accumulation, rectangular
    const auto a = random_vec(7, rng);
    const auto c = random_vec(5, rng);
    std::vector<Amplitude> out_ref(35, Amplitude{1.0, -2.0});
    auto out_b = out_ref;
    ref.outer_acc({0.3, 0.4}, a.data(), 7, c.data(), 5, out_ref.data());
    b->outer_acc({0.3, 0.4}, a.data(), 7, c.data(), 5, out_b.data());
    for (std::size_t i = 0; i < 35; ++i)
      CHECK(std::abs(out_ref[i] - out_b[i]) <= 1e-13);
  }
}

TEST_CASE("dot_conj is conjugate-linear in the first argument") {
  std::mt19937_64 rng(7);
  const auto x = random_vec(40, rng);
  const auto y = random_vec(40, rng);
  const Amplitude c{0.2, 1.7};
  auto cx = x;
  k::scale(c, cx.data(), cx.size());
  const Amplitude lhs = k::dot_conj(cx.data(), y.data(), 40);
  const Amplitude rhs = std::conj(c) * k::dot_conj(x.data(), y.data(), 40);
  CHECK(std::abs(lhs - rhs) <= 1e-12);
}

TEST_CASE("norm_sq equals dot_conj with itself") {
  std::mt19937_64 rng(8);
  const auto x = random_vec(129, rng);
  const Amplitude d = k::dot_conj(x.data(), x.data(), x.size());
  CHECK(d.real() == doctest::Approx(k::norm_sq(x.data(), x.size()))
                        .epsilon(1e-13));
  CHECK(std::abs(d.imag()) <= 1e-12);
}

TEST_CASE("backends are deterministic run to run") {
  std::mt19937_64 rng(9);
  const auto x = random_vec(1001, rng);
  const auto y = random_vec(1001, rng);
  for (const k::Backend* b : k::available_backends()) {
    const Amplitude first = b->dot_conj(x.data(), y.data(), x.size());
    const Amplitude second = b->dot_conj(x.data(), y.data(), x.size());
    CHECK(first == second);
  }
}
