#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "hsred/error.hpp"
#include "hsred/observables.hpp"

using namespace hsred;

TEST_CASE("energy per rung") {
  CHECK(energy_per_site(-67.5, 6) == -11.25);
  CHECK(energy_per_site(-11.25, 1) == -11.25);
}

TEST_CASE("accuracy loss") {
  CHECK(accuracy_loss(-11.25, -11.25) == 0.0);
  CHECK(accuracy_loss(-10.0, -9.5) == doctest::Approx(5.0));
  CHECK(accuracy_loss(-10.0, -10.5) == doctest::Approx(5.0));
  CHECK(accuracy_loss(2.0, 1.0) == doctest::Approx(50.0));
  try {
    accuracy_loss(0.0, 1.0);
    FAIL("expected division guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_guard);
  }
}

TEST_CASE("entropy") {
  const double s = 1 / std::sqrt(2.0);
  const std::vector<double> singlet{s, -s};
  CHECK(ground_entropy(singlet, 1) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-14));

  const std::vector<double> basis_state{0.0, 1.0, 0.0};
  CHECK(ground_entropy(basis_state, 3) == 0.0);

  std::vector<double> uniform(924, 1 / std::sqrt(924.0));
  CHECK(ground_entropy(uniform, 6) == doctest::Approx(std::log(924.0) / 12).epsilon(1e-12));

  const std::vector<double> bad{1.0, 1.0};
  try {
    ground_entropy(bad, 1);
    FAIL("expected norm violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::norm_violation);
  }
}
