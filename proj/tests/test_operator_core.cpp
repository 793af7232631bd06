#include "cdd/operator_core.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cdd;
using namespace cdd::testing;

namespace {

ComplexMatrix pauli(char which) {
  ComplexMatrix m(2, 2);
  switch (which) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y':
      m << std::complex<double>(0, 0), std::complex<double>(0, -1),
          std::complex<double>(0, 1), std::complex<double>(0, 0);
      break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

TEST_CASE("value type invariants") {
  CHECK_THROWS_AS(HermitianOperator(pauli('X') + ComplexMatrix::Constant(2, 2, 1e-6)),
                  std::invalid_argument);
  CHECK_NOTHROW(HermitianOperator(pauli('Y')));

  ComplexMatrix not_unitary = 2.0 * ComplexMatrix::Identity(3, 3);
  CHECK_THROWS_AS(UnitaryMatrix(std::move(not_unitary)), std::invalid_argument);
  CHECK_NOTHROW(UnitaryMatrix(ComplexMatrix::Identity(3, 3)));

  CHECK_THROWS_AS(StateVector(ComplexVector::Zero(4)), std::invalid_argument);
  ComplexVector v(2);
  v << 3.0, 4.0;
  CHECK(StateVector(v).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("commutator on Pauli matrices") {
  const HermitianOperator z(pauli('Z')), x(pauli('X')), y(pauli('Y'));

  const ComplexMatrix zx = commutator(z, x);
  CHECK((zx - 2.0 * std::complex<double>(0, 1) * pauli('Y')).cwiseAbs().maxCoeff() < 1e-15);

  CHECK(commutator(z, z).cwiseAbs().maxCoeff() == 0.0);

  const ComplexMatrix zy = commutator(z, y);
  CHECK((zy + 2.0 * std::complex<double>(0, 1) * pauli('X')).cwiseAbs().maxCoeff() < 1e-15);

  const HermitianOperator big(ComplexMatrix::Identity(3, 3));
  CHECK_THROWS_AS(commutator(z, big), std::invalid_argument);
}

TEST_CASE("commutator antisymmetry is exact") {
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index dim = 2 + trial % 5;
    const ComplexMatrix a = random_hermitian(dim);
    const ComplexMatrix b = random_hermitian(dim);
    const ComplexMatrix ab = commutator(a, b);
    const ComplexMatrix ba = commutator(b, a);
    CHECK((ab + ba).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("nested commutator") {
  const HermitianOperator z(pauli('Z')), x(pauli('X'));

  CHECK((nested_commutator(z, x, 0) - pauli('X')).cwiseAbs().maxCoeff() == 0.0);
  CHECK((nested_commutator(z, x, 1) - 2.0 * std::complex<double>(0, 1) * pauli('Y'))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // independent oracle: repeated 2x2 multiplication on plain arrays
  M2 acc = kX2;
  for (int i = 0; i < 3; ++i) acc = comm2(kZ2, acc);
  const ComplexMatrix lib = nested_commutator(z, x, 3);
  CHECK(std::abs(lib(0, 1) - acc[1]) < 1e-14);
  CHECK(std::abs(lib(1, 0) - acc[2]) < 1e-14);
  // closed form for reference: 8iY
  CHECK((lib - 8.0 * std::complex<double>(0, 1) * pauli('Y')).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(nested_commutator(z, x, -1), std::invalid_argument);
}

TEST_CASE("eigendecompose basics") {
  const SpectralDecomposition dx = eigendecompose(HermitianOperator(pauli('X')));
  CHECK(dx.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dx.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = 1.0;
  diag(2, 2) = 2.0;
  const SpectralDecomposition dd = eigendecompose(HermitianOperator(diag));
  CHECK(dd.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(dd.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(dd.eigenvalues(2) == doctest::Approx(3.0));
  // permuted basis vectors: lowest eigenvalue lives on entry 1
  CHECK(std::abs(dd.eigenvectors(1, 0)) == doctest::Approx(1.0));

  const SpectralDecomposition dxz = eigendecompose(HermitianOperator(pauli('X') + pauli('Z')));
  CHECK(dxz.eigenvalues(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dxz.eigenvalues(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("eigendecompose reconstruction and phase convention") {
  for (Eigen::Index dim : {2, 5, 9, 16}) {
    const ComplexMatrix m = random_hermitian(dim);
    const SpectralDecomposition dec = eigendecompose(HermitianOperator(m));

    // orthonormality
    const ComplexMatrix gram = dec.eigenvectors.adjoint() * dec.eigenvectors;
    CHECK((gram - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);

    // reconstruction
    ComplexMatrix rebuilt = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
      rebuilt += dec.eigenvalues(n) * dec.eigenvectors.col(n) *
                 dec.eigenvectors.col(n).adjoint();
    }
    CHECK(hs_norm(rebuilt - m) / hs_norm(m) < 1e-10);

    // ascending order and fixed phases
    for (Eigen::Index n = 0; n < dim; ++n) {
      if (n) CHECK(dec.eigenvalues(n) >= dec.eigenvalues(n - 1));
      Eigen::Index imax = 0;
      dec.eigenvectors.col(n).cwiseAbs().maxCoeff(&imax);
      CHECK(dec.eigenvectors(imax, n).imag() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(dec.eigenvectors(imax, n).real() >= 0.0);
    }
  }
}

TEST_CASE("expm_hermitian") {
  const HermitianOperator z(pauli('Z')), x(pauli('X'));

  CHECK((expm_hermitian(z, 0.0).matrix() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-15);

  const ComplexMatrix u = expm_hermitian(z, M_PI / 2).matrix();
  CHECK(std::abs(u(0, 0) - std::complex<double>(0, -1)) < 1e-13);
  CHECK(std::abs(u(1, 1) - std::complex<double>(0, 1)) < 1e-13);
  CHECK(std::abs(u(0, 1)) < 1e-13);

  const ComplexMatrix ux = expm_hermitian(x, M_PI).matrix();
  CHECK((ux + ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  // inverse property over random generators and times
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index dim = 2 + trial % 6;
    const HermitianOperator h(random_hermitian(dim));
    const double t = uniform(-5.0, 5.0);
    const ComplexMatrix prod = expm_hermitian(h, t).matrix() * expm_hermitian(h, -t).matrix();
    CHECK((prod - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hs_norm") {
  CHECK(hs_norm(pauli('Y')) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(hs_norm(ComplexMatrix::Zero(4, 4)) == 0.0);
  CHECK(hs_norm(ComplexMatrix::Identity(7, 7)) == doctest::Approx(std::sqrt(7.0)));

  // unitary invariance with rotations built by expm_hermitian
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index dim = 3 + trial % 4;
    const ComplexMatrix a = random_hermitian(dim);
    const ComplexMatrix u = expm_hermitian(HermitianOperator(random_hermitian(dim)), 1.0).matrix();
    CHECK(std::abs(hs_norm(u * a * u.adjoint()) - hs_norm(a)) < 1e-9);
  }
}

TEST_CASE("infidelity") {
  ComplexVector e0(2), e1(2), plus(2);
  e0 << 1, 0;
  e1 << 0, 1;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

  CHECK(infidelity(StateVector(e0), StateVector(e0)) == 0.0);
  CHECK(infidelity(StateVector(e0), StateVector(e1)) == doctest::Approx(1.0));
  CHECK(infidelity(StateVector(e0), StateVector(plus)) == doctest::Approx(0.5).epsilon(1e-12));

  ComplexVector w(3);
  w << 1, 0, 0;
  CHECK_THROWS_AS(infidelity(StateVector(e0), StateVector(w)), std::invalid_argument);
}
