#include "doctest.h"

#include "qbounds/error.hpp"
#include "qbounds/qpolynomial.hpp"
#include "support.hpp"

using namespace qbounds;
using qtest::qdist;

namespace {
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

void check_coeffs(const QPolynomial& f, const std::vector<Quaternion>& expected, double tol = 0.0) {
  REQUIRE(f.coeffs().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    INFO("coefficient " << i << " = " << f[i] << ", expected " << expected[i]);
    CHECK(qdist(f[i], expected[i]) <= tol);
  }
}
}  // namespace

TEST_CASE("construction trims zero leading coefficients and rejects zero polynomial") {
  QPolynomial f(Side::Left, {Quaternion(1.0), I, Quaternion(), Quaternion()});
  CHECK(f.degree() == 1);
  CHECK_THROWS_AS(QPolynomial(Side::Left, {Quaternion(), Quaternion()}), Error);
  CHECK_THROWS_AS(QPolynomial(Side::Left, {}), Error);
  CHECK(QPolynomial::monic(Side::Right, std::vector<Quaternion>{J}).is_monic());
}

TEST_CASE("evaluation is side-sensitive") {
  CHECK(eval(QPolynomial(Side::Left, {Quaternion(), I}), J) == K);
  CHECK(eval(QPolynomial(Side::Right, {Quaternion(), I}), J) == -K);
  // z^2 + 2iz at z = -2i
  const QPolynomial f(Side::Left, {Quaternion(), scale(I, 2), Quaternion(1.0)});
  CHECK(eval(f, scale(I, -2)) == Quaternion());
}

TEST_CASE("convolution examples") {
  const auto zi = qtest::linear(Side::Left, I);
  const auto zj = qtest::linear(Side::Left, J);
  // (z - i)(z - j) = z^2 - (i + j) z + k
  check_coeffs(conv(zi, zj), {K, -(I + J), Quaternion(1.0)});
  const QPolynomial one(Side::Left, {Quaternion(1.0)});
  CHECK(conv(zi, one) == zi);
  // (z^2 + z i + j) * (i - z) = -z^3 + (-1 - j) z - k
  const QPolynomial f(Side::Right, {J, I, Quaternion(1.0)});
  const QPolynomial g(Side::Right, {I, Quaternion(-1.0)});
  check_coeffs(conv(f, g), {-K, Quaternion(-1, 0, -1, 0), Quaternion(), Quaternion(-1.0)});
  CHECK_THROWS_AS(conv(zi, qtest::linear(Side::Right, I)), Error);
}

TEST_CASE("convolution propagates the left factor's zero for right polynomials") {
  qtest::Gen gen(11);
  for (int t = 0; t < 300; ++t) {
    const Quaternion a = gen.quat(2.0);
    const auto h = gen.monic(Side::Right, gen.integer(1, 4), 2.0);
    const auto g = gen.monic(Side::Right, gen.integer(1, 4), 2.0);
    const auto f = conv(qtest::linear(Side::Right, a), h);
    CHECK(modulus(eval(f, a)) <= 1e-9);
    CHECK(modulus(eval(conv(f, g), a)) <= 1e-9 * (1.0 + std::pow(modulus(a), 8.0)));
  }
}

TEST_CASE("degree adds and real factors commute") {
  qtest::Gen gen(12);
  for (int t = 0; t < 200; ++t) {
    const auto f = gen.monic(Side::Left, gen.integer(1, 5));
    std::vector<Quaternion> rc;
    const int dr = gen.integer(0, 4);
    for (int i = 0; i <= dr; ++i) rc.emplace_back(gen.uniform(-2, 2));
    rc.back() = Quaternion(1.0);
    const QPolynomial real(Side::Left, rc);
    const auto fg = conv(f, real), gf = conv(real, f);
    CHECK(fg.degree() == f.degree() + real.degree());
    for (std::size_t i = 0; i <= fg.degree(); ++i) CHECK(qdist(fg[i], gf[i]) <= 1e-12);
    // with a real factor the product agrees with pointwise multiplication
    const Quaternion z = gen.quat();
    CHECK(qdist(eval(fg, z), eval(f, z) * eval(real, z)) <= 1e-9);
  }
}

TEST_CASE("reversal polynomial examples") {
  check_coeffs(reversal(QPolynomial(Side::Left, {Quaternion(4.0), Quaternion(2.0), Quaternion(1.0)})),
               {Quaternion(0.25), Quaternion(0.5), Quaternion(1.0)});
  check_coeffs(reversal(QPolynomial(Side::Left, {scale(I, 2), J, Quaternion(1.0)})),
               {scale(I, -0.5), scale(K, -0.5), Quaternion(1.0)});
  check_coeffs(reversal(QPolynomial(Side::Right, {J, Quaternion(1.0)})), {-J, Quaternion(1.0)});
  CHECK_THROWS_AS(reversal(QPolynomial(Side::Left, {Quaternion(), Quaternion(1.0)})), Error);
}

TEST_CASE("reversal maps real zeros to reciprocals") {
  qtest::Gen gen(13);
  for (int t = 0; t < 200; ++t) {
    double r = gen.uniform(0.2, 3.0) * (gen.integer(0, 1) ? 1 : -1);
    std::vector<Quaternion> hc;
    const int dh = gen.integer(1, 4);
    for (int i = 0; i < dh; ++i) hc.emplace_back(gen.uniform(-2, 2));
    hc.emplace_back(1.0);
    if (hc[0].is_zero()) continue;
    const auto f = conv(qtest::linear(Side::Left, Quaternion(r)), QPolynomial(Side::Left, hc));
    const auto g = reversal(f);
    CHECK(g.is_monic());
    CHECK(modulus(eval(g, Quaternion(1.0 / r))) <= 1e-9 * (1.0 + modulus(inverse(f[0])) * 1e3));
  }
}

TEST_CASE("auxiliary polynomial coefficients") {
  const std::vector<Quaternion> q = {J, I};
  const auto aux = aux_poly(q);
  REQUIRE(aux.n() == 2);
  CHECK(aux.v[0] == -K);
  CHECK(aux.v[1] == Quaternion(-1, 0, -1, 0));

  const std::vector<Quaternion> zeros(5);
  for (const auto& v : aux_poly(zeros).v) CHECK(v.is_zero());

  const std::vector<Quaternion> ex = {Quaternion(), Quaternion(), scale(J, -64), Quaternion()};
  const auto v = aux_poly(ex).magnitudes();
  CHECK(v == std::vector<double>{0, 0, 0, 64});
  CHECK_THROWS_AS(aux_poly(std::vector<Quaternion>{}), Error);
}

TEST_CASE("auxiliary polynomial is the negated product f * (q_n - z)") {
  qtest::Gen gen(14);
  for (int t = 0; t < 100; ++t) {
    // f has the known zero a; as the left factor its zero carries over to P
    const Quaternion a = gen.quat();
    const auto f = conv(qtest::linear(Side::Right, a), gen.monic(Side::Right, gen.integer(0, 5)));
    const auto shifted = shifted_coefficients(f);
    const auto aux = aux_poly(shifted);
    const QPolynomial qn_minus_z(Side::Right, {shifted.back(), Quaternion(-1.0)});
    const auto prod = conv(f, qn_minus_z);
    const auto p = aux.as_polynomial();
    REQUIRE(p.degree() == prod.degree());
    for (std::size_t i = 0; i <= p.degree(); ++i) CHECK(qdist(p[i], -prod[i]) <= 1e-12);
    CHECK(modulus(eval(p, a)) <= 1e-12);
  }
  CHECK_THROWS_AS(shifted_coefficients(qtest::linear(Side::Left, I)), Error);
}

TEST_CASE("random_poly is deterministic, monic and range-limited") {
  CHECK(random_poly(2, 1.0, 42, Side::Left) == random_poly(2, 1.0, 42, Side::Left));
  CHECK_FALSE(random_poly(2, 1.0, 42, Side::Left) == random_poly(2, 1.0, 43, Side::Left));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto f = random_poly(1, 10.0, s, Side::Right);
    CHECK(f.side() == Side::Right);
    for (const auto& q : f.coeffs()) CHECK(modulus(q) <= 10.0);
    const auto g = random_poly(5, 2.0, s, Side::Left);
    CHECK(g.degree() == 5);
    CHECK(g.leading() == Quaternion(1.0));
  }
  CHECK_THROWS_AS(random_poly(0, 1.0, 1, Side::Left), Error);
}

TEST_CASE("normalization divides on the polynomial's side") {
  qtest::Gen gen(15);
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<Quaternion> c = {gen.quat(), gen.quat(), gen.quat()};
    const Quaternion a = gen.quat();
    const auto f = conv(qtest::linear(side, a), QPolynomial(side, {Quaternion(1.0), Quaternion(1.0)}));
    // scale so the leading coefficient is a generic quaternion, zeros unchanged
    std::vector<Quaternion> scaled;
    for (const auto& q : f.coeffs()) scaled.push_back(side == Side::Left ? c[0] * q : q * c[0]);
    const QPolynomial nonmonic(side, scaled);
    const auto g = nonmonic.normalized();
    CHECK(g.is_monic());
    for (std::size_t i = 0; i <= g.degree(); ++i) CHECK(qdist(g[i], f[i]) <= 1e-12);
  }
}
