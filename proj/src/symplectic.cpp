#include "cartancert/symplectic.hpp"

#include <stdexcept>

namespace cartancert {

GramForm make_gram(FpMat j) {
  u32 p = j.p, n = j.n;
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("gram: even dimension required");
  for (u32 i = 0; i < n; ++i) {
    if (j.at(i, i) != 0) throw std::invalid_argument("gram: nonzero diagonal");
    for (u32 k = 0; k < n; ++k) {
      if ((j.at(i, k) + j.at(k, i)) % p != 0)
        throw std::invalid_argument("gram: not antisymmetric");
    }
  }
  if (j.det() == 0) throw std::invalid_argument("gram: degenerate form");
  return GramForm{std::move(j)};
}

u32 wedge_pairing(const FieldTower& t, const TowerElem& v1, const TowerElem& v2) {
  if (v1.c.size() != v2.c.size() || v1.c.size() != 2 * t.d())
    throw std::invalid_argument("wedge: dimension mismatch");
  KElem a = t.k_part(v1), b = t.eta_part(v1);
  KElem c = t.k_part(v2), d = t.eta_part(v2);
  return t.k_trace_to_p(t.k_sub(t.k_mul(a, d), t.k_mul(b, c)));
}

GramForm gram_matrix(const FieldTower& t) {
  u32 n = 2 * t.d();
  FpMat j(static_cast<u32>(t.p()), n);
  for (u32 i = 0; i < n; ++i) {
    TowerElem bi = t.l_zero();
    bi.c[i] = 1;
    for (u32 k = 0; k < n; ++k) {
      TowerElem bk = t.l_zero();
      bk.c[k] = 1;
      j.at(i, k) = wedge_pairing(t, bi, bk);
    }
  }
  return make_gram(std::move(j));
}

FpMat multiply_operator_matrix(const FieldTower& t, const TowerElem& beta) {
  if (t.l_is_zero(beta)) throw std::invalid_argument("multiply by zero is singular");
  u32 n = 2 * t.d();
  FpMat m(static_cast<u32>(t.p()), n);
  for (u32 col = 0; col < n; ++col) {
    TowerElem basis = t.l_zero();
    basis.c[col] = 1;
    TowerElem img = t.l_mul(beta, basis);
    for (u32 row = 0; row < n; ++row) m.at(row, col) = img.c[row];
  }
  return m;
}

FpMat alpha_frobenius_matrix(const FieldTower& t, const TowerElem& alpha, u32 i) {
  if (t.l_is_zero(alpha)) throw std::invalid_argument("zero multiplier");
  u32 n = 2 * t.d();
  FpMat m(static_cast<u32>(t.p()), n);
  for (u32 col = 0; col < n; ++col) {
    TowerElem basis = t.l_zero();
    basis.c[col] = 1;
    TowerElem img = t.l_mul(alpha, t.frobenius_power(basis, i));
    for (u32 row = 0; row < n; ++row) m.at(row, col) = img.c[row];
  }
  return m;
}

FpMat k_linear_matrix(const FieldTower& t, const KElem& a, const KElem& b,
                      const KElem& c, const KElem& d) {
  u32 deg = t.d();
  u32 n = 2 * deg;
  FpMat m(static_cast<u32>(t.p()), n);
  for (u32 col = 0; col < n; ++col) {
    KElem v1 = t.k_zero(), v2 = t.k_zero();
    if (col < deg)
      v1.c[col] = 1;
    else
      v2.c[col - deg] = 1;
    KElem img1 = t.k_add(t.k_mul(a, v1), t.k_mul(b, v2));
    KElem img2 = t.k_add(t.k_mul(c, v1), t.k_mul(d, v2));
    for (u32 row = 0; row < deg; ++row) {
      m.at(row, col) = img1.c[row];
      m.at(deg + row, col) = img2.c[row];
    }
  }
  return m;
}

std::optional<u32> similitude_factor(const FpMat& m, const FpMat& j) {
  if (m.n != j.n || m.p != j.p)
    throw std::invalid_argument("similitude: form/matrix mismatch");
  FpMat lhs = m.transpose() * j * m;
  u32 p = m.p;
  // c = lhs/j at the first nonzero entry of j, then verified everywhere.
  for (u32 i = 0; i < j.n; ++i) {
    for (u32 k = 0; k < j.n; ++k) {
      if (j.at(i, k) == 0) continue;
      u64 c = mul_mod(lhs.at(i, k), *inv_mod(j.at(i, k), p), p);
      if (c == 0) return std::nullopt;
      if (lhs == j.scaled(static_cast<u32>(c))) return static_cast<u32>(c);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

FpMat embed_gram(const FpMat& j, u32 g) {
  if (j.n % 2 != 0 || 2 * g < j.n)
    throw std::invalid_argument("embed_gram: need 2g >= dim");
  u32 p = j.p;
  FpMat big(p, 2 * g);
  for (u32 i = 0; i < j.n; ++i)
    for (u32 k = 0; k < j.n; ++k) big.at(i, k) = j.at(i, k);
  for (u32 b = j.n; b < 2 * g; b += 2) {
    big.at(b, b + 1) = 1;
    big.at(b + 1, b) = p - 1;
  }
  return big;
}

FpMat embed_gsp(const FpMat& m, const FpMat& j, u32 g) {
  if (2 * g < m.n) throw std::invalid_argument("embed_gsp: target dimension too small");
  auto c = similitude_factor(m, j);
  if (!c) throw std::invalid_argument("embed_gsp: input is not a similitude");
  FpMat big(m.p, 2 * g);
  for (u32 i = 0; i < m.n; ++i)
    for (u32 k = 0; k < m.n; ++k) big.at(i, k) = m.at(i, k);
  for (u32 b = m.n; b < 2 * g; b += 2) {
    big.at(b, b) = 1;
    big.at(b + 1, b + 1) = *c;
  }
  return big;
}

}  // namespace cartancert
