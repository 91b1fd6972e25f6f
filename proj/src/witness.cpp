#include "cartancert/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cartancert/bigint.hpp"
#include "cartancert/field_tower.hpp"
#include "cartancert/symplectic.hpp"

namespace cartancert {

Witness find_witness(u32 g, u64 p, const KgFactorization& kg) {
  if (g < 2) throw std::invalid_argument("find_witness: g >= 2 required");
  if (!is_prime(p)) throw std::invalid_argument("find_witness: p must be prime");
  Witness w;
  mpz_class pz(static_cast<unsigned long>(p));
  for (u32 d = 1; d <= g; ++d) {
    WitnessScanRow row;
    row.d = d;
    mpz_pow_ui(row.modulus.get_mpz_t(), pz.get_mpz_t(), d);
    row.modulus += 1;

    std::vector<mpz_class> prime_powers;
    for (const auto& [ell, mult] : mpz_factorize(row.modulus)) {
      mpz_class pw = 1;
      for (unsigned j = 0; j < mult; ++j) {
        pw *= ell;
        prime_powers.push_back(pw);
      }
    }
    std::sort(prime_powers.begin(), prime_powers.end());

    for (const auto& q : prime_powers) {
      bool divides = kg.divided_by(q);
      row.prime_powers.push_back({q, divides});
      if (!divides && !w.exceptional && w.q == 0) {
        w.d = d;
        w.q = q;
      }
    }
    w.scan.push_back(std::move(row));
    if (w.q != 0) return w;
  }
  w.exceptional = true;
  return w;
}

ZsigmondyResult zsigmondy_scan(u32 g, u64 p, u64 cap) {
  if (g < 7) throw std::invalid_argument("zsigmondy_scan: g >= 7 required");
  ZsigmondyResult res;
  res.pi_2g1 = prime_pi(2 * g + 1);
  if (res.pi_2g1 > g - 1)
    throw std::logic_error("prime counting bound pi(2g+1) <= g-1 failed");
  if (g >= 10 && res.pi_2g1 > g - 2)
    throw std::logic_error("prime counting bound pi(2g+1) <= g-2 failed");

  for (u64 q = 2 * g + 2; q <= cap; ++q) {
    if (q == p || !is_prime(q)) continue;
    u64 ord = multiplicative_order(p % q, q, q - 1);
    if (ord % 2 == 0 && ord / 2 <= g) {
      res.d = static_cast<u32>(ord / 2);
      res.q = q;
      return res;
    }
  }
  throw std::runtime_error("zsigmondy_scan: cap exceeded");
}

std::vector<std::pair<u32, u64>> exceptional_scan(u32 gmax, u64 pmax) {
  std::vector<std::pair<u32, u64>> out;
  for (u32 g = 2; g <= gmax; ++g) {
    KgFactorization kg = kg_exact(g);
    for (u32 p : primes_up_to(static_cast<u32>(pmax))) {
      if (find_witness(g, p, kg).exceptional) out.emplace_back(g, p);
    }
  }
  return out;
}

namespace {

// Kernel basis of the F_p-linear map sending vec(Y) to vec(Y X - X^c Y).
std::vector<std::vector<u32>> intertwiner_basis(const FpMat& x, const FpMat& xc) {
  u32 p = x.p, n = x.n;
  u32 vars = n * n;
  // rows[eq][var]
  std::vector<std::vector<u32>> rows(vars, std::vector<u32>(vars, 0));
  for (u32 r = 0; r < n; ++r) {
    for (u32 c = 0; c < n; ++c) {
      u32 eq = r * n + c;
      for (u32 k = 0; k < n; ++k) {
        // + Y[r][k] X[k][c]
        rows[eq][r * n + k] = static_cast<u32>((rows[eq][r * n + k] + x.at(k, c)) % p);
        // - Xc[r][k] Y[k][c]
        rows[eq][k * n + c] =
            static_cast<u32>((rows[eq][k * n + c] + p - xc.at(r, k) % p) % p);
      }
    }
  }
  // Gaussian elimination to reduced row echelon form.
  u32 rank = 0;
  std::vector<u32> pivot_col;
  for (u32 col = 0; col < vars && rank < vars; ++col) {
    u32 sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    u64 inv = *inv_mod(rows[rank][col], p);
    for (u32 j = 0; j < vars; ++j)
      rows[rank][j] = static_cast<u32>(rows[rank][j] * inv % p);
    for (u32 r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == rank || rows[r2][col] == 0) continue;
      u64 f = rows[r2][col];
      for (u32 j = 0; j < vars; ++j)
        rows[r2][j] = static_cast<u32>((rows[r2][j] + (p - f) * rows[rank][j]) % p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(vars, false);
  for (u32 c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u32>> basis;
  for (u32 free_col = 0; free_col < vars; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<u32> v(vars, 0);
    v[free_col] = 1;
    for (u32 r = 0; r < rank; ++r) {
      u32 pc = pivot_col[r];
      v[pc] = static_cast<u32>((p - rows[r][free_col] % p) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Group33 build_33_group() {
  const u32 p = 3;
  FieldTower t = build_tower(3, 3);  // only k = F_27 is used

  // Multiplication by the first element of order 13 in F_27^x.
  KElem w0 = t.k_zero();
  bool found = false;
  for (u64 idx = 1; idx < t.k_order() && !found; ++idx) {
    KElem cand = t.k_elem(idx);
    if (t.k_mult_order(cand) == 13) {
      w0 = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no order-13 element in F_27");

  FpMat a(p, 3);
  for (u32 col = 0; col < 3; ++col) {
    KElem basis = t.k_zero();
    basis.c[col] = 1;
    KElem img = t.k_mul(w0, basis);
    for (u32 row = 0; row < 3; ++row) a.at(row, col) = img.c[row];
  }
  FpMat a_ct = a.inverse()->transpose();  // contragredient block

  Group33 out;
  out.X = FpMat(p, 6);
  for (u32 i = 0; i < 3; ++i) {
    for (u32 j = 0; j < 3; ++j) {
      out.X.at(i, j) = a.at(i, j);
      out.X.at(3 + i, 3 + j) = a_ct.at(i, j);
    }
  }
  // <(w,f),(w',f')> = f(w') - f'(w) over the doubled module.
  out.gram = FpMat(p, 6);
  for (u32 i = 0; i < 3; ++i) {
    out.gram.at(i, 3 + i) = p - 1;
    out.gram.at(3 + i, i) = 1;
  }
  make_gram(out.gram);  // validates

  out.order_x = matrix_order(out.X, 20);
  auto sim_x = similitude_factor(out.X, out.gram);
  if (out.order_x != 13 || !sim_x || *sim_x != 1)
    throw std::logic_error("order-13 block construction failed");
  out.sim_x = *sim_x;

  // Y X = X^4 Y, filtered for invertibility, Y^6 = 1 and similitude 2
  // (similitude 2 makes the character surjective since X lands in Sp).
  FpMat x4 = out.X.pow(4);
  auto basis = intertwiner_basis(out.X, x4);
  u64 combos = 1;
  for (size_t i = 0; i < basis.size(); ++i) combos *= p;
  bool got_y = false;
  for (u64 code = 1; code < combos && !got_y; ++code) {
    FpMat y(p, 6);
    u64 c = code;
    for (const auto& vec : basis) {
      u32 coef = static_cast<u32>(c % p);
      c /= p;
      if (coef == 0) continue;
      for (u32 i = 0; i < 36; ++i)
        y.a[i] = static_cast<u32>((y.a[i] + static_cast<u64>(coef) * vec[i]) % p);
    }
    if (!y.inverse()) continue;
    auto sim_y = similitude_factor(y, out.gram);
    if (!sim_y || *sim_y != 2) continue;
    if (!y.pow(6).is_identity()) continue;
    if (matrix_order(y, 6) != 6) continue;
    out.Y = y;
    out.sim_y = *sim_y;
    got_y = true;
  }
  if (!got_y)
    throw std::logic_error("no qualifying Y in the intertwiner space");
  out.order_y = 6;

  FpMat yinv = *out.Y.inverse();
  if (!(out.Y * out.X * yinv == x4))
    throw std::logic_error("conjugation relation failed");

  // Group order by normal-form counting, plus uniqueness of the order-13
  // subgroup: exactly the 12 nontrivial powers of X have order 13.
  std::set<std::vector<u32>> elems;
  u32 order13 = 0;
  bool all13_in_x = true;
  FpMat xa = FpMat::identity(p, 6);
  for (u32 aexp = 0; aexp < 13; ++aexp) {
    FpMat m = xa;
    for (u32 bexp = 0; bexp < 6; ++bexp) {
      elems.insert(m.a);
      if (matrix_order(m, 80) == 13) {
        ++order13;
        if (bexp != 0) all13_in_x = false;
      }
      m = m * out.Y;
    }
    xa = xa * out.X;
  }
  out.group_order = elems.size();
  out.unique_order13 = (order13 == 12 && all13_in_x);
  if (out.group_order != 78)
    throw std::logic_error("group order is not 78");
  return out;
}

}  // namespace cartancert
