#include "cartancert/field_tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartancert {

namespace {

// Polynomial helpers over F_p, little-endian coefficient vectors. Only used
// while constructing the tower, so clarity beats speed.
using Poly = std::vector<u32>;

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<u32>((prod[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
  }
  // f is monic; long division.
  size_t deg_f = f.size() - 1;
  for (size_t i = prod.size(); i-- > deg_f;) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < deg_f; ++j) {
      prod[i - deg_f + j] = static_cast<u32>(
          (prod[i - deg_f + j] + (p - static_cast<u64>(f[j]) % p) * c) % p);
    }
  }
  prod.resize(deg_f);
  return poly_trim(prod);
}

Poly poly_pow_mod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result = {1};
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  a = poly_trim(std::move(a));
  size_t deg_m = m.size() - 1;
  u64 lead_inv = *inv_mod(m.back(), p);
  while (a.size() > deg_m) {
    u64 c = mul_mod(a.back(), lead_inv, p);
    size_t shift = a.size() - 1 - deg_m;
    for (size_t j = 0; j < m.size(); ++j) {
      a[shift + j] =
          static_cast<u32>((a[shift + j] + (p - mul_mod(c, m[j], p))) % p);
    }
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic f of degree d: irreducible iff u^(p^d) = u mod f and
// gcd(u^(p^(d/q)) - u, f) = 1 for every prime q | d.
bool poly_irreducible(const Poly& f, u64 p) {
  u32 d = static_cast<u32>(f.size() - 1);
  if (d == 1) return true;
  Poly x = {0, 1};
  u64 pd = 1;
  for (u32 i = 0; i < d; ++i) pd *= p;
  Poly xq = poly_pow_mod(x, pd, f, p);
  Poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = static_cast<u32>((diff[1] + p - 1) % p);
  if (!poly_trim(diff).empty()) return false;
  for (auto [q, e] : factorize(d)) {
    u64 pe = 1;
    for (u32 i = 0; i < d / q; ++i) pe *= p;
    Poly xe = poly_pow_mod(x, pe, f, p);
    Poly g = xe;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = static_cast<u32>((g[1] + p - 1) % p);
    if (poly_gcd(poly_trim(g), f, p).size() > 1) return false;
  }
  return true;
}

u64 checked_pow(u64 base, u32 exp) {
  u64 r = 1;
  for (u32 i = 0; i < exp; ++i) {
    if (r > (u64{1} << 42) / base)
      throw std::invalid_argument("field tower too large for this build");
    r *= base;
  }
  return r;
}

}  // namespace

FieldTower::FieldTower(u64 p, u32 d) : p_(p), d_(d) {
  if (!is_prime(p)) throw std::invalid_argument("tower characteristic must be prime");
  if (d < 1) throw std::invalid_argument("tower degree must be positive");
  k_order_ = checked_pow(p, d);
  l_order_ = checked_pow(p, 2 * d);
  e_ = (k_order_ + 1) * (p - 1);

  // Defining polynomial of k: smallest index over non-leading coefficients.
  for (u64 idx = 0;; ++idx) {
    if (idx >= k_order_)
      throw std::logic_error("no irreducible polynomial found");  // unreachable
    Poly f(d + 1, 0);
    u64 t = idx;
    for (u32 i = 0; i < d; ++i) {
      f[i] = static_cast<u32>(t % p);
      t /= p;
    }
    f[d] = 1;
    if (poly_irreducible(f, p)) {
      poly_k_ = f;
      break;
    }
  }

  reduction_.resize(d >= 1 ? d - 1 : 0);
  if (d >= 2) {
    // u^(d+i) mod f, computed by shifting the previous row.
    Poly cur(poly_k_.begin(), poly_k_.end() - 1);  // u^d = -low part
    for (auto& c : cur) c = static_cast<u32>((p - c) % p);
    for (u32 i = 0; i + 1 < d; ++i) {
      reduction_[i] = cur;
      Poly next(d, 0);
      for (u32 j = 0; j + 1 < d; ++j) next[j + 1] = cur[j];
      u64 top = cur[d - 1];
      for (u32 j = 0; j < d; ++j) {
        next[j] = static_cast<u32>(
            (next[j] + mul_mod(top, (p - poly_k_[j]) % p, p)) % p);
      }
      cur = next;
    }
  }

  k_order_factors_ = factorize(k_order_ - 1);
  l_order_factors_ = factorize(l_order_ - 1);

  if (p == 2) {
    // eta^2 + eta + w with tr_{k|F_2}(w) = 1; verified root-free below.
    s_ = 1;
    bool found = false;
    for (u64 idx = 0; idx < k_order_ && !found; ++idx) {
      KElem cand = k_elem(idx);
      if (k_trace_to_p(cand) != 1) continue;
      bool has_root = false;
      for (u64 r = 0; r < k_order_; ++r) {
        KElem z = k_elem(r);
        KElem val = k_add(k_add(k_mul(z, z), z), cand);
        if (k_is_zero(val)) {
          has_root = true;
          break;
        }
      }
      if (!has_root) {
        w_ = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no trace-one quadratic found");
  } else {
    // eta^2 = w, a fixed generator of k^x. A generator is never a square,
    // so t^2 - w is irreducible over k.
    s_ = 0;
    bool found = false;
    for (u64 idx = 1; idx < k_order_; ++idx) {
      KElem cand = k_elem(idx);
      if (k_mult_order(cand) == k_order_ - 1) {
        w_ = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no primitive root found");
  }
}

// --- k arithmetic ---------------------------------------------------------

KElem FieldTower::k_zero() const { return KElem{std::vector<u32>(d_, 0)}; }

KElem FieldTower::k_one() const { return k_scalar(1); }

KElem FieldTower::k_scalar(u64 v) const {
  KElem x = k_zero();
  x.c[0] = static_cast<u32>(v % p_);
  return x;
}

KElem FieldTower::k_elem(u64 index) const {
  KElem x = k_zero();
  for (u32 i = 0; i < d_; ++i) {
    x.c[i] = static_cast<u32>(index % p_);
    index /= p_;
  }
  return x;
}

u64 FieldTower::k_index(const KElem& x) const {
  u64 idx = 0;
  for (u32 i = d_; i-- > 0;) idx = idx * p_ + x.c[i];
  return idx;
}

KElem FieldTower::k_add(const KElem& x, const KElem& y) const {
  KElem out = k_zero();
  for (u32 i = 0; i < d_; ++i) out.c[i] = static_cast<u32>((x.c[i] + static_cast<u64>(y.c[i])) % p_);
  return out;
}

KElem FieldTower::k_sub(const KElem& x, const KElem& y) const {
  KElem out = k_zero();
  for (u32 i = 0; i < d_; ++i)
    out.c[i] = static_cast<u32>((x.c[i] + p_ - static_cast<u64>(y.c[i])) % p_);
  return out;
}

KElem FieldTower::k_neg(const KElem& x) const { return k_sub(k_zero(), x); }

KElem FieldTower::k_mul(const KElem& x, const KElem& y) const {
  std::vector<u64> prod(2 * d_ - 1, 0);
  for (u32 i = 0; i < d_; ++i) {
    if (x.c[i] == 0) continue;
    for (u32 j = 0; j < d_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<u64>(x.c[i]) * y.c[j]) % p_;
  }
  KElem out = k_zero();
  for (u32 i = 0; i < d_; ++i) out.c[i] = static_cast<u32>(prod[i]);
  for (u32 i = d_; i < 2 * d_ - 1; ++i) {
    u64 c = prod[i];
    if (c == 0) continue;
    const auto& red = reduction_[i - d_];
    for (u32 j = 0; j < d_; ++j)
      out.c[j] = static_cast<u32>((out.c[j] + c * red[j]) % p_);
  }
  return out;
}

KElem FieldTower::k_pow(const KElem& x, u64 e) const {
  KElem result = k_one();
  KElem base = x;
  while (e > 0) {
    if (e & 1) result = k_mul(result, base);
    base = k_mul(base, base);
    e >>= 1;
  }
  return result;
}

KElem FieldTower::k_inv(const KElem& x) const {
  if (k_is_zero(x)) throw std::domain_error("inversion of zero in k");
  return k_pow(x, k_order_ - 2);
}

bool FieldTower::k_is_zero(const KElem& x) const {
  return std::all_of(x.c.begin(), x.c.end(), [](u32 v) { return v == 0; });
}

std::optional<u64> FieldTower::k_as_prime_field(const KElem& x) const {
  for (u32 i = 1; i < d_; ++i)
    if (x.c[i] != 0) return std::nullopt;
  return x.c[0];
}

u32 FieldTower::k_trace_to_p(const KElem& x) const {
  KElem acc = k_zero();
  KElem cur = x;
  for (u32 i = 0; i < d_; ++i) {
    acc = k_add(acc, cur);
    cur = k_pow(cur, p_);
  }
  auto v = k_as_prime_field(acc);
  if (!v) throw std::logic_error("trace landed outside the prime field");
  return static_cast<u32>(*v);
}

u64 FieldTower::k_mult_order(const KElem& x) const {
  if (k_is_zero(x)) throw std::domain_error("order of zero");
  u64 order = k_order_ - 1;
  for (auto [q, e] : k_order_factors_) {
    for (u32 i = 0; i < e; ++i) {
      if (order % q == 0 && k_pow(x, order / q) == k_one())
        order /= q;
      else
        break;
    }
  }
  return order;
}

// --- l arithmetic ---------------------------------------------------------

TowerElem FieldTower::l_zero() const { return TowerElem{std::vector<u32>(2 * d_, 0)}; }

TowerElem FieldTower::l_one() const { return l_from_k(k_one()); }

TowerElem FieldTower::eta() const { return l_from_pair(k_zero(), k_one()); }

TowerElem FieldTower::l_from_k(const KElem& a) const { return l_from_pair(a, k_zero()); }

TowerElem FieldTower::l_from_pair(const KElem& a, const KElem& b) const {
  TowerElem x = l_zero();
  std::copy(a.c.begin(), a.c.end(), x.c.begin());
  std::copy(b.c.begin(), b.c.end(), x.c.begin() + d_);
  return x;
}

KElem FieldTower::k_part(const TowerElem& x) const {
  KElem a = k_zero();
  std::copy(x.c.begin(), x.c.begin() + d_, a.c.begin());
  return a;
}

KElem FieldTower::eta_part(const TowerElem& x) const {
  KElem b = k_zero();
  std::copy(x.c.begin() + d_, x.c.end(), b.c.begin());
  return b;
}

TowerElem FieldTower::l_elem(u64 index) const {
  TowerElem x = l_zero();
  for (u32 i = 0; i < 2 * d_; ++i) {
    x.c[i] = static_cast<u32>(index % p_);
    index /= p_;
  }
  return x;
}

u64 FieldTower::l_index(const TowerElem& x) const {
  u64 idx = 0;
  for (u32 i = 2 * d_; i-- > 0;) idx = idx * p_ + x.c[i];
  return idx;
}

TowerElem FieldTower::l_add(const TowerElem& x, const TowerElem& y) const {
  TowerElem out = l_zero();
  for (u32 i = 0; i < 2 * d_; ++i)
    out.c[i] = static_cast<u32>((x.c[i] + static_cast<u64>(y.c[i])) % p_);
  return out;
}

TowerElem FieldTower::l_sub(const TowerElem& x, const TowerElem& y) const {
  TowerElem out = l_zero();
  for (u32 i = 0; i < 2 * d_; ++i)
    out.c[i] = static_cast<u32>((x.c[i] + p_ - static_cast<u64>(y.c[i])) % p_);
  return out;
}

TowerElem FieldTower::l_neg(const TowerElem& x) const { return l_sub(l_zero(), x); }

TowerElem FieldTower::l_mul(const TowerElem& x, const TowerElem& y) const {
  // (a1 + b1 eta)(a2 + b2 eta) with eta^2 = s eta + w.
  KElem a1 = k_part(x), b1 = eta_part(x);
  KElem a2 = k_part(y), b2 = eta_part(y);
  KElem bb = k_mul(b1, b2);
  KElem a = k_add(k_mul(a1, a2), k_mul(w_, bb));
  KElem b = k_add(k_mul(a1, b2), k_mul(a2, b1));
  if (s_ != 0) b = k_add(b, bb);
  return l_from_pair(a, b);
}

TowerElem FieldTower::l_pow(const TowerElem& x, u64 e) const {
  TowerElem result = l_one();
  TowerElem base = x;
  while (e > 0) {
    if (e & 1) result = l_mul(result, base);
    base = l_mul(base, base);
    e >>= 1;
  }
  return result;
}

TowerElem FieldTower::l_inv(const TowerElem& x) const {
  if (l_is_zero(x)) throw std::domain_error("inversion of zero in l");
  // Conjugate over k: eta -> s - eta, so (a + b eta)~ = (a + s b) - b eta.
  KElem a = k_part(x), b = eta_part(x);
  KElem conj_a = a;
  if (s_ != 0) conj_a = k_add(a, b);  // s = 1 only in characteristic 2
  KElem conj_b = k_neg(b);
  TowerElem conj = l_from_pair(conj_a, conj_b);
  TowerElem nrm = l_mul(x, conj);
  KElem n = k_part(nrm);
  if (!k_is_zero(eta_part(nrm))) throw std::logic_error("norm not in k");
  KElem ninv = k_inv(n);
  return l_from_pair(k_mul(conj_a, ninv), k_mul(conj_b, ninv));
}

bool FieldTower::l_is_zero(const TowerElem& x) const {
  return std::all_of(x.c.begin(), x.c.end(), [](u32 v) { return v == 0; });
}

TowerElem FieldTower::frobenius_power(const TowerElem& x, u32 i) const {
  u64 exp = 1;
  for (u32 j = 0; j < i % (2 * d_); ++j) exp *= p_;
  return l_pow(x, exp);
}

KElem FieldTower::trace_l_to_k(const TowerElem& x) const {
  TowerElem t = l_add(x, frobenius_power(x, d_));
  if (!k_is_zero(eta_part(t))) throw std::logic_error("trace not in k");
  return k_part(t);
}

KElem FieldTower::norm_l_to_k(const TowerElem& x) const {
  TowerElem n = l_mul(x, frobenius_power(x, d_));
  if (!k_is_zero(eta_part(n))) throw std::logic_error("norm not in k");
  return k_part(n);
}

u32 FieldTower::trace_l_to_p(const TowerElem& x) const {
  return k_trace_to_p(trace_l_to_k(x));
}

u64 FieldTower::l_mult_order(const TowerElem& x) const {
  if (l_is_zero(x)) throw std::domain_error("order of zero");
  u64 order = l_order_ - 1;
  for (auto [q, e] : l_order_factors_) {
    for (u32 i = 0; i < e; ++i) {
      if (order % q == 0 && l_pow(x, order / q) == l_one())
        order /= q;
      else
        break;
    }
  }
  return order;
}

// --- searches -------------------------------------------------------------

FieldTower build_tower(u64 p, u32 d) { return FieldTower(p, d); }

TowerElem find_cartan_generator(const FieldTower& t) {
  u64 e = t.e();
  auto e_factors = factorize(e);
  for (u64 idx = 1; idx < t.l_order(); ++idx) {
    TowerElem x = t.l_elem(idx);
    if (!(t.l_pow(x, e) == t.l_one())) continue;
    bool exact = true;
    for (auto [q, ex] : e_factors) {
      if (t.l_pow(x, e / q) == t.l_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return x;
  }
  throw std::logic_error("no element of order e found");  // cannot happen
}

AlphaResult find_alpha(const FieldTower& t) {
  if (t.p() == 2)
    throw std::invalid_argument("find_alpha applies to odd characteristic only");
  // Target: Norm(alpha) = eta^(1-p), an element of k since 1-p is even.
  TowerElem target_l = t.l_inv(t.l_pow(t.eta(), t.p() - 1));
  if (!t.k_is_zero(t.eta_part(target_l)))
    throw std::logic_error("eta^(1-p) not in k");
  KElem target = t.k_part(target_l);

  AlphaResult res;
  bool found = false;
  for (u64 idx = 1; idx < t.l_order() && !found; ++idx) {
    TowerElem a = t.l_elem(idx);
    if (t.l_is_zero(a)) continue;
    if (t.norm_l_to_k(a) == target) {
      res.alpha = a;
      found = true;
    }
  }
  if (!found) throw std::logic_error("norm equation has no solution");  // norm is onto k^x

  // alpha in k^x would need alpha^2 = target.
  res.in_k_possible = false;
  for (u64 idx = 1; idx < t.k_order(); ++idx) {
    KElem b = t.k_elem(idx);
    if (t.k_mul(b, b) == target) {
      res.in_k_possible = true;
      res.k_alpha = b;
      break;
    }
  }
  return res;
}

}  // namespace cartancert
