#include "slgrowth/poly.hpp"

#include <algorithm>

#include "slgrowth/errors.hpp"

namespace slgrowth::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Residue x = i < a.size() ? a[i] : 0;
    Residue y = i < b.size() ? b[i] : 0;
    out[i] = F.add(x, y);
  }
  trim(out);
  return out;
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Residue x = i < a.size() ? a[i] : 0;
    Residue y = i < b.size() ? b[i] : 0;
    out[i] = F.sub(x, y);
  }
  trim(out);
  return out;
}

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

Poly derivative(const PrimeField& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    out[i - 1] = F.mul(F.reduce(static_cast<std::int64_t>(i)), f[i]);
  }
  trim(out);
  return out;
}

Poly make_monic(const PrimeField& F, Poly f) {
  trim(f);
  if (f.empty()) return f;
  Residue lead_inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, lead_inv);
  return f;
}

void divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  Poly divisor = b;
  trim(divisor);
  if (divisor.empty()) throw StructuralError("polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  const int db = degree(divisor);
  if (degree(rem) < db) return;
  quot.assign(rem.size() - divisor.size() + 1, 0);
  const Residue lead_inv = F.inv(divisor.back());
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Residue c = F.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) {
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, divisor[i]));
    }
    trim(rem);
  }
  trim(quot);
}

Poly mod(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(F, a, b, q, r);
  return r;
}

Poly gcd(const PrimeField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

Residue eval(const PrimeField& F, const Poly& f, Residue x) {
  Residue acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Poly powmod_x(const PrimeField& F, std::uint64_t e, const Poly& m) {
  Poly result = mod(F, Poly{1}, m);
  Poly base = mod(F, Poly{0, 1}, m);
  while (e > 0) {
    if (e & 1U) result = mod(F, mul(F, result, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1U;
  }
  return result;
}

namespace {

// h^p mod m for a polynomial h, using the Frobenius: h(x)^p = h(x^p).
Poly frobenius(const PrimeField& F, const Poly& h, const Poly& xp, const Poly& m) {
  Poly acc;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = mod(F, mul(F, acc, xp), m);
    acc = add(F, acc, Poly{*it});
  }
  return acc;
}

}  // namespace

std::vector<int> factor_degrees_squarefree(const PrimeField& F, const Poly& f_in) {
  Poly f = make_monic(F, f_in);
  std::vector<int> degrees;
  if (degree(f) <= 0) return degrees;
  const Poly xp = powmod_x(F, F.p(), f);
  Poly xpow = xp;  // x^{p^d} mod f
  for (int d = 1; degree(f) >= 2 * d; ++d) {
    Poly g = gcd(F, f, sub(F, xpow, Poly{0, 1}));
    const int dg = degree(g);
    if (dg > 0) {
      for (int k = 0; k < dg / d; ++k) degrees.push_back(d);
      Poly q, r;
      divmod(F, f, g, q, r);
      f = make_monic(F, q);
      xpow = mod(F, xpow, f);
    }
    xpow = frobenius(F, xpow, mod(F, xp, f), f);
  }
  if (degree(f) > 0) degrees.push_back(degree(f));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool is_squarefree(const PrimeField& F, const Poly& f) {
  return degree(gcd(F, f, derivative(F, f))) == 0;
}

}  // namespace slgrowth::poly
