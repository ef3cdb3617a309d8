#include "ekr/gf.hpp"

#include <string>

#include "ekr/error.hpp"

namespace ekr::gf {
namespace {

constexpr int kMaxOrder = 289;

using Poly = std::vector<int>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(int id, int p, int k) {
  Poly d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = id % p;
    id /= p;
  }
  return d;
}

int id_of(const Poly& d, int p) {
  int id = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) id = id * p + d[i];
  return id;
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, k);
}

bool is_irreducible(std::span<const int> coeffs_low_first, int p) {
  const Poly f(coeffs_low_first.begin(), coeffs_low_first.end());
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly g = digits_of(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(int q) {
  const auto pk = prime_power(q);
  if (!pk) {
    throw Error(ErrorKind::kInvalidInput,
                "field order " + std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxOrder) {
    throw Error(ErrorKind::kInvalidInput,
                "field order " + std::to_string(q) + " exceeds 289");
  }
  Field f;
  f.p_ = pk->first;
  f.k_ = pk->second;
  f.q_ = q;
  const int p = f.p_;
  const int k = f.k_;

  // Lexicographic order on (1, c_{k-1}, ..., c_0) is the numeric order of
  // the base-p number with c_{k-1} as its most significant digit.
  Poly modulus_low;
  for (int n = 0; n < q; ++n) {
    Poly low(k + 1);
    int r = n;
    for (int i = 0; i < k; ++i) {
      low[i] = r % p;
      r /= p;
    }
    low[k] = 1;
    if (is_irreducible(low, p)) {
      modulus_low = low;
      break;
    }
  }
  f.modulus_.assign(modulus_low.rbegin(), modulus_low.rend());

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    const Poly da = digits_of(a, p, k);
    Poly dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    f.neg_[a] = id_of(dn, p);
    for (int b = 0; b < q; ++b) {
      const Poly db = digits_of(b, p, k);
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = id_of(s, p);
      Poly prod(2 * k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = poly_mod(prod, modulus_low, p);
      r.resize(k, 0);
      f.mul_[a * q + b] = id_of(r, p);
    }
  }

  f.inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = b;

  f.primitive_ = 1;  // GF(2)
  for (Elem g = 2; g < q; ++g) {
    int order = 1;
    for (Elem x = g; x != 1; x = f.mul_[x * q + g]) ++order;
    if (order == q - 1) {
      f.primitive_ = g;
      break;
    }
  }

  f.log_.assign(q, -1);
  f.exp_.assign(q - 1, 0);
  Elem x = 1;
  for (int e = 0; e < q - 1; ++e) {
    f.exp_[e] = x;
    f.log_[x] = e;
    x = f.mul_[x * q + f.primitive_];
  }
  return f;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::kDomain, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::kDomain, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<long long>(log_[a]) * e);
}

int Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::kDomain, "discrete log of zero");
  return log_[a];
}

Elem Field::exp(long long e) const {
  const long long n = q_ - 1;
  return exp_[static_cast<std::size_t>(((e % n) + n) % n)];
}

Elem Field::from_int(long long n) const {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

bool Field::is_square(Elem a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

std::vector<int> Field::digits(Elem a) const { return digits_of(a, p_, k_); }

QuadraticExtension::QuadraticExtension(const Field& base)
    : base_(base), ext_(Field::make(base.order() * base.order())) {
  const int q = base_.order();
  const int p = base_.characteristic();
  const int k = base_.degree();

  // Image of the base generator t: the smallest root in GF(q^2) of the base
  // modulus. Prime-field digits embed as themselves.
  Elem t_image = 0;
  if (k > 1) {
    const auto mod = base_.modulus();  // leading first
    bool found = false;
    for (Elem r = 0; r < ext_.order() && !found; ++r) {
      Elem acc = 0;
      for (int c : mod) acc = ext_.add(ext_.mul(acc, r), ext_.from_int(c));
      if (acc == 0) {
        t_image = r;
        found = true;
      }
    }
  }
  embed_.assign(q, 0);
  for (Elem a = 0; a < q; ++a) {
    const auto d = digits_of(a, p, k);
    Elem acc = 0;
    for (int i = k - 1; i >= 0; --i) {
      acc = ext_.add(k > 1 ? ext_.mul(acc, t_image) : acc, ext_.from_int(d[i]));
    }
    embed_[a] = acc;
  }
  restrict_.assign(ext_.order(), -1);
  for (Elem a = 0; a < q; ++a) restrict_[embed_[a]] = a;

  if (p != 2) {
    for (Elem a = 1; a < q; ++a) {
      if (!base_.is_square(a)) {
        nonsquare_ = a;
        break;
      }
    }
    for (Elem z = 0; z < ext_.order(); ++z) {
      if (ext_.mul(z, z) == embed_[*nonsquare_]) {
        delta_ = z;
        break;
      }
    }
  }
}

std::optional<Elem> QuadraticExtension::restrict_to_base(Elem z) const {
  const int r = restrict_[z];
  if (r < 0) return std::nullopt;
  return r;
}

Elem QuadraticExtension::conj(Elem z) const { return ext_.pow(z, base_.order()); }

Elem QuadraticExtension::norm(Elem z) const {
  return restrict_[ext_.pow(z, base_.order() + 1)];
}

Elem QuadraticExtension::trace(Elem z) const { return restrict_[ext_.add(z, conj(z))]; }

}  // namespace ekr::gf
