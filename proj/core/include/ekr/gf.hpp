#pragma once

// Arithmetic in GF(q), q = p^k, with table lookups on packed element ids.
//
// An element id is the base-p packing of its residue polynomial: the
// coefficient of t^i is the i-th base-p digit. Ids 0 and 1 are the field's
// zero and one. Every table is built once; a Field is immutable afterwards.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ekr::gf {

using Elem = int;

class Field {
 public:
  /// Builds GF(q) for a prime power q <= 289 with the lexicographically
  /// smallest monic irreducible modulus and the smallest primitive element.
  static Field make(int q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }

  /// Monic modulus, leading coefficient first (the order used for the
  /// lexicographic choice).
  std::span<const int> modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Discrete log to the primitive base; result in [0, q-1).
  int log(Elem a) const;
  /// primitive^e for any integer e.
  Elem exp(long long e) const;

  /// The image of the integer n in the prime subfield.
  Elem from_int(long long n) const;

  bool is_square(Elem a) const;

  /// Coefficient vector of an element, lowest degree first.
  std::vector<int> digits(Elem a) const;

 private:
  Field() = default;

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<int> log_;
  std::vector<Elem> exp_;
};

/// Splits q into (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

/// True when the monic polynomial (lowest degree first) is irreducible over
/// GF(p). Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::span<const int> coeffs_low_first, int p);

/// GF(q^2) together with the embedded copy of GF(q).
class QuadraticExtension {
 public:
  explicit QuadraticExtension(const Field& base);

  const Field& base() const { return base_; }
  const Field& ext() const { return ext_; }

  /// Ring embedding GF(q) -> GF(q^2).
  Elem embed(Elem a) const { return embed_[a]; }
  /// Inverse of embed on its image; nullopt outside the subfield.
  std::optional<Elem> restrict_to_base(Elem z) const;

  /// z^q.
  Elem conj(Elem z) const;
  /// N(z) = z^(q+1), returned as a base-field element.
  Elem norm(Elem z) const;
  /// z + z^q, returned as a base-field element.
  Elem trace(Elem z) const;

  /// The non-square Delta of GF(q) and delta in GF(q^2) with delta^2 = Delta.
  /// Only defined for odd q.
  std::optional<Elem> nonsquare() const { return nonsquare_; }
  std::optional<Elem> delta() const { return delta_; }

 private:
  Field base_;
  Field ext_;
  std::vector<Elem> embed_;
  std::vector<int> restrict_;
  std::optional<Elem> nonsquare_;
  std::optional<Elem> delta_;
};

}  // namespace ekr::gf
