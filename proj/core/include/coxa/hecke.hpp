#pragma once

#include <map>

#include "coxa/affine.hpp"
#include "coxa/laurent.hpp"

namespace coxa {

/// Finite linear combination of basis elements g_w of the Hecke algebra of
/// type ~A_n over Z[q, q^-1], keyed by canonical forms.
class HeckeElement {
 public:
  explicit HeckeElement(Rank rank) : rank_(rank) {}

  static HeckeElement zero(Rank rank) { return HeckeElement(rank); }
  static HeckeElement unit(Rank rank);
  static HeckeElement basis(const Element& w, LaurentPoly coeff = LaurentPoly::constant(1));

  Rank rank() const noexcept { return rank_; }
  const std::map<Element, LaurentPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coefficient(const Element& w) const;

  void add(const Element& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  Rank rank_;
  std::map<Element, LaurentPoly> terms_;
};

HeckeElement operator+(HeckeElement a, const HeckeElement& b);

/// g_s * h using g_s g_w = g_{sw} (s not a left descent of w) and
/// g_s g_w = q g_{sw} + (q - 1) g_w (s a left descent).
HeckeElement hecke_left_mul_gen(Generator s, const HeckeElement& h);

/// u * v, expanding each basis term of u into its canonical reduced word.
HeckeElement hecke_mul(const HeckeElement& u, const HeckeElement& v);

/// g_s^{-1} = q^{-1} g_s + (q^{-1} - 1) g_1.
HeckeElement gen_inverse(Rank rank, Generator s);

/// HR_n : e_{sigma_i} -> g_{sigma_i}, e_{a_n} -> g_{sigma_n} g_{a_{n+1}} g_{sigma_n}^{-1},
/// from rank n-1 to rank n.
HeckeElement hr_embed(const HeckeElement& h);

/// Image under HR_n of a product of generators of rank n-1, read as a word.
HeckeElement hr_embed_word(const Word& w);

struct TriangularityCertificate {
  Element image;             // R_n(w)
  LaurentPoly leading;       // A_w, a power of q
  HeckeElement lower_terms;  // every x with l(x) < l(R_n(w)) and L(x) <= L(w)
};

/// HR_n(e_w) = A_w g_{R_n(w)} + lower terms. Throws InternalError when the
/// decomposition does not have that shape.
TriangularityCertificate triangularity_certificate(const Element& w);

}  // namespace coxa
