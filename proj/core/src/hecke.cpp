#include "coxa/hecke.hpp"

#include "coxa/error.hpp"
#include "coxa/tower.hpp"

namespace coxa {

namespace {

void check_rank(Rank a, Rank b) {
  if (a != b) throw DomainError("rank mismatch in Hecke algebra operation");
}

}  // namespace

HeckeElement HeckeElement::unit(Rank rank) { return basis(Element::identity(rank)); }

HeckeElement HeckeElement::basis(const Element& w, LaurentPoly coeff) {
  HeckeElement h(w.rank());
  h.add(w, coeff);
  return h;
}

LaurentPoly HeckeElement::coefficient(const Element& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Element& w, const LaurentPoly& c) {
  check_rank(rank_, w.rank());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_rank(rank_, o.rank_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement out(rank_);
  for (const auto& [w, d] : terms_) out.add(w, d * c);
  return out;
}

HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }

HeckeElement hecke_left_mul_gen(Generator s, const HeckeElement& h) {
  if (!s.valid_for(h.rank())) throw DomainError("generator out of range for rank");
  const auto q = LaurentPoly::q();
  const auto q_minus_one = q - LaurentPoly::constant(1);
  HeckeElement out(h.rank());
  for (const auto& [w, c] : h.terms()) {
    Element sw = left_mul(s, w);
    if (sw.length() > w.length()) {
      out.add(sw, c);
    } else {
      out.add(sw, q * c);
      out.add(w, q_minus_one * c);
    }
  }
  return out;
}

HeckeElement hecke_mul(const HeckeElement& u, const HeckeElement& v) {
  check_rank(u.rank(), v.rank());
  HeckeElement out(u.rank());
  for (const auto& [w, c] : u.terms()) {
    HeckeElement acc = v;
    const Word word = element_word(w);
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
      acc = hecke_left_mul_gen(*it, acc);
    }
    out += acc.scaled(c);
  }
  return out;
}

HeckeElement gen_inverse(Rank rank, Generator s) {
  const auto q_inv = LaurentPoly::monomial(-1);
  HeckeElement out(rank);
  out.add(canonicalize(Word(rank, {s})), q_inv);
  out.add(Element::identity(rank), q_inv - LaurentPoly::constant(1));
  return out;
}

HeckeElement hr_embed_word(const Word& w) {
  const Rank target(w.rank().n() + 1);
  const auto sigma_n = Generator::sigma(target.n());
  const auto sigma_n_inv = gen_inverse(target, sigma_n);
  HeckeElement acc = HeckeElement::unit(target);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->is_affine()) {
      acc = hecke_mul(sigma_n_inv, acc);
      acc = hecke_left_mul_gen(Generator::affine(), acc);
      acc = hecke_left_mul_gen(sigma_n, acc);
    } else {
      acc = hecke_left_mul_gen(*it, acc);
    }
  }
  return acc;
}

HeckeElement hr_embed(const HeckeElement& h) {
  HeckeElement out(Rank(h.rank().n() + 1));
  for (const auto& [w, c] : h.terms()) out += hr_embed_word(element_word(w)).scaled(c);
  return out;
}

TriangularityCertificate triangularity_certificate(const Element& w) {
  Element image = embed(w);
  HeckeElement full = hr_embed(HeckeElement::basis(w));
  LaurentPoly leading = full.coefficient(image);
  if (!leading.unit_power()) {
    throw InternalError("triangularity: leading coefficient " + leading.to_string() +
                        " is not a power of q");
  }
  HeckeElement lower(image.rank());
  for (const auto& [x, c] : full.terms()) {
    if (x == image) continue;
    if (!(x.length() < image.length() && x.affine_length() <= w.affine_length())) {
      throw InternalError("triangularity: a lower term is not strictly shorter or has larger "
                          "affine length");
    }
    lower.add(x, c);
  }
  return {std::move(image), std::move(leading), std::move(lower)};
}

}  // namespace coxa
