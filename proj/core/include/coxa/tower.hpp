#pragma once

#include <optional>
#include <vector>

#include "coxa/affine.hpp"

namespace coxa {

/// Data of the rank-raising formula for a block of W(~A_{n-1}) mapped into
/// W(~A_n): s_break = max{k : n - k - i_k > 0}, t = n - s_break + 1, and which
/// pairs get i_k + 1 (those with k > s_break).
struct EmbeddingWitness {
  int s_break;
  int t;
  std::vector<bool> shifted;
};

/// `block` lives at rank n - 1; the witness refers to target rank n.
EmbeddingWitness embedding_witness(const AffineBlock& block);

/// R_n : W(~A_{n-1}) -> W(~A_n), sigma_i -> sigma_i, a_n -> sigma_n a_{n+1} sigma_n,
/// evaluated by the closed formula on the canonical form.
Element embed(const Element& e);

/// Letter substitution a_n -> sigma_n a_{n+1} sigma_n (sigma_i unchanged),
/// producing a word one rank up.
Word substitute_tower_word(const Word& w);

/// Membership in R_n(W(~A_{n-1})) by the three conditions on the canonical form.
bool is_in_image(const Element& e);

/// The unique w with embed(w) = e, when e is in the image.
std::optional<Element> preimage(const Element& e);

}  // namespace coxa
