#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finspace/homology.hpp"
#include "finspace/maps.hpp"

namespace finspace {

/// Theorems are one-directional: Λ = 0 is Inconclusive, never "no fixed
/// point". Falsified means hypotheses certified, Λ != 0 and the exhaustive
/// witness scan came back empty.
enum class Outcome { Confirmed, Inconclusive, HypothesisFailed, Falsified };

std::string to_string(Outcome outcome);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::optional<Certificate> certificate;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  Outcome outcome = Outcome::Inconclusive;
  /// Absent when the inverse needed for Λ does not exist.
  std::optional<Integer> lambda;
  std::vector<Hypothesis> hypotheses;
  /// Element indices of the source space, in linear-extension order.
  std::vector<int> witnesses;
  std::vector<std::string> witness_names;
  bool conclusion_verified = false;
  /// Only for classical_lefschetz.
  std::optional<long long> chi_fix;

  bool hypotheses_hold() const;
};

/// x with f(x) = g(x), in linear-extension order of the source.
std::vector<int> coincidence_points(const PosetMap& f, const PosetMap& g);

/// Coincidences of f: X -> Y and g: X -> Y with f Vietoris-like;
/// Λ(g_* o f_*^{-1}).
TheoremReport theorem_A(const PosetMap& f, const PosetMap& g);

/// Fixed points x in F(x) of a Vietoris-like F: X -o X; Λ(F_*).
TheoremReport theorem_B(const MultiMap& F);

/// F = G_n o ... o G_0 with every G_i Vietoris-like; Λ(G_n* ... G_0*).
/// Throws NotComposable.
TheoremReport theorem_C(const std::vector<MultiMap>& factors);

/// Λ of the same composition computed through the iterated graphs
/// Γ_i = Γ(G_i o q_{i-1}) with Λ(q_n* o (p_0 o ... o p_n)*^{-1}). Slow, used
/// to cross-check theorem_C.
Integer composition_lambda_via_graphs(const std::vector<MultiMap>& factors);

/// Λ(f_*) against χ(Fix(f)) for a continuous endomorphism.
TheoremReport classical_lefschetz(const PosetMap& f);

/// x with f(x) in F(x). Mode 1: f Vietoris-like, Λ(F_* o f_*^{-1}). Mode 2:
/// second projection of Γ(F) Vietoris-like, Λ(f_* o F_*^{-1}) with
/// F_*^{-1} = p_* o q_*^{-1}.
TheoremReport corollary_multimap_coincidence(const PosetMap& f, const MultiMap& F, int mode);

/// x with F(x) ∩ G(x) non-empty, for F, G: X -o Y.
/// Case 1: F Vietoris-like, g a Vietoris-like selector of G, Λ(F_* o g_*^{-1}).
/// Case 2: second projection of Γ(F) Vietoris-like, g a selector of G,
///         Λ(g_* o F_*^{-1}).
/// Case 3: g a Vietoris-like selector of G, f a selector of F, Λ(f_* o g_*^{-1}).
/// Throws NoSelector when a required selector does not exist at all.
TheoremReport theorem_310(const MultiMap& F, const MultiMap& G, int which);

}  // namespace finspace
