#pragma once

// Explicit Hopf algebras: noncommutative symmetric functions, smash products
// with Z and Z/2, free products, ideal-chain witnesses and the 2x2 Ore towers.

#include <string>
#include <vector>

#include "asreg/hopf.hpp"

namespace asreg {

struct NSymmData {
  int n = 0;
  HopfPresentation H;  // free on x1..xn
};

NSymmData nsymm(int n);
/// p1 = x1, i x_i = x_{i-1} p1 + ... + p_i.
std::vector<NcPoly> nsymm_power_sums(const NSymmData& N);
/// phi(x1) = -x1, phi(x_i) = -sum_j x_j phi(x_{i-j}); an algebra map.
GenMorphism phi_automorphism(const NSymmData& N);

enum class Group { Z, Z2 };
/// NSymm(n) # kG on x1..xn, g (and gi for Z).  g x_i = g(x_i) g with
/// g(x_i) = sum_j (-1)^(j+1) x_j g(x_{i-j}).
HopfPresentation smash_with_group(const NSymmData& N, Group G);
/// Images of the smash generators in the reduced Jordan presentation Q:
/// g -> a0, x_i -> a_i a0^-1 with a0^-1 = a0 Di (a0 for the D = 1 form).
GenMorphism smash_realization(const HopfPresentation& smash, const HopfPresentation& Q);

/// k[x] with x primitive.
HopfPresentation polynomial_hopf(const std::string& x);
/// kZ on x, xi.
HopfPresentation group_algebra_Z(const std::string& x);
/// k[Z/2] on x with x^2 = 1.
HopfPresentation group_algebra_Z2(const std::string& x);

/// Disjoint union; clashing names get a suffix _k (k = 1-based input index).
HopfPresentation free_product(const std::vector<HopfPresentation>& parts);

enum class ChainCase { I, II, III, IV, V, VI };
ChainCase parse_chain_case(const std::string& s);
const char* chain_case_name(ChainCase c);
/// Defining presentation of each case.
HopfPresentation chain_algebra(ChainCase c);
/// The k-th chain generator, k >= 1.
NcPoly chain_generator(ChainCase c, const AlphabetPtr& a, int k);

struct ChainWitness {
  ChainCase which;
  int j, d;
  NcPoly generator;    // the (j+1)-st
  NcPoly normal_form;  // modulo relations + first j generators
  bool exact;
  /// Certified: strict (nonzero normal form, exact); Failed: the generator
  /// lies in I_j; NotReduced: nonzero normal form of an unfinished basis.
  CertStatus status() const;
};
/// DegreeBoundTooSmall unless d >= 2j + 4.
ChainWitness chain_witness(ChainCase c, int j, int d);

enum class OreVariant { OcGLJ2, GLS2D2q, GLS2J2 };
OreVariant parse_ore_variant(const std::string& s);
const char* ore_variant_name(OreVariant v);

struct OreStep {
  int letter;                 // adjoined generator
  std::vector<NcPoly> sigma;  // images of letters 0..letter-1
  std::vector<NcPoly> delta;
};

struct OreTowerData {
  OreVariant variant;
  AlphabetPtr alphabet;  // b, a, d, c
  std::vector<OreStep> steps;
  NcPoly D;  // codeterminant as a quadratic in the tower generators
  /// x y - sigma(y) x - delta(y) for each step x and earlier y.
  std::vector<NcPoly> relations(int upto_steps = 3) const;
};

OreTowerData ore_tower_j2(OreVariant v);
/// Endomorphism and twisted-derivation certificates per step, PBW Hilbert
/// counts, and ideal agreement with the matching named presentation.
VerificationReport verify_ore(const OreTowerData& T, int d);

}  // namespace asreg
