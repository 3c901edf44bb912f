#pragma once

// Distinguished coset representatives for reflection subgroups of G(r,1,n).
//
// For a signed composition mu of n, the subgroup G_mu is generated by the
// block permutations of mu plus the colour generators of the positive blocks.
// Each right coset G_mu g contains a unique element of minimal length; the set
// of these representatives factors as (colour vectors supported on the
// negative blocks) x (minimal representatives for the block permutation
// subgroup of S_n).  Membership is characterised by descents: t^alpha w is a
// minimal representative iff neither the colour support of alpha nor the
// descent set of w meets the generator set of the negative of mu.

#include <optional>
#include <vector>

#include "cycsol/signed_composition.hpp"
#include "cycsol/wreath.hpp"

namespace cycsol {

// Minimal-length right coset representatives of the parabolic subgroup of S_n
// attached to the composition |lambda| (all parts taken positive).  Returned
// as colour-free elements of G(r,1,n).
std::vector<GroupElement> young_transversal(const SignedComposition& lambda,
                                            int r = 1);

// Minimal-length right coset representatives of G_mu in G(r,1,n).
std::vector<GroupElement> coset_transversal(const SignedComposition& mu, int r);

// Descent test: is g the minimal representative of its right coset G_mu g?
bool is_minimal_coset_representative(const SignedComposition& mu,
                                     const GroupElement& g);

// Elements of the subgroup G_mu itself.
std::vector<GroupElement> subgroup_elements(const SignedComposition& mu, int r);

// One family per minimal double-coset representative d of the pair of block
// permutation subgroups (S_{mu^+}, S_{nu^+}).  The family's minimal-length
// (G_mu, G_nu)-double-coset elements are exactly the r^weight products
// t^alpha d with alpha supported on the positions counted by weight.
struct DoubleCosetFamily {
  GroupElement d;               // colour-free, r = 1
  SignedComposition mu_cap_dnu;  // G_mu intersect d G_nu d^{-1}
  SignedComposition mud_cap_nu;  // d^{-1} G_mu d intersect G_nu
  int weight;                    // positions in a negative mu-block whose
                                 // d-image lies in a negative nu-block
};

std::vector<DoubleCosetFamily> double_coset_families(const SignedComposition& mu,
                                                     const SignedComposition& nu);

// All minimal-length elements of all (G_mu, G_nu)-double cosets; the families
// contribute r^weight elements each.
std::vector<GroupElement> minimal_double_coset_elements(
    const SignedComposition& mu, const SignedComposition& nu, int r);

// Number of (G_mu, G_nu)-double cosets in G(r,1,n).  Within a family, double
// cosets correspond to weakly sorted colour patterns on each run of weight
// positions sharing a block pair, so each run of size s contributes
// binom(r+s-1, s).
long long double_coset_count(const SignedComposition& mu,
                             const SignedComposition& nu, int r);

// The signed composition sigma with G_sigma = G_mu intersect d G_nu d^{-1},
// for a colour-free d whose inverse is minimal for nu^+ blocks.
SignedComposition intersection_composition(const SignedComposition& mu,
                                           const SignedComposition& nu,
                                           const GroupElement& d);

// Alternative transversal of G_mu built from ascending colour strings
// s_a s_(a+1) ... s_(i-1) t_i^k over the negative blocks.  Coincides with
// coset_transversal for r <= 2 but differs from it in general.
std::vector<GroupElement> mak_transversal(const SignedComposition& mu, int r);

// Checks that `elements` hits every right coset of G_mu exactly once.
bool is_right_transversal(const std::vector<GroupElement>& elements,
                          const SignedComposition& mu, int r);

}  // namespace cycsol
