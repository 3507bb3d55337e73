#pragma once

// Projective (alpha-)representations of finite groups:
//   rho(x) rho(y) = alpha(x, y) rho(xy).
// Monomial representations with root-of-unity entries are handled exactly;
// dense ones in double precision with tolerance kRepTolerance.

#include "schur/cocycles.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace schur {

using cplx = std::complex<double>;

inline constexpr double kRepTolerance = 1e-8;

cplx root_of_unity(u64 N, u64 e);

// Entry (perm[c], c) is zeta_N^{exps[c]}; every other entry is zero.
struct MonomialMatrix {
  std::size_t dim = 0;
  std::vector<std::size_t> perm;
  std::vector<u64> exps;
  u64 N = 1;

  static MonomialMatrix identity(std::size_t dim, u64 N = 1);
  void validate() const;
  MonomialMatrix over(u64 L) const;  // same matrix with modulus L (multiple of N)
  MonomialMatrix operator*(const MonomialMatrix& b) const;
  MonomialMatrix scaled(u64 N, u64 e) const;  // multiplied by zeta_N^e
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix& b) const;  // equality as complex matrices
  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& b) const;  // this * b
};

class ProjRep {
 public:
  static ProjRep from_monomial(TablePtr group, TableCocycle alpha, std::vector<MonomialMatrix> mats);
  static ProjRep from_dense(TablePtr group, TableCocycle alpha, std::vector<Eigen::MatrixXcd> mats);

  const TablePtr& group() const { return group_; }
  const TableCocycle& cocycle() const { return alpha_; }
  std::size_t dim() const { return dim_; }
  bool is_monomial() const { return !mono_.empty(); }
  const MonomialMatrix& monomial(Elem g) const { return mono_.at(g); }
  Eigen::MatrixXcd matrix(Elem g) const;
  cplx trace(Elem g) const;

  std::string provenance;

 private:
  ProjRep(TablePtr group, TableCocycle alpha, std::size_t dim);
  TablePtr group_;
  TableCocycle alpha_;
  std::size_t dim_ = 0;
  std::vector<MonomialMatrix> mono_;
  std::vector<Eigen::MatrixXcd> dense_;
};

struct RepCheck {
  bool ok = true;
  bool exact = false;
  std::size_t checked = 0;
  double max_residual = 0.0;
  std::string witness;
};

inline constexpr std::size_t kExhaustiveRepCheck = 64;

// Defining relation on all pairs for |G| <= 64, else on `samples` random
// pairs; rho(1) = I is always checked.
RepCheck check_projrep(const ProjRep& rho, std::size_t samples = 10000, u64 seed = kDefaultSeed);

// A one-dimensional alpha|_H-representation psi of a subgroup H, given by
// exponents mod N at the (sorted) elements of H.
struct SubgroupChar {
  Subset H;
  u64 N = 1;
  std::vector<u64> exps;
  std::size_t position(Elem h) const;
  u64 at(Elem h) const { return exps[position(h)]; }
};

CocycleCheck check_subgroup_char(const TableCocycle& alpha, const SubgroupChar& psi);

// Every one-dimensional alpha|_H-representation of H with values in roots
// of unity (empty when alpha|_H is not a coboundary).
std::vector<SubgroupChar> alpha_characters(const TableCocycle& alpha, const Subset& H);

// Induced representation on the functions f with f(hx) = alpha(h,x)^{-1}
// psi(h) f(x), acted on by (rho(g) f)(x) = alpha(x, g) f(xg). Basis f_u is
// supported on H x_u with f_u(x_u) = 1, x_u the right coset representatives
// in order of first occurrence.
ProjRep induce(const TableCocycle& alpha, const SubgroupChar& psi);

// Left multiplication on the twisted group algebra: e_g e_h = alpha(g,h) e_gh.
ProjRep twisted_regular(const TableCocycle& alpha, std::size_t cap = kDefaultTableCap);

// rho~(a s(g)) = chi(a) rho(g). Needs cocycle(rho) == transgression(ext, chi)
// pointwise; InvalidInput names a differing pair otherwise.
ProjRep lift(const ProjRep& rho, const CentralExtensionData& ext, const AChar& chi);

struct Descended {
  ProjRep rho;
  AChar chi;
};

// rho(g) = rho~(s(g)) with cocycle transgression(ext, chi), where chi is the
// scalar character by which A acts; InvalidInput if A is not scalar.
Descended descend(const ProjRep& rho_tilde, const CentralExtensionData& ext);

struct Correspondence {
  SubgroupChar psi_tilde;  // character of the preimage of H in the total group
  ProjRep induced;         // Ind_H^G psi, an alpha-representation
  ProjRep lifted;          // lift of `induced` to the total group
  ProjRep induced_tilde;   // Ind psi~, an ordinary representation
  MonomialMatrix T;        // T lifted(x) = induced_tilde(x) T
  bool intertwines = false;
  std::size_t checked = 0;
};

Correspondence monomial_correspondence(const SubgroupChar& psi, const CentralExtensionData& ext, const AChar& chi);

// Orthonormal basis (columns) of { v : rho(h) v = psi(h) v for all h in H }.
Eigen::MatrixXcd finite_weight_space(const ProjRep& rho, const SubgroupChar& psi);

// Restriction to an invariant subspace with orthonormal basis B.
ProjRep restrict_to_subspace(const ProjRep& rho, const Eigen::MatrixXcd& B);

// (1/|G|) sum |tr rho(g)|^2, rounded; the dimension of the commutant.
std::size_t commutant_dimension(const ProjRep& rho);

struct Constituent {
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
  std::vector<cplx> character;
  Eigen::MatrixXcd basis;  // orthonormal basis of one copy
};

struct Decomposition {
  std::vector<Constituent> irreps;  // sorted by dimension
  std::size_t commutant_dim = 0;
  u64 seed = kDefaultSeed;
  int attempts = 0;
  double residual = 0.0;  // worst invariance residual of a constituent basis
};

inline constexpr std::size_t kDecomposeMaxDim = 256;
inline constexpr int kDecomposeRetries = 5;

// Eigenspaces of a random Hermitian element of the commutant (Reynolds
// average of a seeded random matrix) are irreducible constituents; they are
// grouped into isomorphism classes by character. Ambiguous eigenvalue
// clustering triggers a retry with the next seed.
Decomposition decompose(const ProjRep& rho, u64 seed = kDefaultSeed);

struct IrrCount {
  std::size_t count = 0;
  std::vector<std::size_t> dims;
  Decomposition decomposition;
};

// Irreducible alpha-representations via the twisted regular representation.
IrrCount count_irr_alpha(const TableCocycle& alpha, u64 seed = kDefaultSeed);

// Irreducible representations of ext.total on which A acts by chi, from the
// chi-isotypic part of the regular representation.
IrrCount count_irr_central_character(const CentralExtensionData& ext, const AChar& chi, u64 seed = kDefaultSeed);

}  // namespace schur
