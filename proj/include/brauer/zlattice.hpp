#pragma once

// Finitely generated abelian groups presented by integer relation matrices.
//
// Elements are integer row vectors over the generators; a homomorphism is a
// matrix M acting on the right (x -> x * M), and relations are rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brauer {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                             std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  void append_row(std::span<const BigInt> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;
  bool is_zero() const;

  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Row vector times matrix.
IntVector multiply(const IntVector& x, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... ,
/// followed by zeros. V_inv is tracked alongside V.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inv;

  std::size_t rank() const;
  BigInt diagonal(std::size_t i) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Presentation-independent isomorphism class: invariant factors > 1 plus
/// free rank.
struct Fingerprint {
  std::vector<BigInt> invariants;
  std::size_t free_rank = 0;

  bool operator==(const Fingerprint& other) const = default;
  std::string to_string() const;
  std::optional<BigInt> order() const;
};

class AbelianGroup {
 public:
  AbelianGroup();
  AbelianGroup(std::size_t ngens, IntMatrix relations);

  /// Direct sum of cyclic groups Z/orders[i]; an order of 0 stands for Z.
  static AbelianGroup from_orders(const std::vector<BigInt>& orders);
  static AbelianGroup trivial() { return AbelianGroup(); }

  std::size_t ngens() const { return ngens_; }
  const IntMatrix& relations() const { return relations_; }

  const std::vector<BigInt>& invariant_factors() const { return invariants_; }
  std::size_t free_rank() const { return free_rank_; }
  Fingerprint fingerprint() const { return {invariants_, free_rank_}; }
  std::optional<BigInt> order() const;
  bool is_trivial() const { return invariants_.empty() && free_rank_ == 0; }
  /// Least common multiple of the invariant factors; nullopt when infinite.
  std::optional<BigInt> exponent() const;

  /// Coordinates of x with respect to the normal-form basis: one entry per
  /// invariant factor (reduced into [0, d)) followed by one per free summand.
  IntVector normal_coords(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  /// The j-th normal-form basis element expressed on the original generators.
  IntVector normal_generator(std::size_t j) const;
  /// Number of normal-form basis elements (invariant factors + free rank).
  std::size_t normal_rank() const { return invariants_.size() + free_rank_; }

 private:
  void normalize();

  std::size_t ngens_ = 0;
  IntMatrix relations_;
  std::vector<BigInt> invariants_;
  std::size_t free_rank_ = 0;
  std::vector<std::size_t> columns_;  // SNF columns carrying nontrivial summands
  IntMatrix V_;
  IntMatrix V_inv_;
};

class AbelianHom {
 public:
  AbelianHom() = default;
  /// Validates that every source relation maps into the target relations.
  AbelianHom(AbelianGroup source, AbelianGroup target, IntMatrix matrix);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return multiply(x, matrix_); }
  bool is_zero() const;

  /// Same matrix viewed between new presentations (e.g. quotients).
  AbelianHom reinterpret(AbelianGroup source, AbelianGroup target) const;

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  IntMatrix matrix_;
};

/// g after f.
AbelianHom compose(const AbelianHom& f, const AbelianHom& g);
AbelianHom identity_hom(const AbelianGroup& a);

struct KernelResult {
  AbelianGroup group;
  AbelianHom inclusion;
};
struct CokernelResult {
  AbelianGroup group;
  AbelianHom projection;
};
struct DirectSum {
  AbelianGroup group;
  std::vector<AbelianHom> injections;
  std::vector<AbelianHom> projections;
};

KernelResult hom_kernel(const AbelianHom& f);
CokernelResult hom_cokernel(const AbelianHom& f);
AbelianGroup hom_image(const AbelianHom& f);
/// A / nA.
AbelianGroup quotient_mod_n(const AbelianGroup& a, const BigInt& n);
DirectSum direct_sum(const std::vector<AbelianGroup>& groups);
/// Only the summed group, without per-summand maps (those copy the sum).
AbelianGroup direct_sum_group(const std::vector<AbelianGroup>& groups);
/// The map into a direct sum whose components are the given homs.
AbelianHom assemble(const AbelianGroup& source, const std::vector<AbelianHom>& parts,
                    const DirectSum& target);
AbelianHom assemble(const AbelianGroup& source, const std::vector<AbelianHom>& parts,
                    const AbelianGroup& target);

/// The odd-primary (or any coprime-to-p) part of a finite group's fingerprint.
Fingerprint prime_to_part(const Fingerprint& fp, long p);

// ---------------------------------------------------------------------------
// Linear algebra over Z/n with exact int64 residues.

using Residue = std::int64_t;

Residue mod_reduce(Residue a, Residue n);
Residue gcd_residue(Residue a, Residue b);
/// Inverse of a unit modulo n.
Residue mod_inverse(Residue a, Residue n);

/// Kernel of a matrix acting on column vectors of (Z/n)^ncols.
///
/// Rows with a unit entry are eliminated first (preferring +-1 pivots); the
/// residual core, whose entries are all non-units, is diagonalized by a
/// Smith reduction of [core; n*I] carried out with entries kept modulo n.
/// Rows may be streamed with add_row(); finalize() must run before queries.
class ModularKernel {
 public:
  ModularKernel(std::size_t ncols, Residue modulus);
  ModularKernel(std::vector<std::vector<Residue>> rows, std::size_t ncols,
                Residue modulus);

  void add_row(std::vector<Residue> row);
  void finalize();

  Residue modulus() const { return modulus_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t unit_pivots() const { return pivot_cols_.size(); }
  std::size_t core_rows() const { return core_rows_; }

  /// Generators of the kernel with their additive orders (all > 1); the
  /// kernel is the direct sum of the cyclic groups they generate.
  std::size_t ngens() const { return generators_.size(); }
  const std::vector<Residue>& generator(std::size_t i) const { return generators_[i]; }
  const std::vector<Residue>& orders() const { return orders_; }

  bool contains(const std::vector<Residue>& x) const;
  /// Coordinates of a kernel element, coordinate i taken modulo orders()[i].
  /// Throws InvalidInput when x is not in the kernel.
  std::vector<Residue> coords(const std::vector<Residue>& x) const;

 private:
  void reduce(std::vector<Residue>& row) const;
  long find_unit(const std::vector<Residue>& row) const;
  void add_pivot(std::vector<Residue> row, std::size_t col);

  Residue modulus_;
  std::size_t ncols_;
  bool finalized_ = false;
  std::size_t core_rows_ = 0;
  std::vector<long> pivot_of_;
  std::vector<std::vector<Residue>> core_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::vector<Residue>> pivot_rows_;  // pivot entry 1, other pivots 0
  std::vector<std::size_t> free_cols_;
  std::vector<std::vector<Residue>> v_inv_;       // free x free, mod n
  std::vector<Residue> diag_;                     // per free basis vector
  std::vector<std::size_t> gen_index_;            // generator -> free basis index
  std::vector<std::vector<Residue>> generators_;
  std::vector<Residue> orders_;
};

}  // namespace brauer
