#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lcurve {

// Signed permutation matrix in one-line notation: word[i-1] = +-j means the
// only nonzero entry of row i sits in column j with that sign (1-based).
// Elements of determinant -1 are representable; operations restricted to the
// Weyl group D_m check membership themselves.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> word);

  static SignedPermutation identity(int m);
  // The antidiagonal matrix with (A)_{i,m+1-i} = (-1)^(i+1).
  static SignedPermutation antidiagonal(int m);
  // diag(1,-1,1,-1,...); determinant (-1)^(m/2).
  static SignedPermutation alternating_diagonal(int m);
  static SignedPermutation diagonal(std::span<const int> signs);
  static SignedPermutation from_matrix(const Eigen::MatrixXi& entries);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }

  int column(int row) const { return word_[row - 1] < 0 ? -word_[row - 1] : word_[row - 1]; }
  int sign(int row) const { return word_[row - 1] < 0 ? -1 : 1; }
  int entry(int row, int col) const { return column(row) == col ? sign(row) : 0; }

  int determinant() const;
  bool in_weyl_group() const { return determinant() == 1; }
  bool is_diagonal() const;

  SignedPermutation inverse() const;
  SignedPermutation transpose() const { return inverse(); }

  Eigen::MatrixXi to_int_matrix() const;
  Eigen::MatrixXd to_matrix() const;

  // "[2,-1,3]"
  std::string to_string() const;

  // Injective packing of the word for m <= 8.
  std::uint64_t key() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> word_;
};

// Diagonal signed permutation of determinant +1 (the subgroup Diag_m).
class DiagonalSigns {
 public:
  DiagonalSigns() = default;
  explicit DiagonalSigns(std::vector<int> signs);

  static DiagonalSigns identity(int m);

  int size() const { return static_cast<int>(signs_.size()); }
  std::span<const int> signs() const { return signs_; }
  int operator[](int row) const { return signs_[row - 1]; }
  int trace() const;

  SignedPermutation to_permutation() const { return SignedPermutation::diagonal(signs_); }

  friend bool operator==(const DiagonalSigns&, const DiagonalSigns&) = default;
  friend auto operator<=>(const DiagonalSigns&, const DiagonalSigns&) = default;

 private:
  std::vector<int> signs_;
};

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q);

// Number of nonzero entries strictly northeast of (i, j).
int ne(const SignedPermutation& q, int i, int j);
// ne(transpose(q), j, i): nonzero entries strictly southwest of (i, j).
int sw(const SignedPermutation& q, int i, int j);

// delta_i(Q) = Q_{i,j} (-1)^NE(Q,i,j) for every row, without the D_m check.
std::vector<int> delta_signs(const SignedPermutation& q);

DiagonalSigns delta(const SignedPermutation& q);
int s_value(const SignedPermutation& q);

// Transpose and flip the sign of every entry with i+j odd.
SignedPermutation tr(const SignedPermutation& q);
// Half-turn rotation and sign flip of every entry with i+j odd.
SignedPermutation ad(const SignedPermutation& q);

// Matrix-product forms J+ Q^T J+ and A^T Q A, kept as independent references.
SignedPermutation tr_by_conjugation(const SignedPermutation& q);
SignedPermutation ad_by_conjugation(const SignedPermutation& q);

// Delta(Q) A.
SignedPermutation chop_rep(const SignedPermutation& q);

// Inversions of the underlying signless permutation.
int cell_dimension(const SignedPermutation& q);

struct DiagonalRepresentative {
  SignedPermutation matrix;
  bool in_so = false;
};

// diag(-1,...,-1,1,...,1) with (m-s)/2 leading minus signs.
DiagonalRepresentative make_M(int m, int s);

inline constexpr int kEnumerationGuard = 8;

long long weyl_group_order(int m);

// Permutations in lexicographic order, sign patterns in binary counter order
// (bit i set negates row i+1), keeping determinant +1.
void for_each_D(int m, const std::function<void(const SignedPermutation&)>& visit,
                bool force = false);
std::vector<SignedPermutation> enumerate_D(int m, bool force = false);

// Every diagonal element of D_m in binary counter order.
std::vector<DiagonalSigns> enumerate_diagonals(int m);

SignedPermutation parse_signed_word(std::string_view text);
SignedPermutation parse_signed_matrix(std::string_view text);

}  // namespace lcurve
