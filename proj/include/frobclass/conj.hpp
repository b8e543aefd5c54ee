#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobclass/ff.hpp"

namespace frobclass::conj {

// Square matrix over F_l, row-major, entries reduced to [0, l).
class Matrix {
 public:
  Matrix() = default;
  Matrix(uint64_t l, size_t n);
  Matrix(uint64_t l, const std::vector<std::vector<int64_t>>& rows);
  static Matrix identity(uint64_t l, size_t n);
  static Matrix scalar(uint64_t l, size_t n, uint64_t lambda);
  static Matrix of2(uint64_t l, int64_t a, int64_t b, int64_t c, int64_t d);

  uint64_t l() const { return l_; }
  size_t n() const { return n_; }
  uint64_t at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  void set(size_t i, size_t j, int64_t v);
  const std::vector<uint64_t>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(uint64_t s) const;
  uint64_t det() const;
  uint64_t trace() const;
  // Throws Singular.
  Matrix inverse() const;
  bool is_scalar() const;

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.l_ == b.l_ && a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.e_ < b.e_; }

  // e.g. [[1,1],[0,1]]
  std::string to_string() const;

 private:
  uint64_t l_ = 0;
  size_t n_ = 0;
  std::vector<uint64_t> e_;
};

enum class Kind { Scalar, SplitSemisimple, NonsplitSemisimple, Nonsemisimple };
std::string kind_name(Kind k);

// GL_2 conjugacy class data. The label is the square class of the
// off-diagonal parameter c in the normal form eps*[[1,c],[0,1]] and is only
// present for split classes (nonsemisimple with determinant 1).
struct ClassDescriptor {
  uint64_t l = 0;
  uint64_t trace = 0;
  uint64_t det = 0;
  Kind kind = Kind::Scalar;
  std::optional<uint64_t> eigenvalue;  // repeated eigenvalue, when there is one
  std::optional<bool> square_label;

  bool splits() const { return square_label.has_value(); }
  // Stable names: Z(lambda), S(t,d), U(+1,qr) / U(-1,nqr), U(lambda).
  std::string name() const;
};

ClassDescriptor gl_class_of(const Matrix& m);
// Descriptor from the characteristic polynomial alone; for a repeated
// eigenvalue the caller says whether the element is scalar. A split class
// gets no label here since the label is not a charpoly invariant.
ClassDescriptor gl_class_from_charpoly(uint64_t l, uint64_t trace, uint64_t det, bool scalar_if_repeated);

// Square class of det[Nv | v] with N = eps*M - I, for M nonsemisimple with
// eigenvalue eps = +-1; nullopt otherwise.
std::optional<bool> sl_label(const Matrix& m);

bool class_splits(const Matrix& sigma);
// Ground truth: the GL_2 centralizer of sigma has only square determinants.
bool class_splits_brute(const Matrix& sigma);

bool sl_conjugate(const Matrix& a, const Matrix& b);
bool sl_conjugate_fast(const Matrix& a, const Matrix& b);
bool gl_conjugate(const Matrix& a, const Matrix& b);

// First C in lexicographic order of its entries with M C = C sigma, over
// GL_2 or SL_2; nullopt if none.
std::optional<Matrix> find_conjugator(const Matrix& m, const Matrix& sigma, bool special = false);

std::vector<Matrix> enumerate_gl2(uint64_t l);
std::vector<Matrix> enumerate_sl2(uint64_t l);

struct SplittingData {
  uint64_t m = 1;
  ff::ResidueSubgroup h;
};

// Determinant image D of the GL_n centralizer of sigma; m = [F_l^x : D] and
// H = D. n = 2 by enumeration (l <= 11), n = 3 from the kernel of
// X -> sigma X - X sigma (l <= 7).
SplittingData splitting_data_general(const Matrix& sigma);

// Determinant of the matrix whose columns are the given vectors.
uint64_t exterior_form_eval(const std::vector<std::vector<uint64_t>>& vectors, uint64_t l);

struct ClassRow {
  Matrix rep;
  ClassDescriptor desc;
  uint64_t size = 0;
};
// Conjugacy classes of SL_2(F_l), representative = least element of the class.
std::vector<ClassRow> sl2_class_representatives(uint64_t l);

uint64_t smallest_nonsquare(uint64_t l);
// eps * [[1, c], [0, 1]]
Matrix unipotent_candidate(uint64_t l, uint64_t eps, uint64_t c);

void require_odd_prime(uint64_t l);

}  // namespace frobclass::conj
