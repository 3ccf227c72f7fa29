#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

/// Dense linear algebra over the two-element field.
namespace colorloss::gf2 {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const noexcept;
  std::size_t count() const noexcept;
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices);
  static BitVector from_indices(std::size_t size, std::span<const std::uint32_t> indices);

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Row-major bit-packed matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  std::size_t row_weight(std::size_t r) const;
  std::size_t column_weight(std::size_t c) const;
  BitVector column(std::size_t c) const;

  /// A·x over GF(2).
  BitVector multiply(const BitVector& x) const;
  BitMatrix transpose() const;

  /// Rows whose mask bit equals `keep`, in their original order.
  BitMatrix select_rows(const BitVector& mask, bool keep = true) const;
  /// [this | extra] with `extra` appended as trailing columns.
  BitMatrix append_columns(std::span<const BitVector> extra) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Reduces `m` in place to row echelon form and returns the pivot columns in
/// increasing order. Pivots among the first k columns equal rank of the first
/// k columns, which is what the intactness checks rely on.
std::vector<std::size_t> row_echelon(BitMatrix& m);

std::size_t rank(BitMatrix m);

/// Some x with A x = b, or nullopt iff rank(A|b) > rank(A).
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

/// Echelon basis that grows one row at a time. The pivot of a row is its
/// lowest set column, so a row whose residue lives only in columns >= k
/// certifies a rank increase of the trailing block over the leading k columns.
class IncrementalEchelon {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit IncrementalEchelon(std::size_t cols);

  /// Reduces `row` against the basis. Returns the new pivot column, or npos
  /// when the row was dependent.
  std::size_t insert(std::span<const Word> row);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t cols_;
  std::size_t stride_;
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> pivot_slot_;  // column -> basis row index + 1, 0 if none
  std::vector<Word> basis_;
  std::vector<Word> scratch_;
};

/// Face-incidence system of a code: F (qubits x faces) with rank(F) cached.
/// Removed-qubit sets are passed as masks over the rows of F.
class FaceSystem {
 public:
  explicit FaceSystem(BitMatrix faces);

  const BitMatrix& faces() const noexcept { return faces_; }
  std::size_t face_rank() const noexcept { return face_rank_; }
  std::size_t num_qubits() const noexcept { return faces_.rows(); }

  /// True iff (r∘F) x = r∘s is solvable: some face product moves the
  /// logical with support `s` off the removed qubits.
  bool class_intact(const BitVector& support, const BitVector& removed) const;

  /// Conjunction of class_intact over `supports`, computed with a single
  /// elimination of [F | S] restricted to the removed rows.
  bool info_intact(std::span<const BitVector> supports, const BitVector& removed) const;

  /// True iff the removed set contains the support of a nontrivial logical:
  /// |r| - rank(F_r) > rank(F) - rank(F_{not r}).
  bool contains_logical(const BitVector& removed) const;

  /// Explicit face subset x with support ⊕ F x avoiding `removed`, if any.
  std::optional<BitVector> cleaning_faces(const BitVector& support,
                                          const BitVector& removed) const;

 private:
  void check_mask(const BitVector& removed) const;

  BitMatrix faces_;
  std::size_t face_rank_;
};

/// Number of qubits, taken in `order`, after which info_intact first fails.
/// Returns 0 if it never fails. One incremental pass instead of repeated solves.
std::size_t first_information_loss(const BitMatrix& faces, std::span<const BitVector> supports,
                                   std::span<const std::uint32_t> order);

}  // namespace colorloss::gf2
