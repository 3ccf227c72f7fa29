#include "colorloss/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace colorloss::gf2 {

namespace {

void xor_into(std::span<Word> dst, std::span<const Word> src, std::size_t from_word) {
  for (std::size_t w = from_word; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw DimensionMismatch("BitVector xor: size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (std::size_t i : indices) v.set(i);
  return v;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::uint32_t> indices) {
  BitVector v(size);
  for (std::uint32_t i : indices) v.set(i);
  return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / kWordBits];
  const Word mask = Word{1} << (c % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t total = 0;
  for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
  return total;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("BitMatrix::multiply: vector length != cols");
  BitVector out(rows_);
  const auto xw = x.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    Word acc = 0;
    const auto rw = row(r);
    for (std::size_t w = 0; w < stride_; ++w) acc ^= rw[w] & xw[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::select_rows(const BitVector& mask, bool keep) const {
  if (mask.size() != rows_) throw DimensionMismatch("select_rows: mask length != rows");
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += (mask.get(r) == keep) ? 1 : 0;
  BitMatrix out(n, cols_);
  std::size_t dst = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (mask.get(r) != keep) continue;
    std::copy_n(row(r).begin(), stride_, out.row(dst).begin());
    ++dst;
  }
  return out;
}

BitMatrix BitMatrix::append_columns(std::span<const BitVector> extra) const {
  for (const auto& col : extra) {
    if (col.size() != rows_) throw DimensionMismatch("append_columns: column length != rows");
  }
  BitMatrix out(rows_, cols_ + extra.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(row(r).begin(), stride_, out.row(r).begin());
    for (std::size_t k = 0; k < extra.size(); ++k) {
      if (extra[k].get(r)) out.set(r, cols_ + k);
    }
  }
  return out;
}

std::vector<std::size_t> row_echelon(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    std::size_t r = next;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    if (r != next) std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(next).begin());
    const std::size_t from_word = c / kWordBits;
    for (std::size_t rr = next + 1; rr < m.rows(); ++rr) {
      if (m.get(rr, c)) xor_into(m.row(rr), m.row(next), from_word);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::size_t rank(BitMatrix m) { return row_echelon(m).size(); }

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) + " != rows " +
                            std::to_string(a.rows()));
  }
  const BitVector* rhs = &b;
  BitMatrix aug = a.append_columns(std::span<const BitVector>(rhs, 1));
  const auto pivots = row_echelon(aug);
  const std::size_t n = a.cols();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  BitVector x(n);
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t p = pivots[i];
    bool value = aug.get(i, n);
    for (std::size_t c = p + 1; c < n; ++c) {
      if (aug.get(i, c) && x.get(c)) value = !value;
    }
    x.set(p, value);
  }
  return x;
}

IncrementalEchelon::IncrementalEchelon(std::size_t cols)
    : cols_(cols), stride_(words_for(cols)), pivot_slot_(cols, 0), scratch_(stride_, 0) {}

std::size_t IncrementalEchelon::insert(std::span<const Word> row) {
  if (row.size() != stride_) throw DimensionMismatch("IncrementalEchelon::insert: row width");
  std::copy(row.begin(), row.end(), scratch_.begin());
  std::size_t w = 0;
  for (;;) {
    while (w < stride_ && scratch_[w] == 0) ++w;
    if (w == stride_) return npos;
    const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(scratch_[w]));
    const std::uint32_t slot = pivot_slot_[c];
    if (slot == 0) {
      basis_.insert(basis_.end(), scratch_.begin(), scratch_.end());
      ++rank_;
      pivot_slot_[c] = static_cast<std::uint32_t>(rank_);
      return c;
    }
    const std::span<const Word> pivot_row(basis_.data() + (slot - 1) * stride_, stride_);
    xor_into(scratch_, pivot_row, w);
  }
}

FaceSystem::FaceSystem(BitMatrix faces) : faces_(std::move(faces)), face_rank_(rank(faces_)) {}

void FaceSystem::check_mask(const BitVector& removed) const {
  if (removed.size() != faces_.rows()) {
    throw DimensionMismatch("removed-qubit mask length != number of qubits");
  }
}

bool FaceSystem::class_intact(const BitVector& support, const BitVector& removed) const {
  return info_intact(std::span<const BitVector>(&support, 1), removed);
}

bool FaceSystem::info_intact(std::span<const BitVector> supports, const BitVector& removed) const {
  check_mask(removed);
  BitMatrix system = faces_.append_columns(supports).select_rows(removed);
  const auto pivots = row_echelon(system);
  return pivots.empty() || pivots.back() < faces_.cols();
}

bool FaceSystem::contains_logical(const BitVector& removed) const {
  check_mask(removed);
  const std::size_t inside = removed.count();
  const std::size_t rank_inside = rank(faces_.select_rows(removed, true));
  const std::size_t rank_outside = rank(faces_.select_rows(removed, false));
  // kernel of F_r^T (candidate supports in r) vs stabilizers supported in r
  return inside - rank_inside > face_rank_ - rank_outside;
}

std::optional<BitVector> FaceSystem::cleaning_faces(const BitVector& support,
                                                    const BitVector& removed) const {
  check_mask(removed);
  if (support.size() != faces_.rows()) throw DimensionMismatch("support length != qubits");
  const BitMatrix restricted = faces_.select_rows(removed);
  BitVector rhs(restricted.rows());
  std::size_t dst = 0;
  for (std::size_t r = 0; r < faces_.rows(); ++r) {
    if (!removed.get(r)) continue;
    if (support.get(r)) rhs.set(dst);
    ++dst;
  }
  return solve(restricted, rhs);
}

std::size_t first_information_loss(const BitMatrix& faces, std::span<const BitVector> supports,
                                   std::span<const std::uint32_t> order) {
  const std::size_t width = faces.cols() + supports.size();
  IncrementalEchelon basis(width);
  std::vector<Word> row(words_for(width), 0);
  for (std::size_t t = 0; t < order.size(); ++t) {
    const std::uint32_t q = order[t];
    std::fill(row.begin(), row.end(), 0);
    const auto face_row = faces.row(q);
    std::copy(face_row.begin(), face_row.end(), row.begin());
    for (std::size_t k = 0; k < supports.size(); ++k) {
      if (supports[k].get(q)) {
        const std::size_t c = faces.cols() + k;
        row[c / kWordBits] |= Word{1} << (c % kWordBits);
      }
    }
    const std::size_t pivot = basis.insert(row);
    if (pivot != IncrementalEchelon::npos && pivot >= faces.cols()) return t + 1;
  }
  return 0;
}

}  // namespace colorloss::gf2
