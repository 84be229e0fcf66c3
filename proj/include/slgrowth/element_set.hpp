#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "slgrowth/field.hpp"
#include "slgrowth/matrix.hpp"

namespace slgrowth {

// Deduplicated set of SL_n(F_p) elements. Members are kept in a flat buffer
// of 16-bit entries (insertion order) with a hash index keyed on the entries,
// which is equivalent to keying on canonical_encode.
class ElementSet {
 public:
  using Entry = std::uint16_t;

  ElementSet(int n, const PrimeField& field);
  ElementSet(const ElementSet& other);
  ElementSet& operator=(const ElementSet& other);
  ElementSet(ElementSet&&) noexcept;
  ElementSet& operator=(ElementSet&&) noexcept;
  ~ElementSet();

  // Builds a set from matrices; throws NotInGroup for det != 1 and
  // StructuralError on dimension/field mismatch.
  static ElementSet from_matrices(int n, const PrimeField& field, std::span<const Matrix> members);
  static ElementSet single(const Matrix& g);

  int n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  // Returns true when g was new. Checks det g = 1.
  bool insert(const Matrix& g);
  // Caller guarantees the entries describe an SL_n element of this (n, p).
  bool insert_raw(std::span<const Entry> entries);
  bool contains(const Matrix& g) const;
  bool contains_raw(std::span<const Entry> entries) const;

  Matrix at(std::size_t i) const;
  std::span<const Entry> raw(std::size_t i) const noexcept;
  std::vector<Matrix> members() const;

  // Same members, ordered by canonical encoding.
  ElementSet sorted() const;
  // Member-wise equality, independent of insertion order.
  bool same_members(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  void reserve(std::size_t count);

  // Element dump: header `n=<n> p=<p> count=<N>` then one hex-encoded
  // element per line, in canonical order.
  std::string dump() const;
  static ElementSet parse_dump(const std::string& text);

 private:
  struct Store;
  void check_compatible(const Matrix& g) const;

  int n_;
  PrimeField field_;
  std::unique_ptr<Store> store_;
};

}  // namespace slgrowth
