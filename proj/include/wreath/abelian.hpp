#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wreath {

/// An element of a finitely generated abelian group, stored as one integer
/// per direct summand: free coordinates first, then torsion residues.
/// The element does not carry its group; arithmetic goes through
/// FgAbelianGroup, which also enforces the torsion reduction.
class AElement {
 public:
  AElement() = default;

  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }

  bool is_identity() const;

  friend bool operator==(const AElement&, const AElement&) = default;
  friend auto operator<=>(const AElement&, const AElement&) = default;

 private:
  friend class FgAbelianGroup;
  explicit AElement(std::vector<std::int64_t> c) : coords_(std::move(c)) {}
  std::vector<std::int64_t> coords_;
};

/// A = Z^r (+) Z_{n_1} (+) ... (+) Z_{n_s}, generated by the standard basis
/// of each summand.
class FgAbelianGroup {
 public:
  FgAbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion_orders);

  static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static FgAbelianGroup cyclic(std::int64_t order) { return {0, {order}}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_; }
  /// Number of direct summands, which is also the number of generators.
  std::size_t rank() const { return free_rank_ + torsion_.size(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_torsion_free() const { return torsion_.empty(); }
  /// Order of summand i, or 0 for a free summand.
  std::int64_t order(std::size_t i) const {
    return i < free_rank_ ? 0 : torsion_[i - free_rank_];
  }

  /// A^copies with summands laid out block by block: the free part is the
  /// concatenation of the copies' free parts, and likewise for torsion.
  FgAbelianGroup power(std::size_t copies) const;

  AElement identity() const;
  /// Builds an element, reducing torsion coordinates into [0, n_i).
  AElement element(std::vector<std::int64_t> coords) const;
  /// The i-th standard generator raised to `exponent`.
  AElement generator(std::size_t i, std::int64_t exponent = 1) const;

  bool contains(const AElement& v) const;
  AElement add(const AElement& u, const AElement& v) const;
  AElement negate(const AElement& v) const;
  AElement scale(const AElement& v, std::int64_t k) const;

  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  void require_member(const AElement& v) const;

  std::size_t free_rank_;
  std::vector<std::int64_t> torsion_;
};

/// Word length over the standard generators:
/// sum |free coords| + sum min(c_i, n_i - c_i).
std::int64_t a_length(const FgAbelianGroup& group, const AElement& v);

/// Parses "Z", "Z^3", "Z2", "Z_4", "Z^2 x Z3", "Z + Z_2", "1" (trivial).
FgAbelianGroup parse_abelian_group(std::string_view text);

}  // namespace wreath
