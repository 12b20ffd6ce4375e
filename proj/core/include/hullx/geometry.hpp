#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hullx/rational.hpp"

namespace hullx {

/// Ordered collection of n points in R^d. Duplicates are allowed and keep
/// distinct labels. Labels are 0-based in the API and 1-based in files and
/// on the command line.
class Configuration {
 public:
  Configuration(std::size_t dim, std::vector<RatVector> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const RatVector& point(std::size_t i) const { return points_[i]; }
  const std::vector<RatVector>& points() const { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t dim_;
  std::vector<RatVector> points_;
};

/// Sorted set of 0-based labels.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> members);
  explicit IndexSet(std::vector<std::size_t> members);

  static IndexSet all(std::size_t n);
  static IndexSet from_mask(std::uint64_t mask);
  /// From 1-based labels as written in files and on the command line.
  static IndexSet from_labels(std::span<const std::size_t> one_based);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t i) const;
  bool is_subset_of(const IndexSet& other) const;
  std::uint64_t mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// "{1,2,4}" with 1-based labels.
  std::string to_string() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Points of `cfg` selected by `set`.
std::vector<RatVector> select(const Configuration& cfg, const IndexSet& set);

/// Throws unless every label of `set` is a label of `cfg` and, when
/// `allow_empty` is false, the set is nonempty.
void check_index_set(const Configuration& cfg, const IndexSet& set, bool allow_empty = false);

/// Affine subspace anchor + span(directions) with independent directions.
class AffineFlat {
 public:
  AffineFlat(RatVector anchor, std::vector<RatVector> directions);

  static AffineFlat point(RatVector x);
  static AffineFlat whole_space(std::size_t d);
  /// Affine hull of a nonempty point list.
  static AffineFlat through(std::span<const RatVector> points);

  const RatVector& anchor() const { return anchor_; }
  const std::vector<RatVector>& directions() const { return directions_; }
  std::size_t dim() const { return directions_.size(); }
  std::size_t ambient_dim() const { return anchor_.size(); }

  /// "anchor;dir1;dir2" as accepted by the command line.
  std::string to_string() const;
  static AffineFlat parse(std::string_view text);

  friend bool operator==(const AffineFlat&, const AffineFlat&) = default;

 private:
  RatVector anchor_;
  std::vector<RatVector> directions_;
};

}  // namespace hullx
