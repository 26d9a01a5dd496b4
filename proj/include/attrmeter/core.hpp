#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace attrmeter {

using Index = Eigen::Index;

/// Which regularization a reconstruction distance uses.
enum class DistanceKind {
  ConvexHull,  // coefficients constrained to the probability simplex per column
  JointL0,     // one-to-one 0/1 matching between columns
};

std::string to_string(DistanceKind kind);
DistanceKind distance_kind_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonBinaryEntry : Error {
  using Error::Error;
};
struct RaggedColumns : Error {
  using Error::Error;
};
struct DuplicateName : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct EmptyVector : Error {
  using Error::Error;
};
struct EmptyCurve : Error {
  using Error::Error;
};
struct TooFewAttributes : Error {
  using Error::Error;
};
struct ForcedSetTooLarge : Error {
  using Error::Error;
};
struct UnknownForcedName : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Attribute containers
//
// An attribute is the sign pattern of a binary classifier over a fixed set of
// N exemplars, stored as a length-N vector with entries in {-1,+1}.

struct AttributeVector {
  Eigen::VectorXd values;
  std::string name;
};

/// N x M column matrix of attributes over a shared exemplar set. Entries are
/// exactly -1 or +1; column names, when present, are unique. Immutable after
/// construction.
class AttributeMatrix {
 public:
  AttributeMatrix() = default;

  /// Throws NonBinaryEntry / DuplicateName when the invariants fail.
  explicit AttributeMatrix(Eigen::MatrixXd values, std::vector<std::string> names = {});

  /// Builds from explicit columns; throws RaggedColumns on length mismatch.
  static AttributeMatrix from_columns(const std::vector<AttributeVector>& columns);

  Index n_exemplars() const { return values_.rows(); }
  Index n_attributes() const { return values_.cols(); }

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::MatrixXd::ConstColXpr column(Index j) const { return values_.col(j); }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Name of column j, or a generated "a<j>" placeholder when unnamed.
  std::string name(Index j) const;

  /// New matrix holding the given columns, in the given order.
  AttributeMatrix select_columns(const std::vector<Index>& indices) const;

  /// Horizontal concatenation. Names are kept only when both sides are named
  /// and the combined set stays unique.
  static AttributeMatrix concat(const AttributeMatrix& a, const AttributeMatrix& b);

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> names_;
};

/// Partition of a labelled attribute set into a representation s1 and a
/// holdout s2. forced_indices lists the original columns that were required
/// to land in s1 (by name or by independence threshold).
struct SubspaceSplit {
  AttributeMatrix s1;
  AttributeMatrix s2;
  std::vector<Index> s1_indices;
  std::vector<Index> s2_indices;
  std::vector<Index> forced_indices;
  std::uint64_t seed = 0;
};

/// Re-checks the AttributeMatrix invariants; throws on violation.
void validate(const AttributeMatrix& matrix);

/// Maps a {0,1} matrix to the internal {-1,+1} encoding (0 -> -1, 1 -> +1).
AttributeMatrix from_zero_one(const Eigen::MatrixXd& zero_one, std::vector<std::string> names = {});

/// Inverse of from_zero_one.
Eigen::MatrixXd to_zero_one(const AttributeMatrix& matrix);

namespace detail {
/// Throws ShapeMismatch unless both matrices share the exemplar count and
/// both have at least one column.
void require_compatible(const AttributeMatrix& a, const AttributeMatrix& b, const char* where);
}  // namespace detail

}  // namespace attrmeter
