#include "attrmeter/core.hpp"

#include <unordered_set>

namespace attrmeter {

std::string to_string(DistanceKind kind) {
  return kind == DistanceKind::ConvexHull ? "cvx" : "jp";
}

DistanceKind distance_kind_from_string(const std::string& s) {
  if (s == "cvx") return DistanceKind::ConvexHull;
  if (s == "jp") return DistanceKind::JointL0;
  throw OutOfRange("unknown distance kind '" + s + "' (expected cvx or jp)");
}

namespace {

void check_entries(const Eigen::MatrixXd& values) {
  for (Index j = 0; j < values.cols(); ++j) {
    for (Index i = 0; i < values.rows(); ++i) {
      const double v = values(i, j);
      if (v != 1.0 && v != -1.0) {
        throw NonBinaryEntry("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is " + std::to_string(v) + ", expected -1 or +1");
      }
    }
  }
}

void check_names(const std::vector<std::string>& names, Index n_cols) {
  if (names.empty()) return;
  if (static_cast<Index>(names.size()) != n_cols) {
    throw ShapeMismatch("got " + std::to_string(names.size()) + " names for " +
                        std::to_string(n_cols) + " columns");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw DuplicateName("duplicate attribute name '" + n + "'");
  }
}

}  // namespace

AttributeMatrix::AttributeMatrix(Eigen::MatrixXd values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
  check_entries(values_);
  check_names(names_, values_.cols());
}

AttributeMatrix AttributeMatrix::from_columns(const std::vector<AttributeVector>& columns) {
  if (columns.empty()) return AttributeMatrix(Eigen::MatrixXd(0, 0));
  const Index n = columns.front().values.size();
  Eigen::MatrixXd values(n, static_cast<Index>(columns.size()));
  std::vector<std::string> names;
  bool any_named = false;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].values.size() != n) {
      throw RaggedColumns("column " + std::to_string(j) + " has length " +
                          std::to_string(columns[j].values.size()) + ", expected " +
                          std::to_string(n));
    }
    values.col(static_cast<Index>(j)) = columns[j].values;
    names.push_back(columns[j].name);
    if (!columns[j].name.empty()) any_named = true;
  }
  if (!any_named) names.clear();
  return AttributeMatrix(std::move(values), std::move(names));
}

std::string AttributeMatrix::name(Index j) const {
  if (has_names()) return names_[static_cast<std::size_t>(j)];
  return "a" + std::to_string(j);
}

AttributeMatrix AttributeMatrix::select_columns(const std::vector<Index>& indices) const {
  Eigen::MatrixXd values(n_exemplars(), static_cast<Index>(indices.size()));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Index j = indices[k];
    if (j < 0 || j >= n_attributes()) {
      throw OutOfRange("column index " + std::to_string(j) + " out of range");
    }
    values.col(static_cast<Index>(k)) = values_.col(j);
    if (has_names()) names.push_back(names_[static_cast<std::size_t>(j)]);
  }
  return AttributeMatrix(std::move(values), std::move(names));
}

AttributeMatrix AttributeMatrix::concat(const AttributeMatrix& a, const AttributeMatrix& b) {
  if (a.n_attributes() == 0) return b;
  if (b.n_attributes() == 0) return a;
  if (a.n_exemplars() != b.n_exemplars()) {
    throw ShapeMismatch("cannot concatenate matrices with " + std::to_string(a.n_exemplars()) +
                        " and " + std::to_string(b.n_exemplars()) + " exemplars");
  }
  Eigen::MatrixXd values(a.n_exemplars(), a.n_attributes() + b.n_attributes());
  values << a.values(), b.values();
  std::vector<std::string> names;
  if (a.has_names() && b.has_names()) {
    names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    std::unordered_set<std::string> seen(names.begin(), names.end());
    if (static_cast<Index>(seen.size()) != values.cols()) names.clear();
  }
  return AttributeMatrix(std::move(values), std::move(names));
}

void validate(const AttributeMatrix& matrix) {
  check_entries(matrix.values());
  check_names(matrix.names(), matrix.n_attributes());
}

AttributeMatrix from_zero_one(const Eigen::MatrixXd& zero_one, std::vector<std::string> names) {
  Eigen::MatrixXd values(zero_one.rows(), zero_one.cols());
  for (Index j = 0; j < zero_one.cols(); ++j) {
    for (Index i = 0; i < zero_one.rows(); ++i) {
      const double v = zero_one(i, j);
      if (v != 0.0 && v != 1.0) {
        throw NonBinaryEntry("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                             std::to_string(v) + ", expected 0 or 1");
      }
      values(i, j) = v == 1.0 ? 1.0 : -1.0;
    }
  }
  return AttributeMatrix(std::move(values), std::move(names));
}

Eigen::MatrixXd to_zero_one(const AttributeMatrix& matrix) {
  return (matrix.values().array() + 1.0) / 2.0;
}

namespace detail {

void require_compatible(const AttributeMatrix& a, const AttributeMatrix& b, const char* where) {
  if (a.n_attributes() == 0 || b.n_attributes() == 0) {
    throw ShapeMismatch(std::string(where) + ": both matrices need at least one column");
  }
  if (a.n_exemplars() != b.n_exemplars()) {
    throw ShapeMismatch(std::string(where) + ": exemplar counts differ (" +
                        std::to_string(a.n_exemplars()) + " vs " + std::to_string(b.n_exemplars()) +
                        ")");
  }
}

}  // namespace detail

}  // namespace attrmeter
