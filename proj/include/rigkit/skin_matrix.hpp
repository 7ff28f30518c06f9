#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "rigkit/error.hpp"

#include <Eigen/Dense>

namespace rigkit {

/// One nonzero skinning weight: vertex row -> (bone, weight).
struct Influence {
  int bone = 0;
  double weight = 0.0;

  friend bool operator==(const Influence&, const Influence&) = default;
};

inline constexpr double kRowSumTol = 1e-6;

/// Sparse N x B skinning weight matrix. Each row holds the influences of one
/// vertex, sorted by bone index; zeros are never stored. Valid rows are
/// convex combinations: weights >= 0 summing to 1 within 1e-6.
class SkinMatrix {
 public:
  SkinMatrix() = default;
  SkinMatrix(int rows, int cols)
      : cols_(cols), rows_(static_cast<std::size_t>(std::max(rows, 0))) {
    if (rows < 0 || cols < 0)
      throw ValidationError("skin matrix: negative dimension");
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  std::span<const Influence> row(int i) const {
    return {rows_[static_cast<std::size_t>(i)].data(),
            rows_[static_cast<std::size_t>(i)].size()};
  }

  /// Replaces row i. Influences are sorted by bone; duplicate bones merge.
  void set_row(int i, std::vector<Influence> influences) {
    for (const Influence& inf : influences) {
      if (inf.bone < 0 || inf.bone >= cols_)
        throw ValidationError("skin matrix: bone index " +
                              std::to_string(inf.bone) + " out of range");
      if (inf.weight < 0.0)
        throw ValidationError("skin matrix: negative weight");
    }
    std::sort(influences.begin(), influences.end(),
              [](const Influence& a, const Influence& b) {
                return a.bone < b.bone;
              });
    std::vector<Influence> merged;
    for (const Influence& inf : influences) {
      if (inf.weight == 0.0) continue;
      if (!merged.empty() && merged.back().bone == inf.bone)
        merged.back().weight += inf.weight;
      else
        merged.push_back(inf);
    }
    rows_[static_cast<std::size_t>(i)] = std::move(merged);
  }

  double at(int i, int bone) const {
    for (const Influence& inf : rows_[static_cast<std::size_t>(i)])
      if (inf.bone == bone) return inf.weight;
    return 0.0;
  }

  double row_sum(int i) const {
    double sum = 0.0;
    for (const Influence& inf : rows_[static_cast<std::size_t>(i)])
      sum += inf.weight;
    return sum;
  }

  /// Scales every row to sum exactly to 1. Rows must already sum within
  /// `tol` of 1 (throws otherwise, reporting the offending row).
  void normalize_rows(double tol = kRowSumTol) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const double sum = row_sum(static_cast<int>(i));
      if (std::abs(sum - 1.0) > tol)
        throw ValidationError("skin matrix: row " + std::to_string(i) +
                              " sums to " + std::to_string(sum));
      if (sum != 1.0)
        for (Influence& inf : rows_[i]) inf.weight /= sum;
    }
  }

  /// Verifies the convex-row invariant without modifying the matrix.
  void validate(double tol = kRowSumTol) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (std::abs(row_sum(static_cast<int>(i)) - 1.0) > tol)
        throw ValidationError("skin matrix: row " + std::to_string(i) +
                              " does not sum to 1");
    }
  }

  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd m =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_.size()), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const Influence& inf : rows_[i])
        m(static_cast<Eigen::Index>(i), inf.bone) = inf.weight;
    return m;
  }

  static SkinMatrix from_dense(const Eigen::MatrixXd& m) {
    SkinMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
      std::vector<Influence> row;
      for (int b = 0; b < m.cols(); ++b)
        if (m(i, b) != 0.0) row.push_back({b, m(i, b)});
      out.set_row(i, std::move(row));
    }
    return out;
  }

  /// Column is all-zero <=> no vertex is influenced by the bone.
  bool column_is_zero(int bone) const {
    for (const auto& row : rows_)
      for (const Influence& inf : row)
        if (inf.bone == bone && inf.weight != 0.0) return false;
    return true;
  }

  /// Drops the given columns (sorted, unique) and renumbers the rest.
  SkinMatrix without_columns(const std::vector<int>& dropped) const {
    std::vector<int> remap(static_cast<std::size_t>(cols_), 0);
    std::size_t d = 0;
    int next = 0;
    for (int b = 0; b < cols_; ++b) {
      if (d < dropped.size() && dropped[d] == b) {
        remap[b] = -1;
        ++d;
      } else {
        remap[b] = next++;
      }
    }
    SkinMatrix out(rows(), next);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::vector<Influence> row;
      for (const Influence& inf : rows_[i])
        if (remap[inf.bone] >= 0) row.push_back({remap[inf.bone], inf.weight});
      out.set_row(static_cast<int>(i), std::move(row));
    }
    return out;
  }

  friend bool operator==(const SkinMatrix&, const SkinMatrix&) = default;

 private:
  int cols_ = 0;
  std::vector<std::vector<Influence>> rows_;
};

}  // namespace rigkit
