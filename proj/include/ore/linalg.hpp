#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ore/scalar.hpp"

namespace ore {

using Vec = std::vector<Scalar>;

bool is_zero_vec(std::span<const Scalar> v);

/// Fully reduced echelon basis of a subspace of Field^dim.
///
/// Each stored row has its pivot at its LAST nonzero coordinate (scaled to 1),
/// and every other row is zero at that pivot. Rows are kept sorted by pivot.
/// Optionally tracks, for every row, its expression as a combination of the
/// vectors passed to insert(), which is what solve() uses.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t dim, bool track = false);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  Field field() const { return field_; }

  /// Residual of v after elimination against the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  /// Adds v; returns true when v was independent of the current rows.
  bool insert(Vec v);

  /// Rows in increasing pivot order.
  std::vector<Vec> rows() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of {x : row . x = 0 for every row}.
  std::vector<Vec> nullspace() const;

  /// With tracking: coefficients c over the inserted vectors with Σ c_k v_k = target,
  /// choosing zero on every vector that was dependent when inserted.
  std::optional<Vec> solve(const Vec& target) const;

 private:
  struct Row {
    Vec v;
    Vec combo;  // tracked: v = Σ combo_k inserted_k
    std::size_t pivot;
  };
  // Eliminates against all rows; when `combo` is non-null, records the subtraction.
  void eliminate(Vec& v, Vec* combo) const;

  Field field_;
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

/// Basis of the solution space of M x = 0 for M given by its rows.
std::vector<Vec> nullspace(Field f, std::size_t cols, const std::vector<Vec>& rows);

/// Solves Σ x_j columns[j] = rhs; nullopt when inconsistent.
std::optional<Vec> solve_columns(Field f, const std::vector<Vec>& columns, const Vec& rhs);

}  // namespace ore
