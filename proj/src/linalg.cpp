#include "ore/linalg.hpp"

#include <algorithm>

namespace ore {

bool is_zero_vec(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

std::optional<std::size_t> last_nonzero(const Vec& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (!v[i].is_zero()) return i;
  }
  return std::nullopt;
}

// v -= c * w
void axpy(Vec& v, const Scalar& c, const Vec& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_zero()) v[i] -= c * w[i];
  }
}

}  // namespace

EchelonBasis::EchelonBasis(Field f, std::size_t dim, bool track) : field_(f), dim_(dim), track_(track) {}

void EchelonBasis::eliminate(Vec& v, Vec* combo) const {
  // Rows are sorted by pivot, and row r only has support at or below its pivot,
  // so a single descending sweep clears every pivot position.
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const Row& row = rows_[k];
    if (v[row.pivot].is_zero()) continue;
    const Scalar c = v[row.pivot];
    axpy(v, c, row.v);
    if (combo) axpy(*combo, c, row.combo);
  }
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != dim_) throw DomainError("vector dimension mismatch in echelon reduction");
  eliminate(v, nullptr);
  return v;
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != dim_) throw DomainError("vector dimension mismatch in echelon insert");
  Vec combo;
  if (track_) {
    combo.assign(inserted_ + 1, Scalar::zero(field_));
    combo[inserted_] = Scalar::one(field_);
    for (auto& row : rows_) row.combo.resize(inserted_ + 1, Scalar::zero(field_));
  }
  ++inserted_;
  eliminate(v, track_ ? &combo : nullptr);
  auto pivot = last_nonzero(v);
  if (!pivot) return false;
  const Scalar inv = v[*pivot].inverse();
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;
  // Clear the new pivot from the existing rows to stay fully reduced.
  for (auto& row : rows_) {
    if (row.pivot > *pivot && !row.v[*pivot].is_zero()) {
      const Scalar c = row.v[*pivot];
      axpy(row.v, c, v);
      if (track_) axpy(row.combo, c, combo);
    }
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), *pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, Row{std::move(v), std::move(combo), *pivot});
  return true;
}

std::vector<Vec> EchelonBasis::rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.v);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows_) out.push_back(r.pivot);
  return out;
}

std::vector<Vec> EchelonBasis::nullspace() const {
  std::vector<bool> is_pivot(dim_, false);
  for (const auto& r : rows_) is_pivot[r.pivot] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(dim_, Scalar::zero(field_));
    x[f] = Scalar::one(field_);
    for (const auto& r : rows_) {
      if (!r.v[f].is_zero()) x[r.pivot] = -r.v[f];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> EchelonBasis::solve(const Vec& target) const {
  if (!track_) throw DomainError("solve() needs a tracking echelon basis");
  Vec v = target;
  Vec combo(inserted_, Scalar::zero(field_));
  // target reduces to zero iff target = Σ c_row v_row, and v_row = Σ combo_row inserted.
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const Row& row = rows_[k];
    if (v[row.pivot].is_zero()) continue;
    const Scalar c = v[row.pivot];
    axpy(v, c, row.v);
    Vec rc = row.combo;
    rc.resize(inserted_, Scalar::zero(field_));
    for (std::size_t i = 0; i < inserted_; ++i) {
      if (!rc[i].is_zero()) combo[i] += c * rc[i];
    }
  }
  if (!is_zero_vec(v)) return std::nullopt;
  return combo;
}

std::vector<Vec> nullspace(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  EchelonBasis e(f, cols);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.rank() == cols) break;
  }
  return e.nullspace();
}

std::optional<Vec> solve_columns(Field f, const std::vector<Vec>& columns, const Vec& rhs) {
  EchelonBasis e(f, rhs.size(), true);
  for (const auto& c : columns) e.insert(c);
  auto x = e.solve(rhs);
  if (x) x->resize(columns.size(), Scalar::zero(f));
  return x;
}

}  // namespace ore
