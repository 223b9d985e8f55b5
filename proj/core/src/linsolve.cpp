#include "hopfkit/linsolve.hpp"

namespace hopfkit {

namespace {

void subtract_row(std::map<Index, Scalar>& v, const Scalar& c, const SparseVec& row) {
  for (const auto& [i, s] : row) {
    auto [it, inserted] = v.try_emplace(i, -(c * s));
    if (!inserted) {
      it->second -= c * s;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

SparseVec to_vec(std::map<Index, Scalar>&& m) {
  std::vector<SparseVec::Entry> e(std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
  return SparseVec::from_entries(std::move(e));
}

// Fully reduced rows (each pivot column zero in every other row).
std::map<Index, SparseVec> reduced_rows(const RowEchelon& ech) {
  std::map<Index, SparseVec> out;
  const auto& rows = ech.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    std::map<Index, Scalar> v(it->second.begin(), it->second.end());
    for (auto p = v.upper_bound(it->first); p != v.end();) {
      auto r = out.find(p->first);
      if (r == out.end()) {
        ++p;
        continue;
      }
      Index col = p->first;
      Scalar c = p->second;
      subtract_row(v, c, r->second);
      p = v.upper_bound(col);
    }
    out.emplace(it->first, to_vec(std::move(v)));
  }
  return out;
}

std::vector<SparseVec> augment(const std::vector<SparseVec>& a_rows, Index ncols,
                               const std::vector<SparseVec>& b_cols) {
  std::vector<std::vector<SparseVec::Entry>> rows(a_rows.size());
  for (std::size_t i = 0; i < a_rows.size(); ++i) {
    for (const auto& e : a_rows[i]) {
      if (e.first >= ncols) throw ShapeError("system row exceeds the unknown count");
      rows[i].push_back(e);
    }
  }
  for (std::size_t j = 0; j < b_cols.size(); ++j)
    for (const auto& [i, s] : b_cols[j]) {
      if (i >= rows.size()) throw ShapeError("right-hand side longer than the system");
      rows[i].emplace_back(ncols + j, s);
    }
  std::vector<SparseVec> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(SparseVec::from_entries(std::move(r)));
  return out;
}

}  // namespace

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  if (rows_.empty() || v.empty()) return v;
  std::map<Index, Scalar> m(v.begin(), v.end());
  for (auto it = m.begin(); it != m.end();) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    Index col = it->first;
    Scalar c = it->second;
    subtract_row(m, c, r->second);
    it = m.upper_bound(col);
  }
  return to_vec(std::move(m));
}

bool RowEchelon::insert(const SparseVec& row) {
  if (!row.empty() && row.max_index() >= ncols_) throw ShapeError("row exceeds column count");
  SparseVec r = reduce(row);
  if (r.empty()) return false;
  Index lead = r.leading_index();
  Scalar inv = r.begin()->second.inv();
  rows_.emplace(lead, r.scaled(inv));
  return true;
}

std::optional<std::vector<SparseVec>> solve_unique(const std::vector<SparseVec>& a_rows,
                                                   Index ncols,
                                                   const std::vector<SparseVec>& b_cols) {
  RowEchelon ech(ncols + b_cols.size());
  for (const auto& r : augment(a_rows, ncols, b_cols)) ech.insert(r);
  if (ech.rank() != ncols) return std::nullopt;
  for (const auto& [p, row] : ech.rows())
    if (p >= ncols) return std::nullopt;
  auto rows = reduced_rows(ech);
  std::vector<std::vector<SparseVec::Entry>> sol(b_cols.size());
  for (const auto& [p, row] : rows)
    for (const auto& [c, s] : row)
      if (c >= ncols) sol[c - ncols].emplace_back(p, s);
  std::vector<SparseVec> out;
  out.reserve(sol.size());
  for (auto& s : sol) out.push_back(SparseVec::from_entries(std::move(s)));
  return out;
}

std::optional<SparseVec> solve_any(const std::vector<SparseVec>& a_rows, Index ncols,
                                   const SparseVec& b) {
  RowEchelon ech(ncols + 1);
  for (const auto& r : augment(a_rows, ncols, {b})) ech.insert(r);
  if (ech.is_pivot(ncols)) return std::nullopt;
  auto rows = reduced_rows(ech);
  std::vector<SparseVec::Entry> x;
  for (const auto& [p, row] : rows) {
    Scalar s = row[ncols];
    if (!s.is_zero()) x.emplace_back(p, s);
  }
  return SparseVec::from_entries(std::move(x));
}

std::optional<LinearMap> inverse(const LinearMap& m) {
  if (m.domain() != m.codomain()) return std::nullopt;
  const std::size_t n = m.domain();
  LinearMap t = m.transpose();  // columns of t are rows of m
  std::vector<SparseVec> rhs;
  if (n == 0) return m;
  Field f = Field();
  for (const auto& c : m.columns())
    if (!c.empty()) {
      f = c.begin()->second.field();
      break;
    }
  for (std::size_t j = 0; j < n; ++j) rhs.push_back(SparseVec::unit(j, f.one()));
  auto x = solve_unique(t.columns(), n, rhs);
  if (!x) return std::nullopt;
  return LinearMap(n, n, std::move(*x));
}

std::size_t rank_of(const std::vector<SparseVec>& vectors, Index ncols) {
  RowEchelon ech(ncols);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

Quotient::Quotient(Index dim, const std::vector<SparseVec>& relations) : ech_(dim) {
  for (const auto& r : relations) ech_.insert(r);
}

std::vector<Index> Quotient::complement() const {
  std::vector<Index> c;
  for (Index i = 0; i < ech_.columns(); ++i)
    if (!ech_.is_pivot(i)) c.push_back(i);
  return c;
}

LinearMap Quotient::projection(const Field& f) const {
  const Index n = ech_.columns();
  return LinearMap::from_function(n, n, [&](std::size_t j) { return project(SparseVec::unit(j, f.one())); });
}

}  // namespace hopfkit
