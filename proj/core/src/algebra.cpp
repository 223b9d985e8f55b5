#include "hopfkit/algebra.hpp"

namespace hopfkit {

SparseVec Algebra::mul(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc;
  for (const auto& [i, s] : a)
    for (const auto& [j, t] : b) acc.add(table[i * dim + j], s * t);
  return acc.take();
}

LinearMap Algebra::left_mult(const SparseVec& x) const {
  return LinearMap::from_function(dim, dim, [&](std::size_t j) { return mul(x, basis_vec(j)); });
}

LinearMap Algebra::right_mult(const SparseVec& x) const {
  return LinearMap::from_function(dim, dim, [&](std::size_t j) { return mul(basis_vec(j), x); });
}

Algebra Algebra::opposite() const {
  Algebra o = *this;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) o.table[i * dim + j] = table[j * dim + i];
  return o;
}

namespace {

void check_legs(const std::vector<const Algebra*>& legs, const Tensor& x) {
  if (legs.size() != x.arity()) throw ShapeError("tensor arity does not match the algebra legs");
  for (std::size_t k = 0; k < legs.size(); ++k)
    if (legs[k]->dim != x.dims()[k]) throw ShapeError("tensor leg dimension mismatch");
}

std::vector<std::size_t> leg_dims(const std::vector<const Algebra*>& legs) {
  std::vector<std::size_t> d;
  for (const auto* a : legs) d.push_back(a->dim);
  return d;
}

}  // namespace

Tensor tensor_power_product(const std::vector<const Algebra*>& legs, const Tensor& x,
                            const Tensor& y) {
  check_legs(legs, x);
  check_legs(legs, y);
  const std::size_t m = legs.size();
  std::vector<SparseVec::Entry> out;
  std::vector<std::size_t> xi, yi;
  std::vector<const SparseVec*> parts(m);
  for (const auto& [fx, s] : x.coeffs()) {
    xi = x.unflatten(fx);
    for (const auto& [fy, t] : y.coeffs()) {
      yi = y.unflatten(fy);
      bool zero = false;
      for (std::size_t k = 0; k < m; ++k) {
        parts[k] = &legs[k]->product(xi[k], yi[k]);
        if (parts[k]->empty()) zero = true;
      }
      if (zero) continue;
      std::vector<SparseVec::Entry> cur{{0, s * t}};
      for (std::size_t k = 0; k < m; ++k) {
        std::vector<SparseVec::Entry> next;
        next.reserve(cur.size() * parts[k]->nnz());
        for (const auto& [i, c] : cur)
          for (const auto& [j, d] : *parts[k]) next.emplace_back(i * legs[k]->dim + j, c * d);
        cur = std::move(next);
      }
      out.insert(out.end(), std::make_move_iterator(cur.begin()), std::make_move_iterator(cur.end()));
    }
  }
  return Tensor(x.dims(), SparseVec::from_entries(std::move(out)));
}

Tensor unit_tensor(const std::vector<const Algebra*>& legs) {
  std::vector<SparseVec> units;
  for (const auto* a : legs) units.push_back(a->unit);
  return Tensor::outer(leg_dims(legs), units);
}

Algebra tensor_algebra(const std::vector<const Algebra*>& legs) {
  if (legs.empty()) throw ShapeError("tensor algebra of no factors");
  Algebra t;
  t.field = legs[0]->field;
  auto dims = leg_dims(legs);
  Tensor shape(dims);
  t.dim = shape.flat_size();
  for (Index f = 0; f < t.dim; ++f) {
    auto idx = shape.unflatten(f);
    std::string label;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) label += "|";
      label += legs[k]->basis[idx[k]];
    }
    t.basis.push_back(label);
  }
  t.table.resize(t.dim * t.dim);
  for (Index i = 0; i < t.dim; ++i)
    for (Index j = 0; j < t.dim; ++j) {
      Tensor p = tensor_power_product(legs, Tensor(dims, SparseVec::unit(i, t.field.one())),
                                      Tensor(dims, SparseVec::unit(j, t.field.one())));
      t.table[i * t.dim + j] = p.coeffs();
    }
  t.unit = unit_tensor(legs).coeffs();
  return t;
}

SparseVec invert_in_algebra(const Algebra& a, const SparseVec& x) {
  // Solve L_x y = 1: rows of L_x.
  LinearMap lx = a.left_mult(x);
  auto sol = solve_unique(lx.transpose().columns(), a.dim, {a.unit});
  if (!sol) throw SingularError("element is not invertible");
  SparseVec y = (*sol)[0];
  if (a.mul(y, x) != a.unit) throw SingularError("left inverse is not a right inverse");
  return y;
}

Tensor invert_in_algebra(const std::vector<const Algebra*>& legs, const Tensor& x) {
  check_legs(legs, x);
  const auto dims = leg_dims(legs);
  const Tensor one = unit_tensor(legs);
  const Index n = one.flat_size();
  Field f = legs[0]->field;
  // Column j of L_x is x * e_j; collect rows.
  std::vector<std::vector<SparseVec::Entry>> rows(n);
  for (Index j = 0; j < n; ++j) {
    Tensor col = tensor_power_product(legs, x, Tensor(dims, SparseVec::unit(j, f.one())));
    for (const auto& [i, s] : col.coeffs()) rows[i].emplace_back(j, s);
  }
  std::vector<SparseVec> r;
  r.reserve(n);
  for (auto& row : rows) r.push_back(SparseVec::from_entries(std::move(row)));
  auto sol = solve_unique(r, n, {one.coeffs()});
  if (!sol) throw SingularError("tensor is not invertible");
  Tensor y(dims, (*sol)[0]);
  if (tensor_power_product(legs, y, x) != one) throw SingularError("left inverse is not a right inverse");
  return y;
}

}  // namespace hopfkit
