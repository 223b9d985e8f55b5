#include "hopfkit/sparse.hpp"

#include <algorithm>

namespace hopfkit {

SparseVec SparseVec::unit(Index i, const Scalar& value) {
  SparseVec v;
  if (!value.is_zero()) v.e_.emplace_back(i, value);
  return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& [i, s] : entries) {
    if (!v.e_.empty() && v.e_.back().first == i)
      v.e_.back().second += s;
    else
      v.e_.emplace_back(i, std::move(s));
  }
  std::erase_if(v.e_, [](const Entry& e) { return e.second.is_zero(); });
  return v;
}

Scalar SparseVec::operator[](Index i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return {};
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto p = e_.begin();
  auto q = x.e_.begin();
  while (p != e_.end() || q != x.e_.end()) {
    if (q == x.e_.end() || (p != e_.end() && p->first < q->first)) {
      out.push_back(std::move(*p++));
    } else if (p == e_.end() || q->first < p->first) {
      out.emplace_back(q->first, a * q->second);
      ++q;
    } else {
      Scalar s = p->second + a * q->second;
      if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
      ++p;
      ++q;
    }
  }
  e_ = std::move(out);
}

SparseVec SparseVec::operator+(const SparseVec& b) const {
  SparseVec r = *this;
  if (!b.empty()) r.axpy(b.e_.front().second.field().one(), b);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& b) const {
  SparseVec r = *this;
  if (!b.empty()) r.axpy(-b.e_.front().second.field().one(), b);
  return r;
}

SparseVec SparseVec::operator-() const {
  SparseVec r = *this;
  for (auto& e : r.e_) e.second = -e.second;
  return r;
}

SparseVec SparseVec::scaled(const Scalar& a) const {
  SparseVec r;
  if (a.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& [i, s] : e_) r.e_.emplace_back(i, s * a);
  return r;
}

bool SparseVec::operator==(const SparseVec& b) const {
  if (e_.size() != b.e_.size()) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k].first != b.e_[k].first || e_[k].second != b.e_[k].second) return false;
  return true;
}

std::string SparseVec::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(e_[k].first) + ":" + e_[k].second.str();
  }
  return s + "]";
}

void Accumulator::add(Index i, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = m_.try_emplace(i, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) m_.erase(it);
  }
}

void Accumulator::add(const SparseVec& v, const Scalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [i, s] : v) add(i, s * scale);
}

void Accumulator::add(const SparseVec& v) {
  for (const auto& [i, s] : v) add(i, s);
}

SparseVec Accumulator::take() {
  std::vector<SparseVec::Entry> e(std::make_move_iterator(m_.begin()),
                                  std::make_move_iterator(m_.end()));
  m_.clear();
  return SparseVec::from_entries(std::move(e));
}

}  // namespace hopfkit
