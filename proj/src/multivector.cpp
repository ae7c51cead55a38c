#include "exalg/multivector.hpp"

#include <algorithm>

namespace exalg {

bool canonical_less(MultiIndex a, MultiIndex b) noexcept {
  const int ga = std::popcount(a);
  const int gb = std::popcount(b);
  if (ga != gb) return ga < gb;
  if (a == b) return false;
  // With equal sizes, the smaller list owns the lowest index where they differ.
  const MultiIndex diff = a ^ b;
  const MultiIndex low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<std::size_t> index_list(MultiIndex m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i + 1);
  }
  return out;
}

int wedge_sign(MultiIndex a, MultiIndex b) noexcept {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (MultiIndex rest = b; rest != 0; rest &= rest - 1) {
    const MultiIndex low = rest & (~rest + 1);
    inversions += std::popcount(a & ~((low << 1) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<MultiIndex> indices_of_grade(std::size_t d, std::size_t grade) {
  std::vector<MultiIndex> out;
  if (grade > d) return out;
  const MultiIndex limit = full_index(d);
  for (MultiIndex m = 0;; ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == grade) out.push_back(m);
    if (m == limit) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<std::pair<MultiIndex, int>> normalize_indices(const std::vector<std::size_t>& tuple,
                                                           std::size_t d) {
  MultiIndex seen = 0;
  int inversions = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const std::size_t i = tuple[k];
    if (i < 1 || i > d) fail(ErrorCode::DimMismatch, "index " + std::to_string(i) + " outside 1.." + std::to_string(d));
    const MultiIndex bit = MultiIndex{1} << (i - 1);
    if (seen & bit) return std::nullopt;
    inversions += std::popcount(seen & ~((bit << 1) - 1));
    seen |= bit;
  }
  return std::make_pair(seen, (inversions & 1) ? -1 : 1);
}

Multivector::Multivector(const FieldSpec& field, std::size_t dim, bool dual)
    : field_(field), dim_(dim), dual_(dual) {
  if (dim > kMaxDim) fail(ErrorCode::DimensionTooLarge, "d = " + std::to_string(dim) + " exceeds 16");
}

Multivector Multivector::scalar(const FieldSpec& field, std::size_t dim, const Scalar& value) {
  Multivector m(field, dim);
  m.add_term(0, value);
  return m;
}

Multivector Multivector::basis(const FieldSpec& field, std::size_t dim, MultiIndex index, bool dual) {
  Multivector m(field, dim, dual);
  if ((index & ~full_index(dim)) != 0) fail(ErrorCode::DimMismatch, "basis index outside the space");
  m.add_term(index, Scalar::one(field));
  return m;
}

Multivector Multivector::from_vector(const Vector& v, bool dual) {
  Multivector m(v.field(), v.dim(), dual);
  for (std::size_t i = 0; i < v.dim(); ++i) m.add_term(MultiIndex{1} << i, v[i]);
  return m;
}

Scalar Multivector::coeff(MultiIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Multivector::add_term(MultiIndex index, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == field_)) fail(ErrorCode::FieldMismatch, "multivector coefficient");
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Multivector::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return index_grade(terms_.begin()->first) == index_grade(terms_.rbegin()->first);
}

std::optional<std::size_t> Multivector::grade() const noexcept {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return static_cast<std::size_t>(index_grade(terms_.begin()->first));
}

Vector Multivector::to_vector() const {
  Vector v(field_, dim_);
  for (const auto& [index, c] : terms_) {
    if (index_grade(index) != 1) fail(ErrorCode::WrongGrade, "expected a grade-1 element");
    v[static_cast<std::size_t>(std::countr_zero(index))] = c;
  }
  return v;
}

Multivector Multivector::with_dual(bool dual) const {
  Multivector out = *this;
  out.dual_ = dual;
  return out;
}

void Multivector::require_compatible(const Multivector& other) const {
  if (!(field_ == other.field_)) fail(ErrorCode::FieldMismatch, "multivector field");
  if (dim_ != other.dim_) {
    fail(ErrorCode::DimMismatch, std::to_string(dim_) + " vs " + std::to_string(other.dim_));
  }
  if (dual_ != other.dual_) fail(ErrorCode::DualMismatch, "primal and dual elements mixed");
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_compatible(rhs);
  for (const auto& [index, c] : rhs.terms_) add_term(index, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_compatible(rhs);
  for (const auto& [index, c] : rhs.terms_) add_term(index, -c);
  return *this;
}

Multivector operator*(const Scalar& a, Multivector m) {
  if (!(a.field() == m.field_)) fail(ErrorCode::FieldMismatch, "scalar multiple");
  if (a.is_zero()) {
    m.terms_.clear();
    return m;
  }
  for (auto& [index, c] : m.terms_) c *= a;
  return m;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [index, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

std::optional<Scalar> proportionality(const Multivector& a, const Multivector& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInput, "proportionality against 0");
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.is_dual() != b.is_dual()) return std::nullopt;
  const auto& [lead_index, lead] = *b.terms().begin();
  const Scalar factor = a.coeff(lead_index) / lead;
  if (factor * b == a) return factor;
  return std::nullopt;
}

bool proportional(const Multivector& a, const Multivector& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto factor = proportionality(a, b);
  return factor.has_value() && !factor->is_zero();
}

}  // namespace exalg
